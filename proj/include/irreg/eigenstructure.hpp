// Congruence hypotheses on irregular indices, read modulo p - 1.
#pragma once

#include "irreg/bernoulli.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace irreg {

using IndexPair = std::pair<std::uint32_t, std::uint32_t>; // k < k'

struct CongruenceCheckResult {
    PrimeModulus p;
    /// Pairs k < k' of irregular indices with k + k' = 2 mod p - 1.
    std::vector<IndexPair> sum_two_violations;
    /// Distinct pairs (j, j') < (k, k') whose sums agree mod p - 1.
    std::vector<std::pair<IndexPair, IndexPair>> collision_violations;

    bool holds() const noexcept { return sum_two_violations.empty() && collision_violations.empty(); }
};

/// Checks, over every unordered pair k < k' of R, that k + k' != 2 mod p - 1
/// and that no two distinct pairs share a sum mod p - 1. Output lists are
/// canonically sorted.
CongruenceCheckResult check_congruences(const IrregularSet& irregular);

/// Only the primes whose check fails, ascending by p. Runs one prime per
/// OpenMP task; jobs = 1 is the serial path.
std::vector<CongruenceCheckResult> congruence_sweep(const std::vector<IrregularSet>& source,
                                                    int jobs = 1);

/// As above, restricted to p < p_max; throws DomainError when the source
/// misses a prime 7 <= p < p_max.
std::vector<CongruenceCheckResult> congruence_sweep(std::uint32_t p_max,
                                                    const std::vector<IrregularSet>& source,
                                                    int jobs = 1);

} // namespace irreg
