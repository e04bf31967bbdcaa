// Verdicts: Greenberg pseudo-nullity, the annihilator-height lower bound,
// and abelianness of the Galois group of the maximal unramified pro-p
// extension of Q(mu_{p^infinity}).
//
// Statuses never overclaim. FAILS is reserved for the one negative the
// theory licenses (a vanishing pairing value under the congruence
// hypotheses); anything that rests on absent data is CONDITIONAL.
#pragma once

#include "irreg/eigenstructure.hpp"
#include "irreg/packing.hpp"
#include "irreg/pairing.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace irreg {

enum class Knowledge { Known, Assumed, Unknown };
std::string_view to_string(Knowledge k) noexcept;
Knowledge parse_knowledge(std::string_view s);

inline constexpr std::uint32_t kVandiverVerifiedBelow = 12'000'000;
inline constexpr std::uint32_t kSurjectivityKnownBelow = 1000;

struct HypothesisFlags {
    Knowledge vandiver = Knowledge::Unknown;
    Knowledge procyclic = Knowledge::Unknown;     // each X_K^(1-k) is Z_p
    Knowledge pairing_surjective = Knowledge::Unknown;

    /// Vandiver and procyclicity are assumed below 12,000,000, where they
    /// have been verified; surjectivity is known below 1000.
    static HypothesisFlags defaults_for(std::uint32_t p);

    bool operator==(const HypothesisFlags&) const = default;
};

enum class Status { Holds, Fails, Conditional, Inconclusive, Trivial };
std::string_view to_string(Status s) noexcept;

struct Verdict {
    Status status = Status::Inconclusive;
    std::string condition;           // which rung of the decision fired
    std::vector<std::string> notes;  // missing keys, hypotheses leaned on
    HypothesisFlags flags_used;

    bool operator==(const Verdict&) const = default;
};

/// A exact nonnegative rational num/den in lowest terms.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational make(std::uint64_t num, std::uint64_t den);
    std::uint64_t ceil() const noexcept { return (num + den - 1) / den; }
    std::string str() const;
    bool operator==(const Rational&) const = default;
};

struct HeightBound {
    bool module_zero = false;       // R empty: nothing to bound
    std::size_t d = 0;              // maximal number of disjoint translates found
    std::uint64_t bound_exact = 0;  // d + 1
    Rational bound_corollary;       // s / (r^2 - r + 1) + 1
    std::vector<std::uint64_t> witness;
    bool partial = false;           // pairing data missing; I was taken conservatively
    bool optimal = true;            // packing search proved d maximal
    std::vector<std::string> notes;
};

Verdict greenberg_verdict(const IrregularSet& irregular, const EligibleSet& eligible,
                          const HypothesisFlags& flags);

/// Throws DomainError when the Vandiver flag is Unknown or the primes differ.
HeightBound height_lower_bound(const IrregularSet& irregular, const EligibleSet& eligible,
                               const HypothesisFlags& flags,
                               std::uint64_t search_budget = kDefaultSearchBudget);

Verdict gk_verdict(const IrregularSet& irregular, const CongruenceCheckResult& cc,
                   const PairingTable& table, const HypothesisFlags& flags);

struct RemarkSample {
    std::uint32_t p;
    std::size_t r;
    std::optional<std::size_t> s; // empty when pairing data was incomplete
};

struct RemarkCheck {
    std::vector<RemarkSample> violations;
    std::vector<std::uint32_t> skipped;
};

/// For p < 1000: r <= 3, and (p-1)/2 - s lies in [2,6], [6,8], [9,12] for
/// r = 1, 2, 3. Samples without s are skipped, never counted as violations.
RemarkCheck remark_ranges_check(const std::vector<RemarkSample>& samples);

} // namespace irreg
