// Maximum families of pairwise disjoint translates i + R in Z/m, i drawn
// from a candidate set I.
//
// Translates i + R and j + R meet exactly when i - j lies in the difference
// set D = R - R, so the problem is a maximum independent set in the graph on
// I with an edge {i, j} whenever i - j is in D \ {0}.
#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace irreg {

struct PackingInstance {
    std::uint64_t modulus;
    std::vector<std::uint64_t> shape;      // R
    std::vector<std::uint64_t> candidates; // I

    /// Reduces every member into [0, modulus), sorted and deduplicated.
    PackingInstance(std::uint64_t modulus, std::vector<std::uint64_t> shape,
                    std::vector<std::uint64_t> candidates);
};

enum class PackingMethod { Exact, Greedy, Brute };
std::string_view to_string(PackingMethod m) noexcept;

struct PackingResult {
    std::size_t d = 0;
    std::vector<std::uint64_t> witness; // ascending
    PackingMethod method = PackingMethod::Exact;
    /// False only when the exact search ran out of budget; d is then the
    /// best family found, still a valid lower bound.
    bool optimal = true;
    std::uint64_t work = 0;
};

/// D = { a - b mod m : a, b in R }, ascending.
std::vector<std::uint64_t> conflict_diffs(const std::vector<std::uint64_t>& shape, std::uint64_t modulus);

inline constexpr std::uint64_t kDefaultSearchBudget = 400'000'000;

/// Auto: per connected component, a frontier dynamic program along the
/// lattice of translate relations when |R| is 2 or 3 and the frontier stays
/// small, else branch and reduce. Search forces branch and reduce; it exists
/// so the two engines can be checked against each other.
enum class ExactEngine { Auto, Search };

/// Maximum family of disjoint translates. The witness is the
/// lexicographically least maximum family under ascending residues (the
/// family containing the smallest differing offset wins). `budget` caps the
/// elementary steps spent; on exhaustion the result is the best family
/// found with optimal = false.
PackingResult max_disjoint_translates_exact(const PackingInstance& inst,
                                            std::uint64_t budget = kDefaultSearchBudget,
                                            ExactEngine engine = ExactEngine::Auto);

/// Ascending-order greedy.
PackingResult max_disjoint_translates_greedy(const PackingInstance& inst);

/// Exhaustive over all subsets; refuses |I| > 20 with DomainError.
PackingResult brute_force_packing(const PackingInstance& inst);

/// Direct check, independent of any conflict graph: witness is a subset of
/// I and the translates i + R are pairwise disjoint.
bool verify_packing(const PackingInstance& inst, const std::vector<std::uint64_t>& witness);

} // namespace irreg
