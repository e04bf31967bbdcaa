// Bernoulli numbers modulo p and irregular pairs.
//
// Three independent routes produce B_k mod p for even 2 <= k <= p - 3:
//   naive    the recurrence sum_{j<=m} C(m+1, j) B_j = 0 in Z/p, O(p^2)
//   voronoi  one index at a time from Voronoi's congruence, O(p log p)
//   fast     Newton inversion of (e^x - 1)/x as a truncated power series,
//            O(p log p) for the whole row
// All three must agree entry for entry; the naive route is the oracle.
#pragma once

#include "irreg/modmath.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace irreg {

enum class RowMethod { Naive, Voronoi, Fast };

std::string_view to_string(RowMethod m) noexcept;
RowMethod parse_row_method(std::string_view name);

/// B_k mod p for every even k in [2, p - 3].
class BernoulliRow {
public:
    BernoulliRow(PrimeModulus p, std::vector<std::uint32_t> even_values, RowMethod method);

    PrimeModulus prime() const noexcept { return p_; }
    RowMethod method() const noexcept { return method_; }

    /// B_k mod p. Throws DomainError for odd or out-of-range k.
    std::uint32_t at(std::uint32_t k) const;

    /// Number of stored entries, (p - 3) / 2.
    std::size_t size() const noexcept { return values_.size(); }
    /// Largest stored index, p - 3 (0 when the row is empty).
    std::uint32_t max_index() const noexcept { return p_.value() >= 5 ? p_.value() - 3 : 0; }

    /// Entry i holds B_{2i+2}.
    const std::vector<std::uint32_t>& even_values() const noexcept { return values_; }

    /// Same prime and same entries; the producing method is ignored.
    friend bool operator==(const BernoulliRow& a, const BernoulliRow& b) noexcept
    {
        return a.p_ == b.p_ && a.values_ == b.values_;
    }

private:
    PrimeModulus p_;
    std::vector<std::uint32_t> values_;
    RowMethod method_;
};

/// The sorted set R of irregular indices for p; r = |R|.
class IrregularSet {
public:
    IrregularSet(PrimeModulus p, std::vector<std::uint32_t> indices);

    PrimeModulus prime() const noexcept { return p_; }
    const std::vector<std::uint32_t>& indices() const noexcept { return indices_; }
    std::size_t r() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }
    bool contains(std::uint32_t k) const noexcept;

    friend bool operator==(const IrregularSet&, const IrregularSet&) = default;

private:
    PrimeModulus p_;
    std::vector<std::uint32_t> indices_;
};

BernoulliRow bernoulli_naive_row(PrimeModulus p);
BernoulliRow bernoulli_fast_row(PrimeModulus p);
/// Row assembled from bernoulli_voronoi, one index at a time.
BernoulliRow bernoulli_voronoi_row(PrimeModulus p);
BernoulliRow bernoulli_row(PrimeModulus p, RowMethod method);

/// B_k mod p from Voronoi's congruence
///   (t^k - 1) B_k = k t^(k-1) sum_{j=1}^{p-1} j^(k-1) floor(t j / p)  (mod p)
/// with t = 2, or the smallest t >= 3 with t^k != 1 when 2^k = 1.
std::uint32_t bernoulli_voronoi(PrimeModulus p, std::uint32_t k);

IrregularSet irregular_indices(const BernoulliRow& row);
IrregularSet irregular_indices(PrimeModulus p, RowMethod method = RowMethod::Fast);

} // namespace irreg
