#include "irreg/bernoulli.hpp"

#include <algorithm>
#include <string>

namespace irreg {

std::string_view to_string(RowMethod m) noexcept
{
    switch (m) {
    case RowMethod::Naive: return "naive";
    case RowMethod::Voronoi: return "voronoi";
    case RowMethod::Fast: return "fast";
    }
    return "unknown";
}

RowMethod parse_row_method(std::string_view name)
{
    if (name == "naive") return RowMethod::Naive;
    if (name == "voronoi") return RowMethod::Voronoi;
    if (name == "fast") return RowMethod::Fast;
    throw DomainError("unknown row method '" + std::string(name) + "'");
}

namespace {

std::size_t row_length(PrimeModulus p)
{
    if (p.value() == 3) throw DomainError("p = 3 has no even index in [2, p-3]");
    return (p.value() - 3) / 2;
}

void check_index(PrimeModulus p, std::uint32_t k)
{
    if (k % 2 != 0 || k < 2 || k + 3 > p.value()) {
        throw DomainError("index " + std::to_string(k) + " is not an even integer in [2, " +
                          std::to_string(p.value() >= 5 ? p.value() - 3 : 0) + "] for p = " +
                          std::to_string(p.value()));
    }
}

} // namespace

BernoulliRow::BernoulliRow(PrimeModulus p, std::vector<std::uint32_t> even_values, RowMethod method)
    : p_(p), values_(std::move(even_values)), method_(method)
{
    if (values_.size() != row_length(p)) throw DomainError("Bernoulli row has the wrong length");
}

std::uint32_t BernoulliRow::at(std::uint32_t k) const
{
    check_index(p_, k);
    return values_[k / 2 - 1];
}

IrregularSet::IrregularSet(PrimeModulus p, std::vector<std::uint32_t> indices)
    : p_(p), indices_(std::move(indices))
{
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    for (std::uint32_t k : indices_) check_index(p_, k);
}

bool IrregularSet::contains(std::uint32_t k) const noexcept
{
    return std::binary_search(indices_.begin(), indices_.end(), k);
}

BernoulliRow bernoulli_naive_row(PrimeModulus p)
{
    const std::size_t len = row_length(p);
    const std::uint32_t top = p.value() - 3;
    if (len == 0) return BernoulliRow(p, {}, RowMethod::Naive);

    // n! and 1/n! for n <= p - 2 (all units mod p).
    std::vector<std::uint32_t> fact(top + 2), inv_fact(top + 2);
    fact[0] = 1;
    for (std::uint32_t n = 1; n <= top + 1; ++n) fact[n] = p.mul(fact[n - 1], n);
    inv_fact[top + 1] = mod_inv(fact[top + 1], p);
    for (std::uint32_t n = top + 1; n > 0; --n) inv_fact[n - 1] = p.mul(inv_fact[n], n);
    auto binom = [&](std::uint32_t n, std::uint32_t j) {
        return p.mul(p.mul(fact[n], inv_fact[j]), inv_fact[n - j]);
    };

    std::vector<std::uint32_t> b(top + 1, 0);
    b[0] = 1;
    b[1] = p.reduce(-static_cast<std::int64_t>(mod_inv(2, p)));
    for (std::uint32_t m = 2; m <= top; ++m) {
        if (m % 2 == 1) continue; // B_m = 0 for odd m > 1
        std::uint32_t acc = p.add(b[0], p.mul(binom(m + 1, 1), b[1]));
        for (std::uint32_t j = 2; j < m; j += 2) acc = p.add(acc, p.mul(binom(m + 1, j), b[j]));
        b[m] = p.sub(0, p.mul(acc, mod_inv(m + 1, p)));
    }

    std::vector<std::uint32_t> even(len);
    for (std::size_t i = 0; i < len; ++i) even[i] = b[2 * i + 2];
    return BernoulliRow(p, std::move(even), RowMethod::Naive);
}

std::uint32_t bernoulli_voronoi(PrimeModulus p, std::uint32_t k)
{
    check_index(p, k);
    std::uint32_t t = 2;
    if (pow_mod(2, k, p) == 1) {
        t = 3;
        while (pow_mod(t, k, p) == 1) ++t;
    }
    // Walk j over (Z/p)^* as powers of a generator so j^(k-1) is one multiply per step.
    const std::uint32_t g = primitive_root(p);
    const std::uint32_t g_pow = pow_mod(g, k - 1, p);
    std::uint32_t j = 1, j_pow = 1, sum = 0;
    for (std::uint32_t e = 0; e + 1 < p.value(); ++e) {
        const std::uint64_t floor_tj = std::uint64_t{t} * j / p.value();
        sum = p.add(sum, p.mul(j_pow, floor_tj % p.value()));
        j = p.mul(j, g);
        j_pow = p.mul(j_pow, g_pow);
    }
    const std::uint32_t rhs = p.mul(p.mul(k, pow_mod(t, k - 1, p)), sum);
    return p.mul(rhs, mod_inv(p.sub(pow_mod(t, k, p), 1), p));
}

BernoulliRow bernoulli_voronoi_row(PrimeModulus p)
{
    const std::size_t len = row_length(p);
    std::vector<std::uint32_t> even(len);
    for (std::size_t i = 0; i < len; ++i) {
        even[i] = bernoulli_voronoi(p, static_cast<std::uint32_t>(2 * i + 2));
    }
    return BernoulliRow(p, std::move(even), RowMethod::Voronoi);
}

BernoulliRow bernoulli_fast_row(PrimeModulus p)
{
    const std::size_t len = row_length(p);
    if (len == 0) return BernoulliRow(p, {}, RowMethod::Fast);

    // x / (e^x - 1) = sum B_n x^n / n!; invert f(x) = (e^x - 1)/x = sum x^n / (n+1)!
    // to precision x^(p-2), so every factorial involved is a unit mod p.
    const std::size_t n_terms = p.value() - 2;
    std::vector<std::uint32_t> fact(n_terms + 1);
    fact[0] = 1;
    for (std::size_t n = 1; n <= n_terms; ++n) fact[n] = p.mul(fact[n - 1], n);
    std::vector<std::uint32_t> inv_fact(n_terms + 1);
    inv_fact[n_terms] = mod_inv(fact[n_terms], p);
    for (std::size_t n = n_terms; n > 0; --n) inv_fact[n - 1] = p.mul(inv_fact[n], n);

    std::vector<std::uint32_t> f(n_terms);
    for (std::size_t n = 0; n < n_terms; ++n) f[n] = inv_fact[n + 1];

    // Newton iteration g <- g (2 - f g), doubling the precision each round.
    std::vector<std::uint32_t> g{1};
    while (g.size() < n_terms) {
        const std::size_t next = std::min(2 * g.size(), n_terms);
        auto fg = convolution_mod(std::span(f).first(next), g, p);
        fg.resize(next);
        for (auto& c : fg) c = p.sub(0, c);
        fg[0] = p.add(fg[0], 2);
        auto refined = convolution_mod(g, fg, p);
        refined.resize(next);
        g = std::move(refined);
    }

    std::vector<std::uint32_t> even(len);
    for (std::size_t i = 0; i < len; ++i) {
        const std::size_t n = 2 * i + 2;
        even[i] = p.mul(g[n], fact[n]);
    }
    return BernoulliRow(p, std::move(even), RowMethod::Fast);
}

BernoulliRow bernoulli_row(PrimeModulus p, RowMethod method)
{
    switch (method) {
    case RowMethod::Naive: return bernoulli_naive_row(p);
    case RowMethod::Voronoi: return bernoulli_voronoi_row(p);
    case RowMethod::Fast: return bernoulli_fast_row(p);
    }
    throw DomainError("unknown row method");
}

IrregularSet irregular_indices(const BernoulliRow& row)
{
    std::vector<std::uint32_t> zeros;
    const auto& values = row.even_values();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0) zeros.push_back(static_cast<std::uint32_t>(2 * i + 2));
    }
    return IrregularSet(row.prime(), std::move(zeros));
}

IrregularSet irregular_indices(PrimeModulus p, RowMethod method)
{
    return irregular_indices(bernoulli_row(p, method));
}

} // namespace irreg
