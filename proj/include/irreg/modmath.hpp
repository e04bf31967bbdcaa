// Exact arithmetic modulo an odd prime p < 2^31, plus residue classes
// modulo p - 1 for eigenspace bookkeeping.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace irreg {

/// Raised when an operation is asked for something outside its domain
/// (a composite modulus, the inverse of zero, an odd Bernoulli index...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

/// Deterministic Miller-Rabin; exact for every n < 2^32.
bool is_prime(std::uint64_t n);

/// Distinct prime factors of n in ascending order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Odd primes in [lo, hi), ascending.
std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi);

/// An odd prime below 2^31, checked at construction.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p);

    std::uint32_t value() const noexcept { return p_; }
    operator std::uint32_t() const noexcept { return p_; }

    /// Reduce an arbitrary signed integer into [0, p).
    std::uint32_t reduce(std::int64_t a) const noexcept
    {
        const std::int64_t m = static_cast<std::int64_t>(a % static_cast<std::int64_t>(p_));
        return static_cast<std::uint32_t>(m < 0 ? m + p_ : m);
    }
    std::uint32_t mul(std::uint64_t a, std::uint64_t b) const noexcept
    {
        return static_cast<std::uint32_t>((a * b) % p_);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept
    {
        const std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept
    {
        return a >= b ? a - b : a + p_ - b;
    }

    friend bool operator==(PrimeModulus a, PrimeModulus b) noexcept { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

/// A value in [0, m) together with its modulus.
class ResidueClass {
public:
    ResidueClass(std::int64_t value, std::uint64_t modulus);

    std::uint64_t value() const noexcept { return value_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    ResidueClass operator+(const ResidueClass& o) const;
    ResidueClass operator-(const ResidueClass& o) const;
    auto operator<=>(const ResidueClass&) const = default;

private:
    std::uint64_t value_;
    std::uint64_t modulus_;
};

/// a^e mod p; e = 0 yields 1.
std::uint32_t pow_mod(std::uint64_t a, std::uint64_t e, PrimeModulus p) noexcept;

/// Inverse of a modulo p. Throws DomainError("not invertible") when a = 0 mod p.
std::uint32_t mod_inv(std::uint64_t a, PrimeModulus p);

/// Smallest positive generator of (Z/p)^*.
std::uint32_t primitive_root(PrimeModulus p);

/// Multiplicative order of a modulo p (a != 0).
std::uint64_t multiplicative_order(std::uint64_t a, PrimeModulus p);

/// Product of two polynomials over Z/p. Uses a three-prime NTT with CRT
/// reconstruction once both operands are long enough; bit-exact with
/// convolution_schoolbook for every input.
std::vector<std::uint32_t> convolution_mod(std::span<const std::uint32_t> u,
                                           std::span<const std::uint32_t> v,
                                           PrimeModulus p);

/// Serial O(|u||v|) reference.
std::vector<std::uint32_t> convolution_schoolbook(std::span<const std::uint32_t> u,
                                                  std::span<const std::uint32_t> v,
                                                  PrimeModulus p);

} // namespace irreg
