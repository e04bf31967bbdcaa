#include "irreg/modmath.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <utility>

namespace irreg {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n % q == 0) return n == q;
    }
    if (n >= (std::uint64_t{1} << 32)) {
        throw DomainError("is_prime: argument exceeds 2^32");
    }
    // {2, 7, 61} is a complete witness set below 4,759,123,141.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2u, 7u, 61u}) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi)
{
    std::vector<std::uint32_t> out;
    if (hi <= 3) return out;
    std::vector<bool> composite(hi, false);
    for (std::uint64_t i = 2; i * i < hi; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j < hi; j += i) composite[j] = true;
    }
    for (std::uint32_t n = std::max<std::uint32_t>(lo, 3); n < hi; ++n) {
        if (!composite[n] && (n & 1)) out.push_back(n);
    }
    return out;
}

PrimeModulus::PrimeModulus(std::uint64_t p)
{
    if (p < 3 || p >= kMaxModulus || !is_prime(p)) {
        throw DomainError(std::to_string(p) + " is not an odd prime below 2^31");
    }
    p_ = static_cast<std::uint32_t>(p);
}

ResidueClass::ResidueClass(std::int64_t value, std::uint64_t modulus) : modulus_(modulus)
{
    if (modulus == 0) throw DomainError("residue class with zero modulus");
    const auto m = static_cast<std::int64_t>(modulus);
    std::int64_t r = value % m;
    if (r < 0) r += m;
    value_ = static_cast<std::uint64_t>(r);
}

ResidueClass ResidueClass::operator+(const ResidueClass& o) const
{
    if (o.modulus_ != modulus_) throw DomainError("residue modulus mismatch");
    return ResidueClass(static_cast<std::int64_t>((value_ + o.value_) % modulus_), modulus_);
}

ResidueClass ResidueClass::operator-(const ResidueClass& o) const
{
    if (o.modulus_ != modulus_) throw DomainError("residue modulus mismatch");
    return ResidueClass(static_cast<std::int64_t>(value_) - static_cast<std::int64_t>(o.value_),
                        modulus_);
}

std::uint32_t pow_mod(std::uint64_t a, std::uint64_t e, PrimeModulus p) noexcept
{
    return static_cast<std::uint32_t>(powmod64(a, e, p.value()));
}

std::uint32_t mod_inv(std::uint64_t a, PrimeModulus p)
{
    std::int64_t r0 = static_cast<std::int64_t>(p.value());
    std::int64_t r1 = static_cast<std::int64_t>(a % p.value());
    if (r1 == 0) throw DomainError("not invertible");
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        s0 = std::exchange(s1, s0 - q * s1);
    }
    return p.reduce(s0);
}

std::uint64_t multiplicative_order(std::uint64_t a, PrimeModulus p)
{
    if (a % p.value() == 0) throw DomainError("order of zero is undefined");
    std::uint64_t order = p.value() - 1;
    for (std::uint64_t q : prime_factors(order)) {
        while (order % q == 0 && pow_mod(a, order / q, p) == 1) order /= q;
    }
    return order;
}

std::uint32_t primitive_root(PrimeModulus p)
{
    const std::uint64_t n = p.value() - 1;
    const auto factors = prime_factors(n);
    for (std::uint32_t g = 1; g < p.value(); ++g) {
        const bool generator = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t q) {
            return pow_mod(g, n / q, p) != 1;
        });
        if (generator) return g;
    }
    throw DomainError("no primitive root found"); // unreachable for prime p
}

std::vector<std::uint32_t> convolution_schoolbook(std::span<const std::uint32_t> u,
                                                  std::span<const std::uint32_t> v,
                                                  PrimeModulus p)
{
    if (u.empty() || v.empty()) return {};
    std::vector<std::uint32_t> out(u.size() + v.size() - 1, 0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            out[i + j] = p.add(out[i + j], p.mul(u[i], v[j]));
        }
    }
    return out;
}

namespace {

// NTT-friendly primes c * 2^k + 1 with primitive root 3.
struct NttPrime {
    std::uint32_t mod;
    std::uint32_t root;
};
constexpr std::array<NttPrime, 3> kNttPrimes{{
    {998244353u, 3u},  // 119 * 2^23 + 1
    {167772161u, 3u},  // 5 * 2^25 + 1
    {469762049u, 3u},  // 7 * 2^26 + 1
}};
constexpr std::size_t kMaxTransform = std::size_t{1} << 23;

std::uint32_t pw(std::uint64_t a, std::uint64_t e, std::uint32_t m)
{
    return static_cast<std::uint32_t>(powmod64(a, e, m));
}

// Montgomery arithmetic modulo an odd q < 2^30, with R = 2^32.
class Montgomery {
public:
    explicit Montgomery(std::uint32_t q) : q_(q), r2_(static_cast<std::uint32_t>((u128{1} << 64) % q))
    {
        std::uint32_t inv = q; // Newton: inv = q^-1 mod 2^32
        for (int i = 0; i < 4; ++i) inv *= 2 - q * inv;
        neg_inv_ = ~inv + 1;
    }

    std::uint32_t reduce(std::uint64_t t) const
    {
        const std::uint32_t m = static_cast<std::uint32_t>(t) * neg_inv_;
        const auto r = static_cast<std::uint32_t>((t + std::uint64_t{m} * q_) >> 32);
        return r >= q_ ? r - q_ : r;
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return reduce(std::uint64_t{a} * b); }
    std::uint32_t to(std::uint32_t a) const { return mul(a, r2_); }
    std::uint32_t from(std::uint32_t a) const { return reduce(a); }

private:
    std::uint32_t q_;
    std::uint32_t r2_;
    std::uint32_t neg_inv_;
};

// In-place transform of Montgomery-form values.
void ntt(std::vector<std::uint32_t>& a, bool invert, NttPrime q, const Montgomery& mont)
{
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    std::vector<std::uint32_t> tw(n / 2);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        std::uint32_t w = pw(q.root, (q.mod - 1) / len, q.mod);
        if (invert) w = pw(w, q.mod - 2, q.mod);
        const std::uint32_t w_m = mont.to(w);
        const std::size_t half = len / 2;
        tw[0] = mont.to(1);
        for (std::size_t k = 1; k < half; ++k) tw[k] = mont.mul(tw[k - 1], w_m);
        for (std::size_t i = 0; i < n; i += len) {
            std::uint32_t* lo = a.data() + i;
            std::uint32_t* hi = lo + half;
            for (std::size_t k = 0; k < half; ++k) {
                const std::uint32_t x = lo[k];
                const std::uint32_t y = mont.mul(hi[k], tw[k]);
                const std::uint32_t s = x + y;
                lo[k] = s >= q.mod ? s - q.mod : s;
                hi[k] = x >= y ? x - y : x + q.mod - y;
            }
        }
    }
    if (invert) {
        const std::uint32_t n_inv = mont.to(pw(n % q.mod, q.mod - 2, q.mod));
        for (auto& x : a) x = mont.mul(x, n_inv);
    }
}

std::vector<std::uint32_t> convolve_under(std::span<const std::uint32_t> u,
                                          std::span<const std::uint32_t> v, std::size_t size,
                                          NttPrime q)
{
    const Montgomery mont(q.mod);
    std::vector<std::uint32_t> a(size, 0), b(size, 0);
    for (std::size_t i = 0; i < u.size(); ++i) a[i] = mont.to(u[i] % q.mod);
    for (std::size_t i = 0; i < v.size(); ++i) b[i] = mont.to(v[i] % q.mod);
    ntt(a, false, q, mont);
    ntt(b, false, q, mont);
    for (std::size_t i = 0; i < size; ++i) a[i] = mont.mul(a[i], b[i]);
    ntt(a, true, q, mont);
    for (auto& x : a) x = mont.from(x);
    return a;
}

} // namespace

std::vector<std::uint32_t> convolution_mod(std::span<const std::uint32_t> u,
                                           std::span<const std::uint32_t> v, PrimeModulus p)
{
    if (u.empty() || v.empty()) return {};
    if (std::min(u.size(), v.size()) <= 32) return convolution_schoolbook(u, v, p);

    const std::size_t out_len = u.size() + v.size() - 1;
    const std::size_t size = std::bit_ceil(out_len);
    if (size > kMaxTransform) throw DomainError("convolution_mod: operands too long");

    // Exact coefficients are below min(|u|,|v|) * p^2 < 2^23 * 2^62, inside
    // the product of the three NTT moduli (about 2^86).
    std::array<std::vector<std::uint32_t>, 3> res;
    for (std::size_t t = 0; t < 3; ++t) res[t] = convolve_under(u, v, size, kNttPrimes[t]);

    const std::uint64_t m0 = kNttPrimes[0].mod, m1 = kNttPrimes[1].mod, m2 = kNttPrimes[2].mod;
    const std::uint64_t inv_m0_mod_m1 = powmod64(m0, m1 - 2, m1);
    const std::uint64_t m01_mod_m2 = (m0 * m1) % m2;
    const std::uint64_t inv_m01_mod_m2 = powmod64(m01_mod_m2, m2 - 2, m2);

    std::vector<std::uint32_t> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) {
        // Garner: x = a0 + m0*(x1 + m1*x2)
        const std::uint64_t a0 = res[0][i], a1 = res[1][i], a2 = res[2][i];
        const std::uint64_t x1 = (a1 + m1 - a0 % m1) % m1 * inv_m0_mod_m1 % m1;
        const std::uint64_t partial_mod_m2 = (a0 + m0 % m2 * x1) % m2;
        const std::uint64_t x2 = (a2 + m2 - partial_mod_m2) % m2 * inv_m01_mod_m2 % m2;
        const u128 x = u128{a0} + u128{m0} * (u128{x1} + u128{m1} * x2);
        out[i] = static_cast<std::uint32_t>(x % p.value());
    }
    return out;
}

} // namespace irreg
