#include "irreg/criteria.hpp"

#include <numeric>

namespace irreg {

std::string_view to_string(Knowledge k) noexcept
{
    switch (k) {
    case Knowledge::Known: return "known";
    case Knowledge::Assumed: return "assumed";
    case Knowledge::Unknown: return "unknown";
    }
    return "unknown";
}

Knowledge parse_knowledge(std::string_view s)
{
    if (s == "known" || s == "yes" || s == "true") return Knowledge::Known;
    if (s == "assumed") return Knowledge::Assumed;
    if (s == "unknown" || s == "no" || s == "false") return Knowledge::Unknown;
    throw DomainError("expected known|assumed|unknown, got '" + std::string(s) + "'");
}

std::string_view to_string(Status s) noexcept
{
    switch (s) {
    case Status::Holds: return "HOLDS";
    case Status::Fails: return "FAILS";
    case Status::Conditional: return "CONDITIONAL";
    case Status::Inconclusive: return "INCONCLUSIVE";
    case Status::Trivial: return "TRIVIAL";
    }
    return "INCONCLUSIVE";
}

HypothesisFlags HypothesisFlags::defaults_for(std::uint32_t p)
{
    HypothesisFlags f;
    if (p < kVandiverVerifiedBelow) {
        f.vandiver = Knowledge::Assumed;
        f.procyclic = Knowledge::Assumed;
    }
    f.pairing_surjective = p < kSurjectivityKnownBelow ? Knowledge::Known : Knowledge::Unknown;
    return f;
}

Rational Rational::make(std::uint64_t num, std::uint64_t den)
{
    if (den == 0) throw DomainError("rational with zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

std::string Rational::str() const
{
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

void require_same_prime(PrimeModulus a, PrimeModulus b, const char* what)
{
    if (!(a == b)) {
        throw DomainError(std::string(what) + ": prime mismatch (" + std::to_string(a.value()) +
                          " vs " + std::to_string(b.value()) + ")");
    }
}

std::string pair_name(std::uint32_t k, std::uint32_t k2)
{
    return "(" + std::to_string(k) + "," + std::to_string(k2) + ")";
}

} // namespace

Verdict greenberg_verdict(const IrregularSet& irregular, const EligibleSet& eligible,
                          const HypothesisFlags& flags)
{
    require_same_prime(irregular.prime(), eligible.p, "greenberg_verdict");
    Verdict v;
    v.flags_used = flags;
    if (irregular.empty()) {
        v.status = Status::Trivial;
        v.condition = "regular prime: A_F = 0";
        return v;
    }
    if (!eligible.I.empty()) {
        v.condition = "I nonempty: some eta_i pairs onto every irregular eigenspace";
        v.notes.push_back("witness i = " + std::to_string(eligible.I.front()));
        if (flags.vandiver == Knowledge::Unknown) {
            v.status = Status::Conditional;
            v.notes.push_back("reading I as a surjectivity criterion needs Vandiver at p");
        } else {
            v.status = Status::Holds;
        }
        return v;
    }
    if (!eligible.missing.empty()) {
        v.status = Status::Conditional;
        v.condition = "I empty on available data";
        v.notes.push_back(std::to_string(eligible.missing.size()) + " odd i lack pairing data");
        return v;
    }
    v.status = Status::Inconclusive;
    v.condition = "I empty on complete data; the criterion is sufficient only";
    return v;
}

HeightBound height_lower_bound(const IrregularSet& irregular, const EligibleSet& eligible,
                               const HypothesisFlags& flags, std::uint64_t search_budget)
{
    require_same_prime(irregular.prime(), eligible.p, "height_lower_bound");
    if (flags.vandiver == Knowledge::Unknown) {
        throw DomainError("height_lower_bound requires the Vandiver hypothesis");
    }
    HeightBound out;
    if (irregular.empty()) {
        out.module_zero = true;
        out.notes.push_back("R empty: the module is zero");
        return out;
    }
    const std::uint64_t m = irregular.prime().value() - 1;
    PackingInstance inst(m, {irregular.indices().begin(), irregular.indices().end()},
                         {eligible.I.begin(), eligible.I.end()});
    const auto packing = max_disjoint_translates_exact(inst, search_budget);
    out.d = packing.d;
    out.witness = packing.witness;
    out.optimal = packing.optimal;
    out.bound_exact = packing.d + 1;

    const std::uint64_t r = irregular.r();
    const std::uint64_t q = r * r - r + 1;
    out.bound_corollary = Rational::make(eligible.s() + q, q);

    out.partial = !eligible.complete();
    if (out.partial) {
        out.notes.push_back(std::to_string(eligible.missing.size()) +
                            " odd i lack data; bound computed on the conservative I");
    }
    if (!out.optimal) {
        out.notes.push_back("packing search budget exhausted; d is the best family found");
    }
    return out;
}

Verdict gk_verdict(const IrregularSet& irregular, const CongruenceCheckResult& cc,
                   const PairingTable& table, const HypothesisFlags& flags)
{
    require_same_prime(irregular.prime(), table.prime(), "gk_verdict");
    require_same_prime(irregular.prime(), cc.p, "gk_verdict");

    Verdict v;
    v.flags_used = flags;
    const auto& ks = irregular.indices();

    if (ks.size() <= 1) {
        v.status = Status::Holds;
        v.condition = "Z_p-rank of X_K at most 1: G_K is free pro-p and abelian";
    } else if (!cc.holds()) {
        v.status = Status::Inconclusive;
        v.condition = "congruence hypotheses fail";
        for (const auto& [k, k2] : cc.sum_two_violations) {
            v.notes.push_back("k + k' = 2 mod p-1 at " + pair_name(k, k2));
        }
        for (const auto& [a, b] : cc.collision_violations) {
            v.notes.push_back("equal sums mod p-1 at " + pair_name(a.first, a.second) + " and " +
                              pair_name(b.first, b.second));
        }
    } else {
        std::vector<std::string> zeros, missing;
        for (std::size_t a = 0; a < ks.size(); ++a) {
            for (std::size_t b = a + 1; b < ks.size(); ++b) {
                const auto value = table.b(ks[a], ks[b]);
                if (!value) {
                    missing.push_back(pair_name(ks[a], ks[b]));
                } else if (*value == 0) {
                    zeros.push_back(pair_name(ks[a], ks[b]));
                }
            }
        }
        if (!zeros.empty()) {
            v.status = Status::Fails;
            v.condition = "b_{p,k,k'} = 0 forces a vanishing pairing: G_K is nonabelian";
            for (const auto& z : zeros) v.notes.push_back("zero b at " + z);
        } else if (!missing.empty()) {
            v.status = Status::Conditional;
            v.condition = "b values missing";
            for (const auto& m : missing) v.notes.push_back("missing b at " + m);
        } else if (flags.pairing_surjective == Knowledge::Known) {
            v.status = Status::Holds;
            v.condition = "all b nonzero and the pairing is surjective";
        } else {
            v.status = Status::Conditional;
            v.condition = "all b nonzero: abelian if the pairing is surjective";
        }
        v.notes.push_back("congruence hypotheses checked over all unordered pairs k < k'");
    }

    if (flags.vandiver == Knowledge::Unknown || flags.procyclic == Knowledge::Unknown) {
        if (v.status == Status::Holds || v.status == Status::Fails) {
            v.notes.push_back("would be " + std::string(to_string(v.status)) +
                              " under Vandiver and procyclicity");
            v.status = Status::Conditional;
        }
    }
    return v;
}

RemarkCheck remark_ranges_check(const std::vector<RemarkSample>& samples)
{
    RemarkCheck out;
    for (const auto& sample : samples) {
        if (sample.p >= kSurjectivityKnownBelow) continue;
        if (sample.r > 3) {
            out.violations.push_back(sample);
            continue;
        }
        if (sample.r == 0) continue;
        if (!sample.s) {
            out.skipped.push_back(sample.p);
            continue;
        }
        const std::size_t half = (sample.p - 1) / 2;
        if (*sample.s > half) {
            out.violations.push_back(sample);
            continue;
        }
        const std::size_t gap = half - *sample.s;
        static constexpr std::size_t lo[] = {0, 2, 6, 9};
        static constexpr std::size_t hi[] = {0, 6, 8, 12};
        if (gap < lo[sample.r] || gap > hi[sample.r]) out.violations.push_back(sample);
    }
    return out;
}

} // namespace irreg
