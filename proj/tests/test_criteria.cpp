#include "irreg/criteria.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace irreg;

namespace {

const IrregularSet R11(PrimeModulus(11), {});
const IrregularSet R37(PrimeModulus(37), {32});
const IrregularSet R157(PrimeModulus(157), {62, 110});
const IrregularSet R1217(PrimeModulus(1217), {784, 866, 1118});

std::set<PairKey> every_i(const IrregularSet& R, std::uint32_t k)
{
    std::set<PairKey> keys;
    for (std::uint32_t i = 1; i + 1 < R.prime().value(); i += 2) keys.insert({i, k});
    return keys;
}

Verdict gk(const IrregularSet& R, const PairingTable& t, const HypothesisFlags& f)
{
    return gk_verdict(R, check_congruences(R), t, f);
}

int rank(Status s)
{
    switch (s) {
    case Status::Fails: return 0;
    case Status::Conditional: return 1;
    case Status::Holds: return 2;
    default: return -1;
    }
}

} // namespace

TEST_CASE("default flags")
{
    const auto small = HypothesisFlags::defaults_for(157);
    CHECK(small.vandiver == Knowledge::Assumed);
    CHECK(small.procyclic == Knowledge::Assumed);
    CHECK(small.pairing_surjective == Knowledge::Known);
    CHECK(HypothesisFlags::defaults_for(1217).pairing_surjective == Knowledge::Unknown);
    CHECK(HypothesisFlags::defaults_for(12'000'017).vandiver == Knowledge::Unknown);
    CHECK(parse_knowledge("yes") == Knowledge::Known);
    CHECK(parse_knowledge("no") == Knowledge::Unknown);
    CHECK_THROWS_AS(parse_knowledge("maybe"), DomainError);
}

TEST_CASE("greenberg_verdict examples")
{
    const auto f157 = HypothesisFlags::defaults_for(157);
    CHECK(greenberg_verdict(R11, eligible_set(R11, PairingTable(R11)), HypothesisFlags::defaults_for(11)).status ==
          Status::Trivial);
    CHECK(greenberg_verdict(R157, eligible_set(R157, synth_table(R157, {}, 1)), f157).status == Status::Holds);
    CHECK(greenberg_verdict(R157, eligible_set(R157, synth_table(R157, every_i(R157, 62), 1)), f157).status ==
          Status::Inconclusive);
    CHECK(greenberg_verdict(R157, eligible_set(R157, PairingTable(R157)), f157).status == Status::Conditional);

    auto unknown = f157;
    unknown.vandiver = Knowledge::Unknown;
    CHECK(greenberg_verdict(R157, eligible_set(R157, synth_table(R157, {}, 1)), unknown).status ==
          Status::Conditional);

    CHECK_THROWS_AS(greenberg_verdict(R37, eligible_set(R157, PairingTable(R157)), f157), DomainError);
}

TEST_CASE("height_lower_bound examples")
{
    const auto f = HypothesisFlags::defaults_for(37);
    const auto h = height_lower_bound(R37, eligible_set(R37, synth_table(R37, {}, 1)), f);
    CHECK(h.d == 18);
    CHECK(h.bound_exact == 19);
    CHECK(h.bound_corollary == Rational{19, 1});
    CHECK_FALSE(h.partial);
    CHECK(h.optimal);

    // s = 20, r = 2: 20/3 + 1 = 23/3.
    EligibleSet twenty{PrimeModulus(157), {}, {}};
    for (std::uint32_t i = 1; twenty.I.size() < 20; i += 2) twenty.I.push_back(i);
    const auto h20 = height_lower_bound(R157, twenty, HypothesisFlags::defaults_for(157));
    CHECK(h20.bound_corollary == Rational{23, 3});
    CHECK(h20.bound_corollary.str() == "23/3");
    CHECK(h20.bound_corollary.ceil() == 8);

    const EligibleSet none{PrimeModulus(157), {}, {}};
    const auto h0 = height_lower_bound(R157, none, HypothesisFlags::defaults_for(157));
    CHECK(h0.bound_corollary == Rational{1, 1});
    CHECK(h0.bound_exact == 1);

    const auto zero = height_lower_bound(R11, eligible_set(R11, PairingTable(R11)), HypothesisFlags::defaults_for(11));
    CHECK(zero.module_zero);

    const auto partial = height_lower_bound(R37, eligible_set(R37, PairingTable(R37)), f);
    CHECK(partial.partial);
    CHECK(partial.bound_exact == 1);

    auto unknown = f;
    unknown.vandiver = Knowledge::Unknown;
    CHECK_THROWS_AS(height_lower_bound(R37, eligible_set(R37, PairingTable(R37)), unknown), DomainError);
}

TEST_CASE("height bound dominates the corollary on complete data")
{
    std::mt19937_64 rng(99);
    const IrregularSet sets[] = {R37, R157, IrregularSet(PrimeModulus(491), {292, 336, 338})};
    for (int trial = 0; trial < 30; ++trial) {
        const auto& R = sets[trial % 3];
        std::set<PairKey> zeros;
        for (std::uint32_t i = 1; i + 1 < R.prime().value(); i += 2) {
            if (rng() % 3 == 0) zeros.insert({i, R.indices()[rng() % R.r()]});
        }
        const auto el = eligible_set(R, synth_table(R, zeros, trial));
        const auto f = HypothesisFlags::defaults_for(R.prime().value());
        const auto h = height_lower_bound(R, el, f);
        REQUIRE(h.bound_exact >= h.bound_corollary.ceil());
        if (greenberg_verdict(R, el, f).status == Status::Holds) REQUIRE(h.bound_exact >= 2);
    }
}

TEST_CASE("gk_verdict examples")
{
    const auto f1217 = HypothesisFlags::defaults_for(1217);
    std::istringstream fixture("B 1217 784 866 0\n");
    const auto t1217 = parse_pairing_table(fixture, R1217);
    const auto v = gk(R1217, t1217, f1217);
    CHECK(v.status == Status::Fails);

    CHECK(gk(R11, PairingTable(R11), HypothesisFlags::defaults_for(11)).status == Status::Holds);
    CHECK(gk(R37, PairingTable(R37), HypothesisFlags::defaults_for(37)).status == Status::Holds);

    const auto f157 = HypothesisFlags::defaults_for(157);
    CHECK(gk(R157, synth_b_table(R157, {}, 1), f157).status == Status::Holds);
    CHECK(gk(R157, PairingTable(R157), f157).status == Status::Conditional);

    // p > 1000 with all b nonzero: surjectivity unknown.
    const auto c = gk(R1217, synth_b_table(R1217, {}, 1), f1217);
    CHECK(c.status == Status::Conditional);

    // Congruence violation.
    const IrregularSet R13(PrimeModulus(13), {4, 10});
    CHECK(gk(R13, synth_b_table(R13, {}, 1), HypothesisFlags::defaults_for(13)).status == Status::Inconclusive);

    // Unknown procyclicity never lets FAILS or HOLDS through.
    auto weak = f1217;
    weak.procyclic = Knowledge::Unknown;
    CHECK(gk(R1217, t1217, weak).status == Status::Conditional);

    CHECK_THROWS_AS(gk_verdict(R37, check_congruences(R37), PairingTable(R157), f157), DomainError);
}

TEST_CASE("gk_verdict is monotone")
{
    const auto f = HypothesisFlags::defaults_for(1217);
    for (auto surj : {Knowledge::Known, Knowledge::Unknown}) {
        auto flags = f;
        flags.pairing_surjective = surj;
        const auto full = synth_b_table(R1217, {}, 3);
        const int base = rank(gk(R1217, full, flags).status);
        for (const auto& [key, value] : full.b_entries()) {
            auto zeroed = full;
            zeroed.set_b(key.first, key.second, 0);
            CHECK(rank(gk(R1217, zeroed, flags).status) <= base);
        }
        // Adding data never leaves CONDITIONAL for INCONCLUSIVE.
        PairingTable partial(R1217);
        partial.set_b(784, 1118, 1);
        const auto before = gk(R1217, partial, flags).status;
        CHECK(before == Status::Conditional);
        partial.set_b(866, 1118, 1);
        partial.set_b(784, 866, 1);
        CHECK(gk(R1217, partial, flags).status != Status::Inconclusive);
    }
}

TEST_CASE("verdicts are pure")
{
    const auto t = synth_b_table(R1217, {{784, 866}}, 8);
    const auto f = HypothesisFlags::defaults_for(1217);
    CHECK(gk(R1217, t, f) == gk(R1217, t, f));
}

TEST_CASE("remark_ranges_check examples")
{
    CHECK(remark_ranges_check({{37, 1, 18 - 4}}).violations.empty());
    const auto bad = remark_ranges_check({{157, 2, 78 - 5}});
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0].p == 157);
    const auto empty = remark_ranges_check({});
    CHECK(empty.violations.empty());
    CHECK(empty.skipped.empty());

    const auto skipped = remark_ranges_check({{157, 2, std::nullopt}});
    CHECK(skipped.violations.empty());
    CHECK(skipped.skipped == std::vector<std::uint32_t>{157});
    CHECK(remark_ranges_check({{491, 4, 200}}).violations.size() == 1);
    CHECK(remark_ranges_check({{1217, 3, 0}}).violations.empty());
    CHECK(remark_ranges_check({{491, 3, 245 - 9}, {491, 3, 245 - 12}}).violations.empty());
    CHECK(remark_ranges_check({{491, 3, 245 - 13}}).violations.size() == 1);
}
