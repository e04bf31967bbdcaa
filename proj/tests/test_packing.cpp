#include "irreg/packing.hpp"
#include "irreg/modmath.hpp"

#include <doctest.h>

#include <random>

using namespace irreg;

namespace {

std::vector<std::uint64_t> odd_residues(std::uint64_t m)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 1; i < m; i += 2) out.push_back(i);
    return out;
}

PackingInstance random_instance(std::mt19937_64& rng, std::size_t max_candidates)
{
    const std::uint64_t m = 2 + rng() % 59;
    std::vector<std::uint64_t> R, I;
    const std::size_t r = 1 + rng() % 4;
    for (std::size_t j = 0; j < r; ++j) R.push_back(rng() % m);
    const std::size_t n = rng() % (max_candidates + 1);
    for (std::size_t j = 0; j < n; ++j) I.push_back(rng() % m);
    return PackingInstance(m, R, I);
}

} // namespace

TEST_CASE("conflict_diffs examples")
{
    CHECK(conflict_diffs({2, 6}, 12) == std::vector<std::uint64_t>{0, 4, 8});
    CHECK(conflict_diffs({}, 12).empty());
    CHECK(conflict_diffs({32}, 36) == std::vector<std::uint64_t>{0});
}

TEST_CASE("instance normalization")
{
    const PackingInstance inst(12, {14, 2, 6}, {13, 1, 25, 3});
    CHECK(inst.shape == std::vector<std::uint64_t>{2, 6});
    CHECK(inst.candidates == std::vector<std::uint64_t>{1, 3});
    CHECK_THROWS_AS(PackingInstance(0, {}, {}), DomainError);
}

TEST_CASE("solver examples")
{
    const PackingInstance triangles(12, {2, 6}, odd_residues(12));
    const PackingInstance singleton(36, {32}, odd_residues(36));
    const PackingInstance empty(12, {2, 6}, {});

    for (auto solve : {+[](const PackingInstance& i) { return max_disjoint_translates_exact(i); },
                       +[](const PackingInstance& i) { return max_disjoint_translates_greedy(i); },
                       +[](const PackingInstance& i) { return brute_force_packing(i); }}) {
        const auto a = solve(triangles);
        CHECK(a.d == 2);
        CHECK(a.witness == std::vector<std::uint64_t>{1, 3});
        const auto b = solve(singleton);
        CHECK(b.d == 18);
        CHECK(b.witness == odd_residues(36));
        const auto c = solve(empty);
        CHECK(c.d == 0);
        CHECK(c.witness.empty());
    }
    CHECK(max_disjoint_translates_greedy(triangles).method == PackingMethod::Greedy);
    CHECK(max_disjoint_translates_exact(triangles).optimal);
    CHECK_THROWS_AS(brute_force_packing(PackingInstance(60, {0}, odd_residues(60))), DomainError);
}

TEST_CASE("exact equals brute force on 500 random instances")
{
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 500; ++trial) {
        const auto inst = random_instance(rng, 20);
        const auto exact = max_disjoint_translates_exact(inst);
        const auto brute = brute_force_packing(inst);
        const auto greedy = max_disjoint_translates_greedy(inst);
        INFO("m=" << inst.modulus << " |R|=" << inst.shape.size() << " |I|=" << inst.candidates.size());
        REQUIRE(exact.optimal);
        REQUIRE(exact.d == brute.d);
        REQUIRE(exact.witness == brute.witness);
        REQUIRE(verify_packing(inst, exact.witness));
        REQUIRE(verify_packing(inst, greedy.witness));
        REQUIRE(greedy.d <= exact.d);
    }
}

TEST_CASE("greedy meets the counting guarantee")
{
    // s / (r^2 - r + 1): each chosen translate blocks at most r^2 - r + 1 candidates.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto inst = random_instance(rng, 60);
        const std::uint64_t r = inst.shape.size();
        const std::uint64_t q = r * r - r + 1;
        const std::uint64_t s = inst.candidates.size();
        const auto greedy = max_disjoint_translates_greedy(inst);
        REQUIRE(greedy.d >= (s + q - 1) / q);
    }
}

TEST_CASE("shift invariance")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const auto inst = random_instance(rng, 30);
        const std::uint64_t c = rng() % inst.modulus;
        std::vector<std::uint64_t> shifted;
        for (auto i : inst.candidates) shifted.push_back(i + c);
        const PackingInstance moved(inst.modulus, inst.shape, shifted);
        REQUIRE(max_disjoint_translates_exact(inst).d == max_disjoint_translates_exact(moved).d);
    }
}

TEST_CASE("larger exact instances stay consistent")
{
    // Circulant conflicts of a 3-element shape on p = 491 scale data.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint64_t m = 2 * (40 + rng() % 60);
        std::vector<std::uint64_t> R;
        for (int j = 0; j < 3; ++j) R.push_back(2 * (rng() % (m / 2)));
        std::vector<std::uint64_t> I;
        for (auto i : odd_residues(m)) {
            if (rng() % 5) I.push_back(i);
        }
        const PackingInstance inst(m, R, I);
        const auto exact = max_disjoint_translates_exact(inst);
        REQUIRE(exact.optimal);
        REQUIRE(verify_packing(inst, exact.witness));
        REQUIRE(exact.d >= max_disjoint_translates_greedy(inst).d);
    }
}

TEST_CASE("lattice dynamic program agrees with branch and reduce")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const std::uint64_t m = 2 * (20 + rng() % 100);
        std::vector<std::uint64_t> R;
        const std::size_t r = 2 + rng() % 2;
        for (std::size_t j = 0; j < r; ++j) R.push_back(rng() % m);
        std::vector<std::uint64_t> I;
        for (std::uint64_t i = 0; i < m; ++i) {
            if ((i % 2 == 1 || trial % 3 == 0) && rng() % 6) I.push_back(i);
        }
        const PackingInstance inst(m, R, I);
        const auto dp = max_disjoint_translates_exact(inst);
        const auto search = max_disjoint_translates_exact(inst, kDefaultSearchBudget, ExactEngine::Search);
        INFO("m=" << m << " R=" << R[0] << "," << R[1]);
        REQUIRE(dp.optimal);
        REQUIRE(search.optimal);
        REQUIRE(dp.d == search.d);
        REQUIRE(dp.witness == search.witness);
        REQUIRE(verify_packing(inst, dp.witness));
    }
}

TEST_CASE("triangular torus instances from real irregular triples")
{
    // p = 491, R = {292, 336, 338}; p = 617, R = {20, 174, 338}.
    const PackingInstance t491(490, {292, 336, 338}, odd_residues(490));
    const auto a = max_disjoint_translates_exact(t491);
    CHECK(a.optimal);
    CHECK(a.d == 76);
    CHECK(verify_packing(t491, a.witness));

    const PackingInstance t617(616, {20, 174, 338}, odd_residues(616));
    const auto b = max_disjoint_translates_exact(t617);
    CHECK(b.optimal);
    CHECK(b.d == 77);
    CHECK(b.witness.front() == 1);
    CHECK(verify_packing(t617, b.witness));
}

TEST_CASE("exhausted budget keeps a valid family")
{
    const PackingInstance inst(490, {292, 336, 338}, odd_residues(490));
    const auto tiny = max_disjoint_translates_exact(inst, 10, ExactEngine::Search);
    CHECK_FALSE(tiny.optimal);
    CHECK(verify_packing(inst, tiny.witness));
    CHECK(tiny.d >= max_disjoint_translates_greedy(inst).d);
}

TEST_CASE("verify_packing rejects bad witnesses")
{
    const PackingInstance inst(12, {2, 6}, odd_residues(12));
    CHECK(verify_packing(inst, {1, 3}));
    CHECK_FALSE(verify_packing(inst, {1, 5}));
    CHECK_FALSE(verify_packing(inst, {2}));
    CHECK(verify_packing(inst, {}));
}
