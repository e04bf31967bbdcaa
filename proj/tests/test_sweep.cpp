#include "irreg/sweep.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>

using namespace irreg;

namespace {

std::filesystem::path scratch_dir(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / ("irreg_test_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("sweep below 40")
{
    const auto sets = irregular_sweep(40).sets;
    std::vector<std::uint32_t> primes;
    for (const auto& s : sets) primes.push_back(s.prime().value());
    CHECK(primes == std::vector<std::uint32_t>{7, 11, 13, 17, 19, 23, 29, 31, 37});
    for (const auto& s : sets) {
        if (s.prime().value() == 37) {
            CHECK(s.indices() == std::vector<std::uint32_t>{32});
        } else {
            CHECK(s.empty());
        }
    }
}

TEST_CASE("smallest sweep")
{
    const auto sets = irregular_sweep(8).sets;
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].prime().value() == 7);
    CHECK(sets[0].empty());
    CHECK(irregular_sweep(7).sets.empty());
}

TEST_CASE("sweep below 1000 against the exact rational oracle")
{
    // tests/oracles/bernoulli_oracle.py: 64 irregular primes, 81 pairs, r <= 3,
    // and the listed primes with r >= 2.
    const std::map<std::uint32_t, std::vector<std::uint32_t>> multi{
        {157, {62, 110}},  {353, {186, 300}},      {379, {100, 174}}, {467, {94, 194}},
        {491, {292, 336, 338}}, {547, {270, 486}}, {587, {90, 92}},   {617, {20, 174, 338}},
        {631, {80, 226}},  {647, {236, 242, 554}}, {673, {408, 502}}, {691, {12, 200}},
        {809, {330, 628}}, {929, {520, 820}},
    };
    const auto sets = irregular_sweep(1000, {.jobs = 4}).sets;
    std::size_t irregular = 0, pairs = 0, max_r = 0;
    for (const auto& s : sets) {
        if (!s.empty()) ++irregular;
        pairs += s.r();
        max_r = std::max(max_r, s.r());
        if (s.r() >= 2) {
            REQUIRE(multi.contains(s.prime().value()));
            CHECK(multi.at(s.prime().value()) == s.indices());
        }
    }
    CHECK(irregular == 64);
    CHECK(pairs == 81);
    CHECK(max_r == 3);
}

TEST_CASE("parallel sweep equals the serial reference")
{
    const auto serial = irregular_sweep_serial(1500);
    for (int jobs : {1, 3, 8}) {
        CHECK(irregular_sweep(1500, {.jobs = jobs}).sets == serial);
    }
    CHECK(irregular_sweep_serial(300, RowMethod::Naive) == irregular_sweep_serial(300, RowMethod::Fast));
}

TEST_CASE("cache round trip")
{
    const auto dir = scratch_dir("cache_roundtrip");
    IrregularCache cache(dir);
    SweepOptions opts{.jobs = 2, .cache = &cache};
    const auto first = irregular_sweep(200, opts);
    CHECK(first.computed == first.sets.size());
    CHECK(first.from_cache == 0);
    CHECK(std::filesystem::exists(cache.file()));

    const auto second = irregular_sweep(300, opts);
    CHECK(second.from_cache == first.sets.size());
    CHECK(second.sets == irregular_sweep_serial(300));
    CHECK(second.warnings.empty());
}

TEST_CASE("corrupted cache entries are reported and recomputed")
{
    const auto dir = scratch_dir("cache_corrupt");
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "irregular.tsv");
        out << "# irreg-cache\t" << kToolVersion << '\n';
        out << "37\t30\n";      // B_30 != 0 mod 37
        out << "41\tgarbage\n"; // unparsable
        out << "43\t\n";        // valid regular entry
    }
    IrregularCache cache(dir);
    const auto result = irregular_sweep(50, {.jobs = 1, .cache = &cache});
    CHECK(result.warnings.size() == 2);
    CHECK(result.from_cache == 1);
    CHECK(result.sets == irregular_sweep_serial(50));

    // The rewritten file is clean.
    std::vector<std::string> warnings;
    const auto reloaded = cache.load(warnings);
    CHECK(warnings.empty());
    CHECK(reloaded.at(37).indices() == std::vector<std::uint32_t>{32});
}

TEST_CASE("foreign cache header is ignored")
{
    const auto dir = scratch_dir("cache_foreign");
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "irregular.tsv") << "p\tk\n37\t32\n";
    IrregularCache cache(dir);
    std::vector<std::string> warnings;
    CHECK(cache.load(warnings).empty());
    CHECK(warnings.size() == 1);
}

TEST_CASE("unwritable cache warns and continues")
{
    const auto dir = scratch_dir("cache_blocked");
    std::ofstream(dir.string()) << "a file where a directory should be\n";
    IrregularCache cache(dir);
    const auto result = irregular_sweep(40, {.jobs = 1, .cache = &cache});
    CHECK(result.sets == irregular_sweep_serial(40));
    CHECK_FALSE(result.warnings.empty());
    std::filesystem::remove(dir);
}

TEST_CASE("irregular line format")
{
    auto set = parse_irregular_line("157\t62,110");
    REQUIRE(set);
    CHECK(format_irregular_line(*set) == "157\t62,110");
    CHECK(parse_irregular_line("41\t")->empty());
    std::string why;
    CHECK_FALSE(parse_irregular_line("39\t", &why));
    CHECK_FALSE(parse_irregular_line("157\t62,", &why));
    CHECK_FALSE(parse_irregular_line("157 62", &why));
    CHECK_FALSE(parse_irregular_line("37\t33", &why));
}
