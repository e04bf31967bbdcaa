#include "irreg/sweep.hpp"

#include <charconv>
#include <exception>
#include <fstream>
#include <system_error>

namespace irreg {

namespace {

constexpr std::string_view kCacheMagic = "# irreg-cache\t";

bool parse_u32(std::string_view s, std::uint32_t& out)
{
    if (s.empty()) return false;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

} // namespace

std::optional<IrregularSet> parse_irregular_line(std::string_view line, std::string* error)
{
    auto fail = [&](std::string msg) -> std::optional<IrregularSet> {
        if (error) *error = std::move(msg);
        return std::nullopt;
    };
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) return fail("missing tab");
    std::uint32_t p = 0;
    if (!parse_u32(line.substr(0, tab), p)) return fail("bad prime field");
    std::vector<std::uint32_t> ks;
    std::string_view rest = line.substr(tab + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        std::uint32_t k = 0;
        if (!parse_u32(rest.substr(0, comma), k)) return fail("bad index list");
        ks.push_back(k);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
        if (rest.empty()) return fail("trailing comma");
    }
    try {
        if (!is_prime(p) || p < 7) return fail("field 1 is not a prime >= 7");
        return IrregularSet(PrimeModulus(p), std::move(ks));
    } catch (const DomainError& e) {
        return fail(e.what());
    }
}

std::string format_irregular_line(const IrregularSet& set)
{
    std::string out = std::to_string(set.prime().value());
    out += '\t';
    bool first = true;
    for (std::uint32_t k : set.indices()) {
        if (!first) out += ',';
        out += std::to_string(k);
        first = false;
    }
    return out;
}

IrregularCache::IrregularCache(std::filesystem::path dir)
    : dir_(std::move(dir)), file_(dir_ / "irregular.tsv")
{
}

std::map<std::uint32_t, IrregularSet> IrregularCache::load(std::vector<std::string>& warnings) const
{
    std::lock_guard lock(mutex_);
    return load_unlocked(warnings);
}

std::map<std::uint32_t, IrregularSet>
IrregularCache::load_unlocked(std::vector<std::string>& warnings) const
{
    std::map<std::uint32_t, IrregularSet> out;
    std::ifstream in(file_);
    if (!in) return out;

    std::string line;
    if (!std::getline(in, line) || line != std::string(kCacheMagic) + std::string(kToolVersion)) {
        warnings.push_back("cache " + file_.string() + ": missing or foreign header; ignoring file");
        return out;
    }
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.front() == '#') continue;
        std::string why;
        auto set = parse_irregular_line(line, &why);
        if (!set) {
            warnings.push_back("cache line " + std::to_string(lineno) + ": " + why + "; recomputing");
            continue;
        }
        bool verified = true;
        for (std::uint32_t k : set->indices()) {
            if (bernoulli_voronoi(set->prime(), k) != 0) {
                verified = false;
                break;
            }
        }
        if (!verified) {
            warnings.push_back("cache line " + std::to_string(lineno) + ": p = " +
                               std::to_string(set->prime().value()) +
                               " lists an index with B_k != 0; recomputing");
            continue;
        }
        out.insert_or_assign(set->prime().value(), std::move(*set));
    }
    return out;
}

bool IrregularCache::store(const std::vector<IrregularSet>& entries, std::vector<std::string>& warnings)
{
    std::lock_guard lock(mutex_);
    std::vector<std::string> ignored;
    auto merged = load_unlocked(ignored);
    for (const auto& e : entries) merged.insert_or_assign(e.prime().value(), e);

    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    const auto tmp = file_.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            warnings.push_back("cannot write cache " + file_.string() + "; continuing uncached");
            return false;
        }
        out << kCacheMagic << kToolVersion << '\n';
        for (const auto& [p, set] : merged) out << format_irregular_line(set) << '\n';
        if (!out.flush()) {
            warnings.push_back("cannot write cache " + file_.string() + "; continuing uncached");
            return false;
        }
    }
    std::filesystem::rename(tmp, file_, ec);
    if (ec) {
        warnings.push_back("cannot replace cache " + file_.string() + ": " + ec.message());
        return false;
    }
    return true;
}

std::vector<IrregularSet> irregular_sweep_serial(std::uint32_t p_max, RowMethod method)
{
    std::vector<IrregularSet> out;
    for (std::uint32_t p : primes_in_range(7, p_max)) {
        out.push_back(irregular_indices(PrimeModulus(p), method));
    }
    return out;
}

SweepResult irregular_sweep(std::uint32_t p_max, const SweepOptions& options)
{
    if (options.jobs < 1) throw DomainError("jobs must be at least 1");
    SweepResult result;
    const auto primes = primes_in_range(7, p_max);

    std::map<std::uint32_t, IrregularSet> cached;
    if (options.cache) cached = options.cache->load(result.warnings);

    std::vector<std::optional<IrregularSet>> slots(primes.size());
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (auto it = cached.find(primes[i]); it != cached.end()) {
            slots[i] = it->second;
            ++result.from_cache;
        } else {
            todo.push_back(i);
        }
    }

    // Largest primes first so dynamic scheduling balances the tail.
    std::vector<std::exception_ptr> errors(todo.size());
    const auto n_todo = static_cast<std::ptrdiff_t>(todo.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(options.jobs)
    for (std::ptrdiff_t t = 0; t < n_todo; ++t) {
        const std::size_t slot = todo[todo.size() - 1 - static_cast<std::size_t>(t)];
        try {
            slots[slot] = irregular_indices(PrimeModulus(primes[slot]), options.method);
        } catch (...) {
            errors[static_cast<std::size_t>(t)] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    std::vector<IrregularSet> fresh;
    fresh.reserve(todo.size());
    for (std::size_t i : todo) fresh.push_back(*slots[i]);
    result.computed = fresh.size();
    if (options.cache && !fresh.empty()) options.cache->store(fresh, result.warnings);

    result.sets.reserve(primes.size());
    for (auto& s : slots) result.sets.push_back(std::move(*s));
    return result;
}

} // namespace irreg
