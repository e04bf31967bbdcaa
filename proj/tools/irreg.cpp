// irreg: command-line front end.
//
// Exit codes: 0 success, 1 internal error, 2 usage or data error.
#include "irreg/bernoulli.hpp"
#include "irreg/criteria.hpp"
#include "irreg/eigenstructure.hpp"
#include "irreg/pairing.hpp"
#include "irreg/report.hpp"
#include "irreg/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace irreg;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitData = 2;

constexpr const char* kCacheEnv = "IRREG_CACHE_DIR";

/// Usage or data problem surfaced to the user with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::unique_ptr<IrregularCache> open_cache(const std::string& flag)
{
    std::string dir = flag;
    if (dir.empty()) {
        if (const char* env = std::getenv(kCacheEnv)) dir = env;
    }
    if (dir.empty()) return nullptr;
    return std::make_unique<IrregularCache>(dir);
}

void print_warnings(const std::vector<std::string>& warnings)
{
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

PrimeModulus prime_arg(std::uint64_t p)
{
    try {
        return PrimeModulus(p);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

PairingCorpus load_corpus(const std::string& path)
{
    if (path == "-") return parse_pairing_corpus(std::cin, "-");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read pairing file '" + path + "'");
    return parse_pairing_corpus(in, path);
}

std::optional<Knowledge> knowledge_option(const std::string& value)
{
    if (value.empty() || value == "auto") return std::nullopt;
    return parse_knowledge(value);
}

/// Parses "p:k1,k2,..." for congruence-sweep --inject.
IrregularSet parse_injection(const std::string& spec)
{
    std::string line = spec;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw UsageError("--inject expects p:k1,k2,...");
    line[colon] = '\t';
    std::string why;
    auto set = parse_irregular_line(line, &why);
    if (!set) throw UsageError("--inject '" + spec + "': " + why);
    return *set;
}

struct CommonFlags {
    std::string vandiver = "auto";
    std::string procyclic = "auto";
    std::string surjective = "auto";

    FlagOverrides overrides() const
    {
        return {knowledge_option(vandiver), knowledge_option(procyclic), knowledge_option(surjective)};
    }
};

void add_flag_options(CLI::App* cmd, CommonFlags& flags)
{
    const auto choices = CLI::IsMember({"auto", "known", "assumed", "unknown", "yes", "no"});
    cmd->add_option("--vandiver", flags.vandiver, "Vandiver hypothesis: auto|known|assumed|unknown")
        ->check(choices);
    cmd->add_option("--procyclic", flags.procyclic, "procyclic eigenspaces: auto|known|assumed|unknown")
        ->check(choices);
    cmd->add_option("--surjective", flags.surjective,
                    "pairing surjectivity: yes|no|auto (auto = yes iff p < 1000)")
        ->check(choices);
}

int run_bern(std::uint64_t p_raw, std::optional<std::uint32_t> k, const std::string& method_name)
{
    const PrimeModulus p = prime_arg(p_raw);
    const RowMethod method = parse_row_method(method_name);
    if (p.value() == 3) throw UsageError("p = 3 has no even index in [2, p-3]");
    if (k) {
        std::uint32_t value = 0;
        try {
            value = method == RowMethod::Voronoi ? bernoulli_voronoi(p, *k)
                                                 : bernoulli_row(p, method).at(*k);
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
        if (p.value() <= 200 && bernoulli_naive_row(p).at(*k) != value) {
            std::cerr << "error: " << to_string(method) << " disagrees with the naive recurrence\n";
            return kExitInternal;
        }
        std::cout << *k << '\t' << value << '\n';
        return kExitOk;
    }
    const BernoulliRow row = bernoulli_row(p, method);
    if (p.value() <= 200 && !(row == bernoulli_naive_row(p))) {
        std::cerr << "error: " << to_string(method) << " disagrees with the naive recurrence\n";
        return kExitInternal;
    }
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i) {
        out += std::to_string(2 * i + 2) + '\t' + std::to_string(row.even_values()[i]) + '\n';
    }
    std::cout << out;
    return kExitOk;
}

SweepResult sweep(std::uint32_t max_p, int jobs, const std::string& cache_dir)
{
    if (jobs < 1) throw UsageError("--jobs must be at least 1");
    auto cache = open_cache(cache_dir);
    SweepOptions opts;
    opts.jobs = jobs;
    opts.cache = cache.get();
    auto result = irregular_sweep(max_p, opts);
    print_warnings(result.warnings);
    return result;
}

int run_irregular(std::uint32_t max_p, int jobs, const std::string& cache_dir)
{
    const auto result = sweep(max_p, jobs, cache_dir);
    std::string out;
    for (const auto& set : result.sets) {
        if (!set.empty()) out += format_irregular_line(set) + '\n';
    }
    std::cout << out;
    return kExitOk;
}

std::string format_violation(const CongruenceCheckResult& cc)
{
    std::string out;
    const std::string p = std::to_string(cc.p.value());
    for (const auto& [k, k2] : cc.sum_two_violations) {
        out += p + "\tsum_two\t" + std::to_string(k) + "," + std::to_string(k2) + '\n';
    }
    for (const auto& [a, b] : cc.collision_violations) {
        out += p + "\tcollision\t" + std::to_string(a.first) + "," + std::to_string(a.second) + "\t" +
               std::to_string(b.first) + "," + std::to_string(b.second) + '\n';
    }
    return out;
}

int run_congruence_sweep(std::uint32_t max_p, int jobs, const std::string& cache_dir,
                         const std::vector<std::string>& injections)
{
    auto sets = sweep(max_p, jobs, cache_dir).sets;
    for (const auto& spec : injections) {
        const IrregularSet planted = parse_injection(spec);
        auto it = std::find_if(sets.begin(), sets.end(), [&](const IrregularSet& s) {
            return s.prime().value() == planted.prime().value();
        });
        if (it != sets.end()) {
            *it = planted;
        } else {
            sets.push_back(planted);
        }
    }
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        return a.prime().value() < b.prime().value();
    });
    std::string out;
    for (const auto& cc : congruence_sweep(sets, jobs)) out += format_violation(cc);
    std::cout << out;
    return kExitOk;
}

IrregularSet irregular_for(PrimeModulus p, const std::string& cache_dir)
{
    if (p.value() < 7) return IrregularSet(p, {});
    auto cache = open_cache(cache_dir);
    if (cache) {
        std::vector<std::string> warnings;
        auto cached = cache->load(warnings);
        print_warnings(warnings);
        if (auto it = cached.find(p.value()); it != cached.end()) return it->second;
    }
    auto set = irregular_indices(p);
    if (cache) {
        std::vector<std::string> warnings;
        cache->store({set}, warnings);
        print_warnings(warnings);
    }
    return set;
}

void emit(const Report& report, const std::string& format)
{
    if (format == "tsv") {
        std::cout << to_tsv(report);
    } else {
        std::cout << to_json_line(report) << '\n';
    }
}

PairingTable bind_or_usage(const PairingCorpus& corpus, const IrregularSet& irregular)
{
    try {
        return bind_pairing_table(corpus, irregular);
    } catch (const ParseError& e) {
        throw UsageError(corpus.source + ": " + e.what());
    }
}

int run_criteria(const std::string& which, std::uint64_t p_raw, const std::string& pairing,
                 const CommonFlags& flags, const std::string& format, const std::string& cache_dir,
                 std::uint64_t budget)
{
    const PrimeModulus p = prime_arg(p_raw);
    if (p.value() < 7) throw UsageError("criteria need p >= 7");
    const PairingCorpus corpus = load_corpus(pairing);
    const IrregularSet irregular = irregular_for(p, cache_dir);
    const PairingTable table = bind_or_usage(corpus, irregular);
    const HypothesisFlags resolved = flags.overrides().resolve(p.value());
    const unsigned section = which == "greenberg" ? kGreenberg : which == "height" ? kHeight : kGk;
    Report report = [&] {
        try {
            return build_report(irregular, table, resolved, section, budget);
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
    }();
    emit(report, format);
    return kExitOk;
}

int run_report(std::uint32_t max_p, const std::string& pairing, const CommonFlags& flags,
               const std::string& format, int jobs, const std::string& cache_dir, std::uint64_t budget)
{
    const PairingCorpus corpus = load_corpus(pairing);
    const auto sets = sweep(max_p, jobs, cache_dir).sets;
    const FlagOverrides overrides = flags.overrides();

    // Bind every table up front so data errors surface before any output.
    std::vector<PairingTable> tables;
    tables.reserve(sets.size());
    for (const auto& set : sets) tables.push_back(bind_or_usage(corpus, set));

    std::vector<std::string> lines(sets.size());
    std::vector<std::exception_ptr> errors(sets.size());
    const auto n = static_cast<std::ptrdiff_t>(sets.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            const auto& set = sets[idx];
            const auto resolved = overrides.resolve(set.prime().value());
            // The height bound is undefined without Vandiver; omit that section.
            const unsigned sections =
                resolved.vandiver == Knowledge::Unknown ? kAllSections & ~kHeight : kAllSections;
            const auto report = build_report(set, tables[idx], resolved, sections, budget);
            lines[idx] = format == "tsv" ? to_tsv(report) : to_json_line(report) + '\n';
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (!e) continue;
        try {
            std::rethrow_exception(e);
        } catch (const DomainError& d) {
            throw UsageError(d.what());
        }
    }
    for (const auto& line : lines) std::cout << line;
    return kExitOk;
}

int run_synth(std::uint32_t min_p, std::uint32_t max_p, std::uint64_t seed, const std::string& kind,
              const std::vector<std::string>& zero_b, int jobs, const std::string& cache_dir)
{
    std::map<std::uint32_t, std::set<PairKey>> zeros;
    for (const auto& z : zero_b) {
        std::uint32_t p = 0, k = 0, k2 = 0;
        char c1 = 0, c2 = 0;
        std::istringstream in(z);
        if (!(in >> p >> c1 >> k >> c2 >> k2) || c1 != ':' || c2 != ':') {
            throw UsageError("--zero-b expects p:k:k'");
        }
        zeros[p].insert({k, k2});
    }
    const auto sets = sweep(max_p, jobs, cache_dir).sets;
    std::cout << "# synthetic pairing table, seed " << seed << '\n';
    for (const auto& set : sets) {
        if (set.prime().value() < min_p || set.empty()) continue;
        try {
            if (kind == "b" || kind == "both") {
                std::cout << serialize(synth_b_table(set, zeros[set.prime().value()], seed));
            }
            if (kind == "e" || kind == "both") {
                // Keep the e rows consistent with every planted zero b.
                std::set<PairKey> e_zeros;
                for (const auto& [k, k2] : zeros[set.prime().value()]) e_zeros.insert(b_to_e(set, k, k2));
                std::cout << serialize(synth_table(set, e_zeros, seed));
            }
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Irregular primes, pairing criteria, and disjoint-translate bounds"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string cache_dir;
    int jobs = 1;
    std::uint64_t budget = kDefaultSearchBudget;

    auto* bern = app.add_subcommand("bern", "print B_k mod p");
    std::uint64_t bern_p = 0;
    std::optional<std::uint32_t> bern_k;
    std::string method = "fast";
    bern->add_option("p", bern_p, "odd prime")->required();
    bern->add_option("--k", bern_k, "single even index");
    bern->add_option("--method", method, "naive|voronoi|fast")
        ->check(CLI::IsMember({"naive", "voronoi", "fast"}));

    auto* irregular = app.add_subcommand("irregular", "list irregular pairs for p < max-p");
    std::uint32_t max_p = 0;
    irregular->add_option("--max-p", max_p, "exclusive upper bound on p")->required();
    irregular->add_option("--jobs", jobs, "worker threads");
    irregular->add_option("--cache", cache_dir, std::string("cache directory (default $") + kCacheEnv + ")");

    auto* congruence = app.add_subcommand("congruence-sweep", "report congruence-hypothesis violations");
    std::vector<std::string> injections;
    congruence->add_option("--max-p", max_p, "exclusive upper bound on p")->required();
    congruence->add_option("--jobs", jobs, "worker threads");
    congruence->add_option("--cache", cache_dir, "cache directory");
    congruence->add_option("--inject", injections, "replace R for a prime: p:k1,k2,... (testing)");

    auto* criteria = app.add_subcommand("criteria", "evaluate one criterion for one prime");
    std::string which, pairing, format = "json";
    std::uint64_t crit_p = 0;
    CommonFlags flags;
    criteria->add_option("criterion", which, "greenberg|height|gk")
        ->required()
        ->check(CLI::IsMember({"greenberg", "height", "gk"}));
    criteria->add_option("p", crit_p, "odd prime")->required();
    criteria->add_option("--pairing", pairing, "pairing TSV ('-' for stdin)")->required();
    criteria->add_option("--format", format, "json|tsv")->check(CLI::IsMember({"json", "tsv"}));
    criteria->add_option("--cache", cache_dir, "cache directory");
    criteria->add_option("--search-budget", budget, "packing search budget");
    add_flag_options(criteria, flags);

    auto* report = app.add_subcommand("report", "per-prime reports for p < max-p");
    report->add_option("--max-p", max_p, "exclusive upper bound on p")->required();
    report->add_option("--pairing", pairing, "pairing TSV ('-' for stdin)")->required();
    report->add_option("--format", format, "json|tsv")->check(CLI::IsMember({"json", "tsv"}));
    report->add_option("--jobs", jobs, "worker threads");
    report->add_option("--cache", cache_dir, "cache directory");
    report->add_option("--search-budget", budget, "packing search budget");
    add_flag_options(report, flags);

    auto* synth = app.add_subcommand("synth", "write a synthetic pairing table");
    std::uint32_t min_p = 7;
    std::uint64_t seed = 1;
    std::string kind = "both";
    std::vector<std::string> zero_b;
    synth->add_option("--max-p", max_p, "exclusive upper bound on p")->required();
    synth->add_option("--min-p", min_p, "inclusive lower bound on p");
    synth->add_option("--seed", seed, "generator seed");
    synth->add_option("--kind", kind, "b|e|both")->check(CLI::IsMember({"b", "e", "both"}));
    synth->add_option("--zero-b", zero_b, "plant a zero b value: p:k:k'");
    synth->add_option("--jobs", jobs, "worker threads");
    synth->add_option("--cache", cache_dir, "cache directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitData;
    }

    try {
        if (jobs < 1) throw UsageError("--jobs must be at least 1");
        if (*bern) return run_bern(bern_p, bern_k, method);
        if (*irregular) return run_irregular(max_p, jobs, cache_dir);
        if (*congruence) return run_congruence_sweep(max_p, jobs, cache_dir, injections);
        if (*criteria) return run_criteria(which, crit_p, pairing, flags, format, cache_dir, budget);
        if (*report) return run_report(max_p, pairing, flags, format, jobs, cache_dir, budget);
        if (*synth) return run_synth(min_p, max_p, seed, kind, zero_b, jobs, cache_dir);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}
