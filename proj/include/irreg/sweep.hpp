// Irregular-pair sweep over all primes below a bound, with an on-disk cache.
#pragma once

#include "irreg/bernoulli.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace irreg {

inline constexpr std::string_view kToolVersion = "irreg 1.0.0";

/// Irregular-index cache: a TSV file `irregular.tsv` inside a directory.
///
///     # irreg-cache<TAB>irreg 1.0.0
///     37<TAB>32
///     41<TAB>
///
/// Regular primes are stored with an empty index list. Entries are
/// advisory: load() drops lines it cannot parse and entries whose indices
/// fail a Voronoi spot check, and reports each as a warning.
class IrregularCache {
public:
    explicit IrregularCache(std::filesystem::path dir);

    const std::filesystem::path& file() const noexcept { return file_; }

    /// Entries that survived validation, keyed by p.
    std::map<std::uint32_t, IrregularSet> load(std::vector<std::string>& warnings) const;

    /// Merge entries into the file (rewritten atomically, sorted by p).
    /// Returns false and appends a warning when the file cannot be written.
    bool store(const std::vector<IrregularSet>& entries, std::vector<std::string>& warnings);

private:
    std::map<std::uint32_t, IrregularSet> load_unlocked(std::vector<std::string>& warnings) const;

    std::filesystem::path dir_;
    std::filesystem::path file_;
    mutable std::mutex mutex_;
};

struct SweepOptions {
    int jobs = 1;
    RowMethod method = RowMethod::Fast;
    IrregularCache* cache = nullptr;
};

struct SweepResult {
    std::vector<IrregularSet> sets; // ascending p, one per prime 7 <= p < p_max
    std::size_t from_cache = 0;
    std::size_t computed = 0;
    std::vector<std::string> warnings;
};

/// Serial reference sweep: one prime at a time, no cache.
std::vector<IrregularSet> irregular_sweep_serial(std::uint32_t p_max,
                                                 RowMethod method = RowMethod::Fast);

/// OpenMP sweep with one prime per task; output is independent of jobs.
SweepResult irregular_sweep(std::uint32_t p_max, const SweepOptions& options = {});

/// Parse one cache or CLI line "p<TAB>k1,k2,..." (the index list may be empty).
std::optional<IrregularSet> parse_irregular_line(std::string_view line, std::string* error = nullptr);
std::string format_irregular_line(const IrregularSet& set);

} // namespace irreg
