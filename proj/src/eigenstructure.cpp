#include "irreg/eigenstructure.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

namespace irreg {

CongruenceCheckResult check_congruences(const IrregularSet& irregular)
{
    CongruenceCheckResult out{irregular.prime(), {}, {}};
    const std::uint64_t m = irregular.prime().value() - 1;
    const auto& ks = irregular.indices(); // sorted, so every pair comes out as k < k'

    std::map<std::uint64_t, std::vector<IndexPair>> by_sum;
    for (std::size_t a = 0; a < ks.size(); ++a) {
        for (std::size_t b = a + 1; b < ks.size(); ++b) {
            const IndexPair pair{ks[a], ks[b]};
            const ResidueClass sum = ResidueClass(ks[a], m) + ResidueClass(ks[b], m);
            if (sum == ResidueClass(2, m)) out.sum_two_violations.push_back(pair);
            by_sum[sum.value()].push_back(pair);
        }
    }
    for (auto& [sum, pairs] : by_sum) {
        std::sort(pairs.begin(), pairs.end());
        for (std::size_t a = 0; a < pairs.size(); ++a) {
            for (std::size_t b = a + 1; b < pairs.size(); ++b) {
                out.collision_violations.emplace_back(pairs[a], pairs[b]);
            }
        }
    }
    std::sort(out.sum_two_violations.begin(), out.sum_two_violations.end());
    std::sort(out.collision_violations.begin(), out.collision_violations.end());
    return out;
}

std::vector<CongruenceCheckResult> congruence_sweep(const std::vector<IrregularSet>& source, int jobs)
{
    if (jobs < 1) throw DomainError("jobs must be at least 1");
    std::vector<std::optional<CongruenceCheckResult>> slots(source.size());
    const auto n = static_cast<std::ptrdiff_t>(source.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        auto cc = check_congruences(source[static_cast<std::size_t>(i)]);
        if (!cc.holds()) slots[static_cast<std::size_t>(i)] = std::move(cc);
    }
    std::vector<CongruenceCheckResult> out;
    for (auto& s : slots) {
        if (s) out.push_back(std::move(*s));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.p.value() < b.p.value();
    });
    return out;
}

std::vector<CongruenceCheckResult> congruence_sweep(std::uint32_t p_max,
                                                    const std::vector<IrregularSet>& source, int jobs)
{
    std::vector<IrregularSet> covered;
    for (const auto& set : source) {
        if (set.prime().value() < p_max) covered.push_back(set);
    }
    const auto expected = primes_in_range(7, p_max);
    std::vector<std::uint32_t> seen;
    for (const auto& set : covered) seen.push_back(set.prime().value());
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    if (!std::includes(seen.begin(), seen.end(), expected.begin(), expected.end())) {
        throw DomainError("congruence sweep source does not cover every prime below " +
                          std::to_string(p_max));
    }
    return congruence_sweep(covered, jobs);
}

} // namespace irreg
