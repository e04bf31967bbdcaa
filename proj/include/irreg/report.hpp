// Per-prime report binding every criterion, with canonical JSON and TSV
// serializations.
#pragma once

#include "irreg/criteria.hpp"
#include "irreg/sweep.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace irreg {

struct FlagOverrides {
    std::optional<Knowledge> vandiver;
    std::optional<Knowledge> procyclic;
    std::optional<Knowledge> pairing_surjective;

    HypothesisFlags resolve(std::uint32_t p) const;
};

enum Section : unsigned {
    kGreenberg = 1u << 0,
    kHeight = 1u << 1,
    kGk = 1u << 2,
    kAllSections = kGreenberg | kHeight | kGk,
};

struct Report {
    IrregularSet irregular;
    CongruenceCheckResult congruence;
    EligibleSet eligible;
    HypothesisFlags flags;
    std::optional<Verdict> greenberg;
    std::optional<HeightBound> height;
    std::optional<Verdict> gk;
    std::string table_digest;
};

Report build_report(const IrregularSet& irregular, const PairingTable& table,
                    const HypothesisFlags& flags, unsigned sections = kAllSections,
                    std::uint64_t search_budget = kDefaultSearchBudget);

/// Fixed key order; contains nothing that varies between runs.
nlohmann::ordered_json to_json(const Report& report);
std::string to_json_line(const Report& report);
/// "key<TAB>value" per line, nested keys joined with '.'.
std::string to_tsv(const Report& report);

} // namespace irreg
