#include "irreg/report.hpp"

#include <algorithm>

namespace irreg {

using nlohmann::ordered_json;

HypothesisFlags FlagOverrides::resolve(std::uint32_t p) const
{
    HypothesisFlags f = HypothesisFlags::defaults_for(p);
    if (vandiver) f.vandiver = *vandiver;
    if (procyclic) f.procyclic = *procyclic;
    if (pairing_surjective) f.pairing_surjective = *pairing_surjective;
    return f;
}

Report build_report(const IrregularSet& irregular, const PairingTable& table,
                    const HypothesisFlags& flags, unsigned sections, std::uint64_t search_budget)
{
    Report rep{irregular, check_congruences(irregular), eligible_set(irregular, table), flags,
               std::nullopt, std::nullopt, std::nullopt, table.digest()};
    if (sections & kGreenberg) rep.greenberg = greenberg_verdict(irregular, rep.eligible, flags);
    if (sections & kHeight) rep.height = height_lower_bound(irregular, rep.eligible, flags, search_budget);
    if (sections & kGk) rep.gk = gk_verdict(irregular, rep.congruence, table, flags);
    return rep;
}

namespace {

ordered_json verdict_json(const Verdict& v)
{
    ordered_json j;
    j["status"] = to_string(v.status);
    j["condition"] = v.condition;
    j["notes"] = v.notes;
    return j;
}

ordered_json pair_json(const IndexPair& p)
{
    return ordered_json::array({p.first, p.second});
}

void flatten(const ordered_json& j, const std::string& prefix, std::string& out)
{
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            flatten(value, prefix.empty() ? key : prefix + "." + key, out);
        }
        return;
    }
    out += prefix;
    out += '\t';
    if (j.is_string()) {
        out += j.get<std::string>();
    } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const auto& x) { return x.is_number(); })) {
        bool first = true;
        for (const auto& x : j) {
            if (!first) out += ',';
            out += x.dump();
            first = false;
        }
    } else {
        out += j.dump();
    }
    out += '\n';
}

} // namespace

ordered_json to_json(const Report& rep)
{
    ordered_json j;
    j["p"] = rep.irregular.prime().value();
    j["R"] = rep.irregular.indices();
    j["r"] = rep.irregular.r();

    ordered_json cc;
    cc["holds"] = rep.congruence.holds();
    cc["sum_two"] = ordered_json::array();
    for (const auto& p : rep.congruence.sum_two_violations) cc["sum_two"].push_back(pair_json(p));
    cc["collisions"] = ordered_json::array();
    for (const auto& [a, b] : rep.congruence.collision_violations) {
        cc["collisions"].push_back(ordered_json::array({pair_json(a), pair_json(b)}));
    }
    j["congruence"] = cc;

    ordered_json el;
    el["s"] = rep.eligible.s();
    el["missing"] = rep.eligible.missing.size();
    el["complete"] = rep.eligible.complete();
    j["eligible"] = el;

    if (rep.height) {
        const auto& h = *rep.height;
        ordered_json hj;
        hj["module_zero"] = h.module_zero;
        if (h.module_zero) {
            hj["d"] = nullptr;
            hj["bound_exact"] = nullptr;
            hj["bound_corollary"] = nullptr;
            hj["bound_corollary_ceil"] = nullptr;
        } else {
            hj["d"] = h.d;
            hj["bound_exact"] = h.bound_exact;
            hj["bound_corollary"] = h.bound_corollary.str();
            hj["bound_corollary_ceil"] = h.bound_corollary.ceil();
        }
        hj["optimal"] = h.optimal;
        hj["partial"] = h.partial;
        hj["witness"] = h.witness;
        hj["notes"] = h.notes;
        j["height"] = hj;
    }
    if (rep.greenberg) j["greenberg"] = verdict_json(*rep.greenberg);
    if (rep.gk) j["gk"] = verdict_json(*rep.gk);

    ordered_json fl;
    fl["vandiver"] = to_string(rep.flags.vandiver);
    fl["procyclic"] = to_string(rep.flags.procyclic);
    fl["pairing_surjective"] = to_string(rep.flags.pairing_surjective);
    j["flags"] = fl;
    j["tool_version"] = kToolVersion;
    j["table_digest"] = rep.table_digest;
    return j;
}

std::string to_json_line(const Report& report)
{
    return to_json(report).dump();
}

std::string to_tsv(const Report& report)
{
    std::string out;
    flatten(to_json(report), "", out);
    return out;
}

} // namespace irreg
