// Cup-product pairing coefficients: storage, the TSV interchange format,
// and the eligible set I of odd offsets.
//
// Two species of datum share one file format:
//
//     # comment
//     B<TAB>p<TAB>k<TAB>k'<TAB>value     b_{p,k,k'}, irregular k < k'
//     E<TAB>p<TAB>i<TAB>k<TAB>value      coefficient of (eta_i, eta_{k-i}), odd i
//
// Values are decimal in [0, p). A file may mix several primes. Only the
// zero/nonzero distinction of a value is ever consumed downstream.
#pragma once

#include "irreg/bernoulli.hpp"

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace irreg {

/// Malformed pairing input. line() is 1-based, or 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

using PairKey = std::pair<std::uint32_t, std::uint32_t>;

class PairingTable {
public:
    explicit PairingTable(IrregularSet irregular, std::string provenance = {});

    PrimeModulus prime() const noexcept { return irregular_.prime(); }
    const IrregularSet& irregular() const noexcept { return irregular_; }
    const std::string& provenance() const noexcept { return provenance_; }
    /// SHA-256 of the source bytes, or of serialize(*this) when built in memory.
    std::string digest() const;
    void set_source_digest(std::string hex) { source_digest_ = std::move(hex); }

    /// b_{p,k,k'}; requires k < k' both irregular.
    void set_b(std::uint32_t k, std::uint32_t k2, std::uint32_t value);
    /// e_{p,i,k}; requires odd i in [1, p-2] and irregular k.
    void set_e(std::uint32_t i, std::uint32_t k, std::uint32_t value);

    std::optional<std::uint32_t> b(std::uint32_t k, std::uint32_t k2) const;
    std::optional<std::uint32_t> e(std::uint32_t i, std::uint32_t k) const;

    const std::map<PairKey, std::uint32_t>& b_entries() const noexcept { return b_; }
    const std::map<PairKey, std::uint32_t>& e_entries() const noexcept { return e_; }

    bool empty() const noexcept { return b_.empty() && e_.empty(); }

private:
    IrregularSet irregular_;
    std::string provenance_;
    std::string source_digest_;
    std::map<PairKey, std::uint32_t> b_;
    std::map<PairKey, std::uint32_t> e_;
};

std::string sha256_hex(std::string_view bytes);

/// One syntactically valid data line, before it is checked against R.
struct PairingRecord {
    char kind; // 'B' or 'E'
    std::uint32_t p;
    std::uint32_t first;  // k for B, i for E
    std::uint32_t second; // k' for B, k for E
    std::uint32_t value;
    std::size_t line;
};

/// Every record of a pairing file, grouped by prime, plus a SHA-256 of the
/// raw bytes for report provenance.
struct PairingCorpus {
    std::map<std::uint32_t, std::vector<PairingRecord>> by_prime;
    std::string sha256;
    std::string source;
};

/// Syntax pass: field count, integer fields, prime p, value < p.
PairingCorpus parse_pairing_corpus(std::istream& in, std::string source = "-");

/// Build the table for R's prime from the corpus. Throws ParseError naming
/// the line and key when an index falls outside R, when a key repeats with
/// a different value, or when a zero b contradicts a nonzero e at the
/// b_to_e image.
PairingTable bind_pairing_table(const PairingCorpus& corpus, const IrregularSet& irregular);

PairingTable parse_pairing_table(std::istream& in, const IrregularSet& irregular);

/// Canonical text: B lines sorted by (k, k'), then E lines sorted by (i, k).
std::string serialize(const PairingTable& table);

/// The E-index read by b_{p,k,k'}: the pairing (eta_{p-k}, eta_{k+k'-1})
/// lands in the eigenspace of k', so it is e at (i, k') with i = p - k.
PairKey b_to_e(const IrregularSet& irregular, std::uint32_t k, std::uint32_t k2);

struct EligibleSet {
    PrimeModulus p;
    std::vector<std::uint32_t> I;       // odd i with e(i, k) != 0 for all irregular k
    std::vector<std::uint32_t> missing; // odd i not excluded by a zero but lacking some e(i, k)

    bool complete() const noexcept { return missing.empty(); }
    std::size_t s() const noexcept { return I.size(); }
};

/// I = { odd i in [1, p-2] : e(i, k) known and nonzero for every irregular k }.
/// A zero b_{p,k,k'} counts as a zero e at b_to_e(k, k'); nothing else is
/// inferred from b data.
EligibleSet eligible_set(const IrregularSet& irregular, const PairingTable& table);

/// Full e-table with zeros exactly at zero_keys (pairs (i, k)) and seeded
/// nonzero values elsewhere. Deterministic in seed on every platform.
PairingTable synth_table(const IrregularSet& irregular, const std::set<PairKey>& zero_keys,
                         std::uint64_t seed);

/// Full b-table over all irregular k < k' with zeros exactly at zero_keys.
PairingTable synth_b_table(const IrregularSet& irregular, const std::set<PairKey>& zero_keys,
                           std::uint64_t seed);

} // namespace irreg
