#include "irreg/pairing.hpp"

#include <array>
#include <charconv>
#include <iomanip>
#include <random>
#include <sstream>

#include <openssl/evp.h>

namespace irreg {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
{
}

PairingTable::PairingTable(IrregularSet irregular, std::string provenance)
    : irregular_(std::move(irregular)), provenance_(std::move(provenance))
{
}

namespace {

std::string key_name(char kind, std::uint32_t p, std::uint32_t a, std::uint32_t b)
{
    return std::string(1, kind) + "(" + std::to_string(p) + ", " + std::to_string(a) + ", " +
           std::to_string(b) + ")";
}

} // namespace

std::string sha256_hex(std::string_view bytes)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 digest failed");
    }
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) {
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    }
    return out.str();
}

namespace {

bool parse_field(std::string_view s, std::uint32_t& out)
{
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return !s.empty() && ec == std::errc{} && ptr == s.data() + s.size();
}

std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == '\t' || line[pos] == ' ')) ++pos;
        if (pos >= line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && line[end] != '\t' && line[end] != ' ') ++end;
        fields.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return fields;
}

} // namespace

void PairingTable::set_b(std::uint32_t k, std::uint32_t k2, std::uint32_t value)
{
    if (!(k < k2)) throw DomainError("b key " + key_name('B', prime(), k, k2) + " needs k < k'");
    if (!irregular_.contains(k) || !irregular_.contains(k2)) {
        throw DomainError("b key " + key_name('B', prime(), k, k2) + " is outside R");
    }
    if (value >= prime().value()) throw DomainError("value " + std::to_string(value) + " >= p");
    b_[{k, k2}] = value;
}

void PairingTable::set_e(std::uint32_t i, std::uint32_t k, std::uint32_t value)
{
    if (i % 2 == 0 || i < 1 || i > prime().value() - 2) {
        throw DomainError("e key " + key_name('E', prime(), i, k) + ": i must be odd in [1, p-2]");
    }
    if (!irregular_.contains(k)) {
        throw DomainError("e key " + key_name('E', prime(), i, k) + " is outside R");
    }
    if (value >= prime().value()) throw DomainError("value " + std::to_string(value) + " >= p");
    e_[{i, k}] = value;
}

std::string PairingTable::digest() const
{
    return source_digest_.empty() ? sha256_hex(serialize(*this)) : source_digest_;
}

std::optional<std::uint32_t> PairingTable::b(std::uint32_t k, std::uint32_t k2) const
{
    if (auto it = b_.find({k, k2}); it != b_.end()) return it->second;
    return std::nullopt;
}

std::optional<std::uint32_t> PairingTable::e(std::uint32_t i, std::uint32_t k) const
{
    if (auto it = e_.find({i, k}); it != e_.end()) return it->second;
    return std::nullopt;
}

PairingCorpus parse_pairing_corpus(std::istream& in, std::string source)
{
    std::ostringstream raw;
    raw << in.rdbuf();
    const std::string bytes = raw.str();

    PairingCorpus corpus;
    corpus.sha256 = sha256_hex(bytes);
    corpus.source = std::move(source);

    std::istringstream lines(bytes);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto fields = split_fields(line);
        if (fields.empty() || fields.front().front() == '#') continue;
        if (fields.size() != 5) {
            throw ParseError(lineno, "expected 5 fields, found " + std::to_string(fields.size()));
        }
        if (fields[0] != "B" && fields[0] != "E") {
            throw ParseError(lineno, "record type must be B or E, found '" + std::string(fields[0]) + "'");
        }
        PairingRecord rec{fields[0][0], 0, 0, 0, 0, lineno};
        if (!parse_field(fields[1], rec.p) || !parse_field(fields[2], rec.first) ||
            !parse_field(fields[3], rec.second) || !parse_field(fields[4], rec.value)) {
            throw ParseError(lineno, "fields 2-5 must be non-negative decimal integers");
        }
        if (rec.p < 3 || rec.p >= kMaxModulus || !is_prime(rec.p)) {
            throw ParseError(lineno, std::to_string(rec.p) + " is not an odd prime below 2^31");
        }
        if (rec.value >= rec.p) {
            throw ParseError(lineno, "value " + std::to_string(rec.value) + " is not below p = " +
                                         std::to_string(rec.p));
        }
        corpus.by_prime[rec.p].push_back(rec);
    }
    return corpus;
}

PairingTable bind_pairing_table(const PairingCorpus& corpus, const IrregularSet& irregular)
{
    const std::uint32_t p = irregular.prime().value();
    PairingTable table(irregular, corpus.source);
    table.set_source_digest(corpus.sha256);
    auto it = corpus.by_prime.find(p);
    if (it == corpus.by_prime.end()) return table;

    for (const auto& rec : it->second) {
        const auto existing = rec.kind == 'B' ? table.b(rec.first, rec.second)
                                              : table.e(rec.first, rec.second);
        if (existing && *existing != rec.value) {
            throw ParseError(rec.line, "conflicting duplicate of " +
                                           key_name(rec.kind, p, rec.first, rec.second));
        }
        try {
            if (rec.kind == 'B') {
                table.set_b(rec.first, rec.second, rec.value);
            } else {
                table.set_e(rec.first, rec.second, rec.value);
            }
        } catch (const DomainError& e) {
            throw ParseError(rec.line, e.what());
        }
    }

    // A vanishing b forces the pairing it scales to vanish.
    for (const auto& [key, value] : table.b_entries()) {
        if (value != 0) continue;
        const auto [i, k] = b_to_e(irregular, key.first, key.second);
        if (auto e = table.e(i, k); e && *e != 0) {
            std::size_t line = 0;
            for (const auto& rec : it->second) {
                if (rec.kind == 'B' && rec.first == key.first && rec.second == key.second) line = rec.line;
            }
            throw ParseError(line, key_name('B', p, key.first, key.second) + " is zero but " +
                                       key_name('E', p, i, k) + " is nonzero");
        }
    }
    return table;
}

PairingTable parse_pairing_table(std::istream& in, const IrregularSet& irregular)
{
    return bind_pairing_table(parse_pairing_corpus(in), irregular);
}

std::string serialize(const PairingTable& table)
{
    std::string out;
    const std::string p = std::to_string(table.prime().value());
    for (const auto& [key, value] : table.b_entries()) {
        out += "B\t" + p + "\t" + std::to_string(key.first) + "\t" + std::to_string(key.second) +
               "\t" + std::to_string(value) + "\n";
    }
    for (const auto& [key, value] : table.e_entries()) {
        out += "E\t" + p + "\t" + std::to_string(key.first) + "\t" + std::to_string(key.second) +
               "\t" + std::to_string(value) + "\n";
    }
    return out;
}

PairKey b_to_e(const IrregularSet& irregular, std::uint32_t k, std::uint32_t k2)
{
    if (!irregular.contains(k) || !irregular.contains(k2)) {
        throw DomainError("b_to_e: (" + std::to_string(k) + ", " + std::to_string(k2) +
                          ") is not a pair of irregular indices for p = " +
                          std::to_string(irregular.prime().value()));
    }
    if (!(k < k2)) throw DomainError("b_to_e: requires k < k'");
    return {irregular.prime().value() - k, k2};
}

EligibleSet eligible_set(const IrregularSet& irregular, const PairingTable& table)
{
    if (!(table.prime() == irregular.prime())) {
        throw DomainError("eligible_set: table is for p = " + std::to_string(table.prime().value()) +
                          ", irregular set for p = " + std::to_string(irregular.prime().value()));
    }
    const std::uint32_t p = irregular.prime().value();
    EligibleSet out{irregular.prime(), {}, {}};

    std::set<PairKey> forced_zero;
    for (const auto& [key, value] : table.b_entries()) {
        if (value == 0) forced_zero.insert(b_to_e(irregular, key.first, key.second));
    }

    for (std::uint32_t i = 1; i + 1 < p; i += 2) {
        bool zero = false;
        bool gap = false;
        for (std::uint32_t k : irregular.indices()) {
            if (auto v = table.e(i, k)) {
                zero = zero || *v == 0;
            } else if (forced_zero.contains({i, k})) {
                zero = true;
            } else {
                gap = true;
            }
        }
        if (zero) continue;
        (gap ? out.missing : out.I).push_back(i);
    }
    return out;
}

namespace {

std::uint32_t nonzero_draw(std::mt19937_64& rng, std::uint32_t p)
{
    return static_cast<std::uint32_t>(1 + rng() % (p - 1));
}

} // namespace

PairingTable synth_table(const IrregularSet& irregular, const std::set<PairKey>& zero_keys,
                         std::uint64_t seed)
{
    PairingTable table(irregular, "synthetic e-table seed=" + std::to_string(seed));
    std::mt19937_64 rng(seed);
    const std::uint32_t p = irregular.prime().value();
    for (std::uint32_t i = 1; i + 1 < p; i += 2) {
        for (std::uint32_t k : irregular.indices()) {
            const std::uint32_t v = nonzero_draw(rng, p);
            table.set_e(i, k, zero_keys.contains({i, k}) ? 0 : v);
        }
    }
    for (const auto& key : zero_keys) {
        if (!table.e(key.first, key.second)) {
            throw DomainError("synth_table: zero key (" + std::to_string(key.first) + ", " +
                              std::to_string(key.second) + ") is not a valid e index");
        }
    }
    return table;
}

PairingTable synth_b_table(const IrregularSet& irregular, const std::set<PairKey>& zero_keys,
                           std::uint64_t seed)
{
    PairingTable table(irregular, "synthetic b-table seed=" + std::to_string(seed));
    std::mt19937_64 rng(seed);
    const auto& ks = irregular.indices();
    const std::uint32_t p = irregular.prime().value();
    for (std::size_t a = 0; a < ks.size(); ++a) {
        for (std::size_t b = a + 1; b < ks.size(); ++b) {
            const std::uint32_t v = nonzero_draw(rng, p);
            table.set_b(ks[a], ks[b], zero_keys.contains({ks[a], ks[b]}) ? 0 : v);
        }
    }
    for (const auto& key : zero_keys) {
        if (!table.b(key.first, key.second)) {
            throw DomainError("synth_b_table: zero key (" + std::to_string(key.first) + ", " +
                              std::to_string(key.second) + ") is not an irregular pair");
        }
    }
    return table;
}

} // namespace irreg
