#include "irreg/packing.hpp"

#include "irreg/modmath.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <tuple>
#include <set>
#include <unordered_map>

namespace irreg {

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

std::vector<std::uint64_t> normalize(std::vector<std::uint64_t> xs, std::uint64_t m)
{
    for (auto& x : xs) x %= m;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

// Membership table for D over Z/m.
std::vector<char> diff_table(const PackingInstance& inst)
{
    std::vector<char> table(inst.modulus, 0);
    for (std::uint64_t d : conflict_diffs(inst.shape, inst.modulus)) table[d] = 1;
    return table;
}

// Maximum independent set on one component. Either a frontier dynamic
// program along a lattice sweep, or branch and reduce for the value followed
// by an ascending pass that fixes each vertex in or out using that value
// oracle. Both produce the lexicographically least maximum set.
class ComponentSearch {
public:
    ComponentSearch(std::vector<std::uint64_t> residues, const std::vector<std::uint64_t>& shape,
                    const std::vector<char>& diffs, const std::vector<std::uint64_t>& nonzero_diffs,
                    std::uint64_t modulus, std::uint64_t& work, std::uint64_t budget)
        : res_(std::move(residues)), shape_(shape), diffs_(diffs), m_(modulus), work_(work), budget_(budget),
          alive_(res_.size(), 1), deg_(res_.size(), 0), clique_of_(res_.size(), 0)
    {
        const std::size_t n = res_.size();
        std::unordered_map<std::uint64_t, int> local;
        for (std::size_t u = 0; u < n; ++u) local.emplace(res_[u], static_cast<int>(u));
        adj_.resize(n);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::uint64_t d : nonzero_diffs) {
                if (auto it = local.find((res_[u] + d) % m_); it != local.end()) {
                    adj_[u].push_back(it->second);
                }
            }
            std::sort(adj_[u].begin(), adj_[u].end());
            deg_[u] = static_cast<int>(adj_[u].size());
        }
    }

    // Returns false when the budget ran out before optimality was proven.
    bool solve(std::vector<std::uint64_t>& witness, bool try_dp)
    {
        if (const auto order = try_dp ? lattice_order() : std::nullopt) {
            std::vector<int> set;
            if (frontier_dp(*order, set)) {
                append(set, witness);
                return true;
            }
        }
        best_ = min_degree_greedy();
        best_size_ = best_.size();
        stop_at_ = res_.size() + 1;
        search();
        if (exhausted_) {
            append(best_, witness);
            return false;
        }
        const std::vector<int> fallback = best_;
        std::vector<int> lex;
        if (!lex_least(best_size_, lex)) {
            // d is proven; only the canonical witness is out of reach.
            append(fallback, witness);
            return true;
        }
        append(lex, witness);
        return true;
    }

private:
    using Vertex = std::size_t;

    void append(const std::vector<int>& set, std::vector<std::uint64_t>& out) const
    {
        for (int v : set) out.push_back(res_[static_cast<Vertex>(v)]);
    }

    bool adjacent(Vertex u, Vertex w) const
    {
        const std::uint64_t d = (res_[u] + m_ - res_[w]) % m_;
        return diffs_[d] != 0;
    }

    void remove(Vertex v)
    {
        alive_[v] = 0;
        trail_.push_back(static_cast<int>(v));
        for (int w : adj_[v]) {
            if (alive_[static_cast<Vertex>(w)]) --deg_[static_cast<Vertex>(w)];
        }
    }

    void remove_closed(Vertex v)
    {
        for (int w : adj_[v]) {
            if (alive_[static_cast<Vertex>(w)]) remove(static_cast<Vertex>(w));
        }
        remove(v);
    }

    // Undo removals in reverse order; deg_ of a dead vertex is frozen, so it
    // is already correct when the vertex comes back.
    void restore(std::size_t mark)
    {
        while (trail_.size() > mark) {
            const auto v = static_cast<Vertex>(trail_.back());
            trail_.pop_back();
            alive_[v] = 1;
            for (int w : adj_[v]) {
                if (alive_[static_cast<Vertex>(w)]) ++deg_[static_cast<Vertex>(w)];
            }
        }
    }

    struct Vec2 {
        i128 x, y;
    };

    static i128 cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

    // Graph norm of the triangular lattice spanned by (1,0), (0,1), (1,1).
    static i128 hex_norm(Vec2 v) { return v.x * v.x - v.x * v.y + v.y * v.y; }

    static i128 floor_div(i128 a, i128 b)
    {
        const i128 q = a / b;
        return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
    }

    // Lagrange reduction under hex_norm; afterwards a is a shortest vector.
    static void reduce_basis(Vec2& a, Vec2& b)
    {
        for (;;) {
            if (hex_norm(a) > hex_norm(b)) std::swap(a, b);
            const i128 two_b = 2 * (a.x * b.x + a.y * b.y) - (a.x * b.y + a.y * b.x);
            const i128 two_q = 2 * hex_norm(a);
            const i128 mu = floor_div(2 * two_b + two_q, 2 * two_q);
            if (mu == 0) return;
            b = {b.x - mu * a.x, b.y - mu * a.y};
        }
    }

    // For |R| = 2 or 3 the conflict steps are d1, d2 and d1 + d2 with
    // d1 = R1 - R0, d2 = R2 - R1, so the component is a quotient of Z or of
    // the triangular lattice by the relations L = {(x, y) : x d1 + y d2 = 0}.
    // Sweeping lines parallel to the shortest vector of L keeps the DP
    // frontier near twice that vector's width.
    std::optional<std::vector<int>> lattice_order() const
    {
        const std::size_t r = shape_.size();
        if (r < 2 || r > 3) return std::nullopt;
        const std::uint64_t d1 = (shape_[1] - shape_[0]) % m_;
        const std::uint64_t d2 = r == 3 ? (shape_[2] - shape_[1]) % m_ : 0;
        const std::pair<Vec2, std::uint64_t> steps[] = {
            {{1, 0}, d1}, {{-1, 0}, m_ - d1},
            {{0, 1}, d2}, {{0, -1}, (m_ - d2) % m_},
            {{1, 1}, (d1 + d2) % m_}, {{-1, -1}, (2 * m_ - d1 - d2) % m_},
        };
        const std::size_t n_steps = r == 3 ? 6 : 2;

        const std::size_t n = res_.size();
        std::vector<Vec2> coord(n, Vec2{0, 0});
        std::vector<char> placed(n, 0);
        std::vector<int> queue{0};
        placed[0] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto u = static_cast<Vertex>(queue[head]);
            for (int w : adj_[u]) {
                const auto wi = static_cast<Vertex>(w);
                if (placed[wi]) continue;
                const std::uint64_t diff = (res_[wi] + m_ - res_[u]) % m_;
                for (std::size_t k = 0; k < n_steps; ++k) {
                    if (steps[k].second != diff) continue;
                    coord[wi] = {coord[u].x + steps[k].first.x, coord[u].y + steps[k].first.y};
                    placed[wi] = 1;
                    queue.push_back(w);
                    break;
                }
            }
        }
        if (queue.size() != n) return std::nullopt;

        std::vector<std::pair<std::pair<i128, i128>, int>> keyed(n);
        if (r == 2) {
            const auto period = static_cast<i128>(m_ / std::gcd(d1, m_));
            for (std::size_t v = 0; v < n; ++v) {
                i128 x = coord[v].x % period;
                if (x < 0) x += period;
                keyed[v] = {{x, 0}, static_cast<int>(v)};
            }
        } else {
            // Hermite basis (a, 0), (b, c) of L, then reduce.
            const std::uint64_t g1 = std::gcd(d1, m_);
            const std::uint64_t c = g1 / std::gcd(d2, g1);
            const std::uint64_t t = static_cast<std::uint64_t>((m_ - static_cast<u128>(c) * d2 % m_) % m_);
            const std::uint64_t mg = m_ / g1;
            const std::uint64_t b =
                mg == 1 ? 0 : static_cast<std::uint64_t>(static_cast<u128>(t / g1) * inv_mod64(d1 / g1 % mg, mg) % mg);
            Vec2 v1{static_cast<i128>(mg), 0};
            Vec2 v2{static_cast<i128>(b), static_cast<i128>(c)};
            reduce_basis(v1, v2);
            if (cross(v1, v2) < 0) v2 = {-v2.x, -v2.y};
            const i128 det = cross(v1, v2);
            for (std::size_t v = 0; v < n; ++v) {
                i128 beta = cross(v1, coord[v]) % det;
                i128 alpha = cross(coord[v], v2) % det;
                if (beta < 0) beta += det;
                if (alpha < 0) alpha += det;
                keyed[v] = {{beta, alpha}, static_cast<int>(v)};
            }
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> order(n);
        for (std::size_t k = 0; k < n; ++k) order[k] = keyed[k].second;
        return order;
    }

    static std::uint64_t inv_mod64(std::uint64_t a, std::uint64_t mod)
    {
        i128 t = 0, new_t = 1, r = mod, new_r = a;
        while (new_r != 0) {
            const i128 q = r / new_r;
            std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
            std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
        }
        if (t < 0) t += mod;
        return static_cast<std::uint64_t>(t);
    }

    // Exact dynamic program over `order`. A state is the chosen subset of
    // the frontier (processed vertices with unprocessed neighbours); for
    // each state it keeps the best partial set, larger first, then the one
    // holding the lowest differing vertex. Equal states have equal futures,
    // so that order survives to the end and yields the canonical witness.
    // False when the frontier or the state count outgrows its cap.
    bool frontier_dp(const std::vector<int>& order, std::vector<int>& out)
    {
        constexpr std::size_t kStateBytes = std::size_t{64} << 20;
        const std::size_t n = res_.size();
        const std::size_t words = (n + 63) / 64;
        const std::size_t cap = std::max<std::size_t>(4096, kStateBytes / (8 * (words + 2)));

        std::vector<std::size_t> pos(n);
        for (std::size_t t = 0; t < n; ++t) pos[static_cast<Vertex>(order[t])] = t;
        std::vector<std::vector<int>> leaving(n);
        for (Vertex v = 0; v < n; ++v) {
            std::size_t last = pos[v];
            for (int w : adj_[v]) last = std::max(last, pos[static_cast<Vertex>(w)]);
            leaving[last].push_back(static_cast<int>(v));
        }

        std::vector<int> slot(n, -1);
        std::uint64_t used_slots = 0;
        std::vector<std::uint64_t> masks{0}, next_masks;
        std::vector<std::uint32_t> sizes{0}, next_sizes;
        std::vector<std::uint64_t> bits(words, 0), next_bits;
        std::unordered_map<std::uint64_t, std::size_t> index;

        auto better = [&](std::uint32_t size_a, const std::uint64_t* a, std::uint32_t size_b, const std::uint64_t* b) {
            if (size_a != size_b) return size_a > size_b;
            for (std::size_t k = 0; k < words; ++k) {
                const std::uint64_t x = a[k] ^ b[k];
                if (x) return (a[k] & (x & (~x + 1))) != 0;
            }
            return false;
        };

        for (std::size_t t = 0; t < n; ++t) {
            const auto v = static_cast<Vertex>(order[t]);
            if (used_slots == ~std::uint64_t{0}) return false;
            const int s = std::countr_one(used_slots);
            const std::uint64_t own = std::uint64_t{1} << s;
            used_slots |= own;
            slot[v] = s;

            std::uint64_t nbr_mask = 0;
            for (int w : adj_[v]) {
                if (pos[static_cast<Vertex>(w)] < t) nbr_mask |= std::uint64_t{1} << slot[static_cast<Vertex>(w)];
            }
            std::uint64_t clear = 0;
            for (int u : leaving[t]) clear |= std::uint64_t{1} << slot[static_cast<Vertex>(u)];

            next_masks.clear();
            next_sizes.clear();
            next_bits.clear();
            index.clear();
            auto offer = [&](std::uint64_t mask, std::uint32_t size, const std::uint64_t* src, bool with_v) {
                const auto [it, fresh] = index.try_emplace(mask & ~clear, next_masks.size());
                if (fresh) {
                    next_masks.push_back(mask & ~clear);
                    next_sizes.push_back(size);
                    next_bits.insert(next_bits.end(), src, src + words);
                    if (with_v) next_bits[it->second * words + v / 64] |= std::uint64_t{1} << (v % 64);
                    return;
                }
                std::uint64_t* dst = next_bits.data() + it->second * words;
                tmp_.assign(src, src + words);
                if (with_v) tmp_[v / 64] |= std::uint64_t{1} << (v % 64);
                if (better(size, tmp_.data(), next_sizes[it->second], dst)) {
                    next_sizes[it->second] = size;
                    std::copy(tmp_.begin(), tmp_.end(), dst);
                }
            };
            for (std::size_t i = 0; i < masks.size(); ++i) {
                const std::uint64_t* src = bits.data() + i * words;
                offer(masks[i], sizes[i], src, false);
                if ((masks[i] & nbr_mask) == 0) offer(masks[i] | own, sizes[i] + 1, src, true);
            }
            work_ += masks.size();
            if (next_masks.size() > cap || work_ > budget_) return false;
            masks.swap(next_masks);
            sizes.swap(next_sizes);
            bits.swap(next_bits);
            used_slots &= ~clear;
        }
        for (Vertex v = 0; v < n; ++v) {
            if ((bits[v / 64] >> (v % 64)) & 1u) out.push_back(static_cast<int>(v));
        }
        return true;
    }

    std::vector<int> min_degree_greedy()
    {
        const std::size_t mark = trail_.size();
        std::vector<int> set;
        for (;;) {
            int pick = -1;
            for (Vertex v = 0; v < res_.size(); ++v) {
                if (alive_[v] && (pick < 0 || deg_[v] < deg_[static_cast<Vertex>(pick)])) pick = static_cast<int>(v);
            }
            if (pick < 0) break;
            set.push_back(pick);
            remove_closed(static_cast<Vertex>(pick));
        }
        restore(mark);
        std::sort(set.begin(), set.end());
        return set;
    }

    // N[v] inside N[u] for adjacent u, v: some maximum set avoids u.
    bool dominates(Vertex u, Vertex v) const
    {
        for (int w : adj_[v]) {
            const auto wi = static_cast<Vertex>(w);
            if (wi == u || !alive_[wi]) continue;
            if (!adjacent(u, wi)) return false;
        }
        return true;
    }

    // Isolated vertices join the set; dominating neighbours are dropped.
    void reduce()
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v = 0; v < res_.size(); ++v) {
                if (!alive_[v]) continue;
                ++work_;
                if (deg_[v] == 0) {
                    chosen_.push_back(static_cast<int>(v));
                    remove(v);
                    changed = true;
                    continue;
                }
                for (int w : adj_[v]) {
                    const auto u = static_cast<Vertex>(w);
                    if (alive_[u] && deg_[u] >= deg_[v] && dominates(u, v)) {
                        remove(u);
                        changed = true;
                    }
                }
            }
        }
    }

    // Greedy partition of the live vertices into cliques.
    std::size_t clique_cover_bound()
    {
        cliques_.clear();
        for (Vertex u = 0; u < res_.size(); ++u) {
            if (!alive_[u]) continue;
            ++work_;
            int home = -1;
            for (int w : adj_[u]) {
                const auto wi = static_cast<Vertex>(w);
                if (wi >= u || !alive_[wi]) continue;
                const int c = clique_of_[wi];
                const auto& members = cliques_[static_cast<std::size_t>(c)];
                const bool fits = std::all_of(members.begin(), members.end(),
                                              [&](int x) { return adjacent(u, static_cast<Vertex>(x)); });
                if (fits) {
                    home = c;
                    break;
                }
            }
            if (home < 0) {
                home = static_cast<int>(cliques_.size());
                cliques_.emplace_back();
            }
            cliques_[static_cast<std::size_t>(home)].push_back(static_cast<int>(u));
            clique_of_[u] = home;
        }
        return cliques_.size();
    }

    // Raises best_size_ (and best_) while it is below stop_at_.
    void search()
    {
        if (exhausted_ || best_size_ >= stop_at_) return;
        if (++work_ > budget_) {
            exhausted_ = true;
            return;
        }
        const std::size_t mark = trail_.size();
        const std::size_t chosen_mark = chosen_.size();
        reduce();

        int pick = -1;
        for (Vertex v = 0; v < res_.size(); ++v) {
            if (alive_[v] && (pick < 0 || deg_[v] > deg_[static_cast<Vertex>(pick)])) pick = static_cast<int>(v);
        }
        if (pick < 0) {
            if (chosen_.size() > best_size_) {
                best_size_ = chosen_.size();
                best_ = chosen_;
                std::sort(best_.begin(), best_.end());
            }
        } else if (chosen_.size() + clique_cover_bound() > best_size_) {
            const auto v = static_cast<Vertex>(pick);
            const std::size_t branch = trail_.size();
            chosen_.push_back(pick);
            remove_closed(v);
            search();
            restore(branch);
            chosen_.pop_back();

            remove(v);
            search();
            restore(branch);
        }
        restore(mark);
        chosen_.resize(chosen_mark);
    }

    // True iff the live graph has an independent set of size target.
    bool reaches(std::size_t target)
    {
        if (target == 0) return true;
        best_size_ = target - 1;
        stop_at_ = target;
        search();
        return best_size_ >= target;
    }

    // Ascending pass: keep v whenever a maximum set through the choices so
    // far still exists with v in it. False if the budget ran out.
    bool lex_least(std::size_t alpha, std::vector<int>& out)
    {
        const std::size_t mark = trail_.size();
        std::size_t need = alpha;
        for (Vertex v = 0; v < res_.size() && need > 0; ++v) {
            if (!alive_[v]) continue;
            const std::size_t before = trail_.size();
            remove_closed(v);
            const bool keep = reaches(need - 1);
            if (exhausted_) {
                restore(mark);
                return false;
            }
            if (keep) {
                out.push_back(static_cast<int>(v));
                --need;
            } else {
                restore(before);
                remove(v);
            }
        }
        restore(mark);
        return need == 0;
    }

    std::vector<std::uint64_t> res_;
    const std::vector<std::uint64_t>& shape_;
    const std::vector<char>& diffs_;
    std::uint64_t m_;
    std::uint64_t& work_;
    std::uint64_t budget_;
    bool exhausted_ = false;

    std::vector<std::vector<int>> adj_;
    std::vector<char> alive_;
    std::vector<int> deg_;
    std::vector<int> trail_;
    std::vector<int> clique_of_;
    std::vector<std::vector<int>> cliques_;
    std::vector<int> chosen_;
    std::vector<int> best_;
    std::vector<std::uint64_t> tmp_;
    std::size_t best_size_ = 0;
    std::size_t stop_at_ = 0;
};

} // namespace

PackingInstance::PackingInstance(std::uint64_t m, std::vector<std::uint64_t> r, std::vector<std::uint64_t> i)
    : modulus(m)
{
    if (m == 0) throw DomainError("packing modulus must be positive");
    shape = normalize(std::move(r), m);
    candidates = normalize(std::move(i), m);
}

std::string_view to_string(PackingMethod m) noexcept
{
    switch (m) {
    case PackingMethod::Exact: return "exact";
    case PackingMethod::Greedy: return "greedy";
    case PackingMethod::Brute: return "brute";
    }
    return "unknown";
}

std::vector<std::uint64_t> conflict_diffs(const std::vector<std::uint64_t>& shape, std::uint64_t modulus)
{
    std::set<std::uint64_t> out;
    for (std::uint64_t a : shape) {
        for (std::uint64_t b : shape) out.insert((a % modulus + modulus - b % modulus) % modulus);
    }
    return {out.begin(), out.end()};
}

PackingResult max_disjoint_translates_exact(const PackingInstance& inst, std::uint64_t budget, ExactEngine engine)
{
    PackingResult result;
    result.method = PackingMethod::Exact;
    if (inst.candidates.empty()) return result;

    const auto diffs = diff_table(inst);
    const std::uint64_t m = inst.modulus;
    std::vector<std::int64_t> pos(m, -1);
    for (std::size_t k = 0; k < inst.candidates.size(); ++k) {
        pos[inst.candidates[k]] = static_cast<std::int64_t>(k);
    }
    std::vector<std::uint64_t> nonzero;
    for (std::uint64_t d = 1; d < m; ++d) {
        if (diffs[d]) nonzero.push_back(d);
    }

    // Connected components, each taken in ascending order of its least vertex.
    std::vector<char> seen(inst.candidates.size(), 0);
    std::uint64_t work = 0;
    for (std::size_t start = 0; start < inst.candidates.size(); ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> stack{start};
        std::vector<std::uint64_t> members;
        seen[start] = 1;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            members.push_back(inst.candidates[v]);
            for (std::uint64_t d : nonzero) {
                const std::int64_t w = pos[(inst.candidates[v] + d) % m];
                if (w >= 0 && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(static_cast<std::size_t>(w));
                }
            }
        }
        if (members.size() == 1) {
            result.witness.push_back(members.front());
            continue;
        }
        std::sort(members.begin(), members.end());
        ComponentSearch search(std::move(members), inst.shape, diffs, nonzero, m, work, budget);
        if (!search.solve(result.witness, engine == ExactEngine::Auto)) result.optimal = false;
    }
    std::sort(result.witness.begin(), result.witness.end());
    result.d = result.witness.size();
    result.work = work;
    return result;
}

PackingResult max_disjoint_translates_greedy(const PackingInstance& inst)
{
    PackingResult result;
    result.method = PackingMethod::Greedy;
    result.optimal = false;
    const auto diffs = conflict_diffs(inst.shape, inst.modulus);
    std::vector<char> blocked(inst.modulus, 0);
    for (std::uint64_t i : inst.candidates) {
        if (blocked[i]) continue;
        result.witness.push_back(i);
        for (std::uint64_t d : diffs) blocked[(i + d) % inst.modulus] = 1;
    }
    result.d = result.witness.size();
    return result;
}

PackingResult brute_force_packing(const PackingInstance& inst)
{
    const std::size_t n = inst.candidates.size();
    if (n > 20) throw DomainError("brute_force_packing: |I| = " + std::to_string(n) + " exceeds 20");
    const auto diffs = diff_table(inst);
    std::vector<std::uint32_t> conflicts(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const std::uint64_t d = (inst.candidates[a] + inst.modulus - inst.candidates[b]) % inst.modulus;
            if (a != b && diffs[d]) conflicts[a] |= std::uint32_t{1} << b;
        }
    }
    std::uint32_t best = 0;
    int best_size = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        bool independent = true;
        for (std::size_t v = 0; v < n && independent; ++v) {
            if ((mask >> v) & 1u) independent = (conflicts[v] & mask) == 0;
        }
        if (!independent) continue;
        const int size = std::popcount(mask);
        // Among equal sizes prefer the set containing the lowest differing vertex.
        const std::uint32_t diff = mask ^ best;
        const bool lex_smaller = diff != 0 && (mask & (diff & (~diff + 1))) != 0;
        if (size > best_size || (size == best_size && lex_smaller)) {
            best = mask;
            best_size = size;
        }
    }
    PackingResult result;
    result.method = PackingMethod::Brute;
    for (std::size_t v = 0; v < n; ++v) {
        if ((best >> v) & 1u) result.witness.push_back(inst.candidates[v]);
    }
    result.d = result.witness.size();
    return result;
}

bool verify_packing(const PackingInstance& inst, const std::vector<std::uint64_t>& witness)
{
    std::set<std::uint64_t> covered;
    std::set<std::uint64_t> used;
    for (std::uint64_t i : witness) {
        if (!std::binary_search(inst.candidates.begin(), inst.candidates.end(), i)) return false;
        if (!used.insert(i).second) return false;
        for (std::uint64_t r : inst.shape) {
            if (!covered.insert((i + r) % inst.modulus).second) return false;
        }
    }
    return true;
}

} // namespace irreg
