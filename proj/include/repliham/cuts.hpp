#ifndef REPLIHAM_CUTS_HPP
#define REPLIHAM_CUTS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "repliham/bond_graph.hpp"

namespace repliham {

// A bipartition of an assembly's tiles into two positively-connected sides,
// with the summed weight of all crossing bonds.
struct Cut {
    std::vector<Vec2> side_a;
    std::vector<Vec2> side_b;
    int weight = 0;
};

struct CutSearchConfig {
    // Exhaustive connected-bipartition enumeration up to this many fused
    // vertices; exact, and the mode the brute-force oracle certifies.
    uint32_t exhaustive_limit = 12;
    // Bounded mode, larger assemblies: every cut with one side of at most
    // small_side_limit fused vertices is still found exhaustively, ...
    uint32_t small_side_limit = 6;
    // ... and cuts with both sides large are searched over subsets of
    // crossing negative bonds (max-flow on the positive remainder). Above
    // the cap only subsets of size <= 2 are tried and stability reports mean
    // "no cut found within budget".
    uint32_t negative_subset_limit = 12;
};

namespace detail {

// Dinic max-flow; capacities are positive ints.
class MaxFlow {
public:
    explicit MaxFlow(uint32_t n) : head_(n, -1), level_(n), it_(n) {}

    void add_edge(uint32_t a, uint32_t b, int cap) {
        edges_.push_back({b, head_[a], cap});
        head_[a] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({a, head_[b], cap});
        head_[b] = static_cast<int>(edges_.size()) - 1;
    }

    long long run(uint32_t s, uint32_t t) {
        long long flow = 0;
        while (bfs(s, t)) {
            it_ = head_;
            while (long long f = dfs(s, t, std::numeric_limits<long long>::max()))
                flow += f;
        }
        return flow;
    }

    // After run(): vertices reachable from s in the residual graph.
    std::vector<char> min_cut_side(uint32_t s) const {
        std::vector<char> side(head_.size(), 0);
        std::vector<uint32_t> stack = {s};
        side[s] = 1;
        while (!stack.empty()) {
            uint32_t v = stack.back();
            stack.pop_back();
            for (int e = head_[v]; e >= 0; e = edges_[e].next) {
                if (edges_[e].cap > 0 && !side[edges_[e].to]) {
                    side[edges_[e].to] = 1;
                    stack.push_back(edges_[e].to);
                }
            }
        }
        return side;
    }

private:
    struct E {
        uint32_t to;
        int next;
        long long cap;
    };

    bool bfs(uint32_t s, uint32_t t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<uint32_t> q;
        q.push(s);
        level_[s] = 0;
        while (!q.empty()) {
            uint32_t v = q.front();
            q.pop();
            for (int e = head_[v]; e >= 0; e = edges_[e].next) {
                if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
                    level_[edges_[e].to] = level_[v] + 1;
                    q.push(edges_[e].to);
                }
            }
        }
        return level_[t] >= 0;
    }

    long long dfs(uint32_t v, uint32_t t, long long limit) {
        if (v == t || limit == 0) return limit;
        for (int& e = it_[v]; e >= 0; e = edges_[e].next) {
            auto& fwd = edges_[e];
            if (fwd.cap > 0 && level_[fwd.to] == level_[v] + 1) {
                long long f = dfs(fwd.to, t, std::min<long long>(limit, fwd.cap));
                if (f > 0) {
                    fwd.cap -= f;
                    edges_[e ^ 1].cap += f;
                    return f;
                }
            }
        }
        return 0;
    }

    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> it_;
    std::vector<E> edges_;
};

// Scratch view of the fused graph shared by the search strategies.
struct CutSpace {
    const FusedGraph& fg;
    std::vector<std::vector<uint32_t>> pos_adj;        // positive-edge adjacency
    std::vector<std::vector<uint32_t>> incident;       // vertex -> edge indices

    explicit CutSpace(const FusedGraph& g) : fg(g), pos_adj(g.vertex_count), incident(g.vertex_count) {
        for (uint32_t i = 0; i < g.edges.size(); ++i) {
            const auto& e = g.edges[i];
            incident[e.a].push_back(i);
            incident[e.b].push_back(i);
            if (e.weight > 0) {
                pos_adj[e.a].push_back(e.b);
                pos_adj[e.b].push_back(e.a);
            }
        }
    }

    int crossing_weight(const std::vector<char>& in_a) const {
        int w = 0;
        for (const auto& e : fg.edges)
            if (in_a[e.a] != in_a[e.b]) w += e.weight;
        return w;
    }

    bool side_connected(const std::vector<char>& in_a, char side) const {
        uint32_t start = fg.vertex_count, count = 0;
        for (uint32_t v = 0; v < fg.vertex_count; ++v)
            if (in_a[v] == side) {
                if (start == fg.vertex_count) start = v;
                ++count;
            }
        if (count == 0) return false;
        std::vector<char> seen(fg.vertex_count, 0);
        std::vector<uint32_t> stack = {start};
        seen[start] = 1;
        uint32_t reached = 1;
        while (!stack.empty()) {
            uint32_t v = stack.back();
            stack.pop_back();
            for (uint32_t u : pos_adj[v])
                if (in_a[u] == side && !seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        return reached == count;
    }

    bool valid_partition(const std::vector<char>& in_a) const {
        return side_connected(in_a, 1) && side_connected(in_a, 0);
    }

    // Move positive components stranded away from their side's anchor across,
    // then re-validate. Only a candidate generator; never accepted unchecked.
    std::optional<std::vector<char>> repaired(std::vector<char> in_a, uint32_t anchor_a,
                                              uint32_t anchor_b) const {
        for (int round = 0; round < 4; ++round) {
            bool moved = false;
            for (char side : {char(1), char(0)}) {
                uint32_t anchor = side ? anchor_a : anchor_b;
                std::vector<char> seen(fg.vertex_count, 0);
                std::vector<uint32_t> stack = {anchor};
                seen[anchor] = 1;
                while (!stack.empty()) {
                    uint32_t v = stack.back();
                    stack.pop_back();
                    for (uint32_t u : pos_adj[v])
                        if (in_a[u] == side && !seen[u]) {
                            seen[u] = 1;
                            stack.push_back(u);
                        }
                }
                for (uint32_t v = 0; v < fg.vertex_count; ++v)
                    if (in_a[v] == side && !seen[v]) {
                        in_a[v] = !side;
                        moved = true;
                    }
            }
            if (!moved) break;
        }
        if (in_a[anchor_a] != 1 || in_a[anchor_b] != 0) return std::nullopt;
        if (!valid_partition(in_a)) return std::nullopt;
        return in_a;
    }
};

}  // namespace detail

// Minimum-weight connected bipartition with weight < tau over the fused
// graph, or nullopt. `exact_out` reports whether the search proved absence.
inline std::optional<std::vector<char>> weak_partition(const FusedGraph& fg, int tau,
                                                       const CutSearchConfig& cfg,
                                                       bool* exact_out = nullptr) {
    if (exact_out) *exact_out = true;
    if (fg.vertex_count < 2) return std::nullopt;

    detail::CutSpace space(fg);
    std::optional<std::vector<char>> best;
    int best_w = tau;  // only cuts strictly below tau qualify

    auto consider = [&](const std::vector<char>& in_a) {
        int w = space.crossing_weight(in_a);
        if (w >= best_w) return;
        if (!space.valid_partition(in_a)) return;
        best = in_a;
        best_w = w;
    };

    uint32_t n = fg.vertex_count;

    if (n <= cfg.exhaustive_limit) {
        // Fix vertex 0 on side A; enumerate every subset of the rest as side B.
        uint64_t limit = 1ull << (n - 1);
        std::vector<char> in_a(n);
        for (uint64_t mask = 1; mask < limit; ++mask) {
            in_a.assign(n, 1);
            for (uint32_t v = 1; v < n; ++v)
                if (mask & (1ull << (v - 1))) in_a[v] = 0;
            consider(in_a);
        }
        return best;
    }

    if (exact_out) *exact_out = false;

    // --- Bounded mode, part 1: every positively-connected side of at most
    // small_side_limit fused vertices (root-canonical subset enumeration).
    {
        uint32_t k = std::max<uint32_t>(1, cfg.small_side_limit);
        std::vector<char> in_s(n, 0);
        std::vector<uint32_t> subset;
        auto evaluate = [&]() {
            int w = 0;
            for (uint32_t v : subset)
                for (uint32_t ei : space.incident[v]) {
                    const auto& e = fg.edges[ei];
                    bool a_in = in_s[e.a], b_in = in_s[e.b];
                    if (a_in != b_in) w += e.weight;
                }
            if (w >= best_w) return;
            std::vector<char> in_a(n);
            for (uint32_t v = 0; v < n; ++v) in_a[v] = !in_s[v];
            consider(in_a);  // small side is side B
        };
        // Enumerate connected subsets containing root r with members > r only.
        auto grow = [&](auto&& self, uint32_t root, std::vector<uint32_t> frontier,
                        std::vector<char>& banned) -> void {
            evaluate();
            if (subset.size() >= k) return;
            std::vector<uint32_t> banned_here;
            for (size_t fi = 0; fi < frontier.size(); ++fi) {
                uint32_t v = frontier[fi];
                if (in_s[v] || banned[v]) continue;
                in_s[v] = 1;
                subset.push_back(v);
                std::vector<uint32_t> next(frontier.begin() + fi + 1, frontier.end());
                for (uint32_t u : space.pos_adj[v])
                    if (u > root && !in_s[u] && !banned[u]) next.push_back(u);
                self(self, root, std::move(next), banned);
                subset.pop_back();
                in_s[v] = 0;
                banned[v] = 1;  // exclude from the remaining branches at this level
                banned_here.push_back(v);
            }
            for (uint32_t v : banned_here) banned[v] = 0;
        };
        for (uint32_t r = 0; r < n; ++r) {
            std::vector<char> banned(n, 0);
            in_s[r] = 1;
            subset = {r};
            std::vector<uint32_t> frontier;
            for (uint32_t u : space.pos_adj[r])
                if (u > r) frontier.push_back(u);
            grow(grow, r, std::move(frontier), banned);
            in_s[r] = 0;
        }
    }

    // --- Bounded mode, part 2: cuts crossing at least one negative bond;
    // exact over subsets of crossing negatives up to the cap.
    std::vector<uint32_t> neg;
    for (uint32_t i = 0; i < fg.edges.size(); ++i)
        if (fg.edges[i].weight < 0) neg.push_back(i);
    uint32_t neg_n = static_cast<uint32_t>(neg.size());
    uint32_t subset_cap = neg_n;
    if (neg_n > cfg.negative_subset_limit) subset_cap = 2;

    std::vector<uint32_t> parent(n);
    auto find = [&](uint32_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };

    auto run_case = [&](const std::vector<uint32_t>& crossing) {
        if (crossing.empty()) return;  // covered by small-side enumeration
        std::iota(parent.begin(), parent.end(), 0u);
        size_t ci = 0;
        for (uint32_t i : neg) {
            if (ci < crossing.size() && crossing[ci] == i) {
                ++ci;
                continue;
            }
            parent[find(fg.edges[i].a)] = find(fg.edges[i].b);
        }
        for (uint32_t i : crossing)
            if (find(fg.edges[i].a) == find(fg.edges[i].b)) return;  // infeasible

        uint32_t k = static_cast<uint32_t>(crossing.size());
        int neg_sum = 0;
        for (uint32_t i : crossing) neg_sum += fg.edges[i].weight;

        for (uint32_t orient = 0; orient < (1u << (k - 1)); ++orient) {
            std::vector<uint32_t> p2(parent);
            auto find2 = [&](uint32_t v) {
                while (p2[v] != v) v = p2[v] = p2[p2[v]];
                return v;
            };
            uint32_t s = find2(fg.edges[crossing[0]].a);
            uint32_t t = find2(fg.edges[crossing[0]].b);
            bool ok = s != t;
            for (uint32_t j = 1; ok && j < k; ++j) {
                const auto& e = fg.edges[crossing[j]];
                uint32_t u = find2(e.a), v = find2(e.b);
                uint32_t to_s = (orient >> (j - 1)) & 1 ? v : u;
                uint32_t to_t = (orient >> (j - 1)) & 1 ? u : v;
                if (to_s != find2(s)) p2[to_s] = find2(s);
                if (to_t != find2(t)) p2[to_t] = find2(t);
                s = find2(s);
                t = find2(t);
                if (s == t) ok = false;
            }
            for (uint32_t i : crossing)
                if (ok && find2(fg.edges[i].a) == find2(fg.edges[i].b)) ok = false;
            if (!ok) continue;

            detail::MaxFlow mf(n);
            for (const auto& e : fg.edges) {
                if (e.weight <= 0) continue;
                uint32_t a = find2(e.a), b = find2(e.b);
                if (a != b) mf.add_edge(a, b, e.weight);
            }
            long long f = mf.run(s, t);
            if (f + neg_sum >= best_w) continue;
            auto reach = mf.min_cut_side(s);
            std::vector<char> in_a(n);
            for (uint32_t v = 0; v < n; ++v) in_a[v] = reach[find2(v)];
            consider(in_a);
            uint32_t aa = n, ab = n;
            for (uint32_t v = 0; v < n && (aa == n || ab == n); ++v) {
                if (in_a[v] && aa == n) aa = v;
                if (!in_a[v] && ab == n) ab = v;
            }
            if (aa < n && ab < n)
                if (auto rep = space.repaired(in_a, aa, ab)) consider(*rep);
        }
    };

    std::vector<uint32_t> crossing;
    auto rec = [&](auto&& self, uint32_t start, uint32_t remaining) -> void {
        run_case(crossing);
        if (remaining == 0) return;
        for (uint32_t i = start; i < neg_n; ++i) {
            crossing.push_back(neg[i]);
            self(self, i + 1, remaining - 1);
            crossing.pop_back();
        }
    };
    rec(rec, 0, subset_cap);
    return best;
}

// Expand a fused-vertex partition back to tile coordinates.
inline Cut expand_partition(const BondGraph& bg, const FusedGraph& fg,
                            const std::vector<char>& in_a) {
    Cut cut;
    for (uint32_t v = 0; v < bg.vertices.size(); ++v) {
        if (in_a[fg.group_of[v]])
            cut.side_a.push_back(bg.vertices[v]);
        else
            cut.side_b.push_back(bg.vertices[v]);
    }
    for (const auto& e : bg.edges)
        if (in_a[fg.group_of[e.a]] != in_a[fg.group_of[e.b]]) cut.weight += e.weight;
    return cut;
}

inline std::optional<Cut> find_weak_cut(const PositionedAssembly& pa, int tau,
                                        const StrengthFunction& str,
                                        const CutSearchConfig& cfg = {},
                                        bool* exact_out = nullptr) {
    BondGraph bg = BondGraph::build(pa, str);
    FusedGraph fg = FusedGraph::build(bg);
    auto part = weak_partition(fg, tau, cfg, exact_out);
    if (!part) return std::nullopt;
    return expand_partition(bg, fg, *part);
}

inline std::optional<Cut> find_weak_cut(const Assembly& asm_, int tau,
                                        const StrengthFunction& str,
                                        const CutSearchConfig& cfg = {},
                                        bool* exact_out = nullptr) {
    return find_weak_cut(asm_.positioned(), tau, str, cfg, exact_out);
}

// Stability = absence of a weak connected cut. In bounded mode a `true`
// means no cut was found within the search budget.
inline bool is_stable(const PositionedAssembly& pa, int tau, const StrengthFunction& str,
                      const CutSearchConfig& cfg = {}, bool* exact_out = nullptr) {
    return !find_weak_cut(pa, tau, str, cfg, exact_out).has_value();
}

inline bool is_stable(const Assembly& asm_, int tau, const StrengthFunction& str,
                      const CutSearchConfig& cfg = {}, bool* exact_out = nullptr) {
    return is_stable(asm_.positioned(), tau, str, cfg, exact_out);
}

}  // namespace repliham

#endif
