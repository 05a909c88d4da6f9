#ifndef REPLIHAM_TESTS_ORACLE_HPP
#define REPLIHAM_TESTS_ORACLE_HPP

// Test-only brute-force oracles, deliberately independent of the library's
// search code paths: plain subset enumeration over tiles.

#include <optional>
#include <random>
#include <vector>

#include "repliham/assembly.hpp"
#include "repliham/geom.hpp"
#include "repliham/glue.hpp"
#include "repliham/tile.hpp"

namespace oracle {

using namespace repliham;

struct WeakCutResult {
    int weight;
    std::vector<Vec2> side_b;
};

// Every bipartition of the tiles (no fusion tricks): a side is admissible if
// it is positively connected; a partition is admissible if additionally no
// infinite bond crosses it. Returns the minimum crossing weight < tau.
inline std::optional<WeakCutResult> brute_force_weak_cut(const PositionedAssembly& pa, int tau,
                                                         const StrengthFunction& str) {
    const auto& cells = pa.cells();
    size_t n = cells.size();
    if (n < 2 || n > 20) return std::nullopt;

    struct EdgeInfo {
        size_t a, b;
        int weight;
        bool infinite;
    };
    std::vector<EdgeInfo> edges;
    auto index_of = [&](Vec2 p) -> int64_t {
        for (size_t i = 0; i < n; ++i)
            if (cells[i].first == p) return static_cast<int64_t>(i);
        return -1;
    };
    for (size_t i = 0; i < n; ++i)
        for (Dir d : {Dir::East, Dir::North}) {
            int64_t j = index_of(cells[i].first + dir_offset(d));
            if (j < 0) continue;
            auto fa = cells[i].second.face(d);
            auto fb = cells[static_cast<size_t>(j)].second.face(opposite(d));
            if (!str.faces_bond(fa, fb)) {
                edges.push_back({i, static_cast<size_t>(j), 0, false});
            } else if (str.bond_is_infinite(fa, fb)) {
                edges.push_back({i, static_cast<size_t>(j), 0, true});
            } else {
                edges.push_back({i, static_cast<size_t>(j), str.bond_strength(fa, fb), false});
            }
        }

    auto positive_connected = [&](uint32_t mask) {
        if (mask == 0) return false;
        uint32_t start = 0;
        while (!(mask & (1u << start))) ++start;
        uint32_t seen = 1u << start;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& e : edges) {
                bool pos = e.infinite || e.weight > 0;
                if (!pos) continue;
                uint32_t ma = 1u << e.a, mb = 1u << e.b;
                if ((mask & ma) && (mask & mb)) {
                    if ((seen & ma) && !(seen & mb)) seen |= mb, grew = true;
                    if ((seen & mb) && !(seen & ma)) seen |= ma, grew = true;
                }
            }
        }
        return seen == mask;
    };

    std::optional<WeakCutResult> best;
    uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (uint32_t sub = 1; sub < full; ++sub) {
        if (!(sub & 1)) continue;  // fix tile 0 on side A
        uint32_t side_b = full & ~sub;
        if (side_b == 0) continue;
        bool crossed_infinite = false;
        int w = 0;
        for (const auto& e : edges) {
            bool split = ((sub >> e.a) & 1) != ((sub >> e.b) & 1);
            if (!split) continue;
            if (e.infinite) {
                crossed_infinite = true;
                break;
            }
            w += e.weight;
        }
        if (crossed_infinite || w >= tau) continue;
        if (!positive_connected(sub) || !positive_connected(side_b)) continue;
        if (!best || w < best->weight) {
            best = WeakCutResult{w, {}};
            for (size_t i = 0; i < n; ++i)
                if (!((sub >> i) & 1)) best->side_b.push_back(cells[i].first);
        }
    }
    return best;
}

// Random connected assemblies with glue strengths drawn from [-7, 10].
struct RandomAssemblyGen {
    std::mt19937_64 rng;
    explicit RandomAssemblyGen(uint64_t seed) : rng(seed) {}

    // Returns the assembly and its private strength function.
    std::pair<PositionedAssembly, StrengthFunction> next(size_t max_tiles) {
        StrengthFunction str;
        std::uniform_int_distribution<int> strength_dist(-7, 10);
        std::vector<GlueId> pool;
        for (int i = 0; i < 12; ++i) {
            int s = strength_dist(rng);
            if (s == 0) s = 1;
            pool.push_back(str.add("g" + std::to_string(i), s));
        }
        std::uniform_int_distribution<size_t> size_dist(2, max_tiles);
        size_t n = size_dist(rng);

        // Grow a random polyomino.
        std::vector<Vec2> cells = {{0, 0}};
        while (cells.size() < n) {
            Vec2 base = cells[std::uniform_int_distribution<size_t>(0, cells.size() - 1)(rng)];
            Dir d = all_dirs[std::uniform_int_distribution<int>(0, 3)(rng)];
            Vec2 q = base + dir_offset(d);
            bool dup = false;
            for (Vec2 c : cells) dup = dup || c == q;
            if (!dup) cells.push_back(q);
        }

        std::vector<PositionedAssembly::Cell> placed;
        for (Vec2 c : cells) placed.emplace_back(c, Tile{});
        PositionedAssembly pa(std::move(placed));
        std::vector<PositionedAssembly::Cell> mut(pa.cells());
        auto cell_at = [&](Vec2 p) -> Tile* {
            for (auto& [q, t] : mut)
                if (q == p) return &t;
            return nullptr;
        };
        // Random glue pairs on internal edges (mostly matching).
        for (auto& [p, t] : mut)
            for (Dir d : {Dir::East, Dir::North}) {
                Tile* other = cell_at(p + dir_offset(d));
                if (!other) continue;
                int roll = std::uniform_int_distribution<int>(0, 9)(rng);
                if (roll < 6) {
                    GlueId g = pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
                    t.set_face(d, g);
                    other->set_face(opposite(d), g);
                } else if (roll < 8) {
                    t.set_face(d, pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)]);
                }
            }
        // Force a positive spanning chain so the assembly is connected.
        GlueId strong = str.add("span", 10);
        PositionedAssembly candidate(mut);
        if (!connected_by_positive_bonds(candidate, str)) {
            for (size_t i = 0; i + 1 < cells.size(); ++i) {
                // connect cells[i+1] to its adjacent predecessor in growth order
                for (size_t j = 0; j <= i; ++j) {
                    Vec2 d = cells[i + 1] - cells[j];
                    if (std::abs(d.x) + std::abs(d.y) != 1) continue;
                    Dir dir = d.x == 1   ? Dir::East
                              : d.x == -1 ? Dir::West
                              : d.y == 1  ? Dir::North
                                          : Dir::South;
                    cell_at(cells[j])->set_face(dir, strong);
                    cell_at(cells[i + 1])->set_face(opposite(dir), strong);
                    break;
                }
            }
        }
        return {PositionedAssembly(std::move(mut)), std::move(str)};
    }
};

}  // namespace oracle

#endif
