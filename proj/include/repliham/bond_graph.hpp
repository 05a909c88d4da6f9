#ifndef REPLIHAM_BOND_GRAPH_HPP
#define REPLIHAM_BOND_GRAPH_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "repliham/assembly.hpp"
#include "repliham/geom.hpp"
#include "repliham/glue.hpp"

namespace repliham {

// Weighted grid graph over an assembly. One vertex per tile, one edge per
// coordinate-adjacent tile pair; the weight is the matched coincident glue
// strength or 0, with infinite bonds flagged instead of weighted.
struct BondGraph {
    struct Edge {
        uint32_t a, b;  // vertex indices, a < b
        int weight;
        bool infinite;
    };

    std::vector<Vec2> vertices;  // index-aligned with pa.cells()
    std::vector<Edge> edges;

    static BondGraph build(const PositionedAssembly& pa, const StrengthFunction& str) {
        BondGraph g;
        const auto& cells = pa.cells();
        g.vertices.reserve(cells.size());
        for (const auto& [p, t] : cells) g.vertices.push_back(p);
        auto index_of = [&](Vec2 p) -> int64_t {
            auto it = std::lower_bound(cells.begin(), cells.end(), p,
                                       [](const auto& c, Vec2 q) { return c.first < q; });
            if (it != cells.end() && it->first == p) return it - cells.begin();
            return -1;
        };
        for (uint32_t i = 0; i < cells.size(); ++i) {
            // East and north neighbors only, so each pair appears once.
            for (Dir d : {Dir::East, Dir::North}) {
                int64_t j = index_of(cells[i].first + dir_offset(d));
                if (j < 0) continue;
                auto fa = cells[i].second.face(d);
                auto fb = cells[static_cast<size_t>(j)].second.face(opposite(d));
                Edge e;
                e.a = std::min<uint32_t>(i, static_cast<uint32_t>(j));
                e.b = std::max<uint32_t>(i, static_cast<uint32_t>(j));
                e.infinite = str.bond_is_infinite(fa, fb);
                e.weight = e.infinite ? 0 : str.bond_strength(fa, fb);
                g.edges.push_back(e);
            }
        }
        return g;
    }
};

// Bond graph with the endpoints of infinite bonds merged into super-vertices.
// Cut search runs on this graph so infinite bonds can never be severed.
struct FusedGraph {
    struct Edge {
        uint32_t a, b;
        int weight;
    };

    uint32_t vertex_count = 0;
    std::vector<Edge> edges;             // weight != 0 edges between distinct groups
    std::vector<uint32_t> group_of;      // tile index -> fused vertex
    std::vector<std::vector<uint32_t>> members;  // fused vertex -> tile indices

    static FusedGraph build(const BondGraph& bg) {
        std::vector<uint32_t> parent(bg.vertices.size());
        std::iota(parent.begin(), parent.end(), 0u);
        auto find = [&](uint32_t v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (const auto& e : bg.edges)
            if (e.infinite) parent[find(e.a)] = find(e.b);

        FusedGraph fg;
        fg.group_of.assign(bg.vertices.size(), 0);
        std::vector<int64_t> compact(bg.vertices.size(), -1);
        for (uint32_t v = 0; v < bg.vertices.size(); ++v) {
            uint32_t r = find(v);
            if (compact[r] < 0) {
                compact[r] = fg.vertex_count++;
                fg.members.emplace_back();
            }
            fg.group_of[v] = static_cast<uint32_t>(compact[r]);
            fg.members[fg.group_of[v]].push_back(v);
        }
        for (const auto& e : bg.edges) {
            if (e.infinite || e.weight == 0) continue;
            uint32_t a = fg.group_of[e.a], b = fg.group_of[e.b];
            if (a != b) fg.edges.push_back({std::min(a, b), std::max(a, b), e.weight});
        }
        return fg;
    }
};

}  // namespace repliham

#endif
