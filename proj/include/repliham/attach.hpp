#ifndef REPLIHAM_ATTACH_HPP
#define REPLIHAM_ATTACH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "repliham/assembly.hpp"
#include "repliham/cuts.hpp"
#include "repliham/errors.hpp"
#include "repliham/geom.hpp"
#include "repliham/glue.hpp"

namespace repliham {

// One matched glue pair across a two-assembly interface. `pos`/`dir` name the
// face on the first assembly; the partner face is at pos+dir on the second.
struct CrossingBond {
    Vec2 pos;
    Dir dir;
    GlueId glue;
    int strength;
};

// A non-overlapping translation of assembly B against assembly A whose summed
// matched glue strengths reach the temperature.
struct AttachmentSite {
    Vec2 translation;  // applied to B's canonical positioned form
    int interface_strength = 0;
    std::vector<CrossingBond> crossing_bonds;

    friend bool operator==(const AttachmentSite& x, const AttachmentSite& y) {
        return x.translation == y.translation;
    }
};

namespace detail {

// Exposed faces of an assembly carrying glue g, grouped per glue.
struct FaceIndex {
    struct Entry {
        Vec2 pos;
        Dir dir;
    };
    std::vector<std::vector<Entry>> by_glue;  // GlueId -> entries

    static FaceIndex build(const PositionedAssembly& pa, const StrengthFunction& str) {
        FaceIndex fi;
        fi.by_glue.resize(str.size());
        for (const auto& [p, t] : pa.cells())
            for (Dir d : all_dirs) {
                auto g = t.face(d);
                if (!g) continue;
                if (pa.occupied(p + dir_offset(d))) continue;  // interior face
                fi.by_glue[*g].push_back({p, d});
            }
        return fi;
    }
};

}  // namespace detail

// Interface strength of placing `b` translated by `v` against `a`, with the
// crossing bonds; nullopt if the placement overlaps. Matched infinite glues
// across an interface are treated as an always-sufficient bond.
inline std::optional<AttachmentSite> evaluate_placement(const PositionedAssembly& a,
                                                        const PositionedAssembly& b, Vec2 v,
                                                        const StrengthFunction& str) {
    if (a.overlaps(b, v)) return std::nullopt;
    AttachmentSite site;
    site.translation = v;
    const bool iterate_b = b.size() <= a.size();
    const PositionedAssembly& small = iterate_b ? b : a;
    const PositionedAssembly& big = iterate_b ? a : b;
    for (const auto& [p, t] : small.cells()) {
        Vec2 world = iterate_b ? p + v : p;
        for (Dir d : all_dirs) {
            Vec2 nb = world + dir_offset(d);
            auto mine = t.face(d);
            auto theirs = iterate_b ? big.face(nb, opposite(d)) : big.face(nb - v, opposite(d));
            if (!str.faces_bond(mine, theirs)) continue;
            int s = str.bond_is_infinite(mine, theirs) ? 1000000 : str.bond_strength(mine, theirs);
            Vec2 a_pos = iterate_b ? nb : world;
            Dir a_dir = iterate_b ? opposite(d) : d;
            site.crossing_bonds.push_back({a_pos, a_dir, *mine, s});
            site.interface_strength += s;
        }
    }
    return site;
}

// All translations of b against a with no overlap and interface >= tau.
// Candidates come from pairs of equal facing glue labels; every coincident
// matching glue, negative ones included, is then summed.
inline std::vector<AttachmentSite> enumerate_attachments(const PositionedAssembly& a,
                                                         const PositionedAssembly& b, int tau,
                                                         const StrengthFunction& str) {
    if (a.empty() || b.empty()) throw ValidationError("enumerate_attachments on empty assembly");
    auto fa = detail::FaceIndex::build(a, str);
    auto fb = detail::FaceIndex::build(b, str);
    std::unordered_set<uint64_t> seen;
    std::vector<AttachmentSite> sites;
    for (GlueId g = 0; g < str.size(); ++g) {
        if (!str.is_infinite(g) && str.strength(g) <= 0) continue;  // cannot seed a bond
        for (const auto& ea : fa.by_glue[g])
            for (const auto& eb : fb.by_glue[g]) {
                if (eb.dir != opposite(ea.dir)) continue;
                Vec2 v = ea.pos + dir_offset(ea.dir) - eb.pos;
                uint64_t key = (static_cast<uint64_t>(static_cast<uint32_t>(v.x)) << 32) |
                               static_cast<uint32_t>(v.y);
                if (!seen.insert(key).second) continue;
                auto site = evaluate_placement(a, b, v, str);
                if (site && site->interface_strength >= tau) sites.push_back(std::move(*site));
            }
    }
    std::sort(sites.begin(), sites.end(), [](const AttachmentSite& x, const AttachmentSite& y) {
        return x.translation < y.translation;
    });
    return sites;
}

inline std::vector<AttachmentSite> enumerate_attachments(const Assembly& a, const Assembly& b,
                                                         int tau, const StrengthFunction& str) {
    return enumerate_attachments(a.positioned(), b.positioned(), tau, str);
}

// Union of a and b-translated. The result need not be stable; that is the
// model's destabilization mechanism.
inline Assembly combine(const Assembly& a, const Assembly& b, const AttachmentSite& site) {
    const auto& pa = a.positioned();
    const auto& pb = b.positioned();
    if (pa.overlaps(pb, site.translation))
        throw InternalError("stale attachment site: assemblies overlap");
    std::vector<PositionedAssembly::Cell> cells(pa.cells());
    cells.reserve(pa.size() + pb.size());
    for (const auto& [p, t] : pb.cells()) cells.emplace_back(p + site.translation, t);
    return Assembly::canonicalize(PositionedAssembly(std::move(cells)));
}

// The two pieces of a breakable assembly along a cut.
inline std::pair<Assembly, Assembly> split(const Assembly& asm_, const Cut& cut) {
    const auto& pa = asm_.positioned();
    if (cut.side_a.size() + cut.side_b.size() != pa.size())
        throw InternalError("cut does not partition the assembly");
    std::vector<PositionedAssembly::Cell> ca, cb;
    ca.reserve(cut.side_a.size());
    cb.reserve(cut.side_b.size());
    for (Vec2 p : cut.side_a) {
        const Tile* t = pa.at(p);
        if (!t) throw InternalError("cut names a coordinate outside the assembly");
        ca.emplace_back(p, *t);
    }
    for (Vec2 p : cut.side_b) {
        const Tile* t = pa.at(p);
        if (!t) throw InternalError("cut names a coordinate outside the assembly");
        cb.emplace_back(p, *t);
    }
    return {Assembly::canonicalize(PositionedAssembly(std::move(ca))),
            Assembly::canonicalize(PositionedAssembly(std::move(cb)))};
}

}  // namespace repliham

#endif
