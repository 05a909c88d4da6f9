#ifndef REPLIHAM_ASSEMBLY_HPP
#define REPLIHAM_ASSEMBLY_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "repliham/errors.hpp"
#include "repliham/geom.hpp"
#include "repliham/glue.hpp"
#include "repliham/tile.hpp"

namespace repliham {

// Tiles at unique grid coordinates. Cells are kept sorted by (y, x) so that
// iteration order, equality and hashing are translation-stable.
class PositionedAssembly {
public:
    using Cell = std::pair<Vec2, Tile>;

    PositionedAssembly() = default;
    explicit PositionedAssembly(std::vector<Cell> cells) : cells_(std::move(cells)) {
        std::sort(cells_.begin(), cells_.end(),
                  [](const Cell& a, const Cell& b) { return a.first < b.first; });
        for (size_t i = 1; i < cells_.size(); ++i)
            if (cells_[i].first == cells_[i - 1].first)
                throw InternalError("overlapping tiles in positioned assembly");
    }

    void add(Vec2 p, Tile t) {
        auto it = lower_bound(p);
        if (it != cells_.end() && it->first == p)
            throw InternalError("tile already present at coordinate");
        cells_.insert(it, {p, std::move(t)});
    }

    const Tile* at(Vec2 p) const {
        auto it = lower_bound(p);
        if (it != cells_.end() && it->first == p) return &it->second;
        return nullptr;
    }

    bool occupied(Vec2 p) const { return at(p) != nullptr; }

    std::optional<GlueId> face(Vec2 p, Dir d) const {
        const Tile* t = at(p);
        if (!t) return std::nullopt;
        return t->face(d);
    }

    const std::vector<Cell>& cells() const { return cells_; }
    size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    PositionedAssembly translated(Vec2 v) const {
        std::vector<Cell> out;
        out.reserve(cells_.size());
        for (const auto& [p, t] : cells_) out.emplace_back(p + v, t);
        return PositionedAssembly(std::move(out));  // order is translation invariant
    }

    // Least occupied coordinate in (y, x) order; the canonical anchor.
    Vec2 anchor() const {
        if (cells_.empty()) throw InternalError("anchor of empty assembly");
        return cells_.front().first;
    }

    // True iff some cell of `other`, translated by `other_offset`, lands on a
    // cell of this assembly.
    bool overlaps(const PositionedAssembly& other, Vec2 other_offset) const {
        if (size() <= other.size()) {
            for (const auto& [p, t] : cells())
                if (other.occupied(p - other_offset)) return true;
        } else {
            for (const auto& [q, t] : other.cells())
                if (occupied(q + other_offset)) return true;
        }
        return false;
    }

    friend bool operator==(const PositionedAssembly& a, const PositionedAssembly& b) {
        return a.cells_ == b.cells_;
    }

    uint64_t content_hash() const {
        uint64_t h = 1469598103934665603ULL;
        auto mix = [&h](uint64_t v) {
            h ^= v;
            h *= 1099511628211ULL;
        };
        for (const auto& [p, t] : cells_) {
            mix(static_cast<uint32_t>(p.x));
            mix(static_cast<uint32_t>(p.y));
            for (GlueId g : t.faces) mix(g);
            for (char c : t.label) mix(static_cast<unsigned char>(c));
            mix(0x9e);
        }
        return h;
    }

private:
    std::vector<Cell>::const_iterator lower_bound(Vec2 p) const {
        return std::lower_bound(cells_.begin(), cells_.end(), p,
                                [](const Cell& c, Vec2 q) { return c.first < q; });
    }
    std::vector<Cell>::iterator lower_bound(Vec2 p) {
        return std::lower_bound(cells_.begin(), cells_.end(), p,
                                [](const Cell& c, Vec2 q) { return c.first < q; });
    }

    std::vector<Cell> cells_;
};

// Translation class of a positioned assembly, represented by the positioned
// element whose least occupied coordinate is the origin. Equality of Assembly
// values decides translation-equivalence.
class Assembly {
public:
    Assembly() = default;

    static Assembly canonicalize(const PositionedAssembly& pa) {
        if (pa.empty()) throw ValidationError("cannot canonicalize an empty assembly");
        Assembly a;
        a.pa_ = pa.translated(-pa.anchor());
        a.hash_ = a.pa_.content_hash();
        return a;
    }

    const PositionedAssembly& positioned() const { return pa_; }
    size_t size() const { return pa_.size(); }
    uint64_t hash() const { return hash_; }

    friend bool operator==(const Assembly& a, const Assembly& b) {
        return a.hash_ == b.hash_ && a.pa_ == b.pa_;
    }

private:
    PositionedAssembly pa_;
    uint64_t hash_ = 0;
};

struct AssemblyHash {
    size_t operator()(const Assembly& a) const { return static_cast<size_t>(a.hash()); }
};

// Positive-bond connectivity (infinite bonds count as positive).
inline bool connected_by_positive_bonds(const PositionedAssembly& pa,
                                        const StrengthFunction& str) {
    if (pa.empty()) return false;
    const auto& cells = pa.cells();
    std::vector<char> seen(cells.size(), 0);
    std::vector<size_t> stack = {0};
    seen[0] = 1;
    size_t reached = 1;
    auto index_of = [&](Vec2 p) -> std::optional<size_t> {
        auto it = std::lower_bound(cells.begin(), cells.end(), p,
                                   [](const auto& c, Vec2 q) { return c.first < q; });
        if (it != cells.end() && it->first == p)
            return static_cast<size_t>(it - cells.begin());
        return std::nullopt;
    };
    while (!stack.empty()) {
        size_t i = stack.back();
        stack.pop_back();
        Vec2 p = cells[i].first;
        for (Dir d : all_dirs) {
            auto j = index_of(p + dir_offset(d));
            if (!j || seen[*j]) continue;
            auto a = cells[i].second.face(d);
            auto b = cells[*j].second.face(opposite(d));
            bool bonded = str.bond_is_infinite(a, b) ||
                          (str.faces_bond(a, b) && str.bond_strength(a, b) > 0);
            if (!bonded) continue;
            seen[*j] = 1;
            ++reached;
            stack.push_back(*j);
        }
    }
    return reached == cells.size();
}

}  // namespace repliham

#endif
