#ifndef REPLIHAM_SHAPE_HPP
#define REPLIHAM_SHAPE_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "repliham/assembly.hpp"
#include "repliham/errors.hpp"
#include "repliham/geom.hpp"

namespace repliham {

// A nonempty 4-connected set of grid cells.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<Vec2> cells) : cells_(std::move(cells)) {
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
        if (cells_.empty()) throw ValidationError("empty shape");
        if (!connected()) throw ValidationError("shape is not 4-connected");
    }

    const std::vector<Vec2>& cells() const { return cells_; }
    size_t size() const { return cells_.size(); }

    bool contains(Vec2 p) const {
        return std::binary_search(cells_.begin(), cells_.end(), p);
    }

    Shape canonical() const {
        Vec2 a = cells_.front();
        std::vector<Vec2> out;
        out.reserve(cells_.size());
        for (Vec2 p : cells_) out.push_back(p - a);
        Shape s;
        s.cells_ = std::move(out);
        return s;
    }

    std::pair<Vec2, Vec2> bounds() const {  // (min, max) inclusive
        Vec2 lo = cells_.front(), hi = cells_.front();
        for (Vec2 p : cells_) {
            lo.x = std::min(lo.x, p.x);
            lo.y = std::min(lo.y, p.y);
            hi.x = std::max(hi.x, p.x);
            hi.y = std::max(hi.y, p.y);
        }
        return {lo, hi};
    }

    friend bool operator==(const Shape& a, const Shape& b) { return a.cells_ == b.cells_; }

private:
    bool connected() const {
        std::vector<char> seen(cells_.size(), 0);
        std::vector<size_t> stack = {0};
        seen[0] = 1;
        size_t reached = 1;
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            for (Dir d : all_dirs) {
                Vec2 q = cells_[i] + dir_offset(d);
                auto it = std::lower_bound(cells_.begin(), cells_.end(), q);
                if (it == cells_.end() || !(*it == q)) continue;
                size_t j = static_cast<size_t>(it - cells_.begin());
                if (!seen[j]) {
                    seen[j] = 1;
                    ++reached;
                    stack.push_back(j);
                }
            }
        }
        return reached == cells_.size();
    }

    std::vector<Vec2> cells_;
};

// ASCII grid: '#' occupied, '.' empty; row 0 is the northernmost row.
inline Shape parse_shape(std::string_view text) {
    std::vector<std::string> rows;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            rows.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) rows.push_back(cur);
    std::vector<Vec2> cells;
    int32_t nrows = static_cast<int32_t>(rows.size());
    for (int32_t r = 0; r < nrows; ++r) {
        for (int32_t c = 0; c < static_cast<int32_t>(rows[r].size()); ++c) {
            char ch = rows[r][c];
            if (ch == '#')
                cells.push_back({c, nrows - 1 - r});
            else if (ch != '.' && ch != ' ')
                throw ParseError("unexpected character '" + std::string(1, ch) + "' at row " +
                                 std::to_string(r) + ", column " + std::to_string(c));
        }
    }
    if (cells.empty()) throw ParseError("shape file contains no occupied cells");
    try {
        return Shape(std::move(cells));
    } catch (const ValidationError&) {
        throw ParseError("shape is not 4-connected");
    }
}

inline std::string shape_to_text(const Shape& s) {
    auto [lo, hi] = s.bounds();
    std::string out;
    for (int32_t y = hi.y; y >= lo.y; --y) {
        for (int32_t x = lo.x; x <= hi.x; ++x) out.push_back(s.contains({x, y}) ? '#' : '.');
        out.push_back('\n');
    }
    return out;
}

// Among maximal-y cells, the one with minimal x.
inline Vec2 nw_corner(const Shape& s) {
    Vec2 best = s.cells().front();
    for (Vec2 p : s.cells())
        if (p.y > best.y || (p.y == best.y && p.x < best.x)) best = p;
    return best;
}

// True iff the complement within a one-cell margin of the bounding box is
// 4-connected (genus 0).
inline bool is_hole_free(const Shape& s) {
    auto [lo, hi] = s.bounds();
    int32_t w = hi.x - lo.x + 3, h = hi.y - lo.y + 3;
    std::vector<char> grid(static_cast<size_t>(w) * h, 0);
    auto at = [&](int32_t x, int32_t y) -> char& {
        return grid[static_cast<size_t>(y) * w + x];
    };
    for (Vec2 p : s.cells()) at(p.x - lo.x + 1, p.y - lo.y + 1) = 1;
    std::vector<Vec2> stack = {{0, 0}};
    at(0, 0) = 2;
    while (!stack.empty()) {
        Vec2 p = stack.back();
        stack.pop_back();
        for (Dir d : all_dirs) {
            Vec2 q = p + dir_offset(d);
            if (q.x < 0 || q.y < 0 || q.x >= w || q.y >= h) continue;
            if (at(q.x, q.y) != 0) continue;
            at(q.x, q.y) = 2;
            stack.push_back(q);
        }
    }
    for (char c : grid)
        if (c == 0) return false;  // unreached empty cell = enclosed hole
    return true;
}

namespace detail {

// A maximal straight run of boundary, as a closed axis-aligned segment
// between lattice points, remembering its loop-endpoint identities.
struct BoundarySegment {
    Vec2 a, b;  // lattice endpoints; a <= b componentwise
};

// Trace all boundary loops and cut them into maximal straight segments.
inline std::vector<std::vector<BoundarySegment>> boundary_loops(const Shape& s) {
    // Directed boundary edges, shape kept on the left of travel direction.
    // Edge keyed by (lattice start point, direction).
    struct Step {
        Vec2 from;
        Dir dir;
    };
    std::set<std::pair<std::pair<int32_t, int32_t>, int>> todo;
    auto key = [](Vec2 p, Dir d) {
        return std::make_pair(std::make_pair(p.x, p.y), static_cast<int>(d));
    };
    auto emit = [&](Vec2 cell, Dir side) {
        // Boundary edge on `side` of `cell`, oriented with the cell on its left.
        switch (side) {
            case Dir::North: todo.insert(key({cell.x + 1, cell.y + 1}, Dir::West)); break;
            case Dir::South: todo.insert(key({cell.x, cell.y}, Dir::East)); break;
            case Dir::East: todo.insert(key({cell.x + 1, cell.y}, Dir::North)); break;
            case Dir::West: todo.insert(key({cell.x, cell.y + 1}, Dir::South)); break;
        }
    };
    for (Vec2 p : s.cells())
        for (Dir d : all_dirs)
            if (!s.contains(p + dir_offset(d))) emit(p, d);

    auto step_vec = [](Dir d) { return dir_offset(d); };
    // Next edge continues from the head with the shape still on the left;
    // prefer turning left, then straight, then right (handles pinch points).
    auto next_dir = [&](Vec2 head, Dir d) -> std::optional<Dir> {
        Dir left = static_cast<Dir>((static_cast<int>(d) + 3) % 4);
        for (Dir cand : {left, d, rotate_cw(d)})
            if (todo.count(key(head, cand))) return cand;
        return std::nullopt;
    };

    std::vector<std::vector<BoundarySegment>> loops;
    while (!todo.empty()) {
        auto first = *todo.begin();
        Vec2 start = {first.first.first, first.first.second};
        Dir d0 = static_cast<Dir>(first.second);
        std::vector<Step> walk;
        Vec2 at = start;
        Dir d = d0;
        do {
            todo.erase(key(at, d));
            walk.push_back({at, d});
            at = at + step_vec(d);
            auto nd = next_dir(at, d);
            if (!nd) break;  // loop closed (its continuation was consumed)
            d = *nd;
        } while (!(at == start && d == d0));

        // Merge consecutive collinear steps into maximal segments; the walk is
        // cyclic, so rotate it to begin at a turn.
        size_t n = walk.size();
        size_t begin = 0;
        for (size_t i = 0; i < n; ++i) {
            if (walk[i].dir != walk[(i + n - 1) % n].dir) {
                begin = i;
                break;
            }
        }
        std::vector<BoundarySegment> segs;
        size_t i = 0;
        while (i < n) {
            size_t j = i;
            Dir sd = walk[(begin + i) % n].dir;
            while (j + 1 < n && walk[(begin + j + 1) % n].dir == sd) ++j;
            Vec2 from = walk[(begin + i) % n].from;
            Vec2 to = walk[(begin + j) % n].from + step_vec(sd);
            BoundarySegment seg;
            seg.a = std::min(from, to);
            seg.b = std::max(from, to);
            segs.push_back(seg);
            i = j + 1;
        }
        loops.push_back(std::move(segs));
    }
    return loops;
}

inline int32_t interval_gap(int32_t a0, int32_t a1, int32_t b0, int32_t b1) {
    if (a1 < b0) return b0 - a1;
    if (b1 < a0) return a0 - b1;
    return 0;
}

// Closed-form Chebyshev distance between two axis-aligned closed segments:
// coordinates minimize independently, so the distance is the larger of the
// two per-axis interval gaps.
inline int32_t segment_chebyshev(const BoundarySegment& s, const BoundarySegment& t) {
    return std::max(interval_gap(s.a.x, s.b.x, t.a.x, t.b.x),
                    interval_gap(s.a.y, s.b.y, t.a.y, t.b.y));
}

inline bool segments_share_endpoint(const BoundarySegment& s, const BoundarySegment& t) {
    return s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b;
}

}  // namespace detail

inline constexpr int32_t kUnboundedFeature = std::numeric_limits<int32_t>::max();

// Minimum Chebyshev distance between points on two non-adjacent boundary
// edges (maximal straight runs); adjacent means sharing a polygon endpoint.
// Returns kUnboundedFeature when no non-adjacent pair exists.
inline int32_t feature_size(const Shape& s) {
    if (s.size() == 1) return kUnboundedFeature;
    auto loops = detail::boundary_loops(s);
    std::vector<detail::BoundarySegment> segs;
    for (auto& loop : loops) segs.insert(segs.end(), loop.begin(), loop.end());
    int32_t best = kUnboundedFeature;
    for (size_t i = 0; i < segs.size(); ++i)
        for (size_t j = i + 1; j < segs.size(); ++j) {
            if (detail::segments_share_endpoint(segs[i], segs[j])) continue;
            best = std::min(best, detail::segment_chebyshev(segs[i], segs[j]));
        }
    return best;
}

// Footprint of an assembly.
inline Shape shape_of(const Assembly& a) {
    std::vector<Vec2> cells;
    cells.reserve(a.size());
    for (const auto& [p, t] : a.positioned().cells()) cells.push_back(p);
    return Shape(std::move(cells));
}

// Glue labels used on the surface of a decorated input assembly.
struct InputGlueScheme {
    std::string north = "N", east = "E", south = "S", west = "W";
    std::string corner_north = "C1", corner_west = "C2";
    std::string tile_label = "input";
    std::string infinite_prefix = "_inp";
    int min_feature = 9;
    bool force = false;  // bypass the premise checks (negative tests)
};

// Decorate a shape into a valid input assembly: one tile per cell, infinite
// internal bonds, boundary glues named by outward direction, and the
// northernmost-westernmost tile carrying corner glues instead.
// Adds the required glue labels (and fresh infinite labels) to `str`.
inline PositionedAssembly decorate(const Shape& shape, const InputGlueScheme& scheme,
                                   StrengthFunction& str) {
    if (!scheme.force) {
        if (!is_hole_free(shape))
            throw ValidationError("input shape is not hole-free (genus-0 required)");
        int32_t fs = feature_size(shape);
        if (fs != kUnboundedFeature && fs < scheme.min_feature)
            throw ValidationError("input shape feature size " + std::to_string(fs) +
                                  " is below the required minimum " +
                                  std::to_string(scheme.min_feature));
    }
    GlueId gn = str.find(scheme.north) ? *str.find(scheme.north) : str.add(scheme.north, 9);
    GlueId ge = str.find(scheme.east) ? *str.find(scheme.east) : str.add(scheme.east, 9);
    GlueId gs = str.find(scheme.south) ? *str.find(scheme.south) : str.add(scheme.south, 9);
    GlueId gw = str.find(scheme.west) ? *str.find(scheme.west) : str.add(scheme.west, 9);
    GlueId gc1 = str.find(scheme.corner_north) ? *str.find(scheme.corner_north)
                                               : str.add(scheme.corner_north, 2);
    GlueId gc2 = str.find(scheme.corner_west) ? *str.find(scheme.corner_west)
                                              : str.add(scheme.corner_west, 9);
    Vec2 nw = nw_corner(shape);

    PositionedAssembly pa;
    int internal_counter = 0;
    // Unique infinite label per internal bond; allocate for east/north faces.
    for (Vec2 p : shape.cells()) {
        Tile t;
        t.label = scheme.tile_label;
        pa.add(p, t);
    }
    std::vector<PositionedAssembly::Cell> cells(pa.cells());
    auto face_glue = [&](Vec2 p, Dir d) -> GlueId {
        if (p == nw && d == Dir::North) return gc1;
        if (p == nw && d == Dir::West) return gc2;
        switch (d) {
            case Dir::North: return gn;
            case Dir::East: return ge;
            case Dir::South: return gs;
            case Dir::West: return gw;
        }
        return gn;
    };
    for (auto& [p, t] : cells) {
        for (Dir d : {Dir::North, Dir::East}) {
            if (shape.contains(p + dir_offset(d))) continue;
            t.set_face(d, face_glue(p, d));
        }
        for (Dir d : {Dir::South, Dir::West}) {
            if (shape.contains(p + dir_offset(d))) continue;
            t.set_face(d, face_glue(p, d));
        }
    }
    // Internal infinite bonds: one fresh label per adjacent pair.
    auto index_of = [&](Vec2 p) -> int64_t {
        auto it = std::lower_bound(cells.begin(), cells.end(), p,
                                   [](const auto& c, Vec2 q) { return c.first < q; });
        if (it != cells.end() && it->first == p) return it - cells.begin();
        return -1;
    };
    for (size_t i = 0; i < cells.size(); ++i) {
        for (Dir d : {Dir::East, Dir::North}) {
            int64_t j = index_of(cells[i].first + dir_offset(d));
            if (j < 0) continue;
            GlueId g = str.add(scheme.infinite_prefix + std::to_string(internal_counter++), 0,
                               /*infinite=*/true);
            cells[i].second.set_face(d, g);
            cells[static_cast<size_t>(j)].second.set_face(opposite(d), g);
        }
    }
    return PositionedAssembly(std::move(cells));
}

}  // namespace repliham

#endif
