#ifndef REPLIHAM_VERIFY_HPP
#define REPLIHAM_VERIFY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "repliham/engine.hpp"
#include "repliham/shape.hpp"
#include "repliham/tileset.hpp"

namespace repliham {

namespace detail {

// Cells of the bounded complement components (the enclosed cavity).
inline std::vector<Vec2> cavity_cells(const std::vector<Vec2>& footprint) {
    if (footprint.empty()) return {};
    Vec2 lo = footprint.front(), hi = lo;
    for (Vec2 p : footprint) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    int32_t w = hi.x - lo.x + 3, h = hi.y - lo.y + 3;
    std::vector<char> grid(static_cast<size_t>(w) * h, 0);
    auto at = [&](int32_t x, int32_t y) -> char& {
        return grid[static_cast<size_t>(y) * w + x];
    };
    for (Vec2 p : footprint) at(p.x - lo.x + 1, p.y - lo.y + 1) = 1;
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
    std::vector<Vec2> cavity;
    for (int32_t y = 0; y < h; ++y)
        for (int32_t x = 0; x < w; ++x)
            if (at(x, y) == 0) cavity.push_back({x + lo.x - 1, y + lo.y - 1});
    return cavity;
}

inline bool contains_input_tiles(const Assembly& a, const std::string& label = "input") {
    for (const auto& [p, t] : a.positioned().cells())
        if (t.label == label) return true;
    return false;
}

// Does `inner` (canonical cell set) appear inside `outer` at some translation
// aligning their minimum cells within `slack` steps?
inline bool contains_translate(const std::set<std::pair<int, int>>& outer,
                               const std::vector<Vec2>& inner, int slack) {
    if (outer.empty() || inner.empty()) return false;
    int omin_x = outer.begin()->first, omin_y = outer.begin()->second;
    for (auto [x, y] : outer) {
        omin_x = std::min(omin_x, x);
        omin_y = std::min(omin_y, y);
    }
    int imin_x = inner.front().x, imin_y = inner.front().y;
    for (Vec2 p : inner) {
        imin_x = std::min(imin_x, p.x);
        imin_y = std::min(imin_y, p.y);
    }
    for (int dy = -slack; dy <= slack; ++dy)
        for (int dx = -slack; dx <= slack; ++dx) {
            bool all = true;
            for (Vec2 p : inner) {
                if (!outer.count({p.x - imin_x + omin_x + dx, p.y - imin_y + omin_y + dy})) {
                    all = false;
                    break;
                }
            }
            if (all) return true;
        }
    return false;
}

}  // namespace detail

// Structural milestone predicates for the replication pipeline. The probe is
// evaluated once per newly produced species.
class MilestoneProbe {
public:
    MilestoneProbe(Shape input_shape, size_t gap_allowance = 6)
        : shape_(input_shape.canonical()), allowance_(gap_allowance) {}

    std::optional<std::string> operator()(const Assembly& a) const {
        std::vector<Vec2> fp;
        fp.reserve(a.size());
        for (const auto& [p, t] : a.positioned().cells()) fp.push_back(p);
        bool has_input = detail::contains_input_tiles(a);
        auto cavity = detail::cavity_cells(fp);

        if (has_input) {
            // MOLD: the input is fully enclosed by machinery.
            if (a.size() < shape_.size() + 2) return std::nullopt;
            std::set<std::pair<int, int>> cells;
            for (Vec2 p : fp) cells.insert({p.x, p.y});
            for (Vec2 p : cavity) cells.insert({p.x, p.y});
            // enclosed iff every input tile's neighbors are occupied or cavity
            for (const auto& [p, t] : a.positioned().cells()) {
                if (t.label != "input") continue;
                for (Dir d : all_dirs) {
                    Vec2 q = p + dir_offset(d);
                    if (!cells.count({q.x, q.y})) return std::nullopt;
                }
            }
            return std::string("MOLD");
        }

        // No input tiles: FRAME / HOLLOW / COPY candidates.
        std::set<std::pair<int, int>> cells;
        for (Vec2 p : fp) cells.insert({p.x, p.y});

        // COPY: footprint equals the shape exactly.
        if (fp.size() == shape_.size()) {
            std::vector<Vec2> canon(fp);
            Vec2 anchor = *std::min_element(canon.begin(), canon.end());
            for (auto& p : canon) p = p - anchor;
            bool equal = true;
            for (Vec2 p : canon)
                if (!shape_.contains(p)) equal = false;
            if (equal) return std::string("COPY");
        }

        // FRAME: cavity holds the input shape (plus a small machinery gap).
        if (!cavity.empty() && cavity.size() >= shape_.size() &&
            cavity.size() <= shape_.size() + allowance_) {
            std::set<std::pair<int, int>> cav;
            for (Vec2 p : cavity) cav.insert({p.x, p.y});
            if (detail::contains_translate(cav, shape_.cells(), 2))
                return std::string("FRAME");
        }

        // HOLLOW: footprint fits in the shape; filled footprint nearly equals
        // it; strictly smaller than the full copy.
        if (fp.size() >= 8 && fp.size() < shape_.size()) {
            std::vector<Vec2> filled(fp);
            filled.insert(filled.end(), cavity.begin(), cavity.end());
            if (filled.size() + allowance_ >= shape_.size() &&
                filled.size() <= shape_.size()) {
                std::set<std::pair<int, int>> filled_set;
                for (Vec2 p : filled) filled_set.insert({p.x, p.y});
                // every filled cell maps into a translate of the shape
                Vec2 anchor = *std::min_element(filled.begin(), filled.end());
                int misses_best = shape_.size();
                for (int dy = -2; dy <= 2; ++dy)
                    for (int dx = -2; dx <= 2; ++dx) {
                        int inside = 0;
                        bool outside = false;
                        for (Vec2 p : filled) {
                            Vec2 q{p.x - anchor.x + dx, p.y - anchor.y + dy};
                            if (shape_.contains(q))
                                ++inside;
                            else
                                outside = true;
                        }
                        if (!outside)
                            misses_best = std::min(
                                misses_best, static_cast<int>(shape_.size()) - inside);
                    }
                if (misses_best <= static_cast<int>(allowance_))
                    return std::string("HOLLOW");
            }
        }
        return std::nullopt;
    }

private:
    Shape shape_;
    size_t allowance_;
};

// Shape-equality copy detector (excludes anything carrying input tiles).
inline std::function<bool(const Assembly&)> make_copy_probe(const Shape& input_shape) {
    Shape canon = input_shape.canonical();
    return [canon](const Assembly& a) {
        if (a.size() != canon.size()) return false;
        if (detail::contains_input_tiles(a)) return false;
        return shape_of(a).canonical() == canon;
    };
}

struct ClassificationReport {
    uint64_t copies = 0;
    std::map<size_t, uint64_t> garbage_histogram;  // size -> count (non-copies)
    size_t max_producible_size = 0;
    std::vector<std::pair<uint64_t, std::string>> milestones;
    bool sleek_violation = false;
    std::vector<std::string> notes;
};

// Count terminal copies of the input shape in a final state; flag terminal
// non-copies above the gadget-size bound.
inline ClassificationReport classify(Simulator& sim, const SystemState& end_state,
                                     const Shape& input_shape, size_t gadget_bound) {
    ClassificationReport rep;
    auto copy_probe = make_copy_probe(input_shape);
    for (const auto& [s, c] : end_state.counts()) {
        const Assembly& a = sim.species().get(s);
        if (c.is_infinite()) continue;  // the sigma pools
        bool breakable = sim.weak_cut_for(s).has_value();
        bool combinable = false;
        for (const auto& [t, ct] : end_state.counts()) {
            if (!sim.sites_for(std::min(s, t), std::max(s, t)).empty()) {
                combinable = true;
                break;
            }
        }
        if (breakable || combinable) continue;  // not terminal
        if (copy_probe(a)) {
            rep.copies += c.v;
        } else {
            rep.garbage_histogram[a.size()] += c.v;
            if (a.size() > gadget_bound) {
                rep.sleek_violation = true;
                rep.notes.push_back("terminal non-copy of size " +
                                    std::to_string(a.size()));
            }
        }
    }
    return rep;
}

// Milestones recorded in a trace (already structural; see Simulator probes).
inline std::vector<std::pair<uint64_t, std::string>> detect_milestones(
    const Trace& trace, const Shape& input_shape) {
    // Re-derive structurally from the trace's species, independent of what the
    // run recorded.
    MilestoneProbe probe(input_shape);
    std::vector<std::pair<uint64_t, std::string>> out;
    std::set<SpeciesId> seen;
    auto probe_species = [&](SpeciesId s, uint64_t step) {
        if (!seen.insert(s).second) return;
        if (auto tag = probe(trace.species->get(s))) out.emplace_back(step, *tag);
    };
    for (const auto& [s, c] : trace.initial.counts()) probe_species(s, 0);
    for (const auto& te : trace.events) {
        if (te.event.kind == Event::Kind::Combine) {
            probe_species(te.event.result, te.step);
        } else {
            probe_species(te.event.p1, te.step);
            probe_species(te.event.p2, te.step);
        }
    }
    return out;
}

}  // namespace repliham

#endif
