#ifndef REPLIHAM_RENDER_HPP
#define REPLIHAM_RENDER_HPP

#include <sstream>
#include <string>

#include "repliham/assembly.hpp"
#include "repliham/glue.hpp"

namespace repliham {

// Occupancy sketch; tiles are shown by the first letter of their label
// ('#' when unlabeled).
inline std::string render_ascii(const PositionedAssembly& pa) {
    if (pa.empty()) return "";
    Vec2 lo = pa.cells().front().first, hi = lo;
    for (const auto& [p, t] : pa.cells()) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    std::string out;
    for (int32_t y = hi.y; y >= lo.y; --y) {
        for (int32_t x = lo.x; x <= hi.x; ++x) {
            const Tile* t = pa.at({x, y});
            out.push_back(!t ? '.' : (t->label.empty() ? '#' : t->label[0]));
        }
        out.push_back('\n');
    }
    return out;
}

// Deterministic SVG: unit squares, tick marks for positive glues, slanted
// marks for negative ones.
inline std::string render_svg(const PositionedAssembly& pa, const StrengthFunction& str,
                              int cell = 24) {
    std::ostringstream svg;
    if (pa.empty()) return "<svg xmlns='http://www.w3.org/2000/svg'/>";
    Vec2 lo = pa.cells().front().first, hi = lo;
    for (const auto& [p, t] : pa.cells()) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    int w = (hi.x - lo.x + 1) * cell + 2, h = (hi.y - lo.y + 1) * cell + 2;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h
        << "' viewBox='0 0 " << w << " " << h << "'>\n";
    auto px = [&](Vec2 p) {
        return std::pair<int, int>{(p.x - lo.x) * cell + 1, (hi.y - p.y) * cell + 1};
    };
    for (const auto& [p, t] : pa.cells()) {
        auto [x, y] = px(p);
        svg << "<rect x='" << x << "' y='" << y << "' width='" << cell << "' height='"
            << cell << "' fill='#f2ead8' stroke='#444' stroke-width='1'/>\n";
        if (!t.label.empty() && cell >= 16) {
            svg << "<text x='" << x + cell / 2 << "' y='" << y + cell / 2 + 3
                << "' font-size='" << cell / 4
                << "' text-anchor='middle' fill='#333'>" << t.label.substr(0, 6)
                << "</text>\n";
        }
        for (Dir d : all_dirs) {
            auto g = t.face(d);
            if (!g) continue;
            bool negative = !str.is_infinite(*g) && str.strength(*g) < 0;
            int cx = x + cell / 2, cy = y + cell / 2;
            int ex = cx, ey = cy;
            switch (d) {
                case Dir::North: ey = y; break;
                case Dir::South: ey = y + cell; break;
                case Dir::East: ex = x + cell; break;
                case Dir::West: ex = x; break;
            }
            int mx = (cx + ex) / 2, my = (cy + ey) / 2;
            if (negative) {
                svg << "<line x1='" << mx - 3 << "' y1='" << my + 3 << "' x2='" << mx + 3
                    << "' y2='" << my - 3 << "' stroke='#c0392b' stroke-width='2'/>\n";
            } else {
                svg << "<line x1='" << mx << "' y1='" << my << "' x2='" << ex << "' y2='"
                    << ey << "' stroke='#2c3e50' stroke-width='2'/>\n";
            }
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace repliham

#endif
