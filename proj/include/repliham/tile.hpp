#ifndef REPLIHAM_TILE_HPP
#define REPLIHAM_TILE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "repliham/geom.hpp"
#include "repliham/glue.hpp"

namespace repliham {

// Unit-square tile: at most one glue per face, optional display label.
struct Tile {
    std::array<GlueId, 4> faces = {kNoGlue, kNoGlue, kNoGlue, kNoGlue};
    std::string label;

    std::optional<GlueId> face(Dir d) const {
        GlueId g = faces[static_cast<uint8_t>(d)];
        if (g == kNoGlue) return std::nullopt;
        return g;
    }
    void set_face(Dir d, GlueId g) { faces[static_cast<uint8_t>(d)] = g; }

    friend bool operator==(const Tile& a, const Tile& b) {
        return a.faces == b.faces && a.label == b.label;
    }
};

}  // namespace repliham

#endif
