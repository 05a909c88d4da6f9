#ifndef REPLIHAM_GEOM_HPP
#define REPLIHAM_GEOM_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>

namespace repliham {

// Grid coordinates: x grows east, y grows north.
struct Vec2 {
    int32_t x = 0;
    int32_t y = 0;

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    friend constexpr bool operator==(Vec2 a, Vec2 b) = default;
    // Row-major order, south rows first: the least element of an assembly is
    // the westmost cell of its southmost row.
    friend constexpr auto operator<=>(Vec2 a, Vec2 b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

enum class Dir : uint8_t { North = 0, East = 1, South = 2, West = 3 };

constexpr std::array<Dir, 4> all_dirs = {Dir::North, Dir::East, Dir::South, Dir::West};

constexpr Vec2 dir_offset(Dir d) {
    switch (d) {
        case Dir::North: return {0, 1};
        case Dir::East: return {1, 0};
        case Dir::South: return {0, -1};
        case Dir::West: return {-1, 0};
    }
    return {0, 0};
}

constexpr Dir opposite(Dir d) {
    return static_cast<Dir>((static_cast<uint8_t>(d) + 2) % 4);
}

// Quarter turn clockwise: N->E->S->W->N.
constexpr Dir rotate_cw(Dir d) {
    return static_cast<Dir>((static_cast<uint8_t>(d) + 1) % 4);
}

constexpr char dir_char(Dir d) {
    switch (d) {
        case Dir::North: return 'n';
        case Dir::East: return 'e';
        case Dir::South: return 's';
        case Dir::West: return 'w';
    }
    return '?';
}

inline int32_t chebyshev(Vec2 a, Vec2 b) {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

struct Vec2Hash {
    size_t operator()(Vec2 v) const {
        uint64_t k = (static_cast<uint64_t>(static_cast<uint32_t>(v.x)) << 32) |
                     static_cast<uint32_t>(v.y);
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdULL;
        k ^= k >> 33;
        return static_cast<size_t>(k);
    }
};

}  // namespace repliham

#endif
