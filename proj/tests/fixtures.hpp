#ifndef REPLIHAM_TESTS_FIXTURES_HPP
#define REPLIHAM_TESTS_FIXTURES_HPP

#include <utility>

#include "repliham/assembly.hpp"
#include "repliham/glue.hpp"
#include "repliham/tile.hpp"

namespace fixtures {

using namespace repliham;

// The temperature-1 model example: a 3-tile hook plus a single tile that
// attach with strength Z + N = 2 - 1 = 1 into an unstable 2x2 square that
// splits into two vertical dominoes along a weight-0 cut.
struct ModelExample {
    StrengthFunction str;
    GlueId X, Y, Z, N;
    Assembly hook;        // tiles at (0,0), (0,1), (1,1)
    Assembly single;      // one tile
    Assembly square;      // the 2x2 combination
    int tau = 1;

    ModelExample() {
        X = str.add("X", 2);
        Y = str.add("Y", 1);
        Z = str.add("Z", 2);
        N = str.add("N", -1);

        Tile sw, nw, ne, se;
        sw.set_face(Dir::North, X);
        sw.set_face(Dir::East, N);
        nw.set_face(Dir::South, X);
        nw.set_face(Dir::East, Y);
        ne.set_face(Dir::West, Y);
        ne.set_face(Dir::South, Z);
        se.set_face(Dir::North, Z);
        se.set_face(Dir::West, N);

        PositionedAssembly hook_pa;
        hook_pa.add({0, 0}, sw);
        hook_pa.add({0, 1}, nw);
        hook_pa.add({1, 1}, ne);
        hook = Assembly::canonicalize(hook_pa);

        PositionedAssembly single_pa;
        single_pa.add({0, 0}, se);
        single = Assembly::canonicalize(single_pa);

        PositionedAssembly square_pa;
        square_pa.add({0, 0}, sw);
        square_pa.add({0, 1}, nw);
        square_pa.add({1, 1}, ne);
        square_pa.add({1, 0}, se);
        square = Assembly::canonicalize(square_pa);
    }
};

inline Tile tile_with(std::initializer_list<std::pair<Dir, GlueId>> faces) {
    Tile t;
    for (auto [d, g] : faces) t.set_face(d, g);
    return t;
}

}  // namespace fixtures

#endif
