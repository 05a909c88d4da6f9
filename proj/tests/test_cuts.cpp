#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "repliham/cuts.hpp"

using namespace repliham;

TEST_CASE("exhaustive weak-cut search agrees with the brute-force oracle") {
    oracle::RandomAssemblyGen gen(1234567);
    int breakable_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        auto [pa, str] = gen.next(9);
        for (int tau : {1, 10}) {
            auto expected = oracle::brute_force_weak_cut(pa, tau, str);
            auto got = find_weak_cut(pa, tau, str);
            REQUIRE(expected.has_value() == got.has_value());
            if (expected) {
                ++breakable_seen;
                CHECK(got->weight == expected->weight);
                CHECK(got->weight < tau);
                CHECK(got->side_a.size() + got->side_b.size() == pa.size());
            }
        }
    }
    CHECK(breakable_seen > 50);
}

TEST_CASE("bounded search still finds gadget-scale cuts on larger assemblies") {
    // A 5x4 block of strength-10 bonds with one appendage held at strength 9:
    // 21 tiles > exhaustive_limit, so the bounded path must find the cut.
    StrengthFunction str;
    GlueId s = str.add("strong", 10);
    GlueId w = str.add("weak", 9);
    std::vector<PositionedAssembly::Cell> cells;
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 4; ++y) {
            Tile t;
            if (x + 1 < 5) t.set_face(Dir::East, s);
            if (x > 0) t.set_face(Dir::West, s);
            if (y + 1 < 4) t.set_face(Dir::North, s);
            if (y > 0) t.set_face(Dir::South, s);
            cells.emplace_back(Vec2{x, y}, t);
        }
    Tile hang;
    hang.set_face(Dir::West, w);
    Tile anchor = cells[0].second;  // (0,0)... adjust the east-edge tile
    // attach the appendage east of (4,0): that tile's east face gets `w`
    for (auto& [p, t] : cells)
        if (p == Vec2{4, 0}) t.set_face(Dir::East, w);
    cells.emplace_back(Vec2{5, 0}, hang);
    PositionedAssembly pa(std::move(cells));

    CutSearchConfig cfg;
    cfg.exhaustive_limit = 12;  // force the bounded path (21 fused vertices)
    auto cut = find_weak_cut(pa, 10, str, cfg);
    REQUIRE(cut.has_value());
    CHECK(cut->weight == 9);
    CHECK(std::min(cut->side_a.size(), cut->side_b.size()) == 1);
    CHECK(is_stable(pa, 9, str, cfg));
}

TEST_CASE("bounded search finds big-big splits across negative bonds") {
    // Two 3x3 blocks of strength-10 internal bonds, joined by bonds
    // 9 (positive) and -2 (negative): crossing weight 7 < tau = 10.
    StrengthFunction str;
    GlueId s = str.add("strong", 10);
    GlueId j = str.add("join", 9);
    GlueId q = str.add("Q", -2);
    auto block = [&](int x0) {
        std::vector<PositionedAssembly::Cell> cells;
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) {
                Tile t;
                if (x + 1 < 3) t.set_face(Dir::East, s);
                if (x > 0) t.set_face(Dir::West, s);
                if (y + 1 < 3) t.set_face(Dir::North, s);
                if (y > 0) t.set_face(Dir::South, s);
                cells.emplace_back(Vec2{x0 + x, y}, t);
            }
        return cells;
    };
    auto left = block(0);
    auto right = block(3);
    for (auto& [p, t] : left) {
        if (p == Vec2{2, 0}) t.set_face(Dir::East, j);
        if (p == Vec2{2, 2}) t.set_face(Dir::East, q);
    }
    for (auto& [p, t] : right) {
        if (p == Vec2{3, 0}) t.set_face(Dir::West, j);
        if (p == Vec2{3, 2}) t.set_face(Dir::West, q);
    }
    left.insert(left.end(), right.begin(), right.end());
    PositionedAssembly pa(std::move(left));

    CutSearchConfig cfg;
    cfg.exhaustive_limit = 4;   // force bounded mode
    cfg.small_side_limit = 2;   // both sides are 9 tiles: force the flow path
    auto cut = find_weak_cut(pa, 10, str, cfg);
    REQUIRE(cut.has_value());
    CHECK(cut->weight == 7);
    CHECK(cut->side_a.size() == 9);
    CHECK(cut->side_b.size() == 9);
}

TEST_CASE("nine-tile block with all-infinite internal bonds never breaks") {
    StrengthFunction str;
    std::vector<PositionedAssembly::Cell> cells;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) cells.emplace_back(Vec2{x, y}, Tile{});
    PositionedAssembly pa(std::move(cells));
    std::vector<PositionedAssembly::Cell> mut(pa.cells());
    int counter = 0;
    auto at = [&](Vec2 p) -> Tile* {
        for (auto& [q, t] : mut)
            if (q == p) return &t;
        return nullptr;
    };
    for (auto& [p, t] : mut)
        for (Dir d : {Dir::East, Dir::North}) {
            Tile* o = at(p + dir_offset(d));
            if (!o) continue;
            GlueId g = str.add("inf" + std::to_string(counter++), 0, true);
            t.set_face(d, g);
            o->set_face(opposite(d), g);
        }
    PositionedAssembly fused(std::move(mut));
    CHECK(!find_weak_cut(fused, 10, str));
    CHECK(is_stable(fused, 1000000, str));
}

TEST_CASE("oracle equivalence holds when infinite bonds are present") {
    // mix finite and infinite bonds; the oracle treats infinite as uncuttable
    StrengthFunction str;
    GlueId g9 = str.add("g9", 9);
    GlueId inf = str.add("i0", 0, true);
    PositionedAssembly pa;
    pa.add({0, 0}, fixtures::tile_with({{Dir::East, inf}}));
    pa.add({1, 0}, fixtures::tile_with({{Dir::West, inf}, {Dir::East, g9}}));
    pa.add({2, 0}, fixtures::tile_with({{Dir::West, g9}}));
    auto expected = oracle::brute_force_weak_cut(pa, 10, str);
    auto got = find_weak_cut(pa, 10, str);
    REQUIRE(expected.has_value());
    REQUIRE(got.has_value());
    CHECK(got->weight == expected->weight);
    CHECK(got->weight == 9);
    CHECK(std::min(got->side_a.size(), got->side_b.size()) == 1);
}
