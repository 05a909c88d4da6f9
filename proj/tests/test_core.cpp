#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "repliham/attach.hpp"
#include "repliham/bond_graph.hpp"
#include "repliham/cuts.hpp"

using namespace repliham;

TEST_CASE("bond_strength follows the diagonal glue function") {
    StrengthFunction str;
    GlueId n = str.add("N", 9);
    GlueId e = str.add("E", 9);
    GlueId d = str.add("D", -7);
    CHECK(str.bond_strength(n, n) == 9);
    CHECK(str.bond_strength(n, e) == 0);
    CHECK(str.bond_strength(d, d) == -7);
    CHECK(str.bond_strength(std::nullopt, n) == 0);
    CHECK(str.bond_strength(std::nullopt, std::nullopt) == 0);
    CHECK_THROWS_AS(str.require("unknown"), ConfigError);
}

TEST_CASE("bond graph of a single tile has one vertex and no edges") {
    StrengthFunction str;
    PositionedAssembly pa;
    pa.add({5, 7}, Tile{});
    auto g = BondGraph::build(pa, str);
    CHECK(g.vertices.size() == 1);
    CHECK(g.edges.empty());
}

TEST_CASE("bond graph of the model-example square has the caption weights") {
    fixtures::ModelExample m;
    auto g = BondGraph::build(m.square.positioned(), m.str);
    CHECK(g.vertices.size() == 4);
    CHECK(g.edges.size() == 4);
    std::multiset<int> weights;
    for (const auto& e : g.edges) weights.insert(e.weight);
    CHECK(weights == std::multiset<int>{-1, 1, 2, 2});
}

TEST_CASE("infinite bonds are flagged, not weighted") {
    StrengthFunction str;
    GlueId i1 = str.add("i1", 0, true);
    GlueId i2 = str.add("i2", 0, true);
    PositionedAssembly pa;
    pa.add({0, 0}, fixtures::tile_with({{Dir::East, i1}}));
    pa.add({1, 0}, fixtures::tile_with({{Dir::West, i1}, {Dir::East, i2}}));
    pa.add({2, 0}, fixtures::tile_with({{Dir::West, i2}}));
    auto g = BondGraph::build(pa, str);
    CHECK(g.edges.size() == 2);
    for (const auto& e : g.edges) CHECK(e.infinite);
    // never breakable, at any temperature
    CHECK(is_stable(pa, 1000, str));
    CHECK(!find_weak_cut(pa, 1000, str));
}

TEST_CASE("canonicalize translates the least cell to the origin") {
    StrengthFunction str;
    PositionedAssembly pa;
    pa.add({5, 5}, Tile{});
    auto a = Assembly::canonicalize(pa);
    CHECK(a.positioned().cells().front().first == Vec2{0, 0});

    PositionedAssembly pb;
    pb.add({3, 1}, Tile{});
    pb.add({4, 1}, Tile{});
    auto b = Assembly::canonicalize(pb);
    CHECK(b.positioned().occupied({0, 0}));
    CHECK(b.positioned().occupied({1, 0}));

    CHECK_THROWS_AS(Assembly::canonicalize(PositionedAssembly{}), ValidationError);
}

TEST_CASE("canonicalize is idempotent and translation-invariant (property)") {
    oracle::RandomAssemblyGen gen(20260810);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        auto [pa, str] = gen.next(8);
        auto a = Assembly::canonicalize(pa);
        auto again = Assembly::canonicalize(a.positioned());
        CHECK(a == again);
        Vec2 v{std::uniform_int_distribution<int>(-40, 40)(rng),
               std::uniform_int_distribution<int>(-40, 40)(rng)};
        CHECK(Assembly::canonicalize(pa.translated(v)) == a);
    }
}

TEST_CASE("model example: attachment at strength tau, then a weight-0 break") {
    fixtures::ModelExample m;

    auto sites = enumerate_attachments(m.hook, m.single, m.tau, m.str);
    REQUIRE(sites.size() == 1);
    CHECK(sites[0].interface_strength == 1);
    CHECK(sites[0].crossing_bonds.size() == 2);

    Assembly square = combine(m.hook, m.single, sites[0]);
    CHECK(square == m.square);
    CHECK(square.size() == 4);

    CHECK(!is_stable(square, m.tau, m.str));
    auto cut = find_weak_cut(square, m.tau, m.str);
    REQUIRE(cut.has_value());
    CHECK(cut->weight == 0);
    CHECK(cut->side_a.size() == 2);
    CHECK(cut->side_b.size() == 2);

    auto [p1, p2] = split(square, *cut);
    CHECK(p1.size() == 2);
    CHECK(p2.size() == 2);
    // vertical dominoes: each piece spans two rows
    for (const auto& piece : {p1, p2}) {
        auto [lo, hi] = std::pair(piece.positioned().cells().front().first,
                                  piece.positioned().cells().back().first);
        CHECK(hi.y - lo.y == 1);
        CHECK(hi.x - lo.x == 0);
    }
}

TEST_CASE("two tiles sharing no labels produce no sites") {
    StrengthFunction str;
    GlueId a = str.add("a", 9);
    GlueId b = str.add("b", 9);
    PositionedAssembly pa, pb;
    pa.add({0, 0}, fixtures::tile_with({{Dir::East, a}}));
    pb.add({0, 0}, fixtures::tile_with({{Dir::West, b}}));
    CHECK(enumerate_attachments(pa, pb, 1, str).empty());
}

TEST_CASE("negative glues can block an attachment") {
    StrengthFunction str;
    GlueId g = str.add("g", 10);
    GlueId d = str.add("D", -7);
    // Two-cell column exposing g east on one row and D east on the other;
    // partner exposes matching faces: total 10 - 7 < 10.
    PositionedAssembly pa;
    pa.add({0, 0}, fixtures::tile_with({{Dir::East, g}}));
    pa.add({0, 1}, fixtures::tile_with({{Dir::East, d}}));
    pa.add({0, 2}, Tile{});  // keep it a column (no glue needed for the test)
    PositionedAssembly pb;
    pb.add({0, 0}, fixtures::tile_with({{Dir::West, g}}));
    pb.add({0, 1}, fixtures::tile_with({{Dir::West, d}}));
    auto sites = enumerate_attachments(pa, pb, 10, str);
    // aligned placement sums 3; the offset placement matching only g sums 10
    for (const auto& s : sites) CHECK(s.interface_strength >= 10);
    bool found_aligned = false;
    for (const auto& s : sites)
        if (s.translation == Vec2{1, 0}) found_aligned = true;
    CHECK(!found_aligned);
}

TEST_CASE("stability thresholds around a single bond") {
    StrengthFunction str;
    GlueId g = str.add("g", 9);
    PositionedAssembly pa;
    pa.add({0, 0}, fixtures::tile_with({{Dir::East, g}}));
    pa.add({1, 0}, fixtures::tile_with({{Dir::West, g}}));
    CHECK(is_stable(pa, 9, str));
    CHECK(!is_stable(pa, 10, str));
    // single tile is stable at any temperature
    PositionedAssembly single;
    single.add({0, 0}, Tile{});
    CHECK(is_stable(single, 1000000, str));
}

TEST_CASE("monotonicity: stability at tau implies stability below (property)") {
    oracle::RandomAssemblyGen gen(777);
    for (int trial = 0; trial < 120; ++trial) {
        auto [pa, str] = gen.next(7);
        for (int tau : {1, 3, 10}) {
            if (is_stable(pa, tau, str)) {
                for (int lower = 1; lower <= tau; ++lower) CHECK(is_stable(pa, lower, str));
            }
        }
    }
}

TEST_CASE("split then re-combine restores the assembly (property)") {
    oracle::RandomAssemblyGen gen(424242);
    int exercised = 0;
    for (int trial = 0; trial < 300 && exercised < 60; ++trial) {
        auto [pa, str] = gen.next(8);
        int tau = 10;
        auto asm_ = Assembly::canonicalize(pa);
        auto cut = find_weak_cut(asm_, tau, str);
        if (!cut) continue;
        ++exercised;
        auto [p1, p2] = split(asm_, *cut);
        CHECK(p1.size() + p2.size() == asm_.size());
        // The severed interface still matches somewhere: re-attaching at the
        // original relative placement restores the canonical assembly.
        bool restored = false;
        for (const auto& site : enumerate_attachments(p1, p2, cut->weight, str))
            if (combine(p1, p2, site) == asm_) restored = true;
        // the original placement has interface = cut weight, which may be
        // below tau; enumerate at that threshold instead of tau
        if (cut->weight >= 1)
            CHECK(restored);
    }
    CHECK(exercised > 0);
}

TEST_CASE("attachment symmetry: sites of (a,b) and (b,a) agree (property)") {
    oracle::RandomAssemblyGen gen(5150);
    for (int trial = 0; trial < 80; ++trial) {
        auto [pa, stra] = gen.next(5);
        auto [pb, strb] = gen.next(5);
        // shared strength table: rebuild b's tiles under a's table
        // (labels g0..g11 and span exist in both; strengths differ, so use a's)
        auto a = Assembly::canonicalize(pa);
        auto b = Assembly::canonicalize(pb);
        auto ab = enumerate_attachments(a, b, 5, stra);
        auto ba = enumerate_attachments(b, a, 5, stra);
        REQUIRE(ab.size() == ba.size());
        std::set<uint64_t> ra, rb;
        for (const auto& s : ab) ra.insert(combine(a, b, s).hash());
        for (const auto& s : ba) rb.insert(combine(b, a, s).hash());
        CHECK(ra == rb);
    }
}

TEST_CASE("combine conserves tiles and rejects stale sites") {
    fixtures::ModelExample m;
    auto sites = enumerate_attachments(m.hook, m.single, m.tau, m.str);
    REQUIRE(!sites.empty());
    CHECK(combine(m.hook, m.single, sites[0]).size() == m.hook.size() + m.single.size());
    AttachmentSite bogus = sites[0];
    bogus.translation = Vec2{0, 0};  // overlaps the hook
    CHECK_THROWS_AS(combine(m.hook, m.single, bogus), InternalError);
}
