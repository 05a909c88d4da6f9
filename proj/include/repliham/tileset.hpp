#ifndef REPLIHAM_TILESET_HPP
#define REPLIHAM_TILESET_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "repliham/assembly.hpp"
#include "repliham/cuts.hpp"
#include "repliham/errors.hpp"
#include "repliham/glue.hpp"
#include "repliham/tile.hpp"

namespace repliham {

struct GadgetSpec {
    std::string name;
    int phase = 0;
    std::vector<std::pair<Vec2, std::string>> placements;  // coordinate -> tile name
};

// A parsed tile system description: glue table, named tiles, named gadget
// preassemblies and the working temperature.
class TileSet {
public:
    StrengthFunction glues;
    int tau = 1;
    std::map<std::string, Tile> tiles;
    std::vector<GadgetSpec> gadgets;

    const GadgetSpec* find_gadget(std::string_view name) const {
        for (const auto& g : gadgets)
            if (g.name == name) return &g;
        return nullptr;
    }

    const Tile& tile(const std::string& name) const {
        auto it = tiles.find(name);
        if (it == tiles.end()) throw ConfigError("unknown tile '" + name + "'");
        return it->second;
    }

    PositionedAssembly place_gadget(const GadgetSpec& spec) const {
        std::vector<PositionedAssembly::Cell> cells;
        cells.reserve(spec.placements.size());
        for (const auto& [pos, tname] : spec.placements) cells.emplace_back(pos, tile(tname));
        return PositionedAssembly(std::move(cells));
    }

    Assembly build_gadget(std::string_view name) const {
        const GadgetSpec* spec = find_gadget(name);
        if (!spec) throw ConfigError("unknown gadget '" + std::string(name) + "'");
        return Assembly::canonicalize(place_gadget(*spec));
    }

    size_t max_gadget_size() const {
        size_t m = 1;
        for (const auto& g : gadgets) m = std::max(m, g.placements.size());
        return m;
    }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace detail

// Line-oriented tileset text:
//   tau <int>
//   glue <label> <int|inf>
//   tile <name> n=<label|-> e=<label|-> s=<label|-> w=<label|->
//   gadget <name> phase=<1..5>
//     at <x> <y> <tilename>
// '#' starts a comment.
inline TileSet load_tileset(std::string_view text) {
    TileSet ts;
    bool saw_tau = false;
    GadgetSpec* open_gadget = nullptr;
    int lineno = 0;
    std::string line;
    std::istringstream in{std::string(text)};
    auto fail = [&](const std::string& msg) -> void {
        throw ParseError("tileset line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "tau") {
            if (toks.size() != 2) fail("expected: tau <int>");
            ts.tau = std::stoi(toks[1]);
            if (ts.tau < 1) fail("tau must be a positive integer");
            saw_tau = true;
        } else if (kw == "glue") {
            if (toks.size() != 3) fail("expected: glue <label> <int|inf>");
            if (toks[2] == "inf")
                ts.glues.add(toks[1], 0, /*infinite=*/true);
            else
                ts.glues.add(toks[1], std::stoi(toks[2]));
        } else if (kw == "tile") {
            if (toks.size() != 6) fail("expected: tile <name> n=.. e=.. s=.. w=..");
            if (ts.tiles.count(toks[1])) fail("duplicate tile name '" + toks[1] + "'");
            Tile t;
            t.label = toks[1];
            const Dir dirs[4] = {Dir::North, Dir::East, Dir::South, Dir::West};
            const char* prefix = "nesw";
            for (int i = 0; i < 4; ++i) {
                const std::string& f = toks[2 + i];
                if (f.size() < 3 || f[0] != prefix[i] || f[1] != '=')
                    fail("malformed face '" + f + "'");
                std::string label = f.substr(2);
                if (label == "-") continue;
                auto id = ts.glues.find(label);
                if (!id) fail("tile '" + toks[1] + "' references undeclared glue '" + label + "'");
                t.set_face(dirs[i], *id);
            }
            ts.tiles.emplace(toks[1], std::move(t));
            open_gadget = nullptr;
        } else if (kw == "gadget") {
            if (toks.size() != 3 || toks[2].rfind("phase=", 0) != 0)
                fail("expected: gadget <name> phase=<1..5>");
            if (ts.find_gadget(toks[1])) fail("duplicate gadget name '" + toks[1] + "'");
            GadgetSpec spec;
            spec.name = toks[1];
            spec.phase = std::stoi(toks[2].substr(6));
            if (spec.phase < 1 || spec.phase > 5) fail("gadget phase out of range");
            ts.gadgets.push_back(std::move(spec));
            open_gadget = &ts.gadgets.back();
        } else if (kw == "at") {
            if (!open_gadget) fail("'at' outside of a gadget block");
            if (toks.size() != 4) fail("expected: at <x> <y> <tilename>");
            Vec2 p{std::stoi(toks[1]), std::stoi(toks[2])};
            if (!ts.tiles.count(toks[3]))
                fail("gadget '" + open_gadget->name + "' uses unknown tile '" + toks[3] + "'");
            for (const auto& [q, n] : open_gadget->placements)
                if (q == p) fail("duplicate coordinate in gadget '" + open_gadget->name + "'");
            open_gadget->placements.emplace_back(p, toks[3]);
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    if (!saw_tau) throw ParseError("tileset: missing tau line");
    if (ts.tiles.empty()) throw ParseError("tileset: no tiles declared");

    // Every gadget must assemble into a connected, tau-stable assembly.
    for (const auto& g : ts.gadgets) {
        if (g.placements.empty())
            throw ParseError("gadget '" + g.name + "' has no tiles");
        PositionedAssembly pa = ts.place_gadget(g);
        if (!connected_by_positive_bonds(pa, ts.glues))
            throw ParseError("gadget '" + g.name + "' is not connected by positive bonds");
        if (!is_stable(pa, ts.tau, ts.glues))
            throw ParseError("gadget '" + g.name + "' is not stable at tau=" +
                             std::to_string(ts.tau));
    }
    return ts;
}

inline std::string serialize_tileset(const TileSet& ts) {
    std::ostringstream out;
    out << "tau " << ts.tau << "\n";
    for (GlueId g = 0; g < ts.glues.size(); ++g) {
        out << "glue " << ts.glues.name(g) << " ";
        if (ts.glues.is_infinite(g))
            out << "inf";
        else
            out << ts.glues.strength(g);
        out << "\n";
    }
    for (const auto& [name, t] : ts.tiles) {
        out << "tile " << name;
        const Dir dirs[4] = {Dir::North, Dir::East, Dir::South, Dir::West};
        const char* prefix = "nesw";
        for (int i = 0; i < 4; ++i) {
            out << " " << prefix[i] << "=";
            auto g = t.face(dirs[i]);
            out << (g ? ts.glues.name(*g) : "-");
        }
        out << "\n";
    }
    for (const auto& g : ts.gadgets) {
        out << "gadget " << g.name << " phase=" << g.phase << "\n";
        for (const auto& [p, tname] : g.placements)
            out << "  at " << p.x << " " << p.y << " " << tname << "\n";
    }
    return out.str();
}

}  // namespace repliham

#endif
