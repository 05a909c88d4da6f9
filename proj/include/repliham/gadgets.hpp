#ifndef REPLIHAM_GADGETS_HPP
#define REPLIHAM_GADGETS_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "repliham/embedded_replicator_tiles.hpp"
#include "repliham/engine.hpp"
#include "repliham/shape.hpp"
#include "repliham/state.hpp"
#include "repliham/tileset.hpp"

namespace repliham {

// The built-in shape replicator (tau = 10).
inline const TileSet& builtin_replicator() {
    static const TileSet ts = load_tileset(embedded::replicator_tiles);
    return ts;
}

// Initial system state: all singleton tiles at infinite count and, when
// preassembled, every catalog gadget too.
inline SystemState initial_state(const TileSet& ts, bool preassembled,
                                 SpeciesTable& species) {
    SystemState st;
    for (const auto& [name, tile] : ts.tiles) {
        PositionedAssembly pa;
        pa.add({0, 0}, tile);
        st.add(species.intern(Assembly::canonicalize(pa)), Count::infinite());
    }
    if (preassembled) {
        for (const auto& g : ts.gadgets)
            st.add(species.intern(ts.build_gadget(g.name)), Count::infinite());
    }
    return st;
}

// Progress classifier: catalog gadgets and their tiles map to their phase;
// larger assemblies map to the max phase of any catalog piece they contain
// cannot be known cheaply, so they report 0 (the scheduler treats unknown
// species as background).
inline std::function<int(const Assembly&)> make_phase_classifier(const TileSet& ts) {
    auto table = std::make_shared<std::map<Assembly, int, std::less<>>>();
    auto cmp_table = std::make_shared<std::map<uint64_t, int>>();
    for (const auto& g : ts.gadgets) {
        Assembly a = ts.build_gadget(g.name);
        (*cmp_table)[a.hash()] = g.phase;
        for (const auto& [pos, tname] : g.placements) {
            PositionedAssembly pa;
            pa.add({0, 0}, ts.tile(tname));
            Assembly t = Assembly::canonicalize(pa);
            auto it = cmp_table->find(t.hash());
            if (it == cmp_table->end() || it->second < g.phase)
                (*cmp_table)[t.hash()] = g.phase;
        }
    }
    return [cmp_table](const Assembly& a) {
        auto it = cmp_table->find(a.hash());
        return it == cmp_table->end() ? 0 : it->second;
    };
}

// Decorated input assembly plus the working strength function for a run.
struct ReplicationSetup {
    StrengthFunction strengths;  // tileset glues + the input's infinite bonds
    Assembly input;              // the decorated shape
    SpeciesId input_species = 0;
    TileSystem system;
    std::shared_ptr<SpeciesTable> species;
};

inline ReplicationSetup make_replication_setup(const TileSet& ts, const Shape& shape,
                                               bool preassembled = true,
                                               bool force = false) {
    ReplicationSetup setup;
    setup.strengths = ts.glues;
    InputGlueScheme scheme;
    scheme.force = force;
    PositionedAssembly decorated = decorate(shape, scheme, setup.strengths);
    setup.input = Assembly::canonicalize(decorated);
    setup.species = std::make_shared<SpeciesTable>();
    setup.system.tau = ts.tau;
    setup.system.initial = initial_state(ts, preassembled, *setup.species);
    setup.input_species = setup.species->intern(setup.input);
    setup.system.initial.add(setup.input_species, Count::of(1));
    return setup;
}

}  // namespace repliham

#endif
