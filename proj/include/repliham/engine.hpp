#ifndef REPLIHAM_ENGINE_HPP
#define REPLIHAM_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "repliham/attach.hpp"
#include "repliham/cuts.hpp"
#include "repliham/state.hpp"

namespace repliham {

struct Event {
    enum class Kind : uint8_t { Combine, Break };
    Kind kind = Kind::Combine;
    // Combine: a + b -> result via site. Break: a -> p1 + p2 along cut.
    SpeciesId a = 0, b = 0, result = 0, p1 = 0, p2 = 0;
    AttachmentSite site;
    Cut cut;
};

struct EnumBudget {
    size_t max_sites_per_pair = 4096;
};

enum class PolicyMode { ProgressBiased, UniformRandom, Scripted };

struct SchedulingPolicy {
    PolicyMode mode = PolicyMode::ProgressBiased;
    uint64_t seed = 0;
    // Progress-biased class weights; higher fires first. Breaks outrank
    // combines, later pipeline phases outrank earlier ones.
    double break_weight = 1000.0;
    std::map<int, double> phase_weights = {{0, 1.0}, {1, 2.0}, {2, 3.0},
                                           {3, 4.0}, {4, 5.0}, {5, 6.0}};
    // Combines where neither side belongs to a main line of work (carries
    // input tiles or exceeds this size) idle at a floor weight; gadget-pool
    // side reactions never outrank pipeline progress.
    size_t lineage_size_threshold = 24;
    double background_weight = 0.2;
    // Scripted mode: ordered keys matched against enabled events.
    std::vector<std::string> script;
};

struct StopCriteria {
    uint64_t max_events = 500000;
    uint64_t target_copies = 0;  // 0 = no copy target
    bool stop_on_quiescence = true;
};

struct TraceEvent {
    uint64_t step = 0;
    Event event;
    std::optional<std::string> milestone;
};

struct Trace {
    uint64_t seed = 0;
    std::shared_ptr<SpeciesTable> species;
    SystemState initial;
    std::vector<TraceEvent> events;
    std::vector<std::pair<uint64_t, std::string>> milestones;
    SystemState final_state;
    uint64_t copies_seen = 0;
    bool hit_event_cap = false;
    // Tile-mass bookkeeping across the run (criterion: conservation).
    uint64_t drawn_mass = 0;     // tiles pulled out of infinite-count species
    uint64_t absorbed_mass = 0;  // tiles folded into infinite-count species
};

// A tile system: initial state plus temperature.
struct TileSystem {
    SystemState initial;
    int tau = 1;
};

struct ExploreBounds {
    size_t max_assembly_size = 64;
    size_t max_species = 4096;
    bool allow_self_pairing = true;
};

// Discrete-event simulator over a shared species table. Attachment sites are
// cached per unordered species pair and weak cuts per species, so repeated
// states cost nothing; all caches key on canonical assemblies.
class Simulator {
public:
    Simulator(std::shared_ptr<SpeciesTable> species, int tau, StrengthFunction strengths,
              CutSearchConfig cut_cfg = {}, EnumBudget budget = {})
        : species_(std::move(species)),
          tau_(tau),
          strengths_(std::move(strengths)),
          cut_cfg_(cut_cfg),
          budget_(budget) {}

    const StrengthFunction& strengths() const { return strengths_; }
    SpeciesTable& species() { return *species_; }
    const SpeciesTable& species() const { return *species_; }
    int tau() const { return tau_; }

    // Species phase classifier for progress bias: 1..5 pipeline phase, 0
    // unknown. Installed by the caller that knows the gadget catalog.
    void set_phase_classifier(std::function<int(const Assembly&)> fn) {
        phase_of_ = std::move(fn);
        phase_cache_.clear();
    }

    // Structural milestone probe, evaluated once per newly seen species.
    void set_milestone_probe(std::function<std::optional<std::string>(const Assembly&)> fn) {
        milestone_probe_ = std::move(fn);
    }

    // Copy detector (shape equality with the input), evaluated per species.
    void set_copy_probe(std::function<bool(const Assembly&)> fn) { copy_probe_ = std::move(fn); }

    const std::vector<AttachmentSite>& sites_for(SpeciesId x, SpeciesId y) {
        auto key = x <= y ? std::make_pair(x, y) : std::make_pair(y, x);
        auto it = site_cache_.find(key);
        if (it != site_cache_.end()) return it->second;
        auto sites = enumerate_attachments(species_->get(key.first), species_->get(key.second),
                                           tau_, strengths_);
        if (sites.size() > budget_.max_sites_per_pair) sites.resize(budget_.max_sites_per_pair);
        return site_cache_.emplace(key, std::move(sites)).first->second;
    }

    const std::optional<Cut>& weak_cut_for(SpeciesId s) {
        auto it = cut_cache_.find(s);
        if (it != cut_cache_.end()) return it->second;
        auto cut = find_weak_cut(species_->get(s), tau_, strengths_, cut_cfg_);
        return cut_cache_.emplace(s, std::move(cut)).first->second;
    }

    int phase_of(SpeciesId s) {
        auto it = phase_cache_.find(s);
        if (it != phase_cache_.end()) return it->second;
        int p = phase_of_ ? phase_of_(species_->get(s)) : 0;
        phase_cache_.emplace(s, p);
        return p;
    }

    // All transitions enabled in `state`: every attachment site between
    // species with sufficient multiplicity (self-pairing needs count >= 2)
    // and every weak cut of a present species. Deterministically ordered.
    std::vector<Event> enabled_events(const SystemState& state) {
        if (state.empty()) throw ValidationError("enabled_events on empty state");
        std::vector<Event> out;
        std::vector<SpeciesId> present;
        present.reserve(state.counts().size());
        for (const auto& [s, c] : state.counts()) present.push_back(s);
        for (size_t i = 0; i < present.size(); ++i) {
            SpeciesId s = present[i];
            if (auto& cut = weak_cut_for(s)) {
                Event ev;
                ev.kind = Event::Kind::Break;
                ev.a = s;
                ev.cut = *cut;
                auto pieces = split(species_->get(s), *cut);
                ev.p1 = species_->intern(pieces.first);
                ev.p2 = species_->intern(pieces.second);
                out.push_back(std::move(ev));
            }
            for (size_t j = i; j < present.size(); ++j) {
                SpeciesId t = present[j];
                if (s == t) {
                    Count c = state.count(s);
                    if (!c.is_infinite() && c.v < 2) continue;
                }
                for (const auto& site : sites_for(s, t)) {
                    Event ev;
                    ev.kind = Event::Kind::Combine;
                    ev.a = std::min(s, t);
                    ev.b = std::max(s, t);
                    ev.site = site;
                    ev.result =
                        species_->intern(combine(species_->get(ev.a), species_->get(ev.b), site));
                    out.push_back(std::move(ev));
                }
            }
        }
        return out;
    }

    SystemState apply_event(const SystemState& state, const Event& ev) const {
        SystemState next = state;
        if (ev.kind == Event::Kind::Combine) {
            if (state.count(ev.a).v == 0 || state.count(ev.b).v == 0 ||
                (ev.a == ev.b && !state.count(ev.a).is_infinite() && state.count(ev.a).v < 2))
                throw InternalError("stale event: combine inputs not available");
            next.remove_one(ev.a);
            next.remove_one(ev.b);
            next.add(ev.result, Count::of(1));
        } else {
            if (state.count(ev.a).v == 0)
                throw InternalError("stale event: breaking species not present");
            next.remove_one(ev.a);
            next.add(ev.p1, Count::of(1));
            next.add(ev.p2, Count::of(1));
        }
        return next;
    }

    Trace run(const TileSystem& system, const SchedulingPolicy& policy, const StopCriteria& stop);

    // Bounded breadth-first closure of producible assemblies.
    std::set<SpeciesId> producibles(const SystemState& initial, const ExploreBounds& bounds,
                                    bool* complete_out = nullptr);

    std::set<SpeciesId> terminals(const std::set<SpeciesId>& prod);

private:
    struct EventKey {
        double priority;
        uint64_t order;  // stable tiebreak
        bool operator<(const EventKey& o) const {
            if (priority != o.priority) return priority > o.priority;
            return order < o.order;
        }
    };

    bool has_input_tiles(SpeciesId s) {
        auto it = input_cache_.find(s);
        if (it != input_cache_.end()) return it->second;
        bool found = false;
        for (const auto& [p, t] : species_->get(s).positioned().cells())
            if (t.label == "input") {
                found = true;
                break;
            }
        input_cache_.emplace(s, found);
        return found;
    }

    double priority_of(const Event& ev, const SchedulingPolicy& policy) {
        if (ev.kind == Event::Kind::Break) return policy.break_weight;
        size_t sa = species_->get(ev.a).size(), sb = species_->get(ev.b).size();
        bool mainline = std::max(sa, sb) > policy.lineage_size_threshold ||
                        has_input_tiles(ev.a) || has_input_tiles(ev.b);
        if (!mainline) return policy.background_weight;
        SpeciesId small = sa <= sb ? ev.a : ev.b;
        int phase = phase_of(small);
        double w = 1.0;
        if (auto it = policy.phase_weights.find(phase); it != policy.phase_weights.end())
            w = it->second;
        // Prefer events extending the largest assembly; among those, place
        // small pieces before large caps so walks finish before corner
        // machinery can race them. Both biases stay below the phase gaps.
        double participant = std::min<double>(static_cast<double>(std::max(sa, sb)), 99999.0);
        double result_penalty =
            std::min<double>(static_cast<double>(species_->get(ev.result).size()), 9999.0);
        return w + participant * 1e-6 - result_penalty * 1e-11;
    }

    std::shared_ptr<SpeciesTable> species_;
    int tau_;
    StrengthFunction strengths_;
    CutSearchConfig cut_cfg_;
    EnumBudget budget_;
    std::function<int(const Assembly&)> phase_of_;
    std::function<std::optional<std::string>(const Assembly&)> milestone_probe_;
    std::function<bool(const Assembly&)> copy_probe_;

    std::map<std::pair<SpeciesId, SpeciesId>, std::vector<AttachmentSite>> site_cache_;
    std::map<SpeciesId, std::optional<Cut>> cut_cache_;
    std::map<SpeciesId, int> phase_cache_;
    std::map<SpeciesId, bool> input_cache_;
};

// Stable textual key; used for deterministic ordering and scripted replay.
inline std::string event_key(const Event& ev) {
    if (ev.kind == Event::Kind::Break)
        return "break a=" + std::to_string(ev.a) + " w=" + std::to_string(ev.cut.weight);
    return "combine a=" + std::to_string(ev.a) + " b=" + std::to_string(ev.b) +
           " dx=" + std::to_string(ev.site.translation.x) +
           " dy=" + std::to_string(ev.site.translation.y);
}

inline bool event_order_less(const Event& x, const Event& y) {
    auto rank = [](const Event& e) { return e.kind == Event::Kind::Break ? 0 : 1; };
    if (rank(x) != rank(y)) return rank(x) < rank(y);
    if (x.a != y.a) return x.a < y.a;
    if (x.kind == Event::Kind::Break) return x.cut.weight < y.cut.weight;
    if (x.b != y.b) return x.b < y.b;
    return x.site.translation < y.site.translation;
}

// Total tile mass held in finite-count species.
inline uint64_t finite_mass(const SystemState& state, const SpeciesTable& species) {
    uint64_t m = 0;
    for (const auto& [s, c] : state.counts())
        if (!c.is_infinite()) m += species.get(s).size() * c.v;
    return m;
}

inline Trace Simulator::run(const TileSystem& system, const SchedulingPolicy& policy,
                            const StopCriteria& stop) {
    Trace trace;
    trace.seed = policy.seed;
    trace.species = species_;
    trace.initial = system.initial;
    std::mt19937_64 rng(policy.seed);
    const char* dbg_env = std::getenv("REPLIHAM_TRACE");
    const bool dbg = dbg_env && *dbg_env;

    SystemState state = system.initial;
    std::set<SpeciesId> probed;
    std::set<SpeciesId> copy_species;
    auto probe_species = [&](SpeciesId s, uint64_t step) {
        if (!probed.insert(s).second) return;
        if (milestone_probe_) {
            if (auto tag = milestone_probe_(species_->get(s))) {
                trace.milestones.emplace_back(step, *tag);
                if (!trace.events.empty() && trace.events.back().step == step)
                    trace.events.back().milestone = *tag;
            }
        }
        if (copy_probe_ && copy_probe_(species_->get(s))) copy_species.insert(s);
    };
    for (const auto& [s, c] : state.counts()) probe_species(s, 0);

    auto copy_count = [&]() {
        uint64_t n = 0;
        for (SpeciesId s : copy_species) {
            Count c = state.count(s);
            if (c.v == 0) continue;
            if (weak_cut_for(s)) continue;  // breakable, not a finished copy
            n += c.is_infinite() ? stop.target_copies : c.v;
        }
        return n;
    };

    size_t script_pos = 0;
    for (uint64_t step = 1; step <= stop.max_events; ++step) {
        if (stop.target_copies > 0 && (trace.copies_seen = copy_count()) >= stop.target_copies)
            break;
        auto events = enabled_events(state);
        if (events.empty()) break;  // quiescent under the configured search
        std::sort(events.begin(), events.end(), event_order_less);

        size_t pick = 0;
        if (policy.mode == PolicyMode::UniformRandom) {
            pick = std::uniform_int_distribution<size_t>(0, events.size() - 1)(rng);
        } else if (policy.mode == PolicyMode::Scripted) {
            if (script_pos >= policy.script.size()) break;
            bool found = false;
            for (size_t i = 0; i < events.size(); ++i)
                if (event_key(events[i]) == policy.script[script_pos]) {
                    pick = i;
                    found = true;
                    break;
                }
            if (!found)
                throw ValidationError("scripted event not enabled: " + policy.script[script_pos]);
            ++script_pos;
        } else {
            double best = -1.0;
            for (size_t i = 0; i < events.size(); ++i) {
                double p = priority_of(events[i], policy);
                if (p > best) {
                    best = p;
                    pick = i;
                }
            }
        }

        const Event& ev = events[pick];
        if (dbg) {
            if (ev.kind == Event::Kind::Combine)
                std::fprintf(stderr, "[%llu] combine %u(%zu)+%u(%zu)->%u(%zu) s=%d\n",
                             (unsigned long long)step, ev.a, species_->get(ev.a).size(),
                             ev.b, species_->get(ev.b).size(), ev.result,
                             species_->get(ev.result).size(), ev.site.interface_strength);
            else
                std::fprintf(stderr, "[%llu] break %u(%zu)->%u(%zu)+%u(%zu) w=%d\n",
                             (unsigned long long)step, ev.a, species_->get(ev.a).size(),
                             ev.p1, species_->get(ev.p1).size(), ev.p2,
                             species_->get(ev.p2).size(), ev.cut.weight);
        }
        // Mass bookkeeping: tiles leaving infinite pools and entering them.
        auto pool_mass = [&](SpeciesId s) { return species_->get(s).size(); };
        if (ev.kind == Event::Kind::Combine) {
            if (state.count(ev.a).is_infinite()) trace.drawn_mass += pool_mass(ev.a);
            if (state.count(ev.b).is_infinite() && !(ev.a == ev.b))
                trace.drawn_mass += pool_mass(ev.b);
            if (ev.a == ev.b && state.count(ev.a).is_infinite())
                trace.drawn_mass += pool_mass(ev.b);
            if (state.count(ev.result).is_infinite()) trace.absorbed_mass += pool_mass(ev.result);
        } else {
            if (state.count(ev.a).is_infinite()) trace.drawn_mass += pool_mass(ev.a);
            if (state.count(ev.p1).is_infinite()) trace.absorbed_mass += pool_mass(ev.p1);
            if (state.count(ev.p2).is_infinite()) trace.absorbed_mass += pool_mass(ev.p2);
        }

        state = apply_event(state, ev);
        trace.events.push_back({step, ev, std::nullopt});
        if (ev.kind == Event::Kind::Combine) {
            probe_species(ev.result, step);
        } else {
            probe_species(ev.p1, step);
            probe_species(ev.p2, step);
        }
        if (step == stop.max_events) trace.hit_event_cap = true;
    }
    trace.copies_seen = copy_count();
    trace.final_state = state;
    return trace;
}

inline std::set<SpeciesId> Simulator::producibles(const SystemState& initial,
                                                  const ExploreBounds& bounds,
                                                  bool* complete_out) {
    bool complete = true;
    std::set<SpeciesId> prod;
    std::vector<SpeciesId> frontier;
    for (const auto& [s, c] : initial.counts()) {
        prod.insert(s);
        frontier.push_back(s);
    }
    auto admit = [&](SpeciesId s) {
        if (species_->get(s).size() > bounds.max_assembly_size) {
            complete = false;
            return;
        }
        if (prod.count(s)) return;
        if (prod.size() >= bounds.max_species) {
            complete = false;
            return;
        }
        prod.insert(s);
        frontier.push_back(s);
    };
    while (!frontier.empty()) {
        SpeciesId s = frontier.back();
        frontier.pop_back();
        if (auto& cut = weak_cut_for(s)) {
            auto pieces = split(species_->get(s), *cut);
            admit(species_->intern(pieces.first));
            admit(species_->intern(pieces.second));
        }
        // Pair with everything currently known producible (including self).
        std::vector<SpeciesId> known(prod.begin(), prod.end());
        for (SpeciesId t : known) {
            if (s == t && !bounds.allow_self_pairing) continue;
            for (const auto& site : sites_for(std::min(s, t), std::max(s, t))) {
                Assembly c = combine(species_->get(std::min(s, t)), species_->get(std::max(s, t)),
                                     site);
                admit(species_->intern(c));
            }
        }
    }
    if (complete_out) *complete_out = complete;
    return prod;
}

inline std::set<SpeciesId> Simulator::terminals(const std::set<SpeciesId>& prod) {
    std::set<SpeciesId> out;
    for (SpeciesId s : prod) {
        if (weak_cut_for(s)) continue;
        bool combinable = false;
        for (SpeciesId t : prod) {
            if (!sites_for(std::min(s, t), std::max(s, t)).empty()) {
                combinable = true;
                break;
            }
        }
        if (!combinable) out.insert(s);
    }
    return out;
}

}  // namespace repliham

#endif
