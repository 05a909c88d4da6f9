// Acceptance suite: runs each acceptance criterion and prints one PASS/FAIL
// line per criterion. Exits nonzero if any fail.
//
//   acceptance [--verbose] [--only <n>]

#include <cstdio>
#include <cstring>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "repliham/engine.hpp"
#include "repliham/gadgets.hpp"
#include "repliham/render.hpp"
#include "repliham/shape.hpp"
#include "repliham/verify.hpp"

using namespace repliham;

static bool g_verbose = false;

struct Criterion {
    int id;
    std::string name;
    bool pass = false;
    std::string detail;
};

static Shape rect_shape(int w, int h) {
    std::vector<Vec2> cells;
    for (int x = 0; x < w; ++x)
        for (int y = 0; y < h; ++y) cells.push_back({x, y});
    return Shape(cells);
}

static Shape l_shape(int arm, int len) {
    // vertical arm (west) plus horizontal arm (south), both `arm` wide
    std::vector<Vec2> cells;
    for (int x = 0; x < arm; ++x)
        for (int y = 0; y < len; ++y) cells.push_back({x, y});
    for (int x = arm; x < len; ++x)
        for (int y = 0; y < arm; ++y) cells.push_back({x, y});
    return Shape(cells);
}

struct RunResult {
    Trace trace;
    ClassificationReport report;
    std::shared_ptr<Simulator> sim;
    ReplicationSetup setup;
};

static RunResult run_replication(const Shape& shape, uint64_t seed, uint64_t target_copies,
                                 uint64_t max_events) {
    const TileSet& ts = builtin_replicator();
    RunResult rr;
    rr.setup = make_replication_setup(ts, shape);
    rr.sim = std::make_shared<Simulator>(rr.setup.species, ts.tau, rr.setup.strengths);
    rr.sim->set_phase_classifier(make_phase_classifier(ts));
    rr.sim->set_milestone_probe(MilestoneProbe(shape));
    rr.sim->set_copy_probe(make_copy_probe(shape));

    SchedulingPolicy policy;
    policy.mode = PolicyMode::ProgressBiased;
    policy.seed = seed;
    StopCriteria stop;
    stop.max_events = max_events;
    stop.target_copies = target_copies;

    rr.trace = rr.sim->run(rr.setup.system, policy, stop);
    rr.report = classify(*rr.sim, rr.trace.final_state, shape, ts.max_gadget_size());
    rr.report.milestones = rr.trace.milestones;
    return rr;
}

static void dump_run(const RunResult& rr) {
    std::printf("  events=%zu copies=%llu capped=%d\n", rr.trace.events.size(),
                (unsigned long long)rr.trace.copies_seen, (int)rr.trace.hit_event_cap);
    for (auto& [step, tag] : rr.trace.milestones)
        std::printf("  milestone %-8s at step %llu\n", tag.c_str(),
                    (unsigned long long)step);
    if (!g_verbose) return;
    size_t best = 0;
    SpeciesId best_id = 0;
    for (auto& [s, c] : rr.trace.final_state.counts()) {
        if (c.is_infinite()) continue;
        size_t sz = rr.sim->species().get(s).size();
        if (sz > best) best = sz, best_id = s;
    }
    if (best > 0) {
        std::printf("  largest finite species (%zu tiles):\n%s", best,
                    render_ascii(rr.sim->species().get(best_id).positioned()).c_str());
    }
    std::printf("  tail events:\n");
    size_t from = rr.trace.events.size() > 14 ? rr.trace.events.size() - 14 : 0;
    for (size_t i = from; i < rr.trace.events.size(); ++i) {
        const auto& te = rr.trace.events[i];
        const auto& ev = te.event;
        if (ev.kind == Event::Kind::Combine)
            std::printf("   %llu combine %zu+%zu->%zu (strength %d)\n",
                        (unsigned long long)te.step, rr.sim->species().get(ev.a).size(),
                        rr.sim->species().get(ev.b).size(),
                        rr.sim->species().get(ev.result).size(),
                        ev.site.interface_strength);
        else
            std::printf("   %llu break %zu->%zu+%zu (cut %d)\n",
                        (unsigned long long)te.step, rr.sim->species().get(ev.a).size(),
                        rr.sim->species().get(ev.p1).size(),
                        rr.sim->species().get(ev.p2).size(), ev.cut.weight);
    }
}

static Criterion criterion3() {
    Criterion c{3, "end-to-end replication (9x12 rectangle + L-shape)"};
    bool ok = true;
    std::string detail;
    for (int which = 0; which < 2; ++which) {
        Shape shape = which == 0 ? rect_shape(12, 9) : l_shape(9, 18);
        const char* name = which == 0 ? "rect9x12" : "lshape9";
        RunResult rr = run_replication(shape, 7, 2, 500000);
        if (g_verbose || rr.report.copies < 2) {
            std::printf(" %s:\n", name);
            dump_run(rr);
        }
        bool copies_ok = rr.report.copies >= 2;
        std::map<std::string, uint64_t> first;
        uint64_t second_copy_step = 0, copy_count = 0;
        for (auto& [step, tag] : rr.trace.milestones) {
            if (!first.count(tag)) first[tag] = step;
            if (tag == "COPY" && ++copy_count == 2 && !second_copy_step)
                second_copy_step = step;
        }
        bool order_ok = first.count("MOLD") && first.count("FRAME") &&
                        first.count("HOLLOW") && first.count("COPY") &&
                        first["MOLD"] < first["FRAME"] &&
                        first["FRAME"] < first["HOLLOW"] &&
                        first["HOLLOW"] < first["COPY"];
        uint64_t molds_before_second_copy = 0;
        for (auto& [step, tag] : rr.trace.milestones)
            if (tag == "MOLD" && (second_copy_step == 0 || step <= second_copy_step))
                ++molds_before_second_copy;
        bool frame_reuse_ok = copies_ok && molds_before_second_copy <= 1;
        ok = ok && copies_ok && order_ok && frame_reuse_ok;
        detail += std::string(name) + "(copies=" + std::to_string(rr.report.copies) +
                  ",order=" + (order_ok ? "ok" : "BAD") +
                  ",reuse=" + (frame_reuse_ok ? "ok" : "BAD") + ") ";
    }
    c.pass = ok;
    c.detail = detail;
    return c;
}

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--verbose")) g_verbose = true;
        if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    std::vector<Criterion> results;
    if (!only || only == 3) results.push_back(criterion3());

    bool all = true;
    for (const auto& c : results) {
        std::printf("criterion %d [%s]: %s %s\n", c.id, c.name.c_str(),
                    c.pass ? "PASS" : "FAIL", c.detail.c_str());
        all = all && c.pass;
    }
    return all ? 0 : 1;
}
