#pragma once

#include "interplan/cost.hpp"
#include "interplan/feasibility.hpp"
#include "interplan/instance.hpp"
#include "interplan/instance_io.hpp"
#include "interplan/schedulers.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace testsupport {

// Deterministic draws built on raw engine output only, so expected values
// frozen here never move with the standard library.
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t draw = next();
        while (draw >= limit) draw = next();
        return draw % n;
    }

    int range(int lo, int hi) { // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

private:
    std::mt19937_64 engine_;
};

inline interplan::ProblemInstance load_bundled_instance() {
    auto raw = interplan::load_instance_file(std::string(INTERPLAN_DATA_DIR) + "/paper_t18.json");
    auto result = interplan::validate_instance(raw);
    if (!result.ok()) throw std::runtime_error("bundled instance failed validation");
    return *std::move(result.instance);
}

// f2 recomputed the long way round: the full interaction x relation x plan
// matrix product, an activity indicator per object and step, then the
// object costs. Completely separate from the production bitmask path.
inline interplan::Money matrix_product_f2(const interplan::ProblemInstance& inst,
                                          const interplan::SchedulePlan& plan) {
    const int n = inst.object_count();
    const int k_count = inst.type_count();
    interplan::Money total;
    for (int t = 1; t <= inst.horizon(); ++t) {
        for (int j = 1; j <= n; ++j) {
            long hits = 0;
            for (int i = 1; i <= n; ++i) {
                if (!inst.interaction().at(i, j)) continue;
                for (int k = 1; k <= k_count; ++k)
                    hits += inst.relation().at(i, k) * (plan.scheduled(k, t) ? 1 : 0);
            }
            if (hits > 0) total += inst.object(j).unavailability_cost;
        }
    }
    return total;
}

// Feasibility stated with execution gaps instead of sliding windows:
// consecutive executions at least g_min and at most g_max apart, the first
// no later than g_max, the last within g_max of the horizon, and central
// rows exactly on their imposed schedule.
inline bool gap_formulation_feasible(const interplan::ProblemInstance& inst,
                                     const interplan::SchedulePlan& plan) {
    for (const auto& type : inst.intervention_types()) {
        const std::vector<int> steps = plan.row_steps(type.index);
        if (type.central &&
            steps != interplan::expand_central(*type.central, inst.horizon()))
            return false;
        for (std::size_t i = 1; i < steps.size(); ++i)
            if (steps[i] - steps[i - 1] < type.g_min) return false;
        if (type.g_max <= inst.horizon()) {
            if (steps.empty()) return false;
            if (steps.front() > type.g_max) return false;
            if (steps.back() <= inst.horizon() - type.g_max) return false;
            for (std::size_t i = 1; i < steps.size(); ++i)
                if (steps[i] - steps[i - 1] > type.g_max) return false;
        }
    }
    return true;
}

struct GenOptions {
    int min_objects = 2, max_objects = 5;
    int min_operators = 1, max_operators = 2;
    int min_free_types = 1, max_free_types = 3;
    int min_horizon = 4, max_horizon = 8;
    double central_probability = 0.0;
    bool keep_central_satisfiable = true;
    bool allow_gmax_beyond_horizon = false;
};

inline interplan::ProblemInstance random_instance(TestRng& rng, const GenOptions& opt = {}) {
    interplan::RawInstance raw;
    raw.horizon = rng.range(opt.min_horizon, opt.max_horizon);

    const int operators = rng.range(opt.min_operators, opt.max_operators);
    for (int i = 1; i <= operators; ++i)
        raw.operators.push_back({"OP" + std::to_string(i), "Operator " + std::to_string(i)});

    const int objects = rng.range(opt.min_objects, opt.max_objects);
    for (int i = 1; i <= objects; ++i) {
        interplan::NetworkObject obj;
        obj.id = "N" + std::to_string(i);
        obj.name = "Object " + std::to_string(i);
        obj.unavailability_cost = interplan::Money::from_tenths(rng.range(5, 300));
        obj.owner = raw.operators[rng.below(raw.operators.size())].id;
        raw.objects.push_back(std::move(obj));
    }
    for (int i = 1; i <= objects; ++i)
        for (int j = 1; j <= objects; ++j)
            if (i != j && rng.chance(0.25))
                raw.objects[i - 1].affects.push_back("N" + std::to_string(j));

    const auto add_type = [&](int ordinal, bool central) {
        interplan::InterventionType type;
        type.id = "T" + std::to_string(ordinal);
        type.name = "Intervention " + std::to_string(ordinal);
        for (int i = 1; i <= objects; ++i)
            if (rng.chance(0.4)) type.targets.push_back("N" + std::to_string(i));
        if (type.targets.empty())
            type.targets.push_back("N" + std::to_string(rng.range(1, objects)));
        type.g_min = rng.range(1, std::min(3, raw.horizon));
        const int gmax_cap =
            opt.allow_gmax_beyond_horizon ? type.g_min + 3 : std::min(raw.horizon, type.g_min + 3);
        type.g_max = rng.range(type.g_min, std::max(type.g_min, gmax_cap));
        std::vector<std::string> pool;
        for (const auto& op : raw.operators) pool.push_back(op.id);
        const int responsible = rng.range(1, static_cast<int>(pool.size()));
        for (int i = 0; i < responsible; ++i) {
            const auto pick = rng.below(pool.size());
            type.responsible.push_back(pool[pick]);
            pool.erase(pool.begin() + static_cast<long>(pick));
        }
        type.cost = interplan::Money::from_tenths(rng.range(1, 20) *
                                                  static_cast<int>(type.responsible.size()));
        if (central) {
            interplan::CentralSchedule schedule;
            schedule.interval = rng.range(type.g_min, std::min(type.g_max, raw.horizon));
            schedule.start =
                rng.range(1, opt.keep_central_satisfiable ? std::min(type.g_max, raw.horizon)
                                                          : raw.horizon);
            type.central = schedule;
        }
        raw.intervention_types.push_back(std::move(type));
    };

    const int free_types = rng.range(opt.min_free_types, opt.max_free_types);
    int ordinal = 1;
    for (int k = 0; k < free_types; ++k) add_type(ordinal++, false);
    if (rng.chance(opt.central_probability)) add_type(ordinal++, true);

    auto result = interplan::validate_instance(raw);
    assert(result.ok());
    return *std::move(result.instance);
}

// Arbitrary plan, dense or sparse; central rows conform roughly half the
// time so both verdicts appear.
inline interplan::SchedulePlan random_plan(TestRng& rng, const interplan::ProblemInstance& inst) {
    interplan::SchedulePlan plan = inst.empty_plan();
    const double density = 0.1 + 0.15 * static_cast<double>(rng.below(4));
    for (int k = 1; k <= inst.type_count(); ++k)
        for (int t = 1; t <= inst.horizon(); ++t)
            if (rng.chance(density)) plan.set_scheduled(k, t, true);
    for (const auto& type : inst.intervention_types()) {
        if (!type.central || !rng.chance(0.5)) continue;
        for (int t = 1; t <= inst.horizon(); ++t) plan.set_scheduled(type.index, t, false);
        for (int t : interplan::expand_central(*type.central, inst.horizon()))
            plan.set_scheduled(type.index, t, true);
    }
    return plan;
}

struct ClusterMove {
    interplan::SchedulePlan before;
    interplan::SchedulePlan after;
    int type = 0;
    int from_step = 0;
    int to_step = 0;
};

// A plan plus a move of one solo execution (the only activity at its step)
// onto a step that already hosts someone else's execution.
inline bool find_cluster_move(TestRng& rng, const interplan::ProblemInstance& inst,
                              ClusterMove& out) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        const interplan::SchedulePlan plan = random_plan(rng, inst);
        std::vector<int> active(inst.horizon() + 1, 0);
        for (int t = 1; t <= inst.horizon(); ++t)
            for (int k = 1; k <= inst.type_count(); ++k)
                if (plan.scheduled(k, t)) ++active[t];

        std::vector<std::pair<int, int>> solo; // (type, step) alone at its step
        for (int t = 1; t <= inst.horizon(); ++t) {
            if (active[t] != 1) continue;
            for (int k = 1; k <= inst.type_count(); ++k)
                if (plan.scheduled(k, t)) solo.emplace_back(k, t);
        }
        if (solo.empty()) continue;

        for (int pick = 0; pick < 20 && !solo.empty(); ++pick) {
            const auto chosen = rng.below(solo.size());
            const auto [k, from] = solo[chosen];
            std::vector<int> hosts;
            for (int t = 1; t <= inst.horizon(); ++t)
                if (t != from && active[t] >= 1 && !plan.scheduled(k, t)) hosts.push_back(t);
            if (hosts.empty()) {
                solo.erase(solo.begin() + static_cast<long>(chosen));
                continue;
            }
            const int to = hosts[rng.below(hosts.size())];
            out.before = plan;
            out.after = plan;
            out.after.set_scheduled(k, from, false);
            out.after.set_scheduled(k, to, true);
            out.type = k;
            out.from_step = from;
            out.to_step = to;
            return true;
        }
    }
    return false;
}

} // namespace testsupport
