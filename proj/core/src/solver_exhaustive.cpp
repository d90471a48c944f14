#include "interplan/feasibility.hpp"
#include "interplan/schedulers.hpp"
#include "interplan/solver.hpp"

#include "solver_detail.hpp"

#include <algorithm>
#include <chrono>

namespace interplan {

namespace detail {

GenomeLayout genome_layout(const ProblemInstance& instance) {
    GenomeLayout layout;
    layout.horizon = instance.horizon();
    for (const auto& type : instance.intervention_types())
        if (!type.central) layout.free_types.push_back(type.index);
    return layout;
}

SchedulePlan central_template(const ProblemInstance& instance) {
    SchedulePlan plan = instance.empty_plan();
    for (const auto& type : instance.intervention_types()) {
        if (!type.central) continue;
        for (int t : expand_central(*type.central, instance.horizon()))
            plan.set_scheduled(type.index, t, true);
    }
    return plan;
}

std::size_t central_row_violations(const ProblemInstance& instance) {
    const SchedulePlan plan = central_template(instance);
    const auto is_central = [&](const PlanViolation& v) {
        const int k = instance.type_index(v.type_id);
        return k != 0 && instance.intervention_type(k).central.has_value();
    };
    std::size_t count = 0;
    for (const auto& v : check_gmin(instance, plan).items)
        if (is_central(v)) ++count;
    for (const auto& v : check_gmax(instance, plan).items)
        if (is_central(v)) ++count;
    return count;
}

std::string render_fraction_tenths(std::int64_t num, std::int64_t den) {
    if (den == 0) return num == 0 ? "0" : "inf";
    const __int128 scaled2 = static_cast<__int128>(num) * 2'000'000 + den;
    auto value = static_cast<std::int64_t>(scaled2 / (static_cast<__int128>(den) * 2));
    std::string whole = std::to_string(value / 1'000'000);
    std::string frac = std::to_string(value % 1'000'000);
    frac.insert(frac.begin(), 6 - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    return frac.empty() ? whole : whole + "." + frac;
}

} // namespace detail

namespace {

// Spacing feasibility of one row held in the low `horizon` bits.
bool row_feasible(std::uint32_t pattern, int horizon, int g_min, int g_max) {
    for (int s = 1; s < g_min; ++s)
        if (pattern & (pattern >> s)) return false;
    if (g_max <= horizon) {
        std::uint32_t covered = pattern;
        for (int s = 1; s < g_max; ++s) covered |= pattern >> s;
        const std::uint32_t demanded = (std::uint32_t{1} << (horizon - g_max + 1)) - 1;
        if ((covered & demanded) != demanded) return false;
    }
    return true;
}

} // namespace

SolverReport solve_exhaustive(const ProblemInstance& instance, std::size_t bit_cap) {
    const auto started = std::chrono::steady_clock::now();

    const detail::GenomeLayout layout = detail::genome_layout(instance);
    const std::size_t bits = layout.bits();
    if (bits > bit_cap)
        throw OracleCapError("instance too large for oracle: " + std::to_string(bits) +
                                 " free bits exceed the cap of " + std::to_string(bit_cap),
                             bits, bit_cap);

    if (const std::size_t central = detail::central_row_violations(instance); central > 0)
        throw NoFeasiblePlanError(
            "no feasible plan exists: the fixed central rows already violate " +
                std::to_string(central) + " spacing window(s)",
            {central});

    const CostEvaluator evaluator(instance);
    const SchedulePlan base = detail::central_template(instance);
    const int horizon = layout.horizon;
    const int free_count = static_cast<int>(layout.free_types.size());
    const std::uint32_t row_mask = horizon >= 32 ? 0xffffffffu : (std::uint32_t{1} << horizon) - 1;

    // Per-step union of the central rows' impact, fixed across candidates.
    std::vector<CostEvaluator::Mask> central_step(horizon + 1,
                                                  CostEvaluator::Mask(evaluator.mask_words(), 0));
    std::int64_t central_f1 = 0;
    for (const auto& type : instance.intervention_types()) {
        if (!type.central) continue;
        for (int t = 1; t <= horizon; ++t) {
            if (!base.scheduled(type.index, t)) continue;
            central_f1 += evaluator.execution_cost_tenths(type.index);
            const auto& mask = evaluator.impact_mask(type.index);
            for (int w = 0; w < evaluator.mask_words(); ++w) central_step[t][w] |= mask[w];
        }
    }

    std::int64_t best_tenths = 0;
    bool found = false;
    std::vector<std::uint64_t> optima;

    std::vector<std::uint32_t> rows(free_count, 0);
    CostEvaluator::Mask scratch(evaluator.mask_words(), 0);

    const std::uint64_t candidates = std::uint64_t{1} << bits;
    for (std::uint64_t code = 0; code < candidates; ++code) {
        bool feasible = true;
        for (int f = 0; f < free_count; ++f) {
            const auto pattern =
                static_cast<std::uint32_t>(code >> (static_cast<std::size_t>(f) * horizon)) & row_mask;
            rows[f] = pattern;
            const auto& type = instance.intervention_type(layout.free_types[f]);
            if (!row_feasible(pattern, horizon, type.g_min, type.g_max)) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;

        std::int64_t tenths = central_f1;
        for (int f = 0; f < free_count; ++f)
            tenths += evaluator.execution_cost_tenths(layout.free_types[f]) *
                      __builtin_popcount(rows[f]);
        for (int t = 1; t <= horizon; ++t) {
            bool any = false;
            for (int w = 0; w < evaluator.mask_words(); ++w) {
                scratch[w] = central_step[t][w];
                any = any || scratch[w] != 0;
            }
            for (int f = 0; f < free_count; ++f) {
                if (!(rows[f] >> (t - 1) & 1u)) continue;
                any = true;
                const auto& mask = evaluator.impact_mask(layout.free_types[f]);
                for (int w = 0; w < evaluator.mask_words(); ++w) scratch[w] |= mask[w];
            }
            if (any) tenths += evaluator.mask_cost_tenths(scratch);
        }

        if (!found || tenths < best_tenths) {
            found = true;
            best_tenths = tenths;
            optima.assign(1, code);
        } else if (tenths == best_tenths) {
            optima.push_back(code);
        }
    }

    // The individual schedule is always among the candidates once the
    // central rows pass their own windows, so something feasible exists.
    if (!found)
        throw NoFeasiblePlanError("no feasible plan exists within the enumerated space", {});

    const auto materialize = [&](std::uint64_t code) {
        SchedulePlan plan = base;
        for (int f = 0; f < free_count; ++f) {
            const auto pattern =
                static_cast<std::uint32_t>(code >> (static_cast<std::size_t>(f) * horizon)) & row_mask;
            for (int t = 1; t <= horizon; ++t)
                if (pattern >> (t - 1) & 1u) plan.set_scheduled(layout.free_types[f], t, true);
        }
        return plan;
    };

    SolverReport report;
    report.unique_plans.reserve(optima.size());
    for (std::uint64_t code : optima)
        report.unique_plans.emplace_back(materialize(code), Money::from_tenths(best_tenths));
    std::sort(report.unique_plans.begin(), report.unique_plans.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    report.best_plan = report.unique_plans.front().first;
    report.best_cost = evaluator.total_cost(report.best_plan);
    report.spread = dedup_and_spread(report.unique_plans);
    report.reference_notes = instance.reference_notes();
    report.wall_time = std::chrono::steady_clock::now() - started;
    return report;
}

} // namespace interplan
