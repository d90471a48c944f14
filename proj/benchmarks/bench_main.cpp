#include "interplan/cost.hpp"
#include "interplan/feasibility.hpp"
#include "interplan/instance_io.hpp"
#include "interplan/schedulers.hpp"
#include "interplan/solver.hpp"

#include <benchmark/benchmark.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace {

const interplan::ProblemInstance& bundled() {
    static const interplan::ProblemInstance instance = [] {
        auto raw = interplan::load_instance_file(std::string(INTERPLAN_DATA_DIR) +
                                                 "/paper_t18.json");
        auto result = interplan::validate_instance(raw);
        if (!result.ok()) throw std::runtime_error("bundled instance failed validation");
        return *std::move(result.instance);
    }();
    return instance;
}

void BM_total_cost(benchmark::State& state) {
    const auto& inst = bundled();
    const interplan::CostEvaluator evaluator(inst);
    const auto plan = interplan::individual_program(inst);
    for (auto _ : state) benchmark::DoNotOptimize(evaluator.total_tenths(plan));
}
BENCHMARK(BM_total_cost);

void BM_count_violations(benchmark::State& state) {
    const auto& inst = bundled();
    const auto plan = interplan::individual_program(inst);
    for (auto _ : state) benchmark::DoNotOptimize(interplan::count_violations(inst, plan));
}
BENCHMARK(BM_count_violations);

void BM_affected_objects(benchmark::State& state) {
    const auto& inst = bundled();
    const interplan::CostEvaluator evaluator(inst);
    const auto plan = interplan::individual_program(inst);
    for (auto _ : state)
        for (int t = 1; t <= inst.horizon(); ++t)
            benchmark::DoNotOptimize(evaluator.affected_objects(plan, t));
}
BENCHMARK(BM_affected_objects);

void BM_ga_restart(benchmark::State& state) {
    const auto& inst = bundled();
    interplan::GaParams params;
    params.population_size = 60;
    params.max_generations = 30;
    params.stall_generations = 30;
    params.restarts = 1;
    params.base_seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(interplan::solve_ga(inst, params, 1));
}
BENCHMARK(BM_ga_restart)->Unit(benchmark::kMillisecond);

void BM_exhaustive_tiny(benchmark::State& state) {
    interplan::RawInstance raw;
    raw.horizon = 8;
    raw.operators.push_back({"OP1", "Operator"});
    interplan::NetworkObject obj;
    obj.id = "N1";
    obj.name = "Object";
    obj.unavailability_cost = interplan::Money::parse("10");
    obj.owner = "OP1";
    raw.objects.push_back(obj);
    interplan::InterventionType type;
    type.id = "T1";
    type.name = "Type";
    type.targets = {"N1"};
    type.cost = interplan::Money::parse("1");
    type.g_min = 2;
    type.g_max = 4;
    type.responsible = {"OP1"};
    raw.intervention_types.push_back(type);
    raw.intervention_types.push_back(type);
    raw.intervention_types[1].id = "T2";
    auto result = interplan::validate_instance(raw);
    const auto inst = *std::move(result.instance);

    for (auto _ : state) benchmark::DoNotOptimize(interplan::solve_exhaustive(inst));
}
BENCHMARK(BM_exhaustive_tiny)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
