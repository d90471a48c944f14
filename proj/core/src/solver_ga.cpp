#include "interplan/feasibility.hpp"
#include "interplan/schedulers.hpp"
#include "interplan/solver.hpp"

#include "solver_detail.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

namespace interplan {

namespace {

// Thin deterministic layer over the standard engine. Distribution classes
// are implementation-defined, so draws are derived from raw engine output
// only; results are identical wherever the code runs.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t draw = next();
        while (draw >= limit) draw = next();
        return draw % n;
    }

    bool chance(double p) {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
    }

private:
    std::mt19937_64 engine_;
};

struct Individual {
    std::vector<std::uint8_t> genome;
    std::int64_t cost_tenths = 0;
    std::size_t violations = 0;
};

PlanAssessment assess(const Individual& ind) {
    return {ind.cost_tenths, ind.violations, std::span<const std::uint8_t>(ind.genome)};
}

bool ranks_before(const Individual& a, const Individual& b) {
    return penalty_rank(assess(a), assess(b)) < 0;
}

struct RestartOutcome {
    Individual best;
    int generations = 0;
};

class GaRun {
public:
    GaRun(const ProblemInstance& instance, const CostEvaluator& evaluator, const GaParams& params)
        : instance_(instance),
          evaluator_(evaluator),
          params_(params),
          layout_(detail::genome_layout(instance)),
          template_(detail::central_template(instance)),
          scratch_(template_) {
        const std::size_t bits = layout_.bits();
        mutation_rate_ = params.mutation_rate_per_bit.value_or(bits > 0 ? 1.0 / static_cast<double>(bits) : 0.0);

        const SchedulePlan baseline = individual_program(instance);
        baseline_ = extract_genome(baseline);
    }

    SchedulePlan materialize(const std::vector<std::uint8_t>& genome) const {
        SchedulePlan plan = template_;
        write_genome(genome, plan);
        return plan;
    }

    RestartOutcome run_restart(std::uint64_t seed) {
        RandomStream rng(seed);
        const int population_size = params_.population_size;

        std::vector<Individual> population;
        population.reserve(population_size);
        const int baseline_share = std::max(1, population_size / 3);
        const int spaced_share = population_size / 3;
        for (int i = 0; i < population_size; ++i) {
            Individual ind;
            if (i < baseline_share)
                ind.genome = baseline_;
            else if (i < baseline_share + spaced_share)
                ind.genome = random_spaced_genome(rng);
            else
                ind.genome = random_genome(rng);
            evaluate(ind);
            population.push_back(std::move(ind));
        }

        Individual best = *std::min_element(population.begin(), population.end(), ranks_before);

        int generations = 0;
        int stall = 0;
        std::vector<Individual> next_generation(population_size);
        while (generations < params_.max_generations && stall < params_.stall_generations) {
            next_generation[0] = best; // elitism of 1
            for (int i = 1; i < population_size; ++i) {
                const Individual& a = tournament(population, rng);
                const Individual& b = tournament(population, rng);
                Individual child;
                child.genome = crossover(a.genome, b.genome, rng);
                mutate(child.genome, rng);
                evaluate(child);
                next_generation[i] = std::move(child);
            }
            population.swap(next_generation);
            ++generations;

            const Individual& generation_best =
                *std::min_element(population.begin(), population.end(), ranks_before);
            if (ranks_before(generation_best, best)) {
                best = generation_best;
                stall = 0;
            } else {
                ++stall;
            }
        }

        return {std::move(best), generations};
    }

private:
    std::vector<std::uint8_t> extract_genome(const SchedulePlan& plan) const {
        std::vector<std::uint8_t> genome(layout_.bits(), 0);
        std::size_t offset = 0;
        for (int k : layout_.free_types) {
            for (int t = 1; t <= layout_.horizon; ++t)
                genome[offset + t - 1] = plan.scheduled(k, t) ? 1 : 0;
            offset += layout_.horizon;
        }
        return genome;
    }

    void write_genome(const std::vector<std::uint8_t>& genome, SchedulePlan& plan) const {
        std::size_t offset = 0;
        for (int k : layout_.free_types) {
            for (int t = 1; t <= layout_.horizon; ++t)
                plan.set_scheduled(k, t, genome[offset + t - 1] != 0);
            offset += layout_.horizon;
        }
    }

    void evaluate(Individual& ind) {
        write_genome(ind.genome, scratch_);
        ind.violations = count_violations(instance_, scratch_);
        ind.cost_tenths = evaluator_.total_tenths(scratch_);
    }

    const Individual& tournament(const std::vector<Individual>& population, RandomStream& rng) const {
        const auto& a = population[rng.below(population.size())];
        const auto& b = population[rng.below(population.size())];
        return ranks_before(b, a) ? b : a;
    }

    std::vector<std::uint8_t> crossover(const std::vector<std::uint8_t>& a,
                                        const std::vector<std::uint8_t>& b, RandomStream& rng) const {
        if (!rng.chance(params_.crossover_rate)) return a;
        std::vector<std::uint8_t> child(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) child[i] = rng.chance(0.5) ? a[i] : b[i];
        return child;
    }

    void mutate(std::vector<std::uint8_t>& genome, RandomStream& rng) const {
        for (auto& bit : genome)
            if (rng.chance(mutation_rate_)) bit ^= 1;
    }

    std::vector<std::uint8_t> random_genome(RandomStream& rng) const {
        std::vector<std::uint8_t> genome(layout_.bits());
        for (auto& bit : genome) bit = rng.chance(0.5) ? 1 : 0;
        return genome;
    }

    // Feasible by construction: first execution within [1, g_max], then
    // gaps drawn from [g_min, g_max] until the remaining tail is shorter
    // than g_max.
    std::vector<std::uint8_t> random_spaced_genome(RandomStream& rng) const {
        std::vector<std::uint8_t> genome(layout_.bits(), 0);
        std::size_t offset = 0;
        const int horizon = layout_.horizon;
        for (int k : layout_.free_types) {
            const auto& type = instance_.intervention_type(k);
            int step = 1 + static_cast<int>(rng.below(std::min(type.g_max, horizon)));
            genome[offset + step - 1] = 1;
            while (step <= horizon - type.g_max) {
                step += type.g_min + static_cast<int>(rng.below(type.g_max - type.g_min + 1));
                genome[offset + step - 1] = 1;
            }
            offset += horizon;
        }
        return genome;
    }

    const ProblemInstance& instance_;
    const CostEvaluator& evaluator_;
    const GaParams& params_;
    detail::GenomeLayout layout_;
    SchedulePlan template_;
    SchedulePlan scratch_;
    std::vector<std::uint8_t> baseline_;
    double mutation_rate_ = 0.0;
};

} // namespace

std::vector<std::string> validate_params(const GaParams& params) {
    std::vector<std::string> problems;
    if (params.population_size < 1) problems.push_back("population_size must be at least 1");
    if (params.max_generations < 1) problems.push_back("max_generations must be at least 1");
    if (params.stall_generations < 1) problems.push_back("stall_generations must be at least 1");
    if (!(params.crossover_rate >= 0.0 && params.crossover_rate <= 1.0))
        problems.push_back("crossover_rate must lie in [0, 1]");
    if (params.mutation_rate_per_bit &&
        !(*params.mutation_rate_per_bit >= 0.0 && *params.mutation_rate_per_bit <= 1.0))
        problems.push_back("mutation_rate_per_bit must lie in [0, 1]");
    if (params.restarts < 1) problems.push_back("restarts must be at least 1");
    return problems;
}

SpreadSummary dedup_and_spread(const std::vector<std::pair<SchedulePlan, Money>>& restart_bests) {
    if (restart_bests.empty())
        throw std::invalid_argument("dedup_and_spread needs at least one restart result");

    std::vector<std::pair<SchedulePlan, Money>> sorted = restart_bests;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });

    SpreadSummary summary;
    summary.best_total = sorted.front().second;
    summary.worst_restart_best = sorted.back().second;
    summary.unique_count = 1;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (!(sorted[i].first == sorted[i - 1].first)) ++summary.unique_count;
    summary.spread = detail::render_fraction_tenths(
        summary.worst_restart_best.tenths() - summary.best_total.tenths(),
        summary.best_total.tenths());
    return summary;
}

SolverReport solve_ga(const ProblemInstance& instance, const GaParams& params, int threads) {
    if (const auto problems = validate_params(params); !problems.empty()) {
        std::string message = "invalid solver parameters";
        for (const auto& p : problems) message += "; " + p;
        throw std::invalid_argument(message);
    }

    const auto started = std::chrono::steady_clock::now();
    const CostEvaluator evaluator(instance);

    const int restarts = params.restarts;
    std::vector<RestartOutcome> outcomes(restarts);

    unsigned hardware = std::thread::hardware_concurrency();
    if (hardware == 0) hardware = 1;
    const int worker_count =
        std::min(restarts, threads > 0 ? threads : static_cast<int>(hardware));

    if (worker_count <= 1) {
        GaRun run(instance, evaluator, params);
        for (int r = 0; r < restarts; ++r)
            outcomes[r] = run.run_restart(params.base_seed + static_cast<std::uint64_t>(r));
    } else {
        std::atomic<int> next_restart{0};
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        for (int w = 0; w < worker_count; ++w) {
            workers.emplace_back([&] {
                GaRun run(instance, evaluator, params);
                while (true) {
                    const int r = next_restart.fetch_add(1);
                    if (r >= restarts) break;
                    outcomes[r] = run.run_restart(params.base_seed + static_cast<std::uint64_t>(r));
                }
            });
        }
        for (auto& worker : workers) worker.join();
    }

    GaRun materializer(instance, evaluator, params);
    SolverReport report;
    std::vector<std::pair<SchedulePlan, Money>> feasible_bests;
    std::vector<std::size_t> best_violations;
    for (int r = 0; r < restarts; ++r) {
        const RestartOutcome& outcome = outcomes[r];
        report.per_restart.push_back({params.base_seed + static_cast<std::uint64_t>(r),
                                      Money::from_tenths(outcome.best.cost_tenths),
                                      outcome.best.violations == 0, outcome.generations});
        best_violations.push_back(outcome.best.violations);
        if (outcome.best.violations == 0)
            feasible_bests.emplace_back(materializer.materialize(outcome.best.genome),
                                        Money::from_tenths(outcome.best.cost_tenths));
    }

    if (feasible_bests.empty()) {
        std::string message = "no feasible plan found across " + std::to_string(restarts) +
                              " restart(s); best candidates still violate";
        std::size_t fewest = best_violations.front();
        for (std::size_t v : best_violations) fewest = std::min(fewest, v);
        message += " " + std::to_string(fewest) + " window(s)";
        if (detail::central_row_violations(instance) > 0)
            message += "; the fixed central rows are unsatisfiable under their own spacing bounds";
        throw NoFeasiblePlanError(std::move(message), std::move(best_violations));
    }

    std::sort(feasible_bests.begin(), feasible_bests.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });
    report.unique_plans.push_back(feasible_bests.front());
    for (std::size_t i = 1; i < feasible_bests.size(); ++i)
        if (!(feasible_bests[i].first == report.unique_plans.back().first))
            report.unique_plans.push_back(feasible_bests[i]);

    report.best_plan = report.unique_plans.front().first;
    report.best_cost = evaluator.total_cost(report.best_plan);
    report.spread = dedup_and_spread(feasible_bests);
    report.reference_notes = instance.reference_notes();
    report.wall_time = std::chrono::steady_clock::now() - started;
    return report;
}

} // namespace interplan
