#pragma once

#include "interplan/cost.hpp"
#include "interplan/instance.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace interplan {

struct GaParams {
    int population_size = 200;
    int max_generations = 500;
    int stall_generations = 50; // stop after this many generations without improvement
    double crossover_rate = 0.8;
    // Per-bit flip probability; defaults to 1 / genome_length when unset.
    std::optional<double> mutation_rate_per_bit;
    int restarts = 50;
    std::uint64_t base_seed = 1; // restart r runs with seed base_seed + r
};

// Empty when the parameters are usable; otherwise one message per problem.
std::vector<std::string> validate_params(const GaParams& params);

struct RestartResult {
    std::uint64_t seed = 0;
    Money best_total;
    bool feasible = false;
    int generations = 0;
};

struct SpreadSummary {
    std::size_t unique_count = 0;
    Money best_total;
    Money worst_restart_best;
    std::string spread; // (worst - best) / best, exact decimal string
};

struct SolverReport {
    SchedulePlan best_plan;
    CostBreakdown best_cost;
    // Distinct best plans, sorted by total cost and then by plan bits.
    std::vector<std::pair<SchedulePlan, Money>> unique_plans;
    std::vector<RestartResult> per_restart; // empty for the exhaustive solver
    SpreadSummary spread;
    std::vector<std::string> reference_notes; // echoed from the instance
    // Measured, informational only; deliberately absent from the JSON
    // serialization so that reports stay byte-identical across runs.
    std::chrono::duration<double> wall_time{0.0};
};

// The instance admits no feasible plan (its fixed central rows break their
// own spacing windows), or no restart found one.
class NoFeasiblePlanError : public std::runtime_error {
public:
    NoFeasiblePlanError(std::string message, std::vector<std::size_t> best_violations_per_restart)
        : std::runtime_error(std::move(message)),
          best_violations_per_restart_(std::move(best_violations_per_restart)) {}

    const std::vector<std::size_t>& best_violations_per_restart() const {
        return best_violations_per_restart_;
    }

private:
    std::vector<std::size_t> best_violations_per_restart_;
};

// Instance too large to enumerate.
class OracleCapError : public std::runtime_error {
public:
    OracleCapError(std::string message, std::size_t free_bits, std::size_t cap)
        : std::runtime_error(std::move(message)), free_bits_(free_bits), cap_(cap) {}

    std::size_t free_bits() const { return free_bits_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t free_bits_;
    std::size_t cap_;
};

inline constexpr std::size_t kDefaultOracleBitCap = 24;

// Enumerates every assignment of the non-central rows (central rows are
// fixed), keeps the feasible ones, and returns the exact minimum together
// with all equal-cost optimal plans. The search space has one free bit per
// non-central type and time step; above the cap an OracleCapError is
// thrown naming the bit count.
SolverReport solve_exhaustive(const ProblemInstance& instance,
                              std::size_t bit_cap = kDefaultOracleBitCap);

// Multi-restart genetic search over the non-central rows. Deterministic
// for fixed (instance, params): restart r always runs with its own stream
// seeded base_seed + r and results merge in restart order, whatever the
// thread count. threads = 0 means use the machine's parallelism.
SolverReport solve_ga(const ProblemInstance& instance, const GaParams& params, int threads = 0);

// Restart-best digest: distinct plans, best and worst totals, and the
// relative spread (worst - best) / best.
SpreadSummary dedup_and_spread(const std::vector<std::pair<SchedulePlan, Money>>& restart_bests);

} // namespace interplan
