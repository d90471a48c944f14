#pragma once

#include "interplan/instance.hpp"
#include "interplan/money.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace interplan {

struct OperatorCost {
    Money intervention;    // share of execution costs
    Money unavailability;  // service interruption of owned objects

    Money total() const { return intervention + unavailability; }
};

struct CostBreakdown {
    Money f1;    // direct intervention cost
    Money f2;    // service unavailability cost
    Money total; // f1 + f2
    // Operator id with its attributed costs, in declaration order.
    std::vector<std::pair<std::string, OperatorCost>> per_operator;
};

struct CumulativeSeries {
    // Entry t - 1 holds the running totals through step t.
    std::vector<Money> f1_cum;
    std::vector<Money> f2_cum;
    std::vector<Money> total_cum;
};

// Precomputed evaluator for repeated plan costing against one instance.
// Execution cost is split evenly among the responsible operators (the
// instance guarantees that the split is exact); each affected object's
// unavailability cost is counted once per step, no matter how many
// interventions hit it, and is charged to the object's owner.
class CostEvaluator {
public:
    explicit CostEvaluator(const ProblemInstance& instance);

    const ProblemInstance& instance() const { return *instance_; }

    Money f1(const SchedulePlan& plan) const;
    Money f2(const SchedulePlan& plan) const;
    std::int64_t total_tenths(const SchedulePlan& plan) const;
    CostBreakdown total_cost(const SchedulePlan& plan) const;
    CumulativeSeries cumulative_series(const SchedulePlan& plan) const;

    // Objects out of service at step t (ids in declaration order).
    // Throws std::out_of_range when t is outside [1, horizon].
    std::vector<std::string> affected_objects(const SchedulePlan& plan, int t) const;

    // Solver plumbing: object sets as bit masks over declaration indices.
    using Mask = std::vector<std::uint64_t>;
    int mask_words() const { return words_; }
    const Mask& impact_mask(int k) const { return impact_[k - 1]; }
    std::int64_t execution_cost_tenths(int k) const { return type_tenths_[k - 1]; }
    std::int64_t mask_cost_tenths(const Mask& mask) const;

private:

    std::int64_t step_f2_tenths(const SchedulePlan& plan, int t, Mask& scratch) const;

    const ProblemInstance* instance_;
    int words_ = 0;
    std::vector<Mask> impact_;                 // per type: objects out of service when it runs
    std::vector<std::int64_t> object_tenths_;  // per object
    std::vector<std::int64_t> type_tenths_;    // per type, one execution
};

std::vector<std::string> affected_objects(const ProblemInstance& instance, const SchedulePlan& plan,
                                          int t);
Money intervention_cost(const ProblemInstance& instance, const SchedulePlan& plan);
Money unavailability_cost(const ProblemInstance& instance, const SchedulePlan& plan);
CostBreakdown total_cost(const ProblemInstance& instance, const SchedulePlan& plan);
CumulativeSeries cumulative_series(const ProblemInstance& instance, const SchedulePlan& plan);

} // namespace interplan
