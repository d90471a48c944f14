#pragma once

#include "interplan/cost.hpp"
#include "interplan/feasibility.hpp"
#include "interplan/instance.hpp"
#include "interplan/money.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace interplan {

// One table cell pair: the cost under the individual (do-nothing-together)
// program and under the optimized program, with the derived columns.
struct ComparisonCell {
    Money individual;
    Money optimal;
    std::string ratio;  // optimal / individual, two decimals; "n/a" when individual is 0
    Money difference;   // optimal - individual
};

ComparisonCell make_cell(Money individual, Money optimal);

struct ComparisonTable {
    std::vector<std::string> operators; // declaration order

    std::vector<ComparisonCell> intervention;   // one per operator
    ComparisonCell intervention_total;
    std::vector<ComparisonCell> unavailability; // one per operator
    ComparisonCell unavailability_total;
    ComparisonCell grand_total;
};

class InfeasiblePlanError : public std::runtime_error {
public:
    InfeasiblePlanError(std::string message, ViolationReport report)
        : std::runtime_error(std::move(message)), report_(std::move(report)) {}

    const ViolationReport& violations() const { return report_; }

private:
    ViolationReport report_;
};

// Per-operator cost comparison of two feasible plans. Throws
// InfeasiblePlanError naming the violations when either plan fails a
// feasibility check.
ComparisonTable compare(const ProblemInstance& instance, const SchedulePlan& individual_plan,
                        const SchedulePlan& optimal_plan);

// How much each operator owes when the optimized program raises the total
// intervention spend above the individual one (clustering typically adds
// executions for some operators while lowering everyone's unavailability).
// The surplus is split in proportion to each operator's individual
// intervention cost, computed exactly and rendered in thousandths; the
// rounding remainder goes to the operator with the largest share, so the
// rendered amounts sum exactly to the surplus.
struct Redistribution {
    std::string operator_id;
    std::int64_t milli = 0; // thousandths of a money unit

    std::string str() const; // always three decimals, e.g. "5.208"
};

// Zero for everyone when there is no surplus. Throws std::domain_error
// when a surplus exists but the individual intervention total is zero.
std::vector<Redistribution> redistribute_extra_cost(const ComparisonTable& table);

} // namespace interplan
