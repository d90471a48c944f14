#pragma once

#include "interplan/instance.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace interplan {

enum class ViolationKind {
    gmin,    // two executions closer together than g_min
    gmax,    // a g_max-long stretch of steps with no execution
    central, // row deviates from the imposed central schedule
};

struct PlanViolation {
    std::string type_id;
    ViolationKind kind = ViolationKind::gmin;
    // Offending window [window_start, window_end] for the spacing kinds;
    // for central violations both fields hold the offending step.
    int window_start = 0;
    int window_end = 0;

    friend bool operator==(const PlanViolation&, const PlanViolation&) = default;
};

struct ViolationReport {
    std::vector<PlanViolation> items;

    std::size_t count() const { return items.size(); }
    bool feasible() const { return items.empty(); }
};

// One violation per type and window of length g_min holding two or more
// executions. Windows are [t, t + g_min - 1] for t = 1 .. T - g_min + 1.
ViolationReport check_gmin(const ProblemInstance& instance, const SchedulePlan& plan);

// One violation per type and window of length g_max holding no execution.
// Vacuously satisfied when the horizon is shorter than g_max.
ViolationReport check_gmax(const ProblemInstance& instance, const SchedulePlan& plan);

// Centrally imposed rows must equal their expanded schedule exactly; each
// missing and each extra step is one violation.
ViolationReport check_central(const ProblemInstance& instance, const SchedulePlan& plan);

// All three checks, in the order g_min, g_max, central.
ViolationReport check_all(const ProblemInstance& instance, const SchedulePlan& plan);

// Violation count alone, without materializing items.
std::size_t count_violations(const ProblemInstance& instance, const SchedulePlan& plan);

// A candidate plan reduced to what ranking needs.
struct PlanAssessment {
    std::int64_t cost_tenths = 0;
    std::size_t violation_count = 0;
    std::span<const std::uint8_t> bits; // flattened plan, tie-break of last resort
};

// Total order used by the optimizer: a feasible candidate beats any
// infeasible one; feasible candidates compare by cost; infeasible ones by
// violation count, then cost; remaining ties fall back to the flattened
// plan bits, so the order is deterministic.
std::strong_ordering penalty_rank(const PlanAssessment& a, const PlanAssessment& b);

} // namespace interplan
