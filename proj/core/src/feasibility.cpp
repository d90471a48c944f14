#include "interplan/feasibility.hpp"

#include "interplan/schedulers.hpp"

#include <algorithm>
#include <stdexcept>

namespace interplan {

namespace {

void require_matching_dimensions(const ProblemInstance& instance, const SchedulePlan& plan) {
    if (plan.types() != instance.type_count() || plan.horizon() != instance.horizon())
        throw std::invalid_argument("plan dimensions do not match the instance");
}

// Executions of row k in steps [t, t + length - 1], via prefix counts.
class RowWindows {
public:
    RowWindows(const SchedulePlan& plan, int k) : prefix_(plan.horizon() + 1, 0) {
        for (int t = 1; t <= plan.horizon(); ++t)
            prefix_[t] = prefix_[t - 1] + (plan.scheduled(k, t) ? 1 : 0);
    }

    int in_window(int start, int length) const { return prefix_[start + length - 1] - prefix_[start - 1]; }

private:
    std::vector<int> prefix_;
};

template <typename OnViolation>
void scan_gmin(const ProblemInstance& instance, const SchedulePlan& plan, OnViolation on_violation) {
    const int horizon = plan.horizon();
    for (const auto& type : instance.intervention_types()) {
        RowWindows windows(plan, type.index);
        for (int t = 1; t + type.g_min - 1 <= horizon; ++t)
            if (windows.in_window(t, type.g_min) > 1)
                on_violation(type, ViolationKind::gmin, t, t + type.g_min - 1);
    }
}

template <typename OnViolation>
void scan_gmax(const ProblemInstance& instance, const SchedulePlan& plan, OnViolation on_violation) {
    const int horizon = plan.horizon();
    for (const auto& type : instance.intervention_types()) {
        if (type.g_max > horizon) continue; // no full window fits, nothing to demand
        RowWindows windows(plan, type.index);
        for (int t = 1; t + type.g_max - 1 <= horizon; ++t)
            if (windows.in_window(t, type.g_max) == 0)
                on_violation(type, ViolationKind::gmax, t, t + type.g_max - 1);
    }
}

template <typename OnViolation>
void scan_central(const ProblemInstance& instance, const SchedulePlan& plan, OnViolation on_violation) {
    for (const auto& type : instance.intervention_types()) {
        if (!type.central) continue;
        std::vector<std::uint8_t> expected(plan.horizon() + 1, 0);
        for (int t : expand_central(*type.central, instance.horizon())) expected[t] = 1;
        for (int t = 1; t <= plan.horizon(); ++t)
            if (plan.scheduled(type.index, t) != (expected[t] != 0))
                on_violation(type, ViolationKind::central, t, t);
    }
}

} // namespace

ViolationReport check_gmin(const ProblemInstance& instance, const SchedulePlan& plan) {
    require_matching_dimensions(instance, plan);
    ViolationReport report;
    scan_gmin(instance, plan, [&](const InterventionType& type, ViolationKind kind, int a, int b) {
        report.items.push_back({type.id, kind, a, b});
    });
    return report;
}

ViolationReport check_gmax(const ProblemInstance& instance, const SchedulePlan& plan) {
    require_matching_dimensions(instance, plan);
    ViolationReport report;
    scan_gmax(instance, plan, [&](const InterventionType& type, ViolationKind kind, int a, int b) {
        report.items.push_back({type.id, kind, a, b});
    });
    return report;
}

ViolationReport check_central(const ProblemInstance& instance, const SchedulePlan& plan) {
    require_matching_dimensions(instance, plan);
    ViolationReport report;
    scan_central(instance, plan, [&](const InterventionType& type, ViolationKind kind, int a, int b) {
        report.items.push_back({type.id, kind, a, b});
    });
    return report;
}

ViolationReport check_all(const ProblemInstance& instance, const SchedulePlan& plan) {
    require_matching_dimensions(instance, plan);
    ViolationReport report = check_gmin(instance, plan);
    ViolationReport gmax = check_gmax(instance, plan);
    ViolationReport central = check_central(instance, plan);
    report.items.insert(report.items.end(), gmax.items.begin(), gmax.items.end());
    report.items.insert(report.items.end(), central.items.begin(), central.items.end());
    return report;
}

std::size_t count_violations(const ProblemInstance& instance, const SchedulePlan& plan) {
    require_matching_dimensions(instance, plan);
    std::size_t count = 0;
    const auto bump = [&](const InterventionType&, ViolationKind, int, int) { ++count; };
    scan_gmin(instance, plan, bump);
    scan_gmax(instance, plan, bump);
    scan_central(instance, plan, bump);
    return count;
}

std::strong_ordering penalty_rank(const PlanAssessment& a, const PlanAssessment& b) {
    const bool a_feasible = a.violation_count == 0;
    const bool b_feasible = b.violation_count == 0;
    if (a_feasible != b_feasible) return a_feasible ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!a_feasible) {
        if (auto cmp = a.violation_count <=> b.violation_count; cmp != 0) return cmp;
    }
    if (auto cmp = a.cost_tenths <=> b.cost_tenths; cmp != 0) return cmp;
    return std::lexicographical_compare_three_way(a.bits.begin(), a.bits.end(), b.bits.begin(),
                                                  b.bits.end());
}

} // namespace interplan
