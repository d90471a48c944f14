#include "interplan/schedulers.hpp"

#include <stdexcept>
#include <string>

namespace interplan {

std::vector<int> expand_central(const CentralSchedule& schedule, int horizon) {
    if (schedule.start < 1)
        throw std::domain_error("central start must be at least 1, got " + std::to_string(schedule.start));
    if (schedule.interval < 1)
        throw std::domain_error("central interval must be at least 1, got " +
                                std::to_string(schedule.interval));
    if (schedule.start > horizon)
        throw std::domain_error("central start " + std::to_string(schedule.start) +
                                " exceeds the horizon " + std::to_string(horizon));
    std::vector<int> steps;
    for (int t = schedule.start; t <= horizon; t += schedule.interval) steps.push_back(t);
    return steps;
}

SchedulePlan individual_program(const ProblemInstance& instance) {
    SchedulePlan plan = instance.empty_plan();
    for (const auto& type : instance.intervention_types()) {
        if (type.central) {
            for (int t : expand_central(*type.central, instance.horizon()))
                plan.set_scheduled(type.index, t, true);
        } else {
            for (int t = type.g_max; t <= instance.horizon(); t += type.g_max)
                plan.set_scheduled(type.index, t, true);
        }
    }
    return plan;
}

} // namespace interplan
