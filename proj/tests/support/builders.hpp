#pragma once

#include "interplan/instance.hpp"
#include "interplan/money.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace testsupport {

inline interplan::ProblemInstance make_instance(const interplan::RawInstance& raw) {
    auto result = interplan::validate_instance(raw);
    if (!result.ok()) {
        std::string joined = "test instance invalid:";
        for (const auto& v : result.violations) joined += " [" + v.rule + "] " + v.message;
        throw std::runtime_error(joined);
    }
    return *std::move(result.instance);
}

inline interplan::NetworkObject object(std::string id, const char* cost, std::string owner,
                                       std::vector<std::string> affects = {}) {
    interplan::NetworkObject obj;
    obj.id = std::move(id);
    obj.name = obj.id;
    obj.unavailability_cost = interplan::Money::parse(cost);
    obj.owner = std::move(owner);
    obj.affects = std::move(affects);
    return obj;
}

inline interplan::InterventionType type(std::string id, std::vector<std::string> targets,
                                        const char* cost, int g_min, int g_max,
                                        std::vector<std::string> responsible) {
    interplan::InterventionType t;
    t.id = std::move(id);
    t.name = t.id;
    t.targets = std::move(targets);
    t.cost = interplan::Money::parse(cost);
    t.g_min = g_min;
    t.g_max = g_max;
    t.responsible = std::move(responsible);
    return t;
}

// One operator, one object, one free intervention type.
inline interplan::ProblemInstance single_type_instance(int horizon, const char* object_cost,
                                                       const char* type_cost, int g_min,
                                                       int g_max) {
    interplan::RawInstance raw;
    raw.horizon = horizon;
    raw.operators.push_back({"OP1", "Operator 1"});
    raw.objects.push_back(object("N1", object_cost, "OP1"));
    raw.intervention_types.push_back(type("T1", {"N1"}, type_cost, g_min, g_max, {"OP1"}));
    return make_instance(raw);
}

inline interplan::SchedulePlan plan_with(const interplan::ProblemInstance& inst,
                                         const std::vector<std::vector<int>>& rows) {
    interplan::SchedulePlan plan = inst.empty_plan();
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (int t : rows[k]) plan.set_scheduled(static_cast<int>(k) + 1, t, true);
    return plan;
}

} // namespace testsupport
