#pragma once

#include "interplan/instance.hpp"

#include <vector>

namespace interplan {

// Steps start, start + interval, ... clipped to [1, horizon].
// Throws std::domain_error when start or interval is out of range.
std::vector<int> expand_central(const CentralSchedule& schedule, int horizon);

// The do-nothing-together baseline: every type runs on its own, as rarely
// as its g_max allows (steps g_max, 2*g_max, ...); centrally imposed types
// follow their fixed schedule. Always feasible for a validated instance
// whose central rows satisfy their own spacing windows.
SchedulePlan individual_program(const ProblemInstance& instance);

} // namespace interplan
