#pragma once

#include "interplan/compare.hpp"
#include "interplan/cost.hpp"
#include "interplan/feasibility.hpp"
#include "interplan/instance.hpp"
#include "interplan/solver.hpp"

#include <string>

namespace interplan {

// Plan file: {"horizon": T, "executions": {"<type id>": [steps...]}}.
// Every intervention type appears with a sorted step list.
std::string plan_to_json(const ProblemInstance& instance, const SchedulePlan& plan);

// Throws std::runtime_error on shape problems: unknown type ids, steps
// outside [1, horizon], duplicate steps, or a horizon that does not match
// the instance. Types missing from "executions" get empty rows.
SchedulePlan plan_from_json(const ProblemInstance& instance, const std::string& text);

std::string violations_to_json(const ViolationReport& report);

// Deterministic for a deterministic report: wall time is not serialized.
std::string report_to_json(const ProblemInstance& instance, const SolverReport& report);

// Header "t,f1_cum,f2_cum,total_cum", one row per time step.
std::string series_to_csv(const CumulativeSeries& series);

std::string table_to_json(const ComparisonTable& table);
std::string table_to_markdown(const ComparisonTable& table);

// Reads solver parameters from JSON, starting from the given defaults;
// only keys present in the file are overridden. Unknown keys or malformed
// values throw std::runtime_error.
GaParams params_from_json(const std::string& text, GaParams defaults = {});

} // namespace interplan
