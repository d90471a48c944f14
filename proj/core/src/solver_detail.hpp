#pragma once

#include "interplan/instance.hpp"
#include "interplan/solver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace interplan::detail {

// The optimizer's decision variables: one bit per non-central type and
// time step, rows concatenated in type declaration order.
struct GenomeLayout {
    std::vector<int> free_types; // 1-based indices of types without a central schedule
    int horizon = 0;

    std::size_t bits() const { return free_types.size() * static_cast<std::size_t>(horizon); }
};

GenomeLayout genome_layout(const ProblemInstance& instance);

// Plan with only the centrally imposed rows filled in.
SchedulePlan central_template(const ProblemInstance& instance);

// Violations the fixed central rows carry all by themselves; any plan for
// the instance inherits at least these.
std::size_t central_row_violations(const ProblemInstance& instance);

// Exact decimal rendering of num/den (both in tenths), at most six
// fractional digits, trailing zeros trimmed.
std::string render_fraction_tenths(std::int64_t num, std::int64_t den);

} // namespace interplan::detail
