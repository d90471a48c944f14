#include "interplan/compare.hpp"

#include <algorithm>

namespace interplan {

namespace {

std::int64_t round_half_up(__int128 numerator, __int128 denominator) {
    return static_cast<std::int64_t>((2 * numerator + denominator) / (2 * denominator));
}

std::string render_ratio(Money optimal, Money individual) {
    if (individual.tenths() == 0) return "n/a";
    const std::int64_t hundredths =
        round_half_up(static_cast<__int128>(optimal.tenths()) * 100, individual.tenths());
    std::string whole = std::to_string(hundredths / 100);
    std::string frac = std::to_string(hundredths % 100);
    if (frac.size() < 2) frac.insert(frac.begin(), '0');
    return whole + "." + frac;
}

std::string describe(const ViolationReport& report) {
    std::string out;
    for (const auto& item : report.items) {
        if (!out.empty()) out += ", ";
        switch (item.kind) {
        case ViolationKind::gmin:
            out += item.type_id + " has two executions within steps [" +
                   std::to_string(item.window_start) + ", " + std::to_string(item.window_end) + "]";
            break;
        case ViolationKind::gmax:
            out += item.type_id + " has no execution within steps [" +
                   std::to_string(item.window_start) + ", " + std::to_string(item.window_end) + "]";
            break;
        case ViolationKind::central:
            out += item.type_id + " deviates from its central schedule at step " +
                   std::to_string(item.window_start);
            break;
        }
    }
    return out;
}

} // namespace

ComparisonCell make_cell(Money individual, Money optimal) {
    return {individual, optimal, render_ratio(optimal, individual), optimal - individual};
}

ComparisonTable compare(const ProblemInstance& instance, const SchedulePlan& individual_plan,
                        const SchedulePlan& optimal_plan) {
    if (ViolationReport report = check_all(instance, individual_plan); !report.feasible()) {
        // Render before moving the report into the exception.
        std::string message = "individual plan is infeasible: " + describe(report);
        throw InfeasiblePlanError(std::move(message), std::move(report));
    }
    if (ViolationReport report = check_all(instance, optimal_plan); !report.feasible()) {
        std::string message = "optimal plan is infeasible: " + describe(report);
        throw InfeasiblePlanError(std::move(message), std::move(report));
    }

    const CostBreakdown individual = total_cost(instance, individual_plan);
    const CostBreakdown optimal = total_cost(instance, optimal_plan);

    ComparisonTable table;
    for (std::size_t i = 0; i < instance.operators().size(); ++i) {
        table.operators.push_back(instance.operators()[i].id);
        table.intervention.push_back(make_cell(individual.per_operator[i].second.intervention,
                                               optimal.per_operator[i].second.intervention));
        table.unavailability.push_back(make_cell(individual.per_operator[i].second.unavailability,
                                                 optimal.per_operator[i].second.unavailability));
    }
    table.intervention_total = make_cell(individual.f1, optimal.f1);
    table.unavailability_total = make_cell(individual.f2, optimal.f2);
    table.grand_total = make_cell(individual.total, optimal.total);
    return table;
}

std::string Redistribution::str() const {
    std::int64_t value = milli;
    std::string sign;
    if (value < 0) {
        sign = "-";
        value = -value;
    }
    std::string frac = std::to_string(value % 1000);
    frac.insert(frac.begin(), 3 - frac.size(), '0');
    return sign + std::to_string(value / 1000) + "." + frac;
}

std::vector<Redistribution> redistribute_extra_cost(const ComparisonTable& table) {
    std::vector<Redistribution> out;
    for (const auto& op : table.operators) out.push_back({op, 0});

    const Money surplus = table.intervention_total.optimal - table.intervention_total.individual;
    if (surplus.tenths() <= 0) return out;

    const std::int64_t share_total = table.intervention_total.individual.tenths();
    if (share_total == 0)
        throw std::domain_error(
            "cannot redistribute an intervention surplus: every individual share is zero");

    std::size_t largest = 0;
    for (std::size_t i = 1; i < table.operators.size(); ++i)
        if (table.intervention[i].individual > table.intervention[largest].individual) largest = i;

    const std::int64_t surplus_milli = surplus.tenths() * 100;
    std::int64_t assigned = 0;
    for (std::size_t i = 0; i < table.operators.size(); ++i) {
        if (i == largest) continue;
        const std::int64_t share = table.intervention[i].individual.tenths();
        out[i].milli = round_half_up(static_cast<__int128>(surplus_milli) * share, share_total);
        assigned += out[i].milli;
    }
    out[largest].milli = surplus_milli - assigned;
    return out;
}

} // namespace interplan
