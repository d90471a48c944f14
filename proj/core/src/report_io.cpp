#include "interplan/report_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace interplan {

namespace {

using json = nlohmann::ordered_json;

json plan_node(const ProblemInstance& instance, const SchedulePlan& plan) {
    json executions = json::object();
    for (const auto& type : instance.intervention_types())
        executions[type.id] = plan.row_steps(type.index);
    return json{{"horizon", plan.horizon()}, {"executions", std::move(executions)}};
}

json cost_node(const CostBreakdown& breakdown) {
    json per_operator = json::object();
    for (const auto& [op, cost] : breakdown.per_operator)
        per_operator[op] = json{{"intervention", cost.intervention.str()},
                                {"unavailability", cost.unavailability.str()}};
    return json{{"f1", breakdown.f1.str()},
                {"f2", breakdown.f2.str()},
                {"total", breakdown.total.str()},
                {"per_operator", std::move(per_operator)}};
}

json cell_node(const ComparisonCell& cell) {
    return json{{"individual", cell.individual.str()},
                {"optimal", cell.optimal.str()},
                {"ratio", cell.ratio},
                {"difference", cell.difference.str()}};
}

} // namespace

std::string plan_to_json(const ProblemInstance& instance, const SchedulePlan& plan) {
    return plan_node(instance, plan).dump(2) + "\n";
}

SchedulePlan plan_from_json(const ProblemInstance& instance, const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("plan file: not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::runtime_error("plan file: top level must be an object");
    if (!doc.contains("horizon") || !doc["horizon"].is_number_integer())
        throw std::runtime_error("plan file: missing integer 'horizon'");
    const int horizon = doc["horizon"].get<int>();
    if (horizon != instance.horizon())
        throw std::runtime_error("plan file: horizon " + std::to_string(horizon) +
                                 " does not match the instance horizon " +
                                 std::to_string(instance.horizon()));
    if (!doc.contains("executions") || !doc["executions"].is_object())
        throw std::runtime_error("plan file: missing object 'executions'");

    SchedulePlan plan = instance.empty_plan();
    for (const auto& [id, steps] : doc["executions"].items()) {
        const int k = instance.type_index(id);
        if (k == 0) throw std::runtime_error("plan file: unknown intervention type '" + id + "'");
        if (!steps.is_array())
            throw std::runtime_error("plan file: executions of '" + id + "' must be an array");
        for (const auto& step : steps) {
            if (!step.is_number_integer())
                throw std::runtime_error("plan file: executions of '" + id + "' must be integers");
            const int t = step.get<int>();
            if (t < 1 || t > instance.horizon())
                throw std::runtime_error("plan file: step " + std::to_string(t) + " of '" + id +
                                         "' outside [1, " + std::to_string(instance.horizon()) + "]");
            if (plan.scheduled(k, t))
                throw std::runtime_error("plan file: duplicate step " + std::to_string(t) + " for '" +
                                         id + "'");
            plan.set_scheduled(k, t, true);
        }
    }
    return plan;
}

std::string violations_to_json(const ViolationReport& report) {
    json items = json::array();
    for (const auto& item : report.items) {
        json node{{"type", item.type_id}};
        switch (item.kind) {
        case ViolationKind::gmin:
            node["kind"] = "g_min";
            node["window"] = {item.window_start, item.window_end};
            break;
        case ViolationKind::gmax:
            node["kind"] = "g_max";
            node["window"] = {item.window_start, item.window_end};
            break;
        case ViolationKind::central:
            node["kind"] = "central";
            node["step"] = item.window_start;
            break;
        }
        items.push_back(std::move(node));
    }
    json doc{{"feasible", report.feasible()},
             {"count", report.count()},
             {"items", std::move(items)}};
    return doc.dump(2) + "\n";
}

std::string report_to_json(const ProblemInstance& instance, const SolverReport& report) {
    json doc;
    doc["best"] = json{{"plan", plan_node(instance, report.best_plan)},
                       {"cost", cost_node(report.best_cost)}};

    doc["unique_plans"] = json::array();
    for (const auto& [plan, total] : report.unique_plans)
        doc["unique_plans"].push_back(
            json{{"total", total.str()}, {"plan", plan_node(instance, plan)}});

    doc["per_restart"] = json::array();
    for (const auto& restart : report.per_restart)
        doc["per_restart"].push_back(json{{"seed", restart.seed},
                                          {"best_total", restart.best_total.str()},
                                          {"feasible", restart.feasible},
                                          {"generations", restart.generations}});

    doc["restart_summary"] = json{{"unique_count", report.spread.unique_count},
                                  {"best_total", report.spread.best_total.str()},
                                  {"worst_restart_best", report.spread.worst_restart_best.str()},
                                  {"spread", report.spread.spread}};

    if (!report.reference_notes.empty()) doc["reference_notes"] = report.reference_notes;

    return doc.dump(2) + "\n";
}

std::string series_to_csv(const CumulativeSeries& series) {
    std::string csv = "t,f1_cum,f2_cum,total_cum\n";
    for (std::size_t i = 0; i < series.total_cum.size(); ++i) {
        csv += std::to_string(i + 1);
        csv += ',';
        csv += series.f1_cum[i].str();
        csv += ',';
        csv += series.f2_cum[i].str();
        csv += ',';
        csv += series.total_cum[i].str();
        csv += '\n';
    }
    return csv;
}

std::string table_to_json(const ComparisonTable& table) {
    json intervention = json::object();
    json unavailability = json::object();
    for (std::size_t i = 0; i < table.operators.size(); ++i) {
        intervention[table.operators[i]] = cell_node(table.intervention[i]);
        unavailability[table.operators[i]] = cell_node(table.unavailability[i]);
    }
    intervention["total"] = cell_node(table.intervention_total);
    unavailability["total"] = cell_node(table.unavailability_total);

    json doc{{"operators", table.operators},
             {"intervention", std::move(intervention)},
             {"unavailability", std::move(unavailability)},
             {"total", cell_node(table.grand_total)}};

    try {
        json redistribution = json::object();
        for (const auto& entry : redistribute_extra_cost(table))
            redistribution[entry.operator_id] = entry.str();
        doc["extra_cost_redistribution"] = std::move(redistribution);
    } catch (const std::domain_error&) {
        doc["extra_cost_redistribution"] = nullptr;
    }

    return doc.dump(2) + "\n";
}

std::string table_to_markdown(const ComparisonTable& table) {
    std::string md = "| Cost | Individual | Optimal | Ratio | Difference |\n";
    md += "|---|---:|---:|---:|---:|\n";
    const auto row = [&md](const std::string& label, const ComparisonCell& cell) {
        md += "| " + label + " | " + cell.individual.str() + " | " + cell.optimal.str() + " | " +
              cell.ratio + " | " + cell.difference.str() + " |\n";
    };
    for (std::size_t i = 0; i < table.operators.size(); ++i)
        row("Operator " + table.operators[i] + " interventions", table.intervention[i]);
    row("Total intervention cost", table.intervention_total);
    for (std::size_t i = 0; i < table.operators.size(); ++i)
        row("Operator " + table.operators[i] + " service unavailability", table.unavailability[i]);
    row("Total service unavailability cost", table.unavailability_total);
    row("Total cost", table.grand_total);
    return md;
}

GaParams params_from_json(const std::string& text, GaParams defaults) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("params file: not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::runtime_error("params file: top level must be an object");

    static const std::set<std::string> known{
        "population_size", "max_generations", "stall_generations", "crossover_rate",
        "mutation_rate_per_bit", "restarts", "base_seed"};
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (!known.count(key)) throw std::runtime_error("params file: unknown key '" + key + "'");
    }

    GaParams params = defaults;
    const auto read_int = [&](const char* key, int& target) {
        if (auto it = doc.find(key); it != doc.end()) {
            if (!it->is_number_integer())
                throw std::runtime_error(std::string("params file: '") + key + "' must be an integer");
            target = it->get<int>();
        }
    };
    read_int("population_size", params.population_size);
    read_int("max_generations", params.max_generations);
    read_int("stall_generations", params.stall_generations);
    read_int("restarts", params.restarts);
    if (auto it = doc.find("crossover_rate"); it != doc.end()) {
        if (!it->is_number())
            throw std::runtime_error("params file: 'crossover_rate' must be a number");
        params.crossover_rate = it->get<double>();
    }
    if (auto it = doc.find("mutation_rate_per_bit"); it != doc.end()) {
        if (!it->is_number())
            throw std::runtime_error("params file: 'mutation_rate_per_bit' must be a number");
        params.mutation_rate_per_bit = it->get<double>();
    }
    if (auto it = doc.find("base_seed"); it != doc.end()) {
        if (!it->is_number_unsigned() && !it->is_number_integer())
            throw std::runtime_error("params file: 'base_seed' must be an integer");
        params.base_seed = it->get<std::uint64_t>();
    }
    return params;
}

} // namespace interplan
