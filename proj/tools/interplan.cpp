#include "interplan/compare.hpp"
#include "interplan/cost.hpp"
#include "interplan/feasibility.hpp"
#include "interplan/instance_io.hpp"
#include "interplan/report_io.hpp"
#include "interplan/schedulers.hpp"
#include "interplan/solver.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1; // the inputs are well-formed but violate a rule
constexpr int kExitUsage = 2;  // unusable invocation, file, or schema

struct CliError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{kExitUsage, "cannot read '" + path + "'"};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw CliError{kExitUsage, "cannot write '" + path + "'"};
    out << content;
    if (!out) throw CliError{kExitUsage, "failed while writing '" + path + "'"};
}

interplan::ProblemInstance load_instance(const std::string& path) {
    interplan::RawInstance raw;
    try {
        raw = interplan::instance_from_json(read_file(path));
    } catch (const std::runtime_error& e) {
        throw CliError{kExitUsage, e.what()};
    }
    auto result = interplan::validate_instance(raw);
    if (!result.ok()) {
        std::string message = "instance '" + path + "' is invalid:";
        for (const auto& violation : result.violations) message += "\n  " + violation.message;
        throw CliError{kExitDomain, message};
    }
    return *std::move(result.instance);
}

interplan::SchedulePlan load_plan(const interplan::ProblemInstance& instance,
                                  const std::string& path) {
    try {
        return interplan::plan_from_json(instance, read_file(path));
    } catch (const std::runtime_error& e) {
        throw CliError{kExitUsage, e.what()};
    }
}

int resolve_threads() {
    const char* raw = std::getenv("INTERPLAN_THREADS");
    if (raw == nullptr || *raw == '\0') return 0;
    try {
        std::size_t used = 0;
        const int threads = std::stoi(raw, &used);
        if (used != std::string(raw).size() || threads < 1) throw std::invalid_argument("");
        return threads;
    } catch (const std::exception&) {
        throw CliError{kExitUsage,
                       std::string("INTERPLAN_THREADS must be a positive integer, got '") + raw + "'"};
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Minimum-cost intervention programs for interdependent infrastructure networks"};
    app.require_subcommand(1);

    std::string instance_path, plan_path, baseline_path, optimal_path;
    std::string output_path, series_path, markdown_path, params_path;
    int restarts = -1;
    std::int64_t seed = -1;

    auto* validate = app.add_subcommand("validate", "Check an instance file");
    validate->add_option("instance", instance_path, "Instance JSON file")->required();

    auto* baseline = app.add_subcommand("baseline", "Write the individual program plan");
    baseline->add_option("instance", instance_path, "Instance JSON file")->required();
    baseline->add_option("-o,--output", output_path, "Plan JSON output path")->required();

    auto* solve = app.add_subcommand("solve", "Search for a minimum-cost program");
    solve->add_option("instance", instance_path, "Instance JSON file")->required();
    solve->add_option("--restarts", restarts, "Number of independent restarts");
    solve->add_option("--seed", seed, "Base seed (restart r uses seed + r)");
    solve->add_option("--params", params_path, "Solver parameter JSON file");
    solve->add_option("-o,--output", output_path, "Report JSON output path")->required();
    solve->add_option("--series", series_path, "Cumulative cost CSV for the best plan");

    auto* oracle = app.add_subcommand("oracle", "Exhaustive search (small instances only)");
    oracle->add_option("instance", instance_path, "Instance JSON file")->required();
    oracle->add_option("-o,--output", output_path, "Report JSON output path")->required();

    auto* compare = app.add_subcommand("compare", "Cost comparison table of two plans");
    compare->add_option("instance", instance_path, "Instance JSON file")->required();
    compare->add_option("baseline", baseline_path, "Baseline plan JSON file")->required();
    compare->add_option("optimal", optimal_path, "Optimized plan JSON file")->required();
    compare->add_option("-o,--output", output_path, "Table JSON output path")->required();
    compare->add_option("--markdown", markdown_path, "Also render the table as markdown");

    auto* validate_plan = app.add_subcommand("validate-plan", "Check a plan against an instance");
    validate_plan->add_option("instance", instance_path, "Instance JSON file")->required();
    validate_plan->add_option("plan", plan_path, "Plan JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (validate->parsed()) {
        const auto instance = load_instance(instance_path);
        std::cout << "instance valid: " << instance.object_count() << " objects, "
                  << instance.type_count() << " intervention types, horizon "
                  << instance.horizon() << "\n";
        return kExitOk;
    }

    if (baseline->parsed()) {
        const auto instance = load_instance(instance_path);
        const auto plan = interplan::individual_program(instance);
        write_file(output_path, interplan::plan_to_json(instance, plan));
        const auto breakdown = interplan::total_cost(instance, plan);
        std::cout << "individual program total " << breakdown.total.str() << " (f1 "
                  << breakdown.f1.str() << ", f2 " << breakdown.f2.str() << ")\n";
        return kExitOk;
    }

    if (solve->parsed()) {
        const auto instance = load_instance(instance_path);
        interplan::GaParams params;
        if (!params_path.empty()) {
            try {
                params = interplan::params_from_json(read_file(params_path), params);
            } catch (const std::runtime_error& e) {
                throw CliError{kExitUsage, e.what()};
            }
        }
        if (restarts >= 0) params.restarts = restarts;
        if (seed >= 0) params.base_seed = static_cast<std::uint64_t>(seed);
        if (const auto problems = interplan::validate_params(params); !problems.empty()) {
            std::string message = "unusable solver parameters:";
            for (const auto& p : problems) message += "\n  " + p;
            throw CliError{kExitUsage, message};
        }

        const auto report = interplan::solve_ga(instance, params, resolve_threads());
        write_file(output_path, interplan::report_to_json(instance, report));
        if (!series_path.empty())
            write_file(series_path, interplan::series_to_csv(
                                        interplan::cumulative_series(instance, report.best_plan)));
        std::cout << "best total " << report.best_cost.total.str() << " (f1 "
                  << report.best_cost.f1.str() << ", f2 " << report.best_cost.f2.str() << "), "
                  << report.spread.unique_count << " distinct restart best(s)\n";
        std::cerr << "wall time " << report.wall_time.count() << " s\n";
        return kExitOk;
    }

    if (oracle->parsed()) {
        const auto instance = load_instance(instance_path);
        const auto report = interplan::solve_exhaustive(instance);
        write_file(output_path, interplan::report_to_json(instance, report));
        std::cout << "exact optimum " << report.best_cost.total.str() << ", "
                  << report.unique_plans.size() << " optimal plan(s)\n";
        std::cerr << "wall time " << report.wall_time.count() << " s\n";
        return kExitOk;
    }

    if (compare->parsed()) {
        const auto instance = load_instance(instance_path);
        const auto baseline_plan = load_plan(instance, baseline_path);
        const auto optimal_plan = load_plan(instance, optimal_path);
        const auto table = interplan::compare(instance, baseline_plan, optimal_plan);
        write_file(output_path, interplan::table_to_json(table));
        if (!markdown_path.empty()) write_file(markdown_path, interplan::table_to_markdown(table));
        std::cout << "total " << table.grand_total.individual.str() << " -> "
                  << table.grand_total.optimal.str() << " (ratio " << table.grand_total.ratio
                  << ")\n";
        return kExitOk;
    }

    const auto instance = load_instance(instance_path);
    const auto plan = load_plan(instance, plan_path);
    const auto report = interplan::check_all(instance, plan);
    std::cout << interplan::violations_to_json(report);
    return report.feasible() ? kExitOk : kExitDomain;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const interplan::NoFeasiblePlanError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const interplan::OracleCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const interplan::InfeasiblePlanError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
