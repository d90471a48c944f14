// End-to-end checks of the command line tool: spawns the real binary,
// captures exit codes and output, and verifies the documented contract
// (0 ok, 1 domain problem, 2 unusable invocation).

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int failures = 0;
std::string tool;
std::string instance_path;
std::string work_dir;

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string quoted(const std::string& s) { return "'" + s + "'"; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

RunResult run_tool(const std::string& env_prefix, const std::vector<std::string>& args) {
    const std::string out_path = work_dir + "/stdout.txt";
    const std::string err_path = work_dir + "/stderr.txt";
    std::string command = env_prefix.empty() ? "" : env_prefix + " ";
    command += quoted(tool);
    for (const auto& arg : args) command += " " + quoted(arg);
    command += " > " + quoted(out_path) + " 2> " + quoted(err_path);

    const int status = std::system(command.c_str());
    RunResult result;
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

void check(const std::string& label, const RunResult& result, int expected_code,
           const std::string& out_needle = "", const std::string& err_needle = "") {
    bool ok = result.code == expected_code;
    if (ok && !out_needle.empty()) ok = result.out.find(out_needle) != std::string::npos;
    if (ok && !err_needle.empty()) ok = result.err.find(err_needle) != std::string::npos;
    if (ok) {
        std::printf("[ok] %s\n", label.c_str());
    } else {
        ++failures;
        std::printf("[FAIL] %s\n  exit=%d\n  stdout: %s\n  stderr: %s\n", label.c_str(),
                    result.code, result.out.c_str(), result.err.c_str());
    }
    std::fflush(stdout);
}

void check_flag(const std::string& label, bool ok, const std::string& detail = "") {
    if (ok) {
        std::printf("[ok] %s\n", label.c_str());
    } else {
        ++failures;
        std::printf("[FAIL] %s\n  %s\n", label.c_str(), detail.c_str());
    }
    std::fflush(stdout);
}

const char* kTinyInstance = R"({
  "horizon": 3,
  "operators": [{ "id": "OP1", "name": "Operator" }],
  "objects": [
    { "id": "N1", "name": "Object", "unavailability_cost": "10", "owner": "OP1", "affects": [] }
  ],
  "intervention_types": [
    { "id": "T1", "name": "Type", "targets": ["N1"], "cost": "1",
      "g_min": 1, "g_max": 3, "responsible": ["OP1"] }
  ]
})";

const char* kInvalidInstance = R"({
  "horizon": 6,
  "operators": [{ "id": "OP1", "name": "Operator" }],
  "objects": [
    { "id": "N1", "name": "Object", "unavailability_cost": "10", "owner": "OP1", "affects": [] }
  ],
  "intervention_types": [
    { "id": "T1", "name": "Type", "targets": ["N1"], "cost": "1",
      "g_min": 5, "g_max": 2, "responsible": ["OP1"] }
  ]
})";

} // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::fprintf(stderr, "usage: cli_checks <tool> <instance.json>\n");
        return 2;
    }
    tool = argv[1];
    instance_path = argv[2];

    char tmpl[] = "/tmp/interplan-cli-XXXXXX";
    if (mkdtemp(tmpl) == nullptr) {
        std::fprintf(stderr, "cannot create work directory\n");
        return 2;
    }
    work_dir = tmpl;

    const std::string tiny = work_dir + "/tiny.json";
    const std::string invalid = work_dir + "/invalid.json";
    const std::string malformed = work_dir + "/malformed.json";
    const std::string bad_params = work_dir + "/params.json";
    const std::string plan = work_dir + "/baseline.json";
    spit(tiny, kTinyInstance);
    spit(invalid, kInvalidInstance);
    spit(malformed, "{ this is not json");
    spit(bad_params, R"({"restart": 4})");

    check("validate accepts the bundled instance",
          run_tool("", {"validate", instance_path}), 0, "instance valid: 12 objects");
    check("validate reports a missing file as unusable",
          run_tool("", {"validate", work_dir + "/absent.json"}), 2, "", "cannot read");
    check("validate reports malformed JSON as unusable",
          run_tool("", {"validate", malformed}), 2, "", "instance file:");
    check("validate reports rule violations as a domain error",
          run_tool("", {"validate", invalid}), 1, "", "is invalid");

    check("baseline writes the individual program",
          run_tool("", {"baseline", instance_path, "-o", plan}), 0,
          "individual program total 1506 (f1 105, f2 1401)");
    check("the baseline plan file passes validate-plan",
          run_tool("", {"validate-plan", instance_path, plan}), 0, "\"feasible\": true");

    const std::string report_a = work_dir + "/report_a.json";
    const std::string report_b = work_dir + "/report_b.json";
    const std::string series = work_dir + "/series.csv";
    check("solve finds a feasible program",
          run_tool("INTERPLAN_THREADS=1",
                   {"solve", instance_path, "--restarts", "4", "--seed", "5", "-o", report_a,
                    "--series", series}),
          0, "best total");
    check("solve again with full parallelism",
          run_tool("INTERPLAN_THREADS=4",
                   {"solve", instance_path, "--restarts", "4", "--seed", "5", "-o", report_b}),
          0, "best total");
    check_flag("solve reports are byte-identical across thread counts",
               slurp(report_a) == slurp(report_b));
    check_flag("the cumulative series starts with its header",
               slurp(series).rfind("t,f1_cum,f2_cum,total_cum\n", 0) == 0);

    check("a malformed thread override is rejected",
          run_tool("INTERPLAN_THREADS=abc",
                   {"solve", instance_path, "--restarts", "2", "-o", report_a}),
          2, "", "INTERPLAN_THREADS");
    check("unusable solver parameter files are rejected",
          run_tool("", {"solve", instance_path, "--params", bad_params, "-o", report_a}), 2, "",
          "unknown key");

    const std::string oracle_report = work_dir + "/oracle.json";
    check("oracle refuses the bundled instance and names the bit count",
          run_tool("", {"oracle", instance_path, "-o", oracle_report}), 1, "", "108");
    check("oracle solves a tiny instance exactly",
          run_tool("", {"oracle", tiny, "-o", oracle_report}), 0,
          "exact optimum 11, 3 optimal plan(s)");
    check_flag("the oracle report carries the best plan",
               slurp(oracle_report).find("\"best\"") != std::string::npos);

    const std::string table = work_dir + "/table.json";
    const std::string table_md = work_dir + "/table.md";
    check("compare renders the self-comparison",
          run_tool("", {"compare", instance_path, plan, plan, "-o", table, "--markdown",
                        table_md}),
          0, "total 1506 -> 1506 (ratio 1.00)");
    check_flag("the markdown table carries the grand total row",
               slurp(table_md).find("| Total cost | 1506 | 1506 | 1.00 | 0 |") !=
                   std::string::npos);

    const std::string broken_plan = work_dir + "/broken.json";
    spit(broken_plan, R"({"horizon": 18, "executions": {"I1": [5, 6]}})");
    check("validate-plan flags an infeasible plan as a domain error",
          run_tool("", {"validate-plan", instance_path, broken_plan}), 1,
          "\"feasible\": false");
    check("compare refuses an infeasible plan",
          run_tool("", {"compare", instance_path, plan, broken_plan, "-o", table}), 1, "",
          "optimal plan is infeasible");

    check("unknown subcommands are a usage error",
          run_tool("", {"frobnicate", instance_path}), 2);
    check("a missing required option is a usage error",
          run_tool("", {"solve", instance_path}), 2);
    check("help is available and exits cleanly", run_tool("", {"--help"}), 0, "Usage");

    if (failures == 0) {
        std::printf("cli: all checks passed\n");
        return 0;
    }
    std::printf("cli: %d check(s) FAILED\n", failures);
    return 1;
}
