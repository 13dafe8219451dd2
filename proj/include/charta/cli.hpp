#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace charta {

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0; // 0 for exact or pass/fail-only checks
    std::string detail;  // first counterexample or note, empty when passing
};

// Outcome of one CLI command: the command echo, every executed check exactly
// once in execution order, the emitted artifact, and the process exit code.
// Exit codes: 0 success, 1 validation failure, 2 computation or verification
// failure, 3 file or parse failure.
struct RunReport {
    std::string command;
    std::vector<CheckResult> checks;
    nlohmann::ordered_json artifact; // table or report payload, null when none
    int exit_code = 0;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
    std::string to_csv() const;
};

// kind: "auto" detects by shape ("fusion" -> ring, "s" -> modular,
// "order"/"table" -> group, "field"/"mult" -> hopf); or one of
// "ring", "modular", "group", "hopf" to force.
RunReport cmd_validate(const std::string& path, const std::string& kind, double tol);

// validate -> commutativity -> semisimplicity -> table -> class sizes ->
// idempotents -> orthogonality -> integrality, emitting the table.
RunReport cmd_chartable(const std::string& path, double tol, std::uint64_t seed);

RunReport cmd_modular_chartable(const std::string& path, double tol);
RunReport cmd_modular_crosscheck(const std::string& path, double tol);

// Axioms, class-function and center dimensions, integral and cointegral
// spaces, unimodularity flags, grouplike and pivotal elements, and, when
// unimodular, the Maschke indicator with exact Fourier and Radford checks.
RunReport cmd_hopf_report(const std::string& path);

// Normalized Fourier pair and the transforms of a center basis.
RunReport cmd_hopf_fourier(const std::string& path);

// method: "burnside" diagonalizes class sums; "repring" synthesizes the
// representation ring from the Burnside table and reruns the generic
// fusion-ring pipeline on it.
RunReport cmd_group_chartable(const std::string& path, const std::string& method, double tol,
                              std::uint64_t seed);

// argv minus the program name; renders the report to out, returns exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace charta
