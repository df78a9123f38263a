#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "colombeau/suites.hpp"

namespace colombeau {

inline constexpr int kReportSchema = 1;

enum ExitStatus : int {
  kStatusPass = 0,
  kStatusCriterionFailure = 1,
  kStatusParseError = 2,
  kStatusNumericalError = 3,
};

/// Command-line values that replace the corresponding scenario fields.
struct RunOverrides {
  std::optional<double> eps_min;
  std::optional<double> eps_max;
  std::optional<int> depth;
  std::optional<int> q;
  std::optional<double> tol;
  std::optional<int> threads;
  std::optional<std::string> out;
};

struct RunOutcome {
  int status = kStatusPass;
  /// Line-delimited JSON records: config, one per check, summary.
  std::string report;
  /// Human-readable lines, one per check plus a verdict.
  std::string summary;
  /// Resolved report destination; empty when the scenario names none.
  std::string output_path;
  /// Diagnostic for statuses 2 and 3 ("line:column: message" for parse errors).
  std::string error;
};

// Scenario file (JSON object):
//   name    string, required
//   kind    verify | grade | associate | lie-test | diffeo-test | demo
//   objects kind-specific object, see README
//   output  report path, optional
RunOutcome run_scenario(std::string_view text, const RunOverrides& overrides = {});

/// Reads `path`, runs it and writes the report to the resolved output path
/// (stdout when there is none). Returns the exit status.
int run_scenario_file(const std::string& path, const RunOverrides& overrides = {});

/// The cli-contract demo: fixed embedded scenarios exercising every exit
/// status and report determinism, run in-process.
std::vector<CheckResult> check_cli_contract(const SuiteOptions& opts);

}  // namespace colombeau
