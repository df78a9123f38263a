#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "colombeau/registry.hpp"
#include "colombeau/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"colombeau_lab: scenario runner for the Colombeau algebra toolkit"};
  std::string scenario;
  bool list = false;
  colombeau::RunOverrides ov;
  double eps_min = 0, eps_max = 0, tol = 0;
  int depth = 0, q = 0, threads = 1;
  std::string out;

  app.add_option("--scenario", scenario, "scenario file (JSON)");
  auto* o_out = app.add_option("--out", out, "report path (JSONL); overrides the scenario's output");
  auto* o_eps_min = app.add_option("--eps-min", eps_min, "smallest epsilon of the sweep");
  auto* o_eps_max = app.add_option("--eps-max", eps_max, "largest epsilon of the sweep");
  auto* o_depth = app.add_option("--depth", depth, "derivative depth for grade scenarios");
  auto* o_q = app.add_option("--q", q, "mollifier order (negligibility order in negligible mode)");
  auto* o_tol = app.add_option("--tol", tol, "pass tolerance of the scenario's comparison");
  auto* o_threads = app.add_option("--threads", threads, "worker threads for sweeps")
                        ->check(CLI::PositiveNumber);
  app.add_flag("--list", list, "list built-in functions, fields, diffeos and demos");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : colombeau::kStatusParseError;
  }

  if (list) {
    std::cout << colombeau::list_builtins();
    return 0;
  }
  if (scenario.empty()) {
    std::cerr << "colombeau_lab: --scenario or --list is required\n" << app.help();
    return colombeau::kStatusParseError;
  }
  if (*o_out) ov.out = out;
  if (*o_eps_min) ov.eps_min = eps_min;
  if (*o_eps_max) ov.eps_max = eps_max;
  if (*o_depth) ov.depth = depth;
  if (*o_q) ov.q = q;
  if (*o_tol) ov.tol = tol;
  if (*o_threads) ov.threads = threads;
  return colombeau::run_scenario_file(scenario, ov);
}
