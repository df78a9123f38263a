#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colombeau/basic_space.hpp"
#include "colombeau/kernels/slope_fit.hpp"

namespace colombeau {

struct Measurement {
  std::string key;
  double value;
};

/// Outcome of one property check: named measurements plus a verdict.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<Measurement> measurements;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<CheckResult> checks;

  bool passed() const;
};

struct SuiteOptions {
  int threads = 1;
};

/// Deterministic probe generator (splitmix64), independent of the standard
/// library's distribution implementations.
class ProbeRng {
 public:
  explicit ProbeRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform(double lo, double hi);

 private:
  std::uint64_t state_;
};

/// n probe pairs: bumps centred in [-0.4, 0.4] with radius in [0.3, 0.8],
/// base points in [-1, 1].
std::vector<std::pair<TestObject, Point>> probe_pairs(int n, std::uint64_t seed);

/// Grid used by the negligibility suites: ratio sqrt(2) from 2^-1 to 2^-8,
/// where the q + 2 decay of even mollifiers stays above round-off.
EpsilonGrid negligibility_grid();

CheckResult check_embedding_lie(const SuiteOptions& opts);
CheckResult check_smooth_lie(const SuiteOptions& opts);
CheckResult check_dual_route(const SuiteOptions& opts);
CheckResult check_equivariance_battery(const SuiteOptions& opts);
CheckResult check_sigma_equivariance(const SuiteOptions& opts);
CheckResult check_composition_order(const SuiteOptions& opts);
CheckResult check_linearity(const SuiteOptions& opts);
CheckResult check_unit(const SuiteOptions& opts);
CheckResult check_sigma_products(const SuiteOptions& opts);
CheckResult check_iota_products(const SuiteOptions& opts);
CheckResult check_smooth_negligible(const SuiteOptions& opts);
CheckResult check_grading_signatures(const SuiteOptions& opts);
CheckResult check_heaviside_power(const SuiteOptions& opts);
CheckResult check_h_times_delta(const SuiteOptions& opts);
CheckResult check_delta_squared(const SuiteOptions& opts);
CheckResult check_distributional_derivative(const SuiteOptions& opts);
CheckResult check_flow_invariants(const SuiteOptions& opts);
CheckResult check_slope_fit_exactness(const SuiteOptions& opts);
CheckResult check_test_object_invariants(const SuiteOptions& opts);

/// Checks belonging to a built-in demo (cli-contract is handled by the
/// scenario runner). Throws std::invalid_argument for unknown names.
std::vector<CheckResult> run_demo_checks(const std::string& demo, const SuiteOptions& opts);

/// Criteria 1..10 in-process.
CriterionResult run_criterion(int id, const SuiteOptions& opts);
std::string criterion_title(int id);

}  // namespace colombeau
