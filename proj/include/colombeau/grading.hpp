#pragma once

#include <string>
#include <utility>
#include <vector>

#include "colombeau/basic_space.hpp"
#include "colombeau/kernels/interval.hpp"
#include "colombeau/kernels/slope_fit.hpp"
#include "colombeau/lie.hpp"
#include "colombeau/test_objects.hpp"

namespace colombeau {

inline constexpr const char* kGradingConvention = "local-surrogate";

struct GradingOptions {
  Interval compact{-1.0, 1.0};
  int probes = 41;
  int threads = 1;
  double slack = 0.2;
  double min_r2 = 0.9;
  /// Below this r2 the series is reported as not following a power law.
  double degenerate_r2 = 0.5;
  double mollifier_radius = 1.0;
  /// Round-off level of a depth-j series is taken as noise_floor * eps^-j
  /// (each Lie derivative of the net costs one factor 1/eps); samples below
  /// it are excluded from the fit like values below fit.floor.
  double noise_floor = 1e-13;
  SlopeFitOptions fit{};
  LieFormulaOptions lie{};
};

enum class Classification { moderate, negligible, neither, machine_zero };
std::string to_string(Classification c);

/// One sup-sweep: sup over the probe grid of |(L^_ddx)^depth R (net(phi,p,eps), p)|.
struct SeriesReport {
  int depth = 0;
  /// Moment order of the mollifier used for this series.
  int q = 0;
  std::vector<double> sup_values;
  SlopeFit fit;
  /// Log-range of the fitted tail is below what a slope of `slack` produces;
  /// r2 is not meaningful for such a series.
  bool flat = false;
};

struct GradingReport {
  explicit GradingReport(EpsilonGrid g) : grid(std::move(g)) {}

  EpsilonGrid grid;
  std::vector<SeriesReport> series;
  Classification classification = Classification::neither;
  /// N for moderate(N), m for negligible(order m).
  int order = 0;
  int derivative_depth = 0;
  std::string diagnostic;
  std::string convention = kGradingConvention;

  /// Smallest fitted slope over the series (0 when every series is machine zero).
  double fitted_slope() const;
  /// Smallest r2 over the fitted series.
  double r2() const;
  std::string classification_label() const;
};

/// Probes per side added around each singular point of R inside K, at
/// offsets proportional to eps * radius.
inline constexpr int kLayerProbes = 7;

/// The 41-point grid on K plus the eps-scaled probes around singular points.
std::vector<double> probe_points(const Representative& r, double eps, double radius,
                                 const GradingOptions& opts = {});

/// Sup-sweep of one representative at one mollifier over the grid.
std::vector<double> sup_sweep(const Representative& r, const MomentMollifier& phi,
                              const EpsilonGrid& grid, const GradingOptions& opts = {});

GradingReport grade_moderate(const Representative& r, const MomentMollifier& phi,
                             const EpsilonGrid& grid, int depth, const GradingOptions& opts = {});

/// Negligible iff for every q the slope of every depth series is at least
/// q + 1 - slack (machine-zero series pass).
GradingReport grade_negligible(const Representative& r, const EpsilonGrid& grid, int depth,
                               const std::vector<int>& q_list, const GradingOptions& opts = {});

std::pair<bool, GradingReport> quotient_equal(const Representative& a, const Representative& b,
                                              const EpsilonGrid& grid, int depth,
                                              const std::vector<int>& q_list,
                                              const GradingOptions& opts = {});

struct AssociationOptions {
  /// Absolute tolerance of the outer x-integral.
  double quad_tol = 1e-11;
  /// Convergence and association tolerance relative to the integral of |psi|.
  double rel_tol = 1e-3;
  int threads = 1;
  SlopeFitOptions fit{};
};

struct AssociationReport {
  AssociationReport(EpsilonGrid g, std::vector<double> values)
      : grid(std::move(g)), integrals(std::move(values)) {}

  EpsilonGrid grid;
  std::vector<double> integrals;
  double extrapolated_limit = 0.0;
  /// Limit extrapolated from the second and third smallest eps.
  double truncated_limit = 0.0;
  double tolerance = 0.0;
  bool converged = false;
  /// converged and |limit| within tolerance.
  bool associated = false;
  /// Log-log slope of |I(eps)|.
  SlopeFit decay;
};

/// I(eps) = int over supp psi of R(net(phi,x,eps), x) psi(x) dx for each eps.
std::vector<double> weak_integrals(const Representative& r, const Form& psi,
                                   const MomentMollifier& phi, const EpsilonGrid& grid,
                                   const AssociationOptions& opts = {});

AssociationReport associate(const Representative& a, const Representative& b, const Form& psi,
                            const MomentMollifier& phi, const EpsilonGrid& grid,
                            const AssociationOptions& opts = {});

struct WeakLimit {
  double value = 0.0;
  bool converged = false;
  AssociationReport report;
};

WeakLimit weak_limit(const Representative& a, const Form& psi, const MomentMollifier& phi,
                     const EpsilonGrid& grid, const AssociationOptions& opts = {});

}  // namespace colombeau
