#pragma once

#include <span>
#include <utility>
#include <vector>

#include "colombeau/kernels/interval.hpp"
#include "colombeau/kernels/jet.hpp"
#include "colombeau/kernels/smooth_function.hpp"

namespace colombeau {

struct FlowOptions {
  double tol = 1e-12;
  /// Every RK stage must stay inside; leaving it raises EscapeError.
  Interval window{-50.0, 50.0};
  int max_steps = 1 << 20;
};

/// Fl_tau(x0) for x' = field(x), classical RK4 with the step count doubled
/// until two successive counts agree to 15*tol (the RK4 step-doubling error
/// estimate). Throws EscapeError or NumericalError.
double ode_flow(double x0, const SmoothFunction& field, double tau, FlowOptions opts = {});

/// RK4 flow map with a step count frozen at construction, so that the map is
/// one fixed smooth function of the initial point. The Jet path carries the
/// variational equation for the Jacobian alongside the state.
class FlowMap {
 public:
  /// The step count is the largest one ode_flow would pick over `probes`.
  FlowMap(SmoothFunction field, double tau, FlowOptions opts = {},
          std::span<const double> probes = default_probes());

  static std::span<const double> default_probes();

  double tau() const { return tau_; }
  int steps() const { return steps_; }

  double operator()(double x) const;
  Jet operator()(const Jet& x) const;
  /// (Fl_tau(x), d/dx Fl_tau(x)) to full jet order.
  std::pair<Jet, Jet> with_jacobian(const Jet& x) const;

 private:
  SmoothFunction field_;
  SmoothFunction field_derivative_;
  double tau_;
  int steps_;
  FlowOptions opts_;
};

}  // namespace colombeau
