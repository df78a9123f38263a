#include "colombeau/kernels/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "colombeau/kernels/errors.hpp"

namespace colombeau {
namespace {

void check_window(double x, const Interval& window, double tau) {
  if (!(window.contains(x))) {
    std::ostringstream os;
    os.precision(17);
    os << "flow trajectory escaped working window [" << window.lo() << ", " << window.hi()
       << "] at x = " << x << " (tau = " << tau << ")";
    throw EscapeError(os.str());
  }
}

template <class State, class Rhs>
State rk4(State x, double tau, int steps, Rhs&& rhs) {
  const double h = tau / steps;
  for (int i = 0; i < steps; ++i) {
    const State k1 = rhs(x);
    const State k2 = rhs(x + (0.5 * h) * k1);
    const State k3 = rhs(x + (0.5 * h) * k2);
    const State k4 = rhs(x + h * k3);
    x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return x;
}

// (x, D) pair state for the variational equation.
struct JetPair {
  Jet x;
  Jet d;
  friend JetPair operator+(const JetPair& a, const JetPair& b) { return {a.x + b.x, a.d + b.d}; }
  friend JetPair operator*(double s, const JetPair& a) { return {s * a.x, s * a.d}; }
};

int choose_steps(double x0, const SmoothFunction& field, double tau, const FlowOptions& opts) {
  auto rhs = [&](double x) {
    check_window(x, opts.window, tau);
    return field(x);
  };
  if (tau == 0.0) return 1;
  int n = 1;
  double prev = rk4(x0, tau, n, rhs);
  while (true) {
    if (2 * n > opts.max_steps) {
      throw NumericalError("ode_flow: step limit reached without meeting tolerance");
    }
    const double next = rk4(x0, tau, 2 * n, rhs);
    if (std::fabs(next - prev) <= 15.0 * opts.tol) return 2 * n;
    prev = next;
    n *= 2;
  }
}

}  // namespace

double ode_flow(double x0, const SmoothFunction& field, double tau, FlowOptions opts) {
  check_window(x0, opts.window, tau);
  const int n = choose_steps(x0, field, tau, opts);
  return rk4(x0, tau, n, [&](double x) {
    check_window(x, opts.window, tau);
    return field(x);
  });
}

std::span<const double> FlowMap::default_probes() {
  static const std::array<double, 5> probes{-2.0, -1.0, 0.0, 1.0, 2.0};
  return probes;
}

FlowMap::FlowMap(SmoothFunction field, double tau, FlowOptions opts, std::span<const double> probes)
    : field_(std::move(field)),
      field_derivative_(field_.derivative()),
      tau_(tau),
      steps_(1),
      opts_(opts) {
  for (double p : probes) {
    if (opts_.window.contains(p)) steps_ = std::max(steps_, choose_steps(p, field_, tau_, opts_));
  }
}

double FlowMap::operator()(double x) const {
  check_window(x, opts_.window, tau_);
  return rk4(x, tau_, steps_, [&](double y) {
    check_window(y, opts_.window, tau_);
    return field_(y);
  });
}

Jet FlowMap::operator()(const Jet& x) const {
  check_window(x.value(), opts_.window, tau_);
  return rk4(x, tau_, steps_, [&](const Jet& y) {
    check_window(y.value(), opts_.window, tau_);
    return field_(y);
  });
}

std::pair<Jet, Jet> FlowMap::with_jacobian(const Jet& x) const {
  check_window(x.value(), opts_.window, tau_);
  const JetPair out = rk4(JetPair{x, Jet(1.0)}, tau_, steps_, [&](const JetPair& s) {
    check_window(s.x.value(), opts_.window, tau_);
    return JetPair{field_(s.x), field_derivative_(s.x) * s.d};
  });
  return {out.x, out.d};
}

}  // namespace colombeau
