#pragma once

#include <array>
#include <functional>
#include <span>

#include "colombeau/kernels/interval.hpp"

namespace colombeau {

inline constexpr int kGaussPoints = 15;

/// Nodes and weights of the 15-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::array<double, kGaussPoints> nodes;
  std::array<double, kGaussPoints> weights;
};
const GaussLegendreRule& gauss_legendre_15();

struct QuadratureOptions {
  double tol = 1e-12;   // absolute, over the whole domain
  int max_depth = 50;   // bisection levels below each initial piece
  /// The tolerance actually used is max(tol, rel_floor * A), A the initial
  /// estimate of the integral of |f|: no integral is resolved below the
  /// round-off of its own magnitude.
  double rel_floor = 1e-14;
};

/// Adaptive composite Gauss-Legendre integral of f over `domain`.
///
/// Each panel is compared with the sum of its two halves; a panel is
/// accepted when the difference is below its share of `tol` (proportional to
/// width) or below the round-off floor of the panel sums. Throws
/// QuadratureError carrying the worst panel when `max_depth` is exhausted.
double integrate(const std::function<double(double)>& f, Interval domain,
                 QuadratureOptions opts = {});
inline double integrate(const std::function<double(double)>& f, Interval domain, double tol) {
  QuadratureOptions opts;
  opts.tol = tol;
  return integrate(f, domain, opts);
}

/// Same, but the domain is first split at the given interior points. Use it
/// when the integrand has structure narrower than the domain (a boundary
/// layer of known location) that the initial panel could step over.
double integrate_piecewise(const std::function<double(double)>& f, Interval domain,
                           std::span<const double> breakpoints, QuadratureOptions opts = {});

}  // namespace colombeau
