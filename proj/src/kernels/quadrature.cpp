#include "colombeau/kernels/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "colombeau/kernels/errors.hpp"
#include "colombeau/kernels/simd.hpp"

namespace colombeau {
namespace {

GaussLegendreRule build_rule() {
  GaussLegendreRule rule{};
  constexpr int n = kGaussPoints;
  for (int i = 0; i < n; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  // Ascending order, and exact symmetry so odd integrands cancel.
  std::reverse(rule.nodes.begin(), rule.nodes.end());
  std::reverse(rule.weights.begin(), rule.weights.end());
  for (int i = 0; i < n / 2; ++i) {
    const double x = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[n - 1 - i] + rule.weights[i]);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = rule.weights[n - 1 - i] = w;
  }
  rule.nodes[n / 2] = 0.0;
  return rule;
}

struct Panel {
  double value;
  double abs_value;
};

class Integrator {
 public:
  Integrator(const std::function<double(double)>& f, double total_width, QuadratureOptions opts)
      : f_(f), rule_(gauss_legendre_15()), total_width_(total_width), opts_(opts) {}

  Panel panel(double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    std::array<double, kGaussPoints> x{}, fx{};
    simd::affine_map(rule_.nodes, half, mid, x);
    for (int i = 0; i < kGaussPoints; ++i) fx[i] = f_(x[i]);
    const simd::WeightedSum s = simd::weighted_sum(rule_.weights, fx);
    return {s.sum * half, s.abs_sum * std::fabs(half)};
  }

  double refine(double a, double b, Panel whole, int depth) {
    const double m = 0.5 * (a + b);
    const Panel left = panel(a, m);
    const Panel right = panel(m, b);
    const double halves = left.value + right.value;
    const double diff = std::fabs(halves - whole.value);
    const double local_tol = std::max(opts_.tol, opts_.rel_floor * scale_) * (b - a) / total_width_;
    const double roundoff =
        64.0 * std::numeric_limits<double>::epsilon() * (left.abs_value + right.abs_value);
    if (!std::isfinite(halves)) {
      fail(a, b, "non-finite integrand");
    }
    if (diff <= std::max(local_tol, roundoff)) return halves;
    if (depth >= opts_.max_depth) {
      fail(a, b, "refinement depth exhausted (panel difference " + std::to_string(diff) + ")");
    }
    return refine(a, m, left, depth + 1) + refine(m, b, right, depth + 1);
  }

  /// Magnitude estimate of the integral of |f| from the initial panels.
  void set_scale(double scale) { scale_ = scale; }

  [[noreturn]] static void fail(double a, double b, const std::string& why) {
    std::ostringstream os;
    os.precision(17);
    os << "quadrature did not converge on [" << a << ", " << b << "]: " << why;
    throw QuadratureError(os.str(), Interval(a, b));
  }

 private:
  const std::function<double(double)>& f_;
  const GaussLegendreRule& rule_;
  double total_width_;
  QuadratureOptions opts_;
  double scale_ = 0.0;
};

}  // namespace

const GaussLegendreRule& gauss_legendre_15() {
  static const GaussLegendreRule rule = build_rule();
  return rule;
}

double integrate(const std::function<double(double)>& f, Interval domain, QuadratureOptions opts) {
  Integrator in(f, domain.width(), opts);
  const Panel whole = in.panel(domain.lo(), domain.hi());
  in.set_scale(whole.abs_value);
  return in.refine(domain.lo(), domain.hi(), whole, 0);
}

double integrate_piecewise(const std::function<double(double)>& f, Interval domain,
                           std::span<const double> breakpoints, QuadratureOptions opts) {
  std::vector<double> cuts{domain.lo()};
  for (double b : breakpoints) {
    if (b > domain.lo() && b < domain.hi()) cuts.push_back(b);
  }
  cuts.push_back(domain.hi());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  Integrator in(f, domain.width(), opts);
  std::vector<Panel> first;
  double scale = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    first.push_back(in.panel(cuts[i], cuts[i + 1]));
    scale += first.back().abs_value;
  }
  in.set_scale(scale);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    total += in.refine(cuts[i], cuts[i + 1], first[i], 0);
  }
  return total;
}

}  // namespace colombeau
