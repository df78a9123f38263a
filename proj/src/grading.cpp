#include "colombeau/grading.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "colombeau/kernels/errors.hpp"
#include "colombeau/kernels/format.hpp"
#include "colombeau/kernels/parallel.hpp"
#include "colombeau/kernels/quadrature.hpp"

namespace colombeau {
namespace {

std::vector<SlopeSample> samples_of(const EpsilonGrid& grid, const std::vector<double>& values,
                                    double noise_floor = 0.0, int depth = 0) {
  std::vector<SlopeSample> s;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    s.push_back({grid[i], std::fabs(values[i]), noise_floor * std::pow(grid[i], -depth)});
  }
  return s;
}

bool is_flat(const std::vector<SlopeSample>& samples, const SlopeFit& fit, double slack,
             double floor) {
  if (fit.machine_zero() || fit.points_used < 2) return false;
  std::vector<SlopeSample> usable;
  for (const auto& s : samples) {
    if (s.value >= std::max(floor, s.floor)) usable.push_back(s);
  }
  std::sort(usable.begin(), usable.end(),
            [](const SlopeSample& a, const SlopeSample& b) { return a.epsilon < b.epsilon; });
  usable.resize(static_cast<std::size_t>(fit.points_used));
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& s : usable) {
    lo = std::min(lo, std::log(s.value));
    hi = std::max(hi, std::log(s.value));
  }
  const double span = std::log(usable.back().epsilon / usable.front().epsilon);
  return hi - lo <= slack * span;
}

SeriesReport make_series(int depth, int q, std::vector<double> values, const EpsilonGrid& grid,
                         const GradingOptions& opts) {
  SeriesReport s;
  s.depth = depth;
  s.q = q;
  s.sup_values = std::move(values);
  const auto samples = samples_of(grid, s.sup_values, opts.noise_floor, depth);
  s.fit = fit_slope(samples, opts.fit);
  s.flat = is_flat(samples, s.fit, opts.slack, opts.fit.floor);
  return s;
}

std::vector<Representative> derivative_tower(const Representative& r, int depth,
                                             const GradingOptions& opts) {
  if (depth < 0) throw std::invalid_argument("derivative depth must be >= 0");
  std::vector<Representative> tower{r};
  const VectorField ddx = VectorField::translation();
  for (int j = 1; j <= depth; ++j) tower.push_back(lie_derivative(ddx, tower.back(), opts.lie));
  return tower;
}

/// Moderate classification from the slopes; fills classification, order, diagnostic.
void classify_moderate(GradingReport& rep, const GradingOptions& opts) {
  bool any_fitted = false;
  double min_slope = std::numeric_limits<double>::infinity();
  for (const auto& s : rep.series) {
    if (s.fit.machine_zero()) continue;
    any_fitted = true;
    if (!s.flat && s.fit.r2 < opts.min_r2) {
      rep.classification = Classification::neither;
      rep.order = 0;
      rep.diagnostic = std::string(s.fit.r2 < opts.degenerate_r2 ? "degenerate fit" : "poor fit") +
                       " at depth " + std::to_string(s.depth) + ", q " + std::to_string(s.q) +
                       ": r2 = " + format_number(s.fit.r2);
      return;
    }
    min_slope = std::min(min_slope, s.fit.slope);
  }
  if (!any_fitted) {
    rep.classification = Classification::machine_zero;
    rep.order = 0;
    return;
  }
  rep.classification = Classification::moderate;
  rep.order = std::max(0, static_cast<int>(std::ceil(-min_slope - opts.slack)));
}

}  // namespace

std::string to_string(Classification c) {
  switch (c) {
    case Classification::moderate: return "moderate";
    case Classification::negligible: return "negligible";
    case Classification::neither: return "neither";
    case Classification::machine_zero: return "machine-zero";
  }
  return "neither";
}

double GradingReport::fitted_slope() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& s : series) {
    if (!s.fit.machine_zero()) m = std::min(m, s.fit.slope);
  }
  return std::isinf(m) ? 0.0 : m;
}

double GradingReport::r2() const {
  double m = 1.0;
  for (const auto& s : series) {
    if (!s.fit.machine_zero()) m = std::min(m, s.fit.r2);
  }
  return m;
}

std::string GradingReport::classification_label() const {
  switch (classification) {
    case Classification::moderate: return "moderate(" + std::to_string(order) + ")";
    case Classification::negligible: return "negligible(order " + std::to_string(order) + ")";
    default: return to_string(classification);
  }
}

std::vector<double> probe_points(const Representative& r, double eps, double radius,
                                 const GradingOptions& opts) {
  if (opts.probes < 2) throw std::invalid_argument("sup_sweep needs at least 2 probes");
  const Interval k = opts.compact;
  std::vector<double> pts;
  for (int i = 0; i < opts.probes; ++i) {
    pts.push_back(k.lo() + k.width() * static_cast<double>(i) / (opts.probes - 1));
  }
  for (double s : r.singular_points()) {
    for (int j = -kLayerProbes; j <= kLayerProbes; ++j) {
      const double p = s + eps * radius * static_cast<double>(j) / (kLayerProbes + 1);
      if (k.contains(p)) pts.push_back(p);
    }
  }
  return pts;
}

std::vector<double> sup_sweep(const Representative& r, const MomentMollifier& phi,
                              const EpsilonGrid& grid, const GradingOptions& opts) {
  std::vector<std::vector<double>> probes(grid.size());
  std::vector<std::pair<std::size_t, double>> jobs;
  for (std::size_t e = 0; e < grid.size(); ++e) {
    probes[e] = probe_points(r, grid[e], phi.radius(), opts);
    for (double p : probes[e]) jobs.emplace_back(e, p);
  }
  std::vector<double> cell(jobs.size());
  parallel_for(jobs.size(), opts.threads, [&](std::size_t idx) {
    const auto [e, p] = jobs[idx];
    cell[idx] = std::fabs(r(scaled_net(phi, p, grid[e]), Point{p}));
  });
  std::vector<double> sup(grid.size(), 0.0);
  for (std::size_t idx = 0; idx < jobs.size(); ++idx) {
    const std::size_t e = jobs[idx].first;
    if (!std::isfinite(cell[idx])) {
      throw NumericalError("sup_sweep: non-finite value for " + r.label() + " at eps = " +
                           format_number(grid[e]));
    }
    sup[e] = std::max(sup[e], cell[idx]);
  }
  return sup;
}

GradingReport grade_moderate(const Representative& r, const MomentMollifier& phi,
                             const EpsilonGrid& grid, int depth, const GradingOptions& opts) {
  GradingReport rep(grid);
  rep.derivative_depth = depth;
  const auto tower = derivative_tower(r, depth, opts);
  for (int j = 0; j <= depth; ++j) {
    rep.series.push_back(make_series(j, phi.order(), sup_sweep(tower[j], phi, grid, opts), grid,
                                     opts));
  }
  classify_moderate(rep, opts);
  return rep;
}

GradingReport grade_negligible(const Representative& r, const EpsilonGrid& grid, int depth,
                               const std::vector<int>& q_list, const GradingOptions& opts) {
  if (q_list.empty()) throw std::invalid_argument("grade_negligible needs at least one q");
  if (!std::is_sorted(q_list.begin(), q_list.end())) {
    throw std::invalid_argument("grade_negligible needs ascending q values");
  }
  GradingReport rep(grid);
  rep.derivative_depth = depth;
  const auto tower = derivative_tower(r, depth, opts);
  for (int q : q_list) {
    const MomentMollifier phi = make_moment_mollifier(q, opts.mollifier_radius);
    for (int j = 0; j <= depth; ++j) {
      rep.series.push_back(make_series(j, q, sup_sweep(tower[j], phi, grid, opts), grid, opts));
    }
  }

  bool all_zero = true;
  bool pass = true;
  int order = std::numeric_limits<int>::max();
  for (const auto& s : rep.series) {
    if (s.fit.machine_zero()) continue;
    all_zero = false;
    const double expected = s.q + 1.0;
    if (s.fit.slope < expected - opts.slack || (!s.flat && s.fit.r2 < opts.min_r2)) {
      pass = false;
      continue;
    }
    order = std::min(order, static_cast<int>(std::floor(s.fit.slope + opts.slack)));
  }
  if (all_zero) {
    rep.classification = Classification::machine_zero;
    rep.order = 0;
  } else if (pass) {
    rep.classification = Classification::negligible;
    rep.order = order;
  } else {
    classify_moderate(rep, opts);
    if (rep.diagnostic.empty()) rep.diagnostic = "slope below q + 1 - slack";
  }
  return rep;
}

std::pair<bool, GradingReport> quotient_equal(const Representative& a, const Representative& b,
                                              const EpsilonGrid& grid, int depth,
                                              const std::vector<int>& q_list,
                                              const GradingOptions& opts) {
  GradingReport rep = grade_negligible(rep_sub(a, b), grid, depth, q_list, opts);
  const bool equal = rep.classification == Classification::negligible ||
                     rep.classification == Classification::machine_zero;
  return {equal, std::move(rep)};
}

std::vector<double> weak_integrals(const Representative& r, const Form& psi,
                                   const MomentMollifier& phi, const EpsilonGrid& grid,
                                   const AssociationOptions& opts) {
  const Interval dom = psi.support();
  std::vector<double> out(grid.size());
  parallel_for(grid.size(), opts.threads, [&](std::size_t i) {
    const double eps = grid[i];
    std::vector<double> breaks;
    for (double s : r.singular_points()) {
      for (double b : {s - eps * phi.radius(), s, s + eps * phi.radius()}) {
        if (b > dom.lo() && b < dom.hi()) breaks.push_back(b);
      }
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    out[i] = integrate_piecewise(
        [&](double x) {
          const double w = psi(x);
          if (w == 0.0) return 0.0;
          return r(scaled_net(phi, x, eps), Point{x}) * w;
        },
        dom, breaks, QuadratureOptions{opts.quad_tol});
  });
  return out;
}

namespace {

AssociationReport analyze(const EpsilonGrid& grid, std::vector<double> integrals,
                          const Form& psi, const AssociationOptions& opts) {
  if (grid.size() < 3) throw std::invalid_argument("association needs at least 3 eps values");
  AssociationReport rep(grid, std::move(integrals));
  const std::size_t n = grid.size();
  const double e1 = grid[n - 1], e2 = grid[n - 2], e3 = grid[n - 3];
  const double i1 = rep.integrals[n - 1], i2 = rep.integrals[n - 2], i3 = rep.integrals[n - 3];
  rep.extrapolated_limit = (e2 * i1 - e1 * i2) / (e2 - e1);
  rep.truncated_limit = (e3 * i2 - e2 * i3) / (e3 - e2);
  const SmoothFunction g = psi.density();
  const double scale = integrate([&](double x) { return std::fabs(g(x)); }, psi.support(), 1e-12);
  rep.tolerance = opts.rel_tol * scale;
  rep.converged = std::fabs(i1 - i2) <= rep.tolerance &&
                  std::fabs(rep.extrapolated_limit - rep.truncated_limit) <= rep.tolerance;
  rep.associated = rep.converged && std::fabs(rep.extrapolated_limit) <= rep.tolerance;
  rep.decay = fit_slope(samples_of(grid, rep.integrals), opts.fit);
  return rep;
}

}  // namespace

AssociationReport associate(const Representative& a, const Representative& b, const Form& psi,
                            const MomentMollifier& phi, const EpsilonGrid& grid,
                            const AssociationOptions& opts) {
  return analyze(grid, weak_integrals(rep_sub(a, b), psi, phi, grid, opts), psi, opts);
}

WeakLimit weak_limit(const Representative& a, const Form& psi, const MomentMollifier& phi,
                     const EpsilonGrid& grid, const AssociationOptions& opts) {
  AssociationReport rep = analyze(grid, weak_integrals(a, psi, phi, grid, opts), psi, opts);
  WeakLimit w{rep.extrapolated_limit, rep.converged, std::move(rep)};
  return w;
}

}  // namespace colombeau
