#include "colombeau/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "colombeau/diffeo.hpp"
#include "colombeau/grading.hpp"
#include "colombeau/kernels/format.hpp"
#include "colombeau/kernels/ode.hpp"
#include "colombeau/kernels/parallel.hpp"
#include "colombeau/kernels/quadrature.hpp"
#include "colombeau/lie.hpp"
#include "colombeau/registry.hpp"

namespace colombeau {
namespace {

SmoothFunction fn(const std::string& name) {
  auto f = find_function(name);
  if (!f) throw std::logic_error("registry lacks " + name);
  return *f;
}

std::vector<Distribution> distribution_battery() {
  return {Distribution::delta(0.1), Distribution::delta_derivative(-0.2, 1),
          Distribution::heaviside(0.05), Distribution::regular("sin", fn("sin"))};
}

std::vector<VectorField> field_battery() {
  return {VectorField::translation(), VectorField::euler(), VectorField::sine_field(0.3)};
}

std::vector<Diffeomorphism> diffeo_battery() {
  return {shift(0.3), scaling(2.0), cubic(), sine_perturbation(0.3)};
}

/// Running maximum of an error with the case that produced it.
struct Worst {
  double value = 0.0;
  std::string where;

  void update(double err, const std::string& label) {
    if (!(err <= value)) {
      value = err;
      where = label;
    }
  }
};

std::string probe_label(const TestObject& w, Point p) {
  return "omega on [" + format_number(w.support().lo()) + "," + format_number(w.support().hi()) +
         "], p = " + format_number(p.x);
}

/// Evaluates f(i) for each index in parallel and folds the errors in index
/// order, so the reported worst case does not depend on scheduling.
template <class F>
Worst worst_over(std::size_t n, int threads, F&& f) {
  std::vector<std::pair<double, std::string>> out(n);
  parallel_for(n, threads, [&](std::size_t i) { out[i] = f(i); });
  Worst w;
  for (const auto& [err, label] : out) w.update(err, label);
  return w;
}

CheckResult fail_if(CheckResult r, bool ok, const std::string& why) {
  if (!ok) {
    r.passed = false;
    r.detail += (r.detail.empty() ? "" : "; ") + why;
  }
  return r;
}

const Form& witness() {
  static const TestObject psi = make_bump(0.1, 1.0);
  return psi;
}

}  // namespace

bool CriterionResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::uint64_t ProbeRng::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double ProbeRng::uniform(double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::vector<std::pair<TestObject, Point>> probe_pairs(int n, std::uint64_t seed) {
  ProbeRng rng(seed);
  std::vector<std::pair<TestObject, Point>> out;
  for (int i = 0; i < n; ++i) {
    const double c = rng.uniform(-0.4, 0.4);
    const double r = rng.uniform(0.3, 0.8);
    const double p = rng.uniform(-1.0, 1.0);
    out.emplace_back(make_bump(c, r), Point{p});
  }
  return out;
}

EpsilonGrid negligibility_grid() { return EpsilonGrid::geometric(0.5, 1.0 / 256.0, std::sqrt(2.0)); }

CheckResult check_embedding_lie(const SuiteOptions& opts) {
  const auto us = distribution_battery();
  const auto xs = field_battery();
  const auto probes = probe_pairs(20, 1001);
  struct Case {
    std::size_t u, x, k;
  };
  std::vector<Case> cases;
  for (std::size_t u = 0; u < us.size(); ++u) {
    for (std::size_t x = 0; x < xs.size(); ++x) {
      for (std::size_t k = 0; k < probes.size(); ++k) cases.push_back({u, x, k});
    }
  }
  std::vector<std::array<double, 3>> err(cases.size());
  std::vector<std::string> label(cases.size());
  parallel_for(cases.size(), opts.threads, [&](std::size_t i) {
    const auto& [u, x, k] = cases[i];
    const auto& [omega, p] = probes[k];
    const Representative r = embed_distribution(us[u]);
    const auto closed = lie_distribution_closed(xs[x], us[u]);
    const double ref = pairing(*closed, omega);
    err[i] = {std::fabs(lie_rep_direct(xs[x], r, omega, p) - ref),
              std::fabs(lie_rep_formula(xs[x], r, omega, p) - ref),
              std::fabs(lie_rep_formula(xs[x], r, omega, p, {true}) - ref)};
    label[i] = us[u].to_string() + ", " + xs[x].name() + ", " + probe_label(omega, p);
  });
  Worst direct, formula, fd;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    direct.update(err[i][0], label[i]);
    formula.update(err[i][1], label[i]);
    fd.update(err[i][2], label[i]);
  }
  CheckResult r{"iota commutes with Lie derivatives", true,
                {{"cases", static_cast<double>(cases.size())},
                 {"max_err_direct", direct.value},
                 {"max_err_formula", formula.value},
                 {"max_err_formula_fd", fd.value},
                 {"tolerance", 1e-6}},
                ""};
  r = fail_if(r, direct.value <= 1e-6, "direct route at " + direct.where);
  r = fail_if(r, formula.value <= 1e-6, "formula route at " + formula.where);
  return fail_if(r, fd.value <= 1e-6, "finite-difference formula route at " + fd.where);
}

CheckResult check_smooth_lie(const SuiteOptions& opts) {
  const std::vector<std::pair<std::string, SmoothFunction>> fs{{"sin", fn("sin")},
                                                               {"x3", fn("x3")}};
  const auto xs = field_battery();
  const auto probes = probe_pairs(20, 1002);
  const std::size_t n = fs.size() * xs.size() * probes.size();
  std::vector<std::array<double, 2>> err(n);
  parallel_for(n, opts.threads, [&](std::size_t i) {
    const auto& [name, f] = fs[i / (xs.size() * probes.size())];
    const VectorField& x = xs[(i / probes.size()) % xs.size()];
    const auto& [omega, p] = probes[i % probes.size()];
    const Representative r = embed_smooth(name, f);
    const double ref = lie_smooth(x, f)(p.x);
    err[i] = {std::fabs(lie_rep_direct(x, r, omega, p) - ref),
              std::fabs(lie_rep_formula(x, r, omega, p, {true}) - ref)};
  });
  double direct = 0.0, formula = 0.0;
  for (const auto& e : err) {
    direct = std::max(direct, e[0]);
    formula = std::max(formula, e[1]);
  }
  CheckResult r{"sigma commutes with Lie derivatives", true,
                {{"cases", static_cast<double>(n)},
                 {"max_err_direct", direct},
                 {"max_err_formula_fd", formula},
                 {"tolerance", 1e-7}},
                ""};
  r = fail_if(r, direct <= 1e-7, "direct route");
  return fail_if(r, formula <= 1e-7, "formula route");
}

CheckResult check_dual_route(const SuiteOptions& opts) {
  const auto us = distribution_battery();
  const SmoothFunction s = fn("sin");
  std::vector<Representative> reps{embed_smooth("sin", s), embed_smooth("x3", fn("x3"))};
  for (const auto& u : us) reps.push_back(embed_distribution(u));
  for (const auto& u : us) reps.push_back(rep_mul(embed_distribution(u), embed_smooth("sin", s)));
  const std::vector<std::pair<int, int>> pairs{{0, 2}, {2, 2}, {1, 3}, {0, 0}};
  for (auto [a, b] : pairs) {
    reps.push_back(rep_mul(embed_distribution(us[a]), embed_distribution(us[b])));
  }
  const auto xs = field_battery();
  const auto probes = probe_pairs(20, 1003);
  const std::size_t n = reps.size() * xs.size() * probes.size();
  std::vector<std::array<double, 2>> rel(n);
  std::vector<std::string> label(n);
  parallel_for(n, opts.threads, [&](std::size_t i) {
    const Representative& r = reps[i / (xs.size() * probes.size())];
    const VectorField& x = xs[(i / probes.size()) % xs.size()];
    const auto& [omega, p] = probes[i % probes.size()];
    const double direct = lie_rep_direct(x, r, omega, p);
    const double fd = lie_rep_formula(x, r, omega, p, {true});
    const double exact = lie_rep_formula(x, r, omega, p);
    auto scaled = [](double a, double b) {
      return std::fabs(a - b) / std::max(1e-5 * std::fabs(b), 1e-10) * 1e-5;
    };
    rel[i] = {scaled(direct, fd), scaled(direct, exact)};
    label[i] = r.label() + ", " + x.name() + ", " + probe_label(omega, p);
  });
  Worst fd, exact;
  for (std::size_t i = 0; i < n; ++i) {
    fd.update(rel[i][0], label[i]);
    exact.update(rel[i][1], label[i]);
  }
  CheckResult r{"flow route agrees with the chain-rule route", true,
                {{"cases", static_cast<double>(n)},
                 {"max_rel_err_fd_formula", fd.value},
                 {"max_rel_err_exact_formula", exact.value},
                 {"tolerance", 1e-5}},
                ""};
  r = fail_if(r, fd.value <= 1e-5, "finite-difference formula at " + fd.where);
  return fail_if(r, exact.value <= 1e-5, "exact-tangent formula at " + exact.where);
}

CheckResult check_equivariance_battery(const SuiteOptions& opts) {
  const auto mus = diffeo_battery();
  const auto us = distribution_battery();
  const auto probes = probe_pairs(20, 1004);
  const Worst w = worst_over(mus.size() * us.size(), opts.threads, [&](std::size_t i) {
    const Diffeomorphism& mu = mus[i / us.size()];
    const Distribution& u = us[i % us.size()];
    return std::pair{check_equivariance(mu, u, probes), mu.name() + ", " + u.to_string()};
  });
  CheckResult r{"iota is diffeomorphism equivariant", true,
                {{"cases", static_cast<double>(mus.size() * us.size() * probes.size())},
                 {"max_discrepancy", w.value},
                 {"tolerance", 1e-8}},
                ""};
  return fail_if(r, w.value <= 1e-8, "at " + w.where);
}

CheckResult check_sigma_equivariance(const SuiteOptions&) {
  const auto probes = probe_pairs(20, 1005);
  int mismatches = 0, cases = 0;
  for (const auto& mu : diffeo_battery()) {
    for (const char* name : {"sin", "x3", "exp_window"}) {
      const SmoothFunction f = fn(name);
      const Representative lhs = act_on_representative(mu, embed_smooth(name, f));
      const Representative rhs = embed_smooth(name, pullback_smooth(mu, f));
      for (const auto& [omega, p] : probes) {
        ++cases;
        if (lhs(omega, p) != rhs(omega, p)) ++mismatches;
      }
    }
  }
  CheckResult r{"sigma is diffeomorphism equivariant (bitwise)", true,
                {{"cases", static_cast<double>(cases)},
                 {"mismatches", static_cast<double>(mismatches)}},
                ""};
  return fail_if(r, mismatches == 0, "inexact sigma equivariance");
}

CheckResult check_composition_order(const SuiteOptions&) {
  const std::vector<std::pair<Diffeomorphism, Diffeomorphism>> pairs{
      {cubic(), shift(0.3)}, {sine_perturbation(0.3), scaling(2.0)}};
  const Representative rep = rep_add(
      rep_mul(embed_distribution(Distribution::delta(0.1)), embed_smooth("sin", fn("sin"))),
      embed_distribution(Distribution::heaviside(0.05)));
  const auto probes = probe_pairs(20, 1006);
  double matched = 0.0, swapped = 0.0;
  for (const auto& [mu, nu] : pairs) {
    const Representative direct = act_on_representative(compose(mu, nu), rep);
    const Representative inner_first = act_on_representative(nu, act_on_representative(mu, rep));
    const Representative outer_first = act_on_representative(mu, act_on_representative(nu, rep));
    for (const auto& [omega, p] : probes) {
      const double d = direct(omega, p);
      matched = std::max(matched, std::fabs(d - inner_first(omega, p)));
      swapped = std::max(swapped, std::fabs(d - outer_first(omega, p)));
    }
  }
  CheckResult r{"act(mu o nu) = act(nu) after act(mu)", true,
                {{"max_discrepancy", matched},
                 {"other_order_discrepancy", swapped},
                 {"tolerance", 1e-8}},
                ""};
  return fail_if(r, matched <= 1e-8, "composition law");
}

CheckResult check_linearity(const SuiteOptions&) {
  const auto us = distribution_battery();
  const auto probes = probe_pairs(20, 1007);
  const double a = 1.7, b = -0.6;
  double worst = 0.0;
  int p_dependence = 0;
  for (std::size_t i = 0; i < us.size(); ++i) {
    for (std::size_t j = 0; j < us.size(); ++j) {
      const Representative lhs = embed_distribution(a * us[i] + b * us[j]);
      const Representative ru = embed_distribution(us[i]);
      const Representative rv = embed_distribution(us[j]);
      for (const auto& [omega, p] : probes) {
        const double x = a * ru(omega, p), y = b * rv(omega, p);
        const double err = std::fabs(lhs(omega, p) - (x + y));
        const double scale = 8.0 * std::numeric_limits<double>::epsilon() *
                             (std::fabs(x) + std::fabs(y));
        worst = std::max(worst, scale > 0.0 ? err / scale : (err > 0.0 ? 2.0 : 0.0));
        if (ru(omega, p) != ru(omega, Point{p.x + 0.37})) ++p_dependence;
      }
    }
  }
  CheckResult r{"iota is linear and p-independent", true,
                {{"max_err_in_roundoff_units", worst},
                 {"p_dependent_cases", static_cast<double>(p_dependence)}},
                ""};
  r = fail_if(r, worst <= 1.0, "linearity beyond round-off");
  return fail_if(r, p_dependence == 0, "embedded distribution depends on p");
}

CheckResult check_unit(const SuiteOptions&) {
  const Representative one = embed_smooth("one", fn("one"));
  std::vector<Representative> reps{embed_smooth("sin", fn("sin"))};
  for (const auto& u : distribution_battery()) reps.push_back(embed_distribution(u));
  const auto probes = probe_pairs(20, 1008);
  int mismatches = 0, cases = 0;
  for (const auto& r : reps) {
    const Representative left = rep_mul(one, r), right = rep_mul(r, one);
    for (const auto& [omega, p] : probes) {
      const double v = r(omega, p);
      cases += 2;
      if (left(omega, p) != v) ++mismatches;
      if (right(omega, p) != v) ++mismatches;
    }
  }
  CheckResult r{"sigma(1) is the multiplicative unit", true,
                {{"cases", static_cast<double>(cases)},
                 {"mismatches", static_cast<double>(mismatches)}},
                ""};
  return fail_if(r, mismatches == 0, "sigma(1) R differs from R");
}

CheckResult check_sigma_products(const SuiteOptions&) {
  const std::vector<std::string> names{"sin", "cos", "x2_window"};
  const auto probes = probe_pairs(20, 1009);
  int mismatches = 0, cases = 0;
  for (const auto& f : names) {
    for (const auto& g : names) {
      const Representative lhs = rep_mul(embed_smooth(f, fn(f)), embed_smooth(g, fn(g)));
      const Representative rhs = embed_smooth(f + "*" + g, fn(f) * fn(g));
      for (const auto& [omega, p] : probes) {
        ++cases;
        if (lhs(omega, p) != rhs(omega, p)) ++mismatches;
      }
    }
  }
  CheckResult r{"sigma(f) sigma(g) = sigma(fg) (bitwise)", true,
                {{"cases", static_cast<double>(cases)},
                 {"mismatches", static_cast<double>(mismatches)}},
                ""};
  return fail_if(r, mismatches == 0, "sigma is not multiplicative");
}

namespace {

/// Smallest fitted slope over the report, +inf when every series is machine zero.
double min_slope(const GradingReport& rep) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& s : rep.series) {
    if (!s.fit.machine_zero()) m = std::min(m, s.fit.slope);
  }
  return m;
}

bool negligible(const GradingReport& rep) {
  return rep.classification == Classification::negligible ||
         rep.classification == Classification::machine_zero;
}

GradingOptions grading_options(const SuiteOptions& opts) {
  GradingOptions g;
  g.threads = opts.threads;
  return g;
}

/// JSON-friendly stand-in for an infinite slope (all series machine zero).
double reported_slope(double s) { return std::isinf(s) ? 1e300 : s; }

}  // namespace

CheckResult check_iota_products(const SuiteOptions& opts) {
  const std::vector<std::string> names{"sin", "cos", "x2_window"};
  const EpsilonGrid grid = negligibility_grid();
  const GradingOptions g = grading_options(opts);
  CheckResult r{"iota(f) iota(g) = iota(fg) in the quotient", true, {}, ""};
  for (int q : {2, 4}) {
    double factor_slope = std::numeric_limits<double>::infinity();
    for (const auto& f : names) {
      const Representative diff =
          rep_sub(embed_distribution(Distribution::regular(f, fn(f))), embed_smooth(f, fn(f)));
      const GradingReport rep = grade_negligible(diff, grid, 1, {q}, g);
      factor_slope = std::min(factor_slope, min_slope(rep));
      if (!negligible(rep)) r = fail_if(r, false, f + " not negligible at q = " + std::to_string(q));
    }
    r.measurements.push_back({"q" + std::to_string(q) + "_min_factor_slope",
                              reported_slope(factor_slope)});
    r = fail_if(r, factor_slope >= q + 0.8, "factor slope below q + 0.8 at q = " + std::to_string(q));
    double pair_slope = std::numeric_limits<double>::infinity();
    int equal = 0, pairs = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = i; j < names.size(); ++j) {
        const SmoothFunction f = fn(names[i]), h = fn(names[j]);
        const Representative a = rep_mul(embed_distribution(Distribution::regular(names[i], f)),
                                         embed_distribution(Distribution::regular(names[j], h)));
        const Representative b =
            embed_distribution(Distribution::regular(names[i] + "*" + names[j], f * h));
        const auto [same, rep] = quotient_equal(a, b, grid, 1, {q}, g);
        ++pairs;
        if (same) {
          ++equal;
        } else {
          r = fail_if(r, false,
                      names[i] + "*" + names[j] + " not equal at q = " + std::to_string(q) +
                          " (" + rep.classification_label() + ")");
        }
        pair_slope = std::min(pair_slope, min_slope(rep));
      }
    }
    r.measurements.push_back({"q" + std::to_string(q) + "_pairs_equal", static_cast<double>(equal)});
    r.measurements.push_back({"q" + std::to_string(q) + "_pairs", static_cast<double>(pairs)});
    r.measurements.push_back({"q" + std::to_string(q) + "_min_pair_slope",
                              reported_slope(pair_slope)});
  }
  return r;
}

CheckResult check_smooth_negligible(const SuiteOptions& opts) {
  const std::vector<std::string> names{"sin", "cos", "one", "x", "x2", "x3", "x4", "x5", "exp_window"};
  const EpsilonGrid grid = negligibility_grid();
  const GradingOptions g = grading_options(opts);
  CheckResult r{"(iota - sigma)(f) is negligible", true, {}, ""};
  for (int q : {2, 4}) {
    double worst = std::numeric_limits<double>::infinity();
    int machine_zero = 0;
    for (const auto& f : names) {
      const Representative diff =
          rep_sub(embed_distribution(Distribution::regular(f, fn(f))), embed_smooth(f, fn(f)));
      const GradingReport rep = grade_negligible(diff, grid, 1, {q}, g);
      if (rep.classification == Classification::machine_zero) ++machine_zero;
      if (!negligible(rep)) {
        r = fail_if(r, false, f + " at q = " + std::to_string(q) + ": " +
                                  rep.classification_label() + " " + rep.diagnostic);
      }
      worst = std::min(worst, min_slope(rep));
    }
    r.measurements.push_back({"q" + std::to_string(q) + "_min_slope", reported_slope(worst)});
    r.measurements.push_back({"q" + std::to_string(q) + "_machine_zero",
                              static_cast<double>(machine_zero)});
    r = fail_if(r, worst >= q + 0.8, "slope below q + 0.8 at q = " + std::to_string(q));
  }
  return r;
}

CheckResult check_grading_signatures(const SuiteOptions& opts) {
  const MomentMollifier phi = make_moment_mollifier(0);
  const EpsilonGrid grid = EpsilonGrid::standard();
  const GradingOptions g = grading_options(opts);
  const Representative d = embed_distribution(Distribution::delta(0.0));
  const Representative h = embed_distribution(Distribution::heaviside(0.0));
  const Representative h2h = rep_sub(rep_mul(h, h), h);
  const GradingReport rd = grade_moderate(d, phi, grid, 0, g);
  const GradingReport rd2 = grade_moderate(rep_mul(d, d), phi, grid, 0, g);
  const GradingReport rh = grade_moderate(h2h, phi, grid, 0, g);
  const GradingReport rhn = grade_negligible(h2h, grid, 0, {2}, g);
  CheckResult r{"grading signatures", true,
                {{"slope_iota_delta", rd.fitted_slope()},
                 {"order_iota_delta", static_cast<double>(rd.order)},
                 {"slope_iota_delta_squared", rd2.fitted_slope()},
                 {"order_iota_delta_squared", static_cast<double>(rd2.order)},
                 {"slope_h2_minus_h", rh.fitted_slope()},
                 {"h2_minus_h_negligible", negligible(rhn) ? 1.0 : 0.0}},
                ""};
  r = fail_if(r, std::fabs(rd.fitted_slope() + 1.0) <= 0.1, "iota(delta) slope");
  r = fail_if(r, rd.classification == Classification::moderate && rd.order == 1,
              "iota(delta) is " + rd.classification_label());
  r = fail_if(r, std::fabs(rd2.fitted_slope() + 2.0) <= 0.1, "iota(delta)^2 slope");
  r = fail_if(r, rd2.classification == Classification::moderate && rd2.order == 2,
              "iota(delta)^2 is " + rd2.classification_label());
  r = fail_if(r, std::fabs(rh.fitted_slope()) <= 0.1, "iota(H)^2 - iota(H) slope");
  return fail_if(r, !negligible(rhn), "iota(H)^2 - iota(H) graded negligible");
}

namespace {

AssociationOptions association_options(const SuiteOptions& opts) {
  AssociationOptions a;
  a.threads = opts.threads;
  return a;
}

}  // namespace

CheckResult check_heaviside_power(const SuiteOptions& opts) {
  const MomentMollifier phi = make_moment_mollifier(0);
  const Representative h = embed_distribution(Distribution::heaviside(0.0));
  CheckResult r{"iota(H)^n is associated with iota(H)", true, {}, ""};
  for (int n : {2, 3}) {
    const AssociationReport a =
        associate(rep_pow(h, n), h, witness(), phi, EpsilonGrid::standard(), association_options(opts));
    const std::string k = "n" + std::to_string(n);
    r.measurements.push_back({k + "_limit", a.extrapolated_limit});
    r.measurements.push_back({k + "_decay_slope", a.decay.slope});
    r.measurements.push_back({k + "_converged", a.converged ? 1.0 : 0.0});
    r = fail_if(r, a.converged && std::fabs(a.extrapolated_limit) <= 1e-3,
                k + ": limit " + format_number(a.extrapolated_limit));
    r = fail_if(r, !a.decay.machine_zero() && a.decay.slope >= 0.8,
                k + ": decay slope " + format_number(a.decay.slope));
  }
  return r;
}

CheckResult check_h_times_delta(const SuiteOptions& opts) {
  const MomentMollifier phi = make_moment_mollifier(0);
  const Representative h = embed_distribution(Distribution::heaviside(0.0));
  const Representative d = embed_distribution(Distribution::delta(0.0));
  const Representative hd = rep_mul(h, d);
  const AssociationOptions ao = association_options(opts);
  const AssociationReport a =
      associate(hd, rep_scale(0.5, d), witness(), phi, EpsilonGrid::standard(), ao);
  const WeakLimit w = weak_limit(hd, witness(), phi, EpsilonGrid::standard(), ao);
  const double target = 0.5 * witness()(0.0);
  CheckResult r{"iota(H) iota(delta) is associated with iota(delta)/2", true,
                {{"mollifier_even", phi.is_even() ? 1.0 : 0.0},
                 {"limit_difference", a.extrapolated_limit},
                 {"weak_limit", w.value},
                 {"expected_weak_limit", target},
                 {"weak_limit_error", std::fabs(w.value - target)}},
                ""};
  r = fail_if(r, phi.is_even(), "mollifier is not even");
  r = fail_if(r, a.associated, "not associated");
  return fail_if(r, w.converged && std::fabs(w.value - target) <= 1e-3, "weak limit");
}

CheckResult check_delta_squared(const SuiteOptions& opts) {
  const MomentMollifier phi = make_moment_mollifier(0);
  const Representative d = embed_distribution(Distribution::delta(0.0));
  const Representative d2 = rep_mul(d, d);
  const AssociationOptions ao = association_options(opts);
  const WeakLimit w = weak_limit(d2, witness(), phi, EpsilonGrid::standard(), ao);
  CheckResult r{"iota(delta)^2 has no associated distribution", true,
                {{"divergence_slope", w.report.decay.slope}, {"converged", w.converged ? 1.0 : 0.0}},
                ""};
  r = fail_if(r, !w.converged, "weak integrals converged");
  r = fail_if(r, std::fabs(w.report.decay.slope + 1.0) <= 0.2,
              "divergence slope " + format_number(w.report.decay.slope));
  int converged = 0;
  for (const auto& u : {Distribution::delta(0.0), Distribution::heaviside(0.0),
                        Distribution::regular("sin", fn("sin"))}) {
    const AssociationReport a =
        associate(d2, embed_distribution(u), witness(), phi, EpsilonGrid::standard(), ao);
    if (a.converged) ++converged;
  }
  r.measurements.push_back({"battery_converged", static_cast<double>(converged)});
  return fail_if(r, converged == 0, "associated with a battery distribution");
}

CheckResult check_distributional_derivative(const SuiteOptions&) {
  const VectorField ddx = VectorField::translation();
  const std::vector<Distribution> us{Distribution::delta(0.0), Distribution::heaviside(0.0),
                                     Distribution::regular("sin", fn("sin"))};
  const std::vector<TestObject> phis{make_bump(0.0, 1.0), make_bump(0.3, 0.5),
                                     make_bump(-0.2, 0.7), make_bump(0.1, 0.25)};
  double worst = 0.0;
  for (const auto& u : us) {
    for (const auto& phi : phis) {
      const double flow = flow_derivative_pairing(ddx, u, phi);
      const FormVariation dphi(phi.density().derivative(), phi.support());
      worst = std::max(worst, std::fabs(flow + pairing(u, dphi)));
    }
  }
  CheckResult r{"<u', phi> by the translation flow equals -<u, phi'>", true,
                {{"max_discrepancy", worst}, {"tolerance", 1e-6}},
                ""};
  return fail_if(r, worst <= 1e-6, "flow derivative");
}

CheckResult check_flow_invariants(const SuiteOptions&) {
  const double tol = 1e-12;
  FlowOptions fo;
  fo.tol = tol;
  const std::vector<SmoothFunction> fields{
      VectorField::sine_field(0.3).coefficient(),
      SmoothFunction::generic([](const auto& x) {
        using std::sin;
        return sin(x);
      })};
  double comp = 0.0, inv = 0.0;
  for (const auto& f : fields) {
    for (double x : {-2.0, -0.5, 0.0, 1.0, 2.5}) {
      for (auto [s, t] : {std::pair{0.3, 0.7}, {-0.4, 0.9}, {1.1, -0.6}}) {
        comp = std::max(comp, std::fabs(ode_flow(ode_flow(x, f, s, fo), f, t, fo) -
                                        ode_flow(x, f, s + t, fo)));
        inv = std::max(inv, std::fabs(ode_flow(ode_flow(x, f, s, fo), f, -s, fo) - x));
      }
    }
  }
  double closed = 0.0;
  for (const auto& x : {VectorField::translation(), VectorField::euler()}) {
    for (double x0 : {-1.0, 0.2, 1.0}) {
      for (double tau : {0.5, std::log(2.0), -0.8}) {
        closed = std::max(closed, std::fabs(x.flow_point(x0, tau) -
                                            ode_flow(x0, x.coefficient(), tau, fo)) /
                                      std::max(1.0, std::fabs(x.flow_point(x0, tau))));
      }
    }
  }
  CheckResult r{"flow composition and inversion", true,
                {{"max_composition_err", comp},
                 {"max_inversion_err", inv},
                 {"max_closed_form_err", closed},
                 {"tolerance", 10 * tol}},
                ""};
  r = fail_if(r, comp <= 10 * tol, "composition");
  r = fail_if(r, inv <= 10 * tol, "inversion");
  return fail_if(r, closed <= 10 * tol, "closed form vs RK4");
}

CheckResult check_slope_fit_exactness(const SuiteOptions&) {
  const EpsilonGrid grid = EpsilonGrid::standard();
  double slope_err = 0.0, r2_err = 0.0;
  for (double a : {-2.0, -1.0, 0.0, 0.5, 1.0, 3.0}) {
    for (double c : {7.0, 0.3}) {
      std::vector<SlopeSample> s;
      for (double e : grid.values()) s.push_back({e, c * std::pow(e, a)});
      const SlopeFit fit = fit_slope(s);
      slope_err = std::max(slope_err, std::fabs(fit.slope - a));
      r2_err = std::max(r2_err, std::fabs(fit.r2 - 1.0));
    }
  }
  std::vector<SlopeSample> wobble;
  const EpsilonGrid coarse = EpsilonGrid::powers_of_two(4, 12);
  for (double e : coarse.values()) {
    wobble.push_back({e, e * e * e * (1.0 + 0.1 * std::sin(1.0 / e))});
  }
  const double wobble_slope = fit_slope(wobble).slope;
  CheckResult r{"fit_slope is exact on power laws", true,
                {{"max_slope_err", slope_err},
                 {"max_r2_err", r2_err},
                 {"perturbed_cubic_slope", wobble_slope}},
                ""};
  r = fail_if(r, slope_err <= 1e-10 && r2_err <= 1e-10, "power-law fit");
  return fail_if(r, std::fabs(wobble_slope - 3.0) <= 0.2, "perturbed cubic");
}

CheckResult check_test_object_invariants(const SuiteOptions&) {
  const double tol = 1e-12;
  double unit = 0.0;
  for (const auto& b : {make_bump(0.0, 1.0), make_bump(2.0, 0.5), make_bump(-0.3, 0.05)}) {
    unit = std::max(unit, std::fabs(b.integral(tol) - 1.0));
    for (const auto& mu : diffeo_battery()) {
      unit = std::max(unit, std::fabs(pushforward(mu, b).integral(tol) - 1.0));
    }
  }
  double moments = 0.0;
  for (int q : {0, 1, 2, 3, 4, 6}) {
    const MomentMollifier phi = make_moment_mollifier(q);
    const EpsilonGrid grid = EpsilonGrid::standard();
    for (double e : grid.values()) {
      unit = std::max(unit, std::fabs(scaled_net(phi, 0.3, e).integral(tol) - 1.0));
    }
    const SmoothFunction g = phi.profile().density();
    for (int k = 1; k <= q; ++k) {
      const double m = integrate([&](double y) { return std::pow(y, k) * g(y); },
                                 phi.profile().support(), tol);
      moments = std::max(moments, std::fabs(m));
    }
  }
  double zero_mean = 0.0;
  ProbeRng rng(1010);
  for (const auto& x : field_battery()) {
    for (int i = 0; i < 5; ++i) {
      const TestObject w = make_bump(rng.uniform(-1.0, 1.0), rng.uniform(0.1, 1.0));
      zero_mean = std::max(zero_mean, std::fabs(lie_derivative_form(x, w).integral(tol)));
    }
  }
  double functorial = 0.0;
  const TestObject w = make_bump(0.2, 0.6);
  const auto mus = diffeo_battery();
  for (std::size_t i = 0; i < mus.size(); ++i) {
    for (std::size_t j = 0; j < mus.size(); ++j) {
      const TestObject lhs = pushforward(compose(mus[i], mus[j]), w);
      const TestObject rhs = pushforward(mus[i], pushforward(mus[j], w));
      const Interval s = lhs.support();
      for (int k = 0; k <= 64; ++k) {
        const double y = s.lo() + s.width() * k / 64.0;
        functorial = std::max(functorial, std::fabs(lhs(y) - rhs(y)));
      }
    }
  }
  CheckResult r{"test objects: unit integral, moments, zero-mean variations", true,
                {{"max_unit_integral_err", unit},
                 {"max_moment", moments},
                 {"max_variation_integral", zero_mean},
                 {"max_functoriality_err", functorial}},
                ""};
  r = fail_if(r, unit <= 10 * tol, "unit integral");
  r = fail_if(r, moments <= 1e-10, "moments");
  r = fail_if(r, zero_mean <= 10 * tol, "variation integral");
  return fail_if(r, functorial <= 1e-8, "pushforward functoriality");
}

std::vector<CheckResult> run_demo_checks(const std::string& demo, const SuiteOptions& opts) {
  using Check = CheckResult (*)(const SuiteOptions&);
  static const std::vector<std::pair<std::string, std::vector<Check>>> table{
      {"embedding-lie", {check_embedding_lie, check_smooth_lie}},
      {"dual-route", {check_dual_route}},
      {"equivariance",
       {check_equivariance_battery, check_sigma_equivariance, check_composition_order}},
      {"linearity-unit", {check_linearity, check_unit}},
      {"product-consistency", {check_sigma_products, check_iota_products}},
      {"smooth-negligible", {check_smooth_negligible}},
      {"grading-signatures", {check_grading_signatures}},
      {"heaviside-power", {check_heaviside_power}},
      {"h-times-delta", {check_h_times_delta}},
      {"delta-squared", {check_delta_squared}},
      {"distributional-derivative", {check_distributional_derivative}},
      {"kernel-invariants",
       {check_flow_invariants, check_slope_fit_exactness, check_test_object_invariants}},
  };
  for (const auto& [name, checks] : table) {
    if (name != demo) continue;
    std::vector<CheckResult> out;
    for (Check c : checks) out.push_back(c(opts));
    return out;
  }
  throw std::invalid_argument("unknown demo '" + demo + "'");
}

std::string criterion_title(int id) {
  static const char* titles[] = {
      "",
      "embedding commutation with Lie derivatives",
      "dual-route agreement of the Lie derivative",
      "diffeomorphism equivariance",
      "linearity and unit",
      "products of smooth functions at both levels",
      "negligibility of (iota - sigma)(smooth)",
      "grading signatures",
      "association demos",
      "distributional derivative by the translation flow",
      "kernel invariants",
      "command-line contract",
  };
  if (id < 1 || id > 11) throw std::invalid_argument("criterion id must be 1..11");
  return titles[id];
}

CriterionResult run_criterion(int id, const SuiteOptions& opts) {
  static const std::vector<std::vector<std::string>> demos{
      {},
      {"embedding-lie"},
      {"dual-route"},
      {"equivariance"},
      {"linearity-unit"},
      {"product-consistency"},
      {"smooth-negligible"},
      {"grading-signatures"},
      {"heaviside-power", "h-times-delta", "delta-squared"},
      {"distributional-derivative"},
      {"kernel-invariants"},
  };
  if (id < 1 || id > 10) throw std::invalid_argument("in-process criteria are 1..10");
  CriterionResult r{id, criterion_title(id), {}};
  for (const auto& d : demos[id]) {
    auto checks = run_demo_checks(d, opts);
    r.checks.insert(r.checks.end(), checks.begin(), checks.end());
  }
  return r;
}

}  // namespace colombeau
