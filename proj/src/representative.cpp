#include <algorithm>
#include <cmath>
#include <memory>

#include "colombeau/basic_space.hpp"
#include "colombeau/kernels/finite_diff.hpp"
#include "colombeau/kernels/format.hpp"

namespace colombeau {
namespace {

std::vector<double> merged(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::embedded_distribution: return "embedded-distribution";
    case Provenance::embedded_smooth: return "embedded-smooth";
    case Provenance::product: return "product";
    case Provenance::sum: return "sum";
    case Provenance::scaled: return "scaled";
    case Provenance::lie_derivative: return "lie-derivative";
    case Provenance::diffeo_pullback: return "diffeo-pullback";
    case Provenance::custom: return "custom";
  }
  return "custom";
}

Representative::Representative(EvalFn eval, Provenance provenance, std::string label,
                               TangentFn tangent, std::vector<double> singular_points)
    : eval_(std::make_shared<const EvalFn>(std::move(eval))),
      provenance_(provenance),
      label_(std::move(label)),
      tangent_(std::move(tangent)),
      singular_points_(std::move(singular_points)) {}

double Representative::tangent(const TestObject& omega, Point p, const FormVariation& eta,
                               double v, SlotSteps steps) const {
  if (tangent_) return tangent_(omega, p, eta, v);
  return tangent_fd(omega, p, eta, v, steps);
}

double Representative::tangent_fd(const TestObject& omega, Point p, const FormVariation& eta,
                                  double v, SlotSteps steps) const {
  double slot = 0.0;
  const double eta_norm = sup_norm(eta);
  if (eta_norm > 0.0) {
    slot = d1_directional(*this, omega, p, eta,
                          default_slot_step(omega, eta, steps.relative_slot_step));
  }
  const double base = (v == 0.0) ? 0.0 : v * point_derivative(*this, omega, p, steps.point_step);
  return slot + base;
}

Representative embed_distribution(const Distribution& u, double tol) {
  return Representative(
      [u, tol](const TestObject& omega, Point) { return pairing(u, omega, tol); },
      Provenance::embedded_distribution, "iota(" + u.to_string() + ")",
      [u, tol](const TestObject&, Point, const FormVariation& eta, double) {
        return pairing(u, eta, tol);
      },
      u.singular_points());
}

Representative embed_smooth(std::string name, SmoothFunction f) {
  const SmoothFunction df = f.derivative();
  return Representative([f](const TestObject&, Point p) { return f(p.x); },
                        Provenance::embedded_smooth, "sigma(" + name + ")",
                        [df](const TestObject&, Point p, const FormVariation&, double v) {
                          return v == 0.0 ? 0.0 : df(p.x) * v;
                        });
}

Representative zero_representative() {
  return Representative([](const TestObject&, Point) { return 0.0; }, Provenance::custom, "0",
                        [](const TestObject&, Point, const FormVariation&, double) { return 0.0; });
}

std::function<double(double, double)> embed_convolution(const Distribution& u,
                                                        const MomentMollifier& phi, double tol) {
  const SmoothFunction profile = phi.profile().density();
  const double r = phi.radius();
  return [u, profile, r, tol](double eps, double x) {
    // phi_eps(. - x): scale the profile by eps, then translate it to x.
    SmoothFunction translated(
        [profile, eps, x](double y) { return profile((y - x) / eps) / eps; },
        [profile, eps, x](const Jet& y) { return profile((y - x) / eps) / eps; });
    return pairing(u, Form(std::move(translated), Interval(x - eps * r, x + eps * r)), tol);
  };
}

Representative rep_add(const Representative& a, const Representative& b) {
  Representative::TangentFn t;
  if (a.has_exact_tangent() && b.has_exact_tangent()) {
    t = [a, b](const TestObject& w, Point p, const FormVariation& e, double v) {
      return a.tangent(w, p, e, v) + b.tangent(w, p, e, v);
    };
  }
  return Representative([a, b](const TestObject& w, Point p) { return a(w, p) + b(w, p); },
                        Provenance::sum, "add(" + a.label() + "," + b.label() + ")", t,
                        merged(a.singular_points(), b.singular_points()));
}

Representative rep_sub(const Representative& a, const Representative& b) {
  Representative::TangentFn t;
  if (a.has_exact_tangent() && b.has_exact_tangent()) {
    t = [a, b](const TestObject& w, Point p, const FormVariation& e, double v) {
      return a.tangent(w, p, e, v) - b.tangent(w, p, e, v);
    };
  }
  return Representative([a, b](const TestObject& w, Point p) { return a(w, p) - b(w, p); },
                        Provenance::sum, "sub(" + a.label() + "," + b.label() + ")", t,
                        merged(a.singular_points(), b.singular_points()));
}

Representative rep_mul(const Representative& a, const Representative& b) {
  Representative::TangentFn t;
  if (a.has_exact_tangent() && b.has_exact_tangent()) {
    t = [a, b](const TestObject& w, Point p, const FormVariation& e, double v) {
      return a.tangent(w, p, e, v) * b(w, p) + a(w, p) * b.tangent(w, p, e, v);
    };
  }
  return Representative([a, b](const TestObject& w, Point p) { return a(w, p) * b(w, p); },
                        Provenance::product, "mul(" + a.label() + "," + b.label() + ")", t,
                        merged(a.singular_points(), b.singular_points()));
}

Representative rep_scale(double c, const Representative& a) {
  Representative::TangentFn t;
  if (a.has_exact_tangent()) {
    t = [a, c](const TestObject& w, Point p, const FormVariation& e, double v) {
      return c * a.tangent(w, p, e, v);
    };
  }
  return Representative([a, c](const TestObject& w, Point p) { return c * a(w, p); },
                        Provenance::scaled, "scale(" + format_number(c) + "," + a.label() + ")", t,
                        a.singular_points());
}

Representative rep_pow(const Representative& a, int n) {
  if (n < 1) throw std::invalid_argument("rep_pow needs n >= 1");
  Representative r = a;
  for (int i = 1; i < n; ++i) r = rep_mul(r, a);
  return r;
}

double default_slot_step(const TestObject& omega, const FormVariation& eta, double relative_step) {
  const double e = sup_norm(eta);
  if (!(e > 0.0)) return relative_step;
  return relative_step * sup_norm(omega) / e;
}

double d1_directional(const Representative& r, const TestObject& omega, Point p,
                      const FormVariation& eta, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("d1_directional: step must be positive");
  return central_diff_richardson(
      [&](double t) { return r(perturbed(omega, eta, t), p); }, 0.0, s);
}

double point_derivative(const Representative& r, const TestObject& omega, Point p, double h) {
  return central_diff_richardson([&](double q) { return r(omega, Point{q}); }, p.x, h);
}

}  // namespace colombeau
