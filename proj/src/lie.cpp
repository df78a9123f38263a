#include "colombeau/lie.hpp"

#include "colombeau/diffeo.hpp"
#include "colombeau/kernels/finite_diff.hpp"

namespace colombeau {
namespace {

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

FormVariation negated(const FormVariation& eta) {
  return FormVariation(-1.0 * eta.density(), eta.support());
}

}  // namespace

SmoothFunction lie_smooth(const VectorField& field, const SmoothFunction& f) {
  return field.coefficient() * f.derivative();
}

Distribution lie_distribution(const VectorField& field, const Distribution& u, double tol) {
  (void)tol;
  return Distribution::functional(
      "lie[" + field.name() + "](" + u.to_string() + ")",
      [field, u](const Form& omega, double t) {
        return -pairing(u, lie_derivative_form(field, omega), t);
      },
      u.singular_points());
}

std::optional<Distribution> lie_distribution_closed(const VectorField& field,
                                                    const Distribution& u) {
  const SmoothFunction& x = field.coefficient();
  Distribution out;
  for (const auto& term : u.terms()) {
    const double c = term.coefficient;
    if (const auto* r = std::get_if<Regular>(&term.atom)) {
      if (r->support) return std::nullopt;
      out = out + c * Distribution::regular(field.name() + "*d(" + r->name + ")",
                                            x * r->f.derivative());
    } else if (const auto* h = std::get_if<Heaviside>(&term.atom)) {
      out = out + (c * x(h->c)) * Distribution::delta(h->c);
    } else if (std::holds_alternative<DeltaAt>(term.atom) ||
               std::holds_alternative<DeltaDerivative>(term.atom)) {
      double q = 0.0;
      int m = 0;
      if (const auto* d = std::get_if<DeltaAt>(&term.atom)) {
        q = d->p;
      } else {
        const auto& dd = std::get<DeltaDerivative>(term.atom);
        q = dd.p;
        m = dd.order;
      }
      if (m + 1 > kJetOrder - 2) return std::nullopt;
      for (int k = 0; k <= m + 1; ++k) {
        const double xk = (k == 0) ? x(q) : x.derivative(q, k);
        const double w = ((k % 2 == 0) ? 1.0 : -1.0) * binomial(m + 1, k) * xk * c;
        const int j = m + 1 - k;
        out = out + w * (j == 0 ? Distribution::delta(q) : Distribution::delta_derivative(q, j));
      }
    } else {
      return std::nullopt;
    }
  }
  return out;
}

Representative flow_pullback_rep(const VectorField& field, double tau, const Representative& r,
                                 FlowOptions opts) {
  if (tau == 0.0) return r;
  return act_on_representative(field.flow(tau, opts), r);
}

double lie_rep_direct(const VectorField& field, const Representative& r, const TestObject& omega,
                      Point p, double tau_step, FlowOptions opts) {
  if (!(tau_step > 0.0)) throw std::invalid_argument("lie_rep_direct: tau_step must be positive");
  return central_diff_richardson(
      [&](double tau) { return flow_pullback_rep(field, tau, r, opts)(omega, p); }, 0.0,
      tau_step);
}

double lie_rep_formula(const VectorField& field, const Representative& r, const TestObject& omega,
                       Point p, LieFormulaOptions opts) {
  const FormVariation eta = negated(lie_derivative_form(field, omega));
  const double v = field(p.x);
  if (opts.finite_differences) return r.tangent_fd(omega, p, eta, v, opts.steps);
  return r.tangent(omega, p, eta, v, opts.steps);
}

Representative lie_derivative(const VectorField& field, const Representative& r,
                              LieFormulaOptions opts) {
  return Representative(
      [field, r, opts](const TestObject& omega, Point p) {
        return lie_rep_formula(field, r, omega, p, opts);
      },
      Provenance::lie_derivative, "lie(" + field.name() + "," + r.label() + ")", {},
      r.singular_points());
}

double flow_derivative_pairing(const VectorField& field, const Distribution& u,
                               const TestObject& omega, double tau_step, double tol,
                               FlowOptions opts) {
  return central_diff_richardson(
      [&](double tau) {
        if (tau == 0.0) return pairing(u, omega, tol);
        return pairing(u, pushforward(field.flow(tau, opts), omega), tol);
      },
      0.0, tau_step);
}

}  // namespace colombeau
