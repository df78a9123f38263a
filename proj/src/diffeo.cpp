#include "colombeau/diffeo.hpp"

#include <algorithm>
#include <cmath>

namespace colombeau {

SmoothFunction pullback_smooth(const Diffeomorphism& mu, const SmoothFunction& f) {
  return compose(f, mu.forward());
}

Distribution pullback_distribution(const Diffeomorphism& mu, const Distribution& u, double tol) {
  std::vector<double> pts;
  for (double s : u.singular_points()) pts.push_back(mu.inverse(s));
  (void)tol;
  return Distribution::functional(
      "pullback[" + mu.name() + "](" + u.to_string() + ")",
      [mu, u](const Form& omega, double t) { return pairing(u, pushforward(mu, omega), t); },
      std::move(pts));
}

std::optional<Distribution> pullback_distribution_closed(const Diffeomorphism& mu,
                                                         const Distribution& u) {
  Distribution out;
  for (const auto& term : u.terms()) {
    const double c = term.coefficient;
    if (const auto* r = std::get_if<Regular>(&term.atom)) {
      std::optional<Interval> support;
      if (r->support) support = Interval(mu.inverse(r->support->lo()), mu.inverse(r->support->hi()));
      out = out + c * Distribution::regular(r->name + "∘" + mu.name(),
                                            pullback_smooth(mu, r->f), support);
    } else if (const auto* d = std::get_if<DeltaAt>(&term.atom)) {
      auto [nu, dnu] = mu.pull(Jet(d->p));
      out = out + (c * dnu.value()) * Distribution::delta(nu.value());
    } else if (const auto* dd = std::get_if<DeltaDerivative>(&term.atom)) {
      if (dd->order != 1) return std::nullopt;
      auto [nu, dnu] = mu.pull(Jet::variable(dd->p));
      const double d1 = dnu.value();
      const double d2 = dnu.derivative(1);
      out = out + (c * d1 * d1) * Distribution::delta_derivative(nu.value(), 1) -
            (c * d2) * Distribution::delta(nu.value());
    } else if (const auto* h = std::get_if<Heaviside>(&term.atom)) {
      out = out + c * Distribution::heaviside(mu.inverse(h->c));
    } else {
      return std::nullopt;
    }
  }
  return out;
}

Representative act_on_representative(const Diffeomorphism& mu, const Representative& r) {
  Representative::TangentFn tangent;
  if (r.has_exact_tangent()) {
    // Pushforward is linear in the form, so the first slot transports exactly.
    tangent = [mu, r](const TestObject& w, Point p, const FormVariation& e, double v) {
      return r.tangent(pushforward(mu, w), Point{mu(p.x)}, pushforward(mu, e),
                       mu.derivative(p.x) * v);
    };
  }
  std::vector<double> pts;
  for (double s : r.singular_points()) pts.push_back(mu.inverse(s));
  std::sort(pts.begin(), pts.end());
  return Representative(
      [mu, r](const TestObject& w, Point p) { return r(pushforward(mu, w), Point{mu(p.x)}); },
      Provenance::diffeo_pullback, "act(" + mu.name() + "," + r.label() + ")", tangent,
      std::move(pts));
}

double check_equivariance(const Diffeomorphism& mu, const Distribution& u,
                          const std::vector<Probe>& probes, double tol) {
  const Representative lhs = act_on_representative(mu, embed_distribution(u, tol));
  const auto closed = pullback_distribution_closed(mu, u);
  const Representative rhs =
      embed_distribution(closed ? *closed : pullback_distribution(mu, u, tol), tol);
  double worst = 0.0;
  for (const auto& [omega, p] : probes) {
    worst = std::max(worst, std::fabs(lhs(omega, p) - rhs(omega, p)));
  }
  return worst;
}

}  // namespace colombeau
