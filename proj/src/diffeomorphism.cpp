#include "colombeau/diffeomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "colombeau/kernels/errors.hpp"
#include "colombeau/kernels/format.hpp"

namespace colombeau {

Diffeomorphism::Diffeomorphism(std::string name, SmoothFunction forward,
                               SmoothFunction forward_derivative, SmoothFunction inverse,
                               PullFn pull)
    : name_(std::move(name)),
      forward_(std::move(forward)),
      forward_derivative_(std::move(forward_derivative)),
      inverse_(std::move(inverse)),
      pull_(std::move(pull)) {}

Diffeomorphism Diffeomorphism::identity() {
  return Diffeomorphism("identity", SmoothFunction::identity(), SmoothFunction::constant(1.0),
                        SmoothFunction::identity(),
                        [](const Jet& y) { return std::pair<Jet, Jet>{y, Jet(1.0)}; });
}

Diffeomorphism Diffeomorphism::closed_form(std::string name, SmoothFunction forward,
                                           SmoothFunction inverse) {
  SmoothFunction d = forward.derivative();
  SmoothFunction dinv = inverse.derivative();
  auto pull = [inverse, dinv](const Jet& y) { return std::pair<Jet, Jet>{inverse(y), dinv(y)}; };
  return Diffeomorphism(std::move(name), std::move(forward), std::move(d), std::move(inverse),
                        std::move(pull));
}

double newton_inverse(const SmoothFunction& forward, const SmoothFunction& derivative, double y) {
  auto residual = [&](double x) { return forward(x) - y; };
  double x = y;
  double fx = residual(x);
  if (fx == 0.0) return x;
  // Bracket the root by geometric expansion; forward is increasing.
  double step = std::max(1.0, std::fabs(y));
  double lo = x, hi = x;
  if (fx > 0.0) {
    while (residual(lo) > 0.0) {
      hi = lo;
      lo -= step;
      step *= 2.0;
      if (!std::isfinite(lo)) throw NumericalError("newton_inverse: could not bracket root");
    }
  } else {
    while (residual(hi) < 0.0) {
      lo = hi;
      hi += step;
      step *= 2.0;
      if (!std::isfinite(hi)) throw NumericalError("newton_inverse: could not bracket root");
    }
  }
  x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    fx = residual(x);
    if (fx == 0.0) return x;
    if (fx > 0.0) hi = x; else lo = x;
    const double dfx = derivative(x);
    double next = x - fx / dfx;
    if (!(dfx > 0.0) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double dx = std::fabs(next - x);
    x = next;
    if (dx <= 1e-15 * std::max(1.0, std::fabs(x)) || hi - lo <= 1e-15 * std::max(1.0, std::fabs(x))) {
      return x;
    }
  }
  throw NumericalError("newton_inverse: no convergence for y = " + std::to_string(y));
}

Diffeomorphism Diffeomorphism::with_newton_inverse(std::string name, SmoothFunction forward) {
  SmoothFunction d = forward.derivative();
  auto invert_jet = [forward, d](const Jet& y) {
    const double root = newton_inverse(forward, d, y.value());
    Jet x(root);
    // Each Newton step on the series doubles the number of exact coefficients.
    for (int it = 0; it < 5; ++it) x = x - (forward(x) - y) / d(x);
    x.coefficient(0) = root;
    x.set_valid_order(std::min(y.valid_order(), forward(x).valid_order()));
    return x;
  };
  SmoothFunction inverse([forward, d](double y) { return newton_inverse(forward, d, y); },
                         invert_jet);
  auto pull = [inverse, d](const Jet& y) {
    Jet x = inverse(y);
    return std::pair<Jet, Jet>{x, 1.0 / d(x)};
  };
  return Diffeomorphism(std::move(name), std::move(forward), std::move(d), std::move(inverse),
                        std::move(pull));
}

Diffeomorphism compose(const Diffeomorphism& outer, const Diffeomorphism& inner) {
  SmoothFunction fwd = compose(outer.forward_, inner.forward_);
  SmoothFunction dfwd = compose(outer.forward_derivative_, inner.forward_) * inner.forward_derivative_;
  SmoothFunction inv = compose(inner.inverse_, outer.inverse_);
  auto po = outer.pull_, pi = inner.pull_;
  auto pull = [po, pi](const Jet& y) {
    auto [a, da] = po(y);
    auto [b, db] = pi(a);
    return std::pair<Jet, Jet>{b, db * da};
  };
  return Diffeomorphism(outer.name_ + "∘" + inner.name_, std::move(fwd), std::move(dfwd),
                        std::move(inv), std::move(pull));
}

Diffeomorphism shift(double a) {
  return Diffeomorphism::closed_form("shift(" + format_number(a) + ")",
                                     SmoothFunction::generic([a](auto x) { return x + a; }),
                                     SmoothFunction::generic([a](auto y) { return y - a; }));
}

Diffeomorphism scaling(double k) {
  if (!(k > 0.0)) throw std::invalid_argument("scale(k) needs k > 0");
  return Diffeomorphism::closed_form("scale(" + format_number(k) + ")",
                                     SmoothFunction::generic([k](auto x) { return k * x; }),
                                     SmoothFunction::generic([k](auto y) { return y / k; }));
}

Diffeomorphism cubic() {
  return Diffeomorphism::with_newton_inverse(
      "cubic", SmoothFunction::generic([](auto x) { return x * x * x + x; }));
}

Diffeomorphism sine_perturbation(double b) {
  if (!(std::fabs(b) < 1.0)) throw std::invalid_argument("sine_perturb(b) needs |b| < 1");
  return Diffeomorphism::with_newton_inverse(
      "sine_perturb(" + format_number(b) + ")", SmoothFunction::generic([b](auto x) {
        using std::sin;
        return x + b * sin(x);
      }));
}

}  // namespace colombeau
