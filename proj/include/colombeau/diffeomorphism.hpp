#pragma once

#include <functional>
#include <string>
#include <utility>

#include "colombeau/kernels/jet.hpp"
#include "colombeau/kernels/smooth_function.hpp"

namespace colombeau {

/// Orientation-preserving diffeomorphism mu of the real line.
///
/// Besides forward evaluation it exposes `pull`, which returns the jets of
/// mu^{-1} and (mu^{-1})' at a point. That pair is everything a pushforward
/// of a 1-form needs.
class Diffeomorphism {
 public:
  using PullFn = std::function<std::pair<Jet, Jet>(const Jet&)>;

  Diffeomorphism(std::string name, SmoothFunction forward, SmoothFunction forward_derivative,
                 SmoothFunction inverse, PullFn pull);

  static Diffeomorphism identity();
  /// Both directions given in closed form.
  static Diffeomorphism closed_form(std::string name, SmoothFunction forward,
                                    SmoothFunction inverse);
  /// Inverse by safeguarded Newton (bisection fallback, |step| <= 1e-15
  /// relative); jets of the inverse by Newton iteration on Taylor series.
  static Diffeomorphism with_newton_inverse(std::string name, SmoothFunction forward);

  const std::string& name() const { return name_; }

  double operator()(double x) const { return forward_(x); }
  Jet operator()(const Jet& x) const { return forward_(x); }
  double derivative(double x) const { return forward_derivative_(x); }
  double inverse(double y) const { return inverse_(y); }
  Jet inverse(const Jet& y) const { return inverse_(y); }
  double inverse_derivative(double y) const { return pull_(Jet(y)).second.value(); }
  /// (mu^{-1}(y), (mu^{-1})'(y)) as jets in y.
  std::pair<Jet, Jet> pull(const Jet& y) const { return pull_(y); }

  const SmoothFunction& forward() const { return forward_; }
  const SmoothFunction& forward_derivative() const { return forward_derivative_; }

  /// x -> outer(inner(x)).
  friend Diffeomorphism compose(const Diffeomorphism& outer, const Diffeomorphism& inner);

 private:
  std::string name_;
  SmoothFunction forward_;
  SmoothFunction forward_derivative_;
  SmoothFunction inverse_;
  PullFn pull_;
};

/// Root of forward(x) = y for increasing `forward`, safeguarded Newton.
double newton_inverse(const SmoothFunction& forward, const SmoothFunction& derivative, double y);

// Battery constructors (scenario names in parentheses).
Diffeomorphism shift(double a);              // shift(a): x + a
Diffeomorphism scaling(double k);            // scale(k): k x, k > 0
Diffeomorphism cubic();                      // cubic: x^3 + x
Diffeomorphism sine_perturbation(double b);  // sine_perturb(b): x + b sin x, |b| < 1

}  // namespace colombeau
