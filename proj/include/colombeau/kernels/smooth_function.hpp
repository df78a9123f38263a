#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "colombeau/kernels/jet.hpp"

namespace colombeau {

/// A smooth real function on the chart with two evaluation paths: a plain
/// double path for quadrature and a Jet path that yields exact derivatives and
/// composes with other jets.
class SmoothFunction {
 public:
  using ValueFn = std::function<double(double)>;
  using LiftFn = std::function<Jet(const Jet&)>;

  SmoothFunction() : SmoothFunction(constant(0.0)) {}
  SmoothFunction(ValueFn value, LiftFn lift)
      : value_(std::make_shared<ValueFn>(std::move(value))),
        lift_(std::make_shared<LiftFn>(std::move(lift))) {}

  /// Builds both paths from one generic callable accepting double and Jet.
  template <class F>
  static SmoothFunction generic(F f) {
    return SmoothFunction([f](double x) { return static_cast<double>(f(x)); },
                          [f](const Jet& x) { return Jet(f(x)); });
  }

  static SmoothFunction constant(double c);
  static SmoothFunction identity();

  double operator()(double x) const { return (*value_)(x); }
  Jet operator()(const Jet& x) const { return (*lift_)(x); }

  /// k-th derivative at x through the Jet path.
  double derivative(double x, int order = 1) const;
  /// f' as a SmoothFunction (one Taylor order less exact on the Jet path).
  SmoothFunction derivative() const;

  /// x -> outer(inner(x)).
  friend SmoothFunction compose(const SmoothFunction& outer, const SmoothFunction& inner);
  friend SmoothFunction operator+(const SmoothFunction& a, const SmoothFunction& b);
  friend SmoothFunction operator-(const SmoothFunction& a, const SmoothFunction& b);
  friend SmoothFunction operator*(const SmoothFunction& a, const SmoothFunction& b);
  friend SmoothFunction operator*(double c, const SmoothFunction& a);

 private:
  std::shared_ptr<const ValueFn> value_;
  std::shared_ptr<const LiftFn> lift_;
};

}  // namespace colombeau
