#pragma once

#include <array>
#include <cstddef>

namespace colombeau {

/// Highest Taylor order carried by a Jet.
inline constexpr int kJetOrder = 6;

/// Truncated Taylor expansion f(x0 + h) = sum_k c[k] h^k, k = 0..kJetOrder.
///
/// Jets let a single generic lambda produce values and exact derivatives, and
/// they compose: feeding the jet of an inner map into an outer function yields
/// the jet of the composition. `valid` records the highest order that is still
/// exact; differentiating a jet drops it by one and arithmetic takes the
/// minimum of the operands.
class Jet {
 public:
  using Coefficients = std::array<double, kJetOrder + 1>;

  Jet() = default;
  // Implicit so that generic code can mix doubles and jets freely.
  Jet(double constant) { c_[0] = constant; }  // NOLINT(google-explicit-constructor)

  static Jet constant(double v) { return Jet(v); }
  /// The identity map expanded at x0: x0 + h.
  static Jet variable(double x0) {
    Jet j(x0);
    j.c_[1] = 1.0;
    return j;
  }
  static Jet from_coefficients(const Coefficients& c, int valid = kJetOrder) {
    Jet j;
    j.c_ = c;
    j.valid_ = valid;
    return j;
  }

  double value() const { return c_[0]; }
  double coefficient(int k) const { return c_[static_cast<std::size_t>(k)]; }
  double& coefficient(int k) { return c_[static_cast<std::size_t>(k)]; }
  const Coefficients& coefficients() const { return c_; }
  int valid_order() const { return valid_; }
  void set_valid_order(int v) { valid_ = v; }

  /// k-th derivative at the expansion point; throws std::domain_error when k
  /// exceeds the exact order.
  double derivative(int k) const;

  /// Jet of d/dh of the expansion, one order less exact.
  Jet differentiated() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);

 private:
  Coefficients c_{};
  int valid_ = kJetOrder;
};

Jet operator-(const Jet& a);
Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);
inline Jet operator+(Jet a, double b) { return a += Jet(b); }
inline Jet operator+(double a, Jet b) { return b += Jet(a); }
inline Jet operator-(Jet a, double b) { return a -= Jet(b); }
inline Jet operator-(double a, const Jet& b) { return Jet(a) - b; }
Jet operator*(const Jet& a, double b);
inline Jet operator*(double a, const Jet& b) { return b * a; }
inline Jet operator/(const Jet& a, double b) { return a * (1.0 / b); }
inline Jet operator/(double a, const Jet& b) { return Jet(a) / b; }

Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet sqrt(const Jet& a);
Jet pow(const Jet& a, int n);

/// Evaluates the series `outer` (expanded at inner.value()) on `inner`.
Jet compose(const Jet& outer, const Jet& inner);

/// Scalar part of a double or a Jet; lets generic lambdas branch on position.
inline double primal(double x) { return x; }
inline double primal(const Jet& x) { return x.value(); }

}  // namespace colombeau
