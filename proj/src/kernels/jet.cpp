#include "colombeau/kernels/jet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace colombeau {
namespace {

constexpr int N = kJetOrder;

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

double Jet::derivative(int k) const {
  if (k < 0 || k > valid_) {
    throw std::domain_error("jet derivative of order " + std::to_string(k) +
                            " requested, exact only to order " + std::to_string(valid_));
  }
  return c_[static_cast<std::size_t>(k)] * factorial(k);
}

Jet Jet::differentiated() const {
  Jet d;
  for (int k = 0; k < N; ++k) d.c_[k] = (k + 1) * c_[k + 1];
  d.c_[N] = 0.0;
  d.valid_ = std::max(valid_ - 1, 0);
  return d;
}

Jet& Jet::operator+=(const Jet& o) {
  for (int k = 0; k <= N; ++k) c_[k] += o.c_[k];
  valid_ = std::min(valid_, o.valid_);
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  for (int k = 0; k <= N; ++k) c_[k] -= o.c_[k];
  valid_ = std::min(valid_, o.valid_);
  return *this;
}

Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }
Jet& Jet::operator/=(const Jet& o) { return *this = *this / o; }

Jet operator-(const Jet& a) { return a * -1.0; }
Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }

Jet operator*(const Jet& a, const Jet& b) {
  Jet::Coefficients r{};
  for (int k = 0; k <= N; ++k) {
    double s = 0.0;
    for (int i = 0; i <= k; ++i) s += a.coefficient(i) * b.coefficient(k - i);
    r[k] = s;
  }
  return Jet::from_coefficients(r, std::min(a.valid_order(), b.valid_order()));
}

Jet operator*(const Jet& a, double b) {
  Jet r = a;
  for (int k = 0; k <= N; ++k) r.coefficient(k) *= b;
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  Jet::Coefficients q{};
  const double b0 = b.coefficient(0);
  for (int k = 0; k <= N; ++k) {
    double s = a.coefficient(k);
    for (int i = 1; i <= k; ++i) s -= b.coefficient(i) * q[k - i];
    q[k] = s / b0;
  }
  return Jet::from_coefficients(q, std::min(a.valid_order(), b.valid_order()));
}

Jet exp(const Jet& a) {
  Jet::Coefficients e{};
  e[0] = std::exp(a.value());
  for (int k = 1; k <= N; ++k) {
    double s = 0.0;
    for (int i = 1; i <= k; ++i) s += i * a.coefficient(i) * e[k - i];
    e[k] = s / k;
  }
  return Jet::from_coefficients(e, a.valid_order());
}

Jet log(const Jet& a) {
  Jet::Coefficients l{};
  const double a0 = a.value();
  l[0] = std::log(a0);
  for (int k = 1; k <= N; ++k) {
    double s = 0.0;
    for (int i = 1; i < k; ++i) s += i * l[i] * a.coefficient(k - i);
    l[k] = (a.coefficient(k) - s / k) / a0;
  }
  return Jet::from_coefficients(l, a.valid_order());
}

namespace {

void sin_cos(const Jet& a, Jet::Coefficients& s, Jet::Coefficients& c) {
  s = {};
  c = {};
  s[0] = std::sin(a.value());
  c[0] = std::cos(a.value());
  for (int k = 1; k <= N; ++k) {
    double ss = 0.0;
    double cc = 0.0;
    for (int i = 1; i <= k; ++i) {
      ss += i * a.coefficient(i) * c[k - i];
      cc += i * a.coefficient(i) * s[k - i];
    }
    s[k] = ss / k;
    c[k] = -cc / k;
  }
}

}  // namespace

Jet sin(const Jet& a) {
  Jet::Coefficients s, c;
  sin_cos(a, s, c);
  return Jet::from_coefficients(s, a.valid_order());
}

Jet cos(const Jet& a) {
  Jet::Coefficients s, c;
  sin_cos(a, s, c);
  return Jet::from_coefficients(c, a.valid_order());
}

Jet sqrt(const Jet& a) {
  Jet::Coefficients r{};
  r[0] = std::sqrt(a.value());
  for (int k = 1; k <= N; ++k) {
    double s = a.coefficient(k);
    for (int i = 1; i < k; ++i) s -= r[i] * r[k - i];
    r[k] = s / (2.0 * r[0]);
  }
  return Jet::from_coefficients(r, a.valid_order());
}

Jet pow(const Jet& a, int n) {
  if (n < 0) return 1.0 / pow(a, -n);
  Jet result(1.0);
  Jet base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  if (result.valid_order() > a.valid_order()) result.set_valid_order(a.valid_order());
  return result;
}

Jet compose(const Jet& outer, const Jet& inner) {
  Jet h = inner;
  h.coefficient(0) = 0.0;
  // Horner on the shifted argument; h has no constant term so powers truncate.
  Jet r(outer.coefficient(N));
  for (int k = N - 1; k >= 0; --k) r = r * h + Jet(outer.coefficient(k));
  r.set_valid_order(std::min(outer.valid_order(), inner.valid_order()));
  return r;
}

}  // namespace colombeau
