#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "colombeau/kernels/interval.hpp"
#include "colombeau/kernels/smooth_function.hpp"
#include "colombeau/test_objects.hpp"

namespace colombeau {

/// Locally integrable function acting by integration. `support`, when set,
/// restricts the integration domain (the function is taken as zero outside).
struct Regular {
  std::string name;
  SmoothFunction f;
  std::optional<Interval> support;
};

struct DeltaAt {
  double p;
};

/// m-th derivative of the Dirac measure at p, m >= 1.
struct DeltaDerivative {
  double p;
  int order;
};

/// Indicator of [c, inf).
struct Heaviside {
  double c;
};

/// An arbitrary linear functional on forms, used where a distribution is
/// only known through an adjoint definition (pullbacks, Lie derivatives).
struct Functional {
  std::string label;
  std::function<double(const Form&, double tol)> pair;
  std::vector<double> singular_points;
};

using Atom = std::variant<Regular, DeltaAt, DeltaDerivative, Heaviside, Functional>;

struct Term {
  double coefficient;
  Atom atom;
};

/// Finite linear combination of atoms with exact pairings (up to quadrature
/// for the integral atoms).
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(std::vector<Term> terms) : terms_(std::move(terms)) {}

  static Distribution delta(double p);
  static Distribution delta_derivative(double p, int order);
  static Distribution heaviside(double c);
  static Distribution regular(std::string name, SmoothFunction f,
                              std::optional<Interval> support = std::nullopt);
  static Distribution functional(std::string label,
                                 std::function<double(const Form&, double)> pair,
                                 std::vector<double> singular_points = {});

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Points where the distribution is not smooth (Dirac/Heaviside locations).
  std::vector<double> singular_points() const;
  /// Human-readable constructor-grammar rendering.
  std::string to_string() const;

  friend Distribution operator+(const Distribution& a, const Distribution& b);
  friend Distribution operator-(const Distribution& a, const Distribution& b);
  friend Distribution operator*(double c, const Distribution& a);

 private:
  std::vector<Term> terms_;
};

/// Default quadrature tolerance for integral atoms.
inline constexpr double kPairingTol = 1e-14;

/// <u, omega>. Regular: integral of f g over the support; DeltaAt: g(p);
/// DeltaDerivative: (-1)^m g^(m)(p); Heaviside: integral of g over [c, inf).
/// Throws QuadratureError if an integral atom does not converge.
double pairing(const Distribution& u, const Form& omega, double tol = kPairingTol);

}  // namespace colombeau
