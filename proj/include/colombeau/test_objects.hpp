#pragma once

#include <vector>

#include "colombeau/diffeomorphism.hpp"
#include "colombeau/kernels/interval.hpp"
#include "colombeau/kernels/smooth_function.hpp"
#include "colombeau/vector_field.hpp"

namespace colombeau {

/// A compactly supported 1-form g(x) dx: density plus support interval. The
/// density must vanish outside the support.
class Form {
 public:
  Form(SmoothFunction density, Interval support)
      : density_(std::move(density)), support_(support) {}

  const SmoothFunction& density() const { return density_; }
  Interval support() const { return support_; }

  double operator()(double x) const { return density_(x); }
  /// k-th derivative of the density (Jet path).
  double derivative(double x, int order = 1) const { return density_.derivative(x, order); }
  double integral(double tol = 1e-13) const;

 private:
  SmoothFunction density_;
  Interval support_;
};

/// Element of the unit-integral space: integral of the density is 1.
class TestObject : public Form {
 public:
  using Form::Form;
};

/// Compactly supported form with zero integral: a tangent direction to the
/// unit-integral constraint.
class FormVariation : public Form {
 public:
  using Form::Form;
};

/// Unit-integral profile with vanishing moments 1..order, built as a
/// polynomial times the bump on [-radius, radius].
class MomentMollifier {
 public:
  const TestObject& profile() const { return profile_; }
  int order() const { return order_; }
  double radius() const { return radius_; }
  /// Coefficients of P(t), t = y / radius, lowest degree first.
  const std::vector<double>& polynomial() const { return coefficients_; }
  /// True when the profile is even (all odd coefficients are exactly zero).
  bool is_even() const;

 private:
  friend MomentMollifier make_moment_mollifier(int q, double radius);
  MomentMollifier(TestObject profile, int order, double radius, std::vector<double> coefficients)
      : profile_(std::move(profile)),
        order_(order),
        radius_(radius),
        coefficients_(std::move(coefficients)) {}

  TestObject profile_;
  int order_;
  double radius_;
  std::vector<double> coefficients_;
};

/// Integral of exp(-1/(1-t^2)) over (-1, 1).
double unit_bump_mass();

/// Normalized bump C exp(-1/(1-t^2)), t = (x - center)/radius, on |t| < 1.
TestObject make_bump(double center, double radius);

/// Solves the Hankel moment system for P and caches the result per (q, radius).
/// Throws NumericalError if the system is singular.
MomentMollifier make_moment_mollifier(int q, double radius = 1.0);

/// eps^{-1} phi((x - p)/eps) on [p - eps r, p + eps r].
TestObject scaled_net(const MomentMollifier& phi, double p, double eps);

/// L_X (g dx) = (X g)' dx.
FormVariation lie_derivative_form(const VectorField& field, const Form& omega);

/// mu_* (g dx): density g(mu^{-1} y) (mu^{-1})'(y) on mu(support).
/// Throws OrientationError when mu' <= 0 anywhere on a 33-point probe of the
/// support.
TestObject pushforward(const Diffeomorphism& mu, const TestObject& omega);
FormVariation pushforward(const Diffeomorphism& mu, const FormVariation& eta);
Form pushforward(const Diffeomorphism& mu, const Form& form);

/// omega + s eta (still unit integral since eta integrates to zero).
TestObject perturbed(const TestObject& omega, const FormVariation& eta, double s);

/// Max of |density| over an equispaced probe of the support.
double sup_norm(const Form& form, int probes = 129);

}  // namespace colombeau
