#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "colombeau/distribution.hpp"
#include "colombeau/kernels/smooth_function.hpp"
#include "colombeau/test_objects.hpp"

namespace colombeau {

/// Base point p on M = R, in the global chart.
struct Point {
  double x;
};

enum class Provenance {
  embedded_distribution,
  embedded_smooth,
  product,
  sum,
  scaled,
  lie_derivative,
  diffeo_pullback,
  custom,
};

std::string to_string(Provenance p);

/// Step sizes used when a first-slot or base-point derivative has to be taken
/// by finite differences.
struct SlotSteps {
  /// |s eta| relative to |omega| (sup norms) for the first-slot difference.
  double relative_slot_step = 1e-4;
  /// Base-point step for d/dp.
  double point_step = 1e-3;
};

/// Element of the basic space: a map (omega, p) -> R(omega, p).
///
/// Alongside evaluation a representative may carry an exact tangent map
/// (omega, p, eta, v) -> d1R(omega,p)[eta] + d2R(omega,p) v. The embeddings
/// and the algebra operations supply it; representatives without one fall
/// back to Richardson finite differences. The provenance tag is reporting
/// metadata only.
class Representative {
 public:
  using EvalFn = std::function<double(const TestObject&, Point)>;
  using TangentFn = std::function<double(const TestObject&, Point, const FormVariation&, double)>;

  Representative(EvalFn eval, Provenance provenance, std::string label, TangentFn tangent = {},
                 std::vector<double> singular_points = {});

  double operator()(const TestObject& omega, Point p) const { return (*eval_)(omega, p); }

  Provenance provenance() const { return provenance_; }
  const std::string& label() const { return label_; }
  /// Chart points near which R(net(phi, p, eps), p) varies on the eps scale.
  const std::vector<double>& singular_points() const { return singular_points_; }

  bool has_exact_tangent() const { return static_cast<bool>(tangent_); }
  /// d1R(omega,p)[eta] + d2R(omega,p) v, exact when available.
  double tangent(const TestObject& omega, Point p, const FormVariation& eta, double v,
                 SlotSteps steps = {}) const;
  /// Same quantity, always by finite differences.
  double tangent_fd(const TestObject& omega, Point p, const FormVariation& eta, double v,
                    SlotSteps steps = {}) const;

 private:
  std::shared_ptr<const EvalFn> eval_;
  Provenance provenance_;
  std::string label_;
  TangentFn tangent_;
  std::vector<double> singular_points_;
};

/// iota(u)(omega, p) = <u, omega>; independent of p.
Representative embed_distribution(const Distribution& u, double tol = kPairingTol);
/// sigma(f)(omega, p) = f(p); independent of omega.
Representative embed_smooth(std::string name, SmoothFunction f);
Representative zero_representative();

/// Local convolution-style embedding (eps, x) -> <u, phi_eps(. - x)>, with
/// phi_eps(y) = phi(y/eps)/eps.
std::function<double(double, double)> embed_convolution(const Distribution& u,
                                                        const MomentMollifier& phi,
                                                        double tol = kPairingTol);

Representative rep_add(const Representative& a, const Representative& b);
Representative rep_sub(const Representative& a, const Representative& b);
Representative rep_mul(const Representative& a, const Representative& b);
Representative rep_scale(double c, const Representative& a);
/// a * a * ... * a (n >= 1 factors).
Representative rep_pow(const Representative& a, int n);

/// Default first-slot step: relative_step * sup|omega| / sup|eta|.
double default_slot_step(const TestObject& omega, const FormVariation& eta,
                         double relative_step = 1e-4);

/// Richardson central difference in s of R(omega + s eta, p) from s and s/2.
double d1_directional(const Representative& r, const TestObject& omega, Point p,
                      const FormVariation& eta, double s);

/// Richardson central difference of q -> R(omega, q) at p.
double point_derivative(const Representative& r, const TestObject& omega, Point p, double h);

}  // namespace colombeau
