#pragma once

#include <optional>

#include "colombeau/basic_space.hpp"
#include "colombeau/distribution.hpp"
#include "colombeau/kernels/ode.hpp"
#include "colombeau/vector_field.hpp"

namespace colombeau {

/// L_X f = X f'.
SmoothFunction lie_smooth(const VectorField& field, const SmoothFunction& f);

/// L_X u through <L_X u, omega> = -<u, L_X omega>.
Distribution lie_distribution(const VectorField& field, const Distribution& u,
                              double tol = kPairingTol);

/// Closed-form L_X u when every atom has one:
///   regular(f)      -> regular(X f')            (no support restriction)
///   heaviside(c)    -> X(c) delta(c)
///   ddelta(q, m)    -> sum_k (-1)^k C(m+1,k) X^(k)(q) ddelta(q, m+1-k), m >= 0
std::optional<Distribution> lie_distribution_closed(const VectorField& field,
                                                    const Distribution& u);

/// (Fl_tau)^ R, the diffeomorphism action along the flow.
Representative flow_pullback_rep(const VectorField& field, double tau, const Representative& r,
                                 FlowOptions opts = {});

inline constexpr double kDefaultTauStep = 1e-4;

/// d/dtau at 0 of (Fl_tau)^ R (omega, p), Richardson central difference.
double lie_rep_direct(const VectorField& field, const Representative& r, const TestObject& omega,
                      Point p, double tau_step = kDefaultTauStep, FlowOptions opts = {});

struct LieFormulaOptions {
  /// Take both terms by finite differences even when R has an exact tangent.
  bool finite_differences = false;
  SlotSteps steps{};
};

/// -d1R(omega,p)[L_X omega] + X(p) d2R(omega,p).
double lie_rep_formula(const VectorField& field, const Representative& r, const TestObject& omega,
                       Point p, LieFormulaOptions opts = {});

/// L^_X R as a representative (evaluated through lie_rep_formula).
Representative lie_derivative(const VectorField& field, const Representative& r,
                              LieFormulaOptions opts = {});

/// d/dtau at 0 of <u, (Fl_tau)_* omega>, the flow computation of <L_X u, omega>.
/// For X = ddx this is the distributional derivative <u', omega>.
double flow_derivative_pairing(const VectorField& field, const Distribution& u,
                               const TestObject& omega, double tau_step = 1e-5,
                               double tol = kPairingTol, FlowOptions opts = {});

}  // namespace colombeau
