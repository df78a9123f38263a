#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "colombeau/basic_space.hpp"
#include "colombeau/diffeomorphism.hpp"
#include "colombeau/distribution.hpp"

namespace colombeau {

/// mu^* f = f o mu.
SmoothFunction pullback_smooth(const Diffeomorphism& mu, const SmoothFunction& f);

/// mu^* u through its adjoint definition <mu^* u, omega> = <u, mu_* omega>.
Distribution pullback_distribution(const Diffeomorphism& mu, const Distribution& u,
                                   double tol = kPairingTol);

/// Closed-form rewrite of mu^* u, available when every atom has one:
///   regular(f)   -> regular(f o mu)
///   delta(q)     -> nu'(q) delta(nu q)
///   ddelta(q,1)  -> nu'(q)^2 ddelta(nu q, 1) - nu''(q) delta(nu q)
///   heaviside(c) -> heaviside(nu c)
/// with nu = mu^{-1}. Higher Dirac derivatives and functionals have none.
std::optional<Distribution> pullback_distribution_closed(const Diffeomorphism& mu,
                                                         const Distribution& u);

/// (mu^ R)(omega, p) = R(mu_* omega, mu p).
Representative act_on_representative(const Diffeomorphism& mu, const Representative& r);

using Probe = std::pair<TestObject, Point>;

/// max over probes |mu^ iota(u) - iota(mu^* u)|. The right-hand side uses the
/// closed-form pullback when one exists and the adjoint definition otherwise.
double check_equivariance(const Diffeomorphism& mu, const Distribution& u,
                          const std::vector<Probe>& probes, double tol = kPairingTol);

}  // namespace colombeau
