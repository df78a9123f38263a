#include <doctest.h>

#include <cmath>

#include "colombeau/diffeo.hpp"
#include "colombeau/registry.hpp"
#include "colombeau/suites.hpp"

using namespace colombeau;

TEST_SUITE("diffeo") {
  TEST_CASE("diffeomorphism inverses") {
    for (const auto& mu : {shift(0.3), scaling(2.0), cubic(), sine_perturbation(0.6)}) {
      for (double y : {-2.0, -0.3, 0.0, 0.9, 3.0}) {
        CHECK(mu(mu.inverse(y)) == doctest::Approx(y).epsilon(1e-13));
        CHECK(mu.inverse_derivative(y) * mu.derivative(mu.inverse(y)) ==
              doctest::Approx(1.0).epsilon(1e-13));
      }
    }
    CHECK(cubic()(2.0) == 10.0);
    CHECK_THROWS_AS(scaling(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(sine_perturbation(1.0), std::invalid_argument);
  }

  TEST_CASE("composition of diffeomorphisms") {
    const Diffeomorphism c = compose(cubic(), shift(0.5));
    CHECK(c(1.0) == doctest::Approx(1.5 * 1.5 * 1.5 + 1.5));
    CHECK(c.inverse(c(0.7)) == doctest::Approx(0.7).epsilon(1e-13));
    CHECK(c.derivative(1.0) == doctest::Approx(3 * 1.5 * 1.5 + 1));
  }

  TEST_CASE("pullback of smooth functions") {
    const SmoothFunction f = pullback_smooth(scaling(2.0), *find_function("sin"));
    CHECK(f(0.3) == std::sin(0.6));
    CHECK(f.derivative(0.3) == doctest::Approx(2.0 * std::cos(0.6)).epsilon(1e-14));
  }

  TEST_CASE("closed-form pullbacks match the adjoint definition") {
    const std::vector<Distribution> us{Distribution::delta(0.2), Distribution::delta_derivative(-0.1, 1),
                                       Distribution::heaviside(0.05),
                                       Distribution::regular("exp_window", *find_function("exp_window"))};
    const auto probes = probe_pairs(8, 9);
    for (const auto& mu : {shift(0.3), scaling(2.0), cubic(), sine_perturbation(0.3)}) {
      for (const auto& u : us) {
        const auto closed = pullback_distribution_closed(mu, u);
        REQUIRE(closed.has_value());
        const Distribution adjoint = pullback_distribution(mu, u);
        for (const auto& [w, p] : probes) {
          CHECK(std::fabs(pairing(*closed, w) - pairing(adjoint, w)) <= 1e-10 * (1 + std::fabs(pairing(adjoint, w))));
        }
      }
    }
  }

  TEST_CASE("higher delta derivatives fall back to the adjoint definition") {
    CHECK_FALSE(pullback_distribution_closed(cubic(), Distribution::delta_derivative(0.1, 2)).has_value());
    CHECK(check_equivariance(cubic(), Distribution::delta_derivative(0.1, 2), probe_pairs(5, 4)) < 1e-8);
  }

  TEST_CASE("delta pullback by hand") {
    // mu = 2x: (mu^* delta_q) = (1/2) delta_{q/2}.
    const auto closed = pullback_distribution_closed(scaling(2.0), Distribution::delta(0.4));
    const TestObject w = make_bump(0.0, 1.0);
    CHECK(pairing(*closed, w) == doctest::Approx(0.5 * w(0.2)).epsilon(1e-14));
  }

  TEST_CASE("action on representatives") {
    const TestObject w = make_bump(0.1, 0.5);
    const Representative d = embed_distribution(Distribution::delta(0.0));
    const Representative a = act_on_representative(shift(0.3), d);
    // (mu^ R)(w, p) = R(mu_* w, mu p); mu_* w is w shifted by 0.3.
    CHECK(a(w, Point{0.0}) == doctest::Approx(w(-0.3)).epsilon(1e-14));
    CHECK(a.provenance() == Provenance::diffeo_pullback);
    CHECK(a.singular_points() == std::vector<double>{-0.3});
    CHECK(check_equivariance(cubic(), Distribution::heaviside(0.1), probe_pairs(10, 3)) < 1e-10);
  }
}
