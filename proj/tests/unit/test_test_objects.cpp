#include <doctest.h>

#include <cmath>

#include "colombeau/kernels/quadrature.hpp"
#include "colombeau/test_objects.hpp"

using namespace colombeau;

TEST_SUITE("test_objects") {
  TEST_CASE("bump mass and normalization") {
    CHECK(unit_bump_mass() == doctest::Approx(0.443993816168079437823).epsilon(1e-13));
    const TestObject b = make_bump(0.4, 0.5);
    CHECK(b.support().lo() == doctest::Approx(-0.1));
    CHECK(b.support().hi() == doctest::Approx(0.9));
    CHECK(b.integral(1e-14) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(b(0.4) == doctest::Approx(std::exp(-1.0) / (0.5 * unit_bump_mass())).epsilon(1e-14));
    CHECK(b(-0.2) == 0.0);
    CHECK(b(0.95) == 0.0);
    CHECK_THROWS_AS(make_bump(0.0, 0.0), std::invalid_argument);
  }

  TEST_CASE("moment mollifiers have unit mass and vanishing moments") {
    for (int q : {0, 1, 2, 3, 4, 5, 6}) {
      const MomentMollifier phi = make_moment_mollifier(q);
      CHECK(phi.order() == q);
      const Form& g = phi.profile();
      CHECK(g.integral(1e-14) == doctest::Approx(1.0).epsilon(1e-12));
      for (int k = 1; k <= q; ++k) {
        const double m =
            integrate([&](double y) { return std::pow(y, k) * g(y); }, g.support(), 1e-15);
        CHECK(std::fabs(m) < 1e-12);
      }
      // The first non-vanishing moment must be nonzero, or q would be understated.
      const double next = integrate([&](double y) { return std::pow(y, q + 1) * g(y); },
                                    g.support(), 1e-15);
      const double next2 = integrate([&](double y) { return std::pow(y, q + 2) * g(y); },
                                     g.support(), 1e-15);
      CHECK(std::fabs(next) + std::fabs(next2) > 1e-6);
    }
    CHECK(make_moment_mollifier(0).is_even());
    CHECK(make_moment_mollifier(2).is_even());
    CHECK_THROWS(make_moment_mollifier(-1));
  }

  TEST_CASE("scaled nets") {
    const MomentMollifier phi = make_moment_mollifier(2);
    const TestObject n = scaled_net(phi, 0.3, 0.01);
    CHECK(n.support().lo() == doctest::Approx(0.29));
    CHECK(n.support().hi() == doctest::Approx(0.31));
    CHECK(n(0.3) == doctest::Approx(phi.profile()(0.0) / 0.01).epsilon(1e-14));
    CHECK(n(0.305) == doctest::Approx(phi.profile()(-0.5) / 0.01).epsilon(1e-14));
    CHECK(n.integral(1e-13) == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("pushforward under an affine map") {
    const TestObject w = make_bump(0.2, 0.6);
    const TestObject p = pushforward(scaling(2.0), w);
    CHECK(p.support().lo() == doctest::Approx(-0.8));
    CHECK(p.support().hi() == doctest::Approx(1.6));
    for (double y : {-0.5, 0.0, 0.4, 1.1}) {
      CHECK(p(y) == doctest::Approx(w(y / 2.0) / 2.0).epsilon(1e-14));
    }
    const TestObject s = pushforward(shift(0.3), w);
    CHECK(s(0.7) == doctest::Approx(w(0.4)).epsilon(1e-14));
    CHECK(pushforward(cubic(), w).integral(1e-13) == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("lie derivative of forms") {
    const TestObject w = make_bump(0.0, 1.0);
    const FormVariation dw = lie_derivative_form(VectorField::translation(), w);
    const FormVariation ew = lie_derivative_form(VectorField::euler(), w);
    for (double x : {-0.7, -0.1, 0.35, 0.8}) {
      CHECK(dw(x) == doctest::Approx(w.derivative(x)).epsilon(1e-13));
      CHECK(ew(x) == doctest::Approx(w(x) + x * w.derivative(x)).epsilon(1e-13));
    }
    CHECK(std::fabs(dw.integral(1e-14)) < 1e-13);
    CHECK(std::fabs(ew.integral(1e-14)) < 1e-13);
  }

  TEST_CASE("perturbation keeps unit mass") {
    const TestObject w = make_bump(0.1, 0.5);
    const FormVariation eta = lie_derivative_form(VectorField::sine_field(0.3), make_bump(0.0, 0.4));
    const TestObject p = perturbed(w, eta, 0.05);
    CHECK(p.integral(1e-14) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p(0.1) == doctest::Approx(w(0.1) + 0.05 * eta(0.1)).epsilon(1e-14));
    CHECK(sup_norm(w) == doctest::Approx(w(0.1)).epsilon(1e-12));
  }
}
