#include <doctest.h>

#include <cmath>

#include "colombeau/lie.hpp"
#include "colombeau/registry.hpp"
#include "colombeau/suites.hpp"

using namespace colombeau;

TEST_SUITE("lie") {
  TEST_CASE("lie derivative of smooth functions") {
    const SmoothFunction f = lie_smooth(VectorField::euler(), *find_function("x2"));
    CHECK(f(0.7) == doctest::Approx(2 * 0.49).epsilon(1e-15));
    const SmoothFunction g = lie_smooth(VectorField::sine_field(0.3), *find_function("sin"));
    CHECK(g(0.4) == doctest::Approx((1 + 0.3 * std::sin(0.4)) * std::cos(0.4)).epsilon(1e-15));
  }

  TEST_CASE("closed-form lie derivatives by hand") {
    const TestObject w = make_bump(0.1, 0.6);
    // L_ddx delta_q = delta_q' pairs to -w'(q).
    const auto a = lie_distribution_closed(VectorField::translation(), Distribution::delta(0.2));
    CHECK(pairing(*a, w) == doctest::Approx(-w.derivative(0.2)).epsilon(1e-14));
    // L_X H_c = X(c) delta_c.
    const auto h = lie_distribution_closed(VectorField::euler(), Distribution::heaviside(0.3));
    CHECK(pairing(*h, w) == doctest::Approx(0.3 * w(0.3)).epsilon(1e-14));
    // Orders beyond the jet budget have no closed form.
    CHECK_FALSE(lie_distribution_closed(VectorField::euler(), Distribution::delta_derivative(0.0, 4)).has_value());
  }

  TEST_CASE("closed forms agree with the adjoint definition") {
    const std::vector<Distribution> us{Distribution::delta(0.1), Distribution::delta_derivative(-0.2, 1),
                                       Distribution::delta_derivative(0.0, 3), Distribution::heaviside(0.05),
                                       Distribution::regular("sin", *find_function("sin"))};
    const auto probes = probe_pairs(6, 11);
    for (const auto& x : {VectorField::translation(), VectorField::euler(), VectorField::sine_field(0.3)}) {
      for (const auto& u : us) {
        const auto closed = lie_distribution_closed(x, u);
        REQUIRE(closed.has_value());
        const Distribution adjoint = lie_distribution(x, u);
        for (const auto& [w, p] : probes) {
          CHECK(std::fabs(pairing(*closed, w) - pairing(adjoint, w)) <= 1e-10 * (1 + std::fabs(pairing(*closed, w))));
        }
      }
    }
  }

  TEST_CASE("flow pullback at zero time is the identity") {
    const Representative r = embed_distribution(Distribution::heaviside(0.1));
    const Representative z = flow_pullback_rep(VectorField::sine_field(0.3), 0.0, r);
    const TestObject w = make_bump(0.0, 0.5);
    CHECK(z(w, Point{0.2}) == r(w, Point{0.2}));
  }

  TEST_CASE("lie derivative representative") {
    const Representative r = rep_mul(embed_distribution(Distribution::delta(0.0)),
                                     embed_smooth("sin", *find_function("sin")));
    const Representative l = lie_derivative(VectorField::translation(), r);
    CHECK(l.provenance() == Provenance::lie_derivative);
    CHECK(l.label() == "lie(ddx," + r.label() + ")");
    const TestObject w = make_bump(0.1, 0.5);
    const Point p{0.3};
    // L_ddx (iota(delta) sigma(sin)) = iota(delta') sigma(sin) + iota(delta) sigma(cos).
    const double expected = -w.derivative(0.0) * std::sin(0.3) + w(0.0) * std::cos(0.3);
    CHECK(l(w, p) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(lie_rep_direct(VectorField::translation(), r, w, p) == doctest::Approx(expected).epsilon(1e-8));
  }

  TEST_CASE("distributional derivative through the translation flow") {
    const TestObject w = make_bump(0.2, 0.5);
    const double flow = flow_derivative_pairing(VectorField::translation(), Distribution::heaviside(0.0), w);
    // <H', w> = w(0).
    CHECK(flow == doctest::Approx(w(0.0)).epsilon(1e-8));
  }
}
