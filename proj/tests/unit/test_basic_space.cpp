#include <doctest.h>

#include <cmath>

#include "colombeau/basic_space.hpp"
#include "colombeau/kernels/quadrature.hpp"
#include "colombeau/registry.hpp"
#include "colombeau/suites.hpp"

using namespace colombeau;

namespace {

SmoothFunction named(const char* n) { return *find_function(n); }

}  // namespace

TEST_SUITE("basic_space") {
  TEST_CASE("pairings of the atoms") {
    const TestObject w = make_bump(0.1, 0.7);
    CHECK(pairing(Distribution::delta(0.3), w) == w(0.3));
    CHECK(pairing(Distribution::delta_derivative(0.3, 1), w) ==
          doctest::Approx(-w.derivative(0.3)).epsilon(1e-14));
    CHECK(pairing(Distribution::delta_derivative(0.3, 2), w) ==
          doctest::Approx(w.derivative(0.3, 2)).epsilon(1e-13));
    const double tail = integrate([&](double x) { return w(x); }, {0.05, 0.8}, 1e-15);
    CHECK(pairing(Distribution::heaviside(0.05), w) == doctest::Approx(tail).epsilon(1e-13));
    const double reg = integrate([&](double x) { return std::sin(x) * w(x); }, {-0.6, 0.8}, 1e-15);
    CHECK(pairing(Distribution::regular("sin", named("sin")), w) == doctest::Approx(reg).epsilon(1e-13));
    CHECK(pairing(Distribution::delta(5.0), w) == 0.0);
    CHECK(pairing(Distribution::heaviside(5.0), w) == 0.0);
    CHECK(pairing(Distribution::heaviside(-5.0), w) == doctest::Approx(1.0).epsilon(1e-13));
  }

  TEST_CASE("distribution algebra and rendering") {
    const Distribution u = 2.0 * Distribution::delta(0.1) - Distribution::heaviside(0.0);
    const TestObject w = make_bump(0.0, 1.0);
    CHECK(pairing(u, w) ==
          doctest::Approx(2.0 * w(0.1) - pairing(Distribution::heaviside(0.0), w)).epsilon(1e-14));
    CHECK(u.to_string() == "2*delta(0.1) - heaviside(0)");
    const auto sp = u.singular_points();
    CHECK(sp.size() == 2);
    CHECK_THROWS_AS(Distribution::delta_derivative(0.0, 0), std::invalid_argument);
  }

  TEST_CASE("embeddings") {
    const TestObject w = make_bump(-0.1, 0.5);
    const Representative d = embed_distribution(Distribution::delta(0.0));
    CHECK(d(w, Point{0.3}) == w(0.0));
    CHECK(d(w, Point{-2.0}) == w(0.0));
    CHECK(d.provenance() == Provenance::embedded_distribution);
    CHECK(d.singular_points() == std::vector<double>{0.0});
    const Representative s = embed_smooth("sin", named("sin"));
    CHECK(s(w, Point{0.4}) == std::sin(0.4));
    CHECK(s.provenance() == Provenance::embedded_smooth);
    CHECK(s.label() == "sigma(sin)");
  }

  TEST_CASE("algebra operations act pointwise") {
    const TestObject w = make_bump(0.2, 0.6);
    const Point p{0.25};
    const Representative a = embed_distribution(Distribution::heaviside(0.1));
    const Representative b = embed_smooth("cos", named("cos"));
    CHECK(rep_add(a, b)(w, p) == a(w, p) + b(w, p));
    CHECK(rep_sub(a, b)(w, p) == a(w, p) - b(w, p));
    CHECK(rep_mul(a, b)(w, p) == a(w, p) * b(w, p));
    CHECK(rep_scale(-3.0, a)(w, p) == -3.0 * a(w, p));
    CHECK(rep_pow(a, 3)(w, p) == doctest::Approx(std::pow(a(w, p), 3)).epsilon(1e-15));
    CHECK(zero_representative()(w, p) == 0.0);
    CHECK(rep_mul(a, b).provenance() == Provenance::product);
    CHECK_THROWS_AS(rep_pow(a, 0), std::invalid_argument);
  }

  TEST_CASE("exact tangents agree with finite differences") {
    const auto probes = probe_pairs(6, 42);
    const FormVariation eta = lie_derivative_form(VectorField::sine_field(0.3), make_bump(0.1, 0.5));
    const Representative d = embed_distribution(Distribution::delta(0.1));
    const Representative h = embed_distribution(Distribution::heaviside(0.05));
    const Representative s = embed_smooth("sin", named("sin"));
    for (const Representative& r : {d, h, s, rep_mul(d, h), rep_mul(rep_add(d, s), h), rep_pow(d, 2)}) {
      REQUIRE(r.has_exact_tangent());
      for (const auto& [w, p] : probes) {
        const double exact = r.tangent(w, p, eta, 0.7);
        const double fd = r.tangent_fd(w, p, eta, 0.7);
        CHECK(std::fabs(exact - fd) <= 1e-7 * (1.0 + std::fabs(exact)));
      }
    }
  }

  TEST_CASE("base-point derivative of sigma") {
    const Representative s = embed_smooth("sin", named("sin"));
    const TestObject w = make_bump(0.0, 1.0);
    CHECK(point_derivative(s, w, Point{0.4}, 1e-3) == doctest::Approx(std::cos(0.4)).epsilon(1e-10));
  }

  TEST_CASE("convolution embedding of delta") {
    const MomentMollifier phi = make_moment_mollifier(0);
    const auto conv = embed_convolution(Distribution::delta(0.0), phi);
    for (double eps : {0.5, 0.1}) {
      for (double x : {0.0, 0.02, -0.04}) {
        CHECK(conv(eps, x) == doctest::Approx(phi.profile()(-x / eps) / eps).epsilon(1e-14));
      }
    }
  }
}
