#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "colombeau/kernels/errors.hpp"
#include "colombeau/kernels/finite_diff.hpp"
#include "colombeau/kernels/format.hpp"
#include "colombeau/kernels/interval.hpp"
#include "colombeau/kernels/jet.hpp"
#include "colombeau/kernels/ode.hpp"
#include "colombeau/kernels/parallel.hpp"
#include "colombeau/kernels/quadrature.hpp"
#include "colombeau/kernels/simd.hpp"
#include "colombeau/kernels/slope_fit.hpp"
#include "colombeau/kernels/smooth_function.hpp"
#include "colombeau/suites.hpp"

using namespace colombeau;
using namespace colombeau::simd;

namespace {

double factorial(int k) { return std::tgamma(k + 1.0); }

std::vector<double> random_vector(ProbeRng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(lo, hi);
  return v;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("jet derivatives of rational, log and sqrt functions") {
    const double x0 = 0.5;
    const Jet x = Jet::variable(x0);
    const Jet inv = 1.0 / (1.0 + x);
    const Jet lg = log(1.0 + x);
    const Jet sq = sqrt(x);
    for (int k = 0; k <= kJetOrder; ++k) {
      const double sign = k % 2 == 0 ? 1.0 : -1.0;
      CHECK(inv.derivative(k) == doctest::Approx(sign * factorial(k) / std::pow(1.5, k + 1)).epsilon(1e-13));
      if (k >= 1) {
        CHECK(lg.derivative(k) == doctest::Approx(-sign * factorial(k - 1) / std::pow(1.5, k)).epsilon(1e-13));
      }
    }
    // d^k sqrt(x) = (1/2)(-1/2)...(3/2 - k) x^{1/2 - k}
    double c = 1.0;
    for (int k = 0; k <= kJetOrder; ++k) {
      CHECK(sq.derivative(k) == doctest::Approx(c * std::pow(x0, 0.5 - k)).epsilon(1e-12));
      c *= 0.5 - k;
    }
  }

  TEST_CASE("jet chain rule for exp(sin x)") {
    const double x0 = 0.3;
    const Jet j = exp(sin(Jet::variable(x0)));
    const double s = std::sin(x0), co = std::cos(x0), e = std::exp(s);
    CHECK(j.derivative(0) == doctest::Approx(e).epsilon(1e-15));
    CHECK(j.derivative(1) == doctest::Approx(co * e).epsilon(1e-14));
    CHECK(j.derivative(2) == doctest::Approx((co * co - s) * e).epsilon(1e-14));
    CHECK(j.derivative(3) == doctest::Approx((co * co * co - 3 * s * co - co) * e).epsilon(1e-13));
    const Jet outer = exp(Jet::variable(s));
    const Jet composed = compose(outer, sin(Jet::variable(x0)));
    for (int k = 0; k <= kJetOrder; ++k) {
      CHECK(composed.derivative(k) == doctest::Approx(j.derivative(k)).epsilon(1e-13));
    }
  }

  TEST_CASE("jet valid order drops under differentiation") {
    const Jet j = pow(Jet::variable(2.0), 3);
    CHECK(j.valid_order() == kJetOrder);
    const Jet d = j.differentiated();
    CHECK(d.valid_order() == kJetOrder - 1);
    CHECK(d.derivative(0) == doctest::Approx(12.0));
    CHECK(d.derivative(1) == doctest::Approx(12.0));
    CHECK((d + j).valid_order() == kJetOrder - 1);
    CHECK_THROWS_AS(d.derivative(kJetOrder), std::domain_error);
  }

  TEST_CASE("smooth function value and jet paths agree") {
    const SmoothFunction f = SmoothFunction::generic([](const auto& x) {
      using std::sin;
      return x * x * sin(x);
    });
    for (double x : {-1.3, 0.0, 0.7}) {
      CHECK(f(Jet::variable(x)).value() == doctest::Approx(f(x)).epsilon(1e-15));
      const double exact = 2 * x * std::sin(x) + x * x * std::cos(x);
      CHECK(f.derivative(x) == doctest::Approx(exact).epsilon(1e-14));
      CHECK(f.derivative()(x) == doctest::Approx(exact).epsilon(1e-14));
    }
    const SmoothFunction g = compose(f, 2.0 * SmoothFunction::identity());
    CHECK(g(0.4) == doctest::Approx(f(0.8)));
    CHECK(g.derivative(0.4) == doctest::Approx(2.0 * f.derivative(0.8)));
  }

  TEST_CASE("interval validation") {
    CHECK_THROWS_AS(Interval(1.0, 1.0), std::invalid_argument);
    const Interval i(-1.0, 3.0);
    CHECK(i.width() == 4.0);
    CHECK(i.midpoint() == 1.0);
    CHECK(i.contains(3.0));
    CHECK_FALSE(i.contains(3.5));
  }

  TEST_CASE("adaptive quadrature on closed-form integrals") {
    CHECK(integrate([](double x) { return std::pow(x, 9); }, {0.0, 1.0}, 1e-14) ==
          doctest::Approx(0.1).epsilon(1e-14));
    CHECK(integrate([](double x) { return std::exp(x); }, {-1.0, 1.0}, 1e-14) ==
          doctest::Approx(std::exp(1.0) - std::exp(-1.0)).epsilon(1e-14));
    const double bump = integrate([](double t) { return std::exp(-1.0 / (1.0 - t * t)); },
                                  {-1.0, 1.0}, 1e-15);
    CHECK(bump == doctest::Approx(0.443993816168079437823).epsilon(1e-13));
    // A spike far narrower than the initial panel needs its breakpoint.
    const double breaks[] = {0.0};
    const double spike = integrate_piecewise(
        [](double x) { return std::exp(-(x / 1e-3) * (x / 1e-3)); }, {-1.0, 1.0}, breaks);
    CHECK(spike == doctest::Approx(1.77245385090551602729816748334e-3).epsilon(1e-12));
  }

  TEST_CASE("quadrature reports failure when the refinement limit is hit") {
    QuadratureOptions o;
    o.max_depth = 2;
    o.tol = 1e-15;
    CHECK_THROWS_AS(integrate([](double x) { return std::sin(200.0 * x); }, {0.0, 3.0}, o),
                    NumericalError);
  }

  TEST_CASE("rk4 flow matches the closed form of x' = 1 + x^2") {
    const SmoothFunction field = SmoothFunction::generic([](const auto& x) { return 1.0 + x * x; });
    for (double x0 : {-1.0, 0.0, 0.5}) {
      for (double t : {0.3, -0.6, 0.9}) {
        const double exact = std::tan(std::atan(x0) + t);
        CHECK(ode_flow(x0, field, t) == doctest::Approx(exact).epsilon(1e-11));
      }
    }
    CHECK_THROWS_AS(ode_flow(0.0, field, 1.57), EscapeError);
    CHECK(ode_flow(0.4, field, 0.0) == 0.4);
  }

  TEST_CASE("frozen flow map carries the Jacobian") {
    const SmoothFunction field = SmoothFunction::generic([](const auto& x) { return 1.0 + x * x; });
    const double probes[] = {-1.0, 0.0, 1.0};
    const FlowMap fl(field, 0.5, {}, probes);
    for (double x0 : {-0.8, 0.1, 0.6}) {
      const double y = std::tan(std::atan(x0) + 0.5);
      CHECK(fl(x0) == doctest::Approx(y).epsilon(1e-11));
      const Jet j = fl(Jet::variable(x0));
      CHECK(j.derivative(1) == doctest::Approx((1 + y * y) / (1 + x0 * x0)).epsilon(1e-10));
    }
  }

  TEST_CASE("richardson central difference") {
    const auto g = [](double t) { return std::sin(t); };
    CHECK(central_diff(g, 0.7, 1e-4) == doctest::Approx(std::cos(0.7)).epsilon(1e-8));
    CHECK(std::fabs(central_diff_richardson(g, 0.7, 1e-2) - std::cos(0.7)) < 1e-10);
  }

  TEST_CASE("epsilon grids") {
    const EpsilonGrid s = EpsilonGrid::standard();
    CHECK(s.size() == 13);
    CHECK(s[0] == 0.25);
    CHECK(s.values().back() == std::ldexp(1.0, -14));
    CHECK(s.ratio() == 2.0);
    CHECK(EpsilonGrid::geometric(0.5, 1.0 / 256.0, std::sqrt(2.0)).size() == 15);
    CHECK(s.truncated(2).size() == 11);
    CHECK_THROWS_AS(EpsilonGrid({0.5, 0.25, 0.125}), std::invalid_argument);
    CHECK_THROWS_AS(EpsilonGrid({0.5, 0.25, 0.25, 0.1}), std::invalid_argument);
    CHECK_THROWS_AS(EpsilonGrid({2.0, 1.0, 0.5, 0.25}), std::invalid_argument);
  }

  TEST_CASE("slope fit") {
    const EpsilonGrid g = EpsilonGrid::standard();
    std::vector<SlopeSample> s;
    for (double e : g.values()) s.push_back({e, 3.0 * std::pow(e, -1.5)});
    const SlopeFit f = fit_slope(s);
    CHECK(f.slope == doctest::Approx(-1.5).epsilon(1e-12));
    CHECK(f.r2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f.points_resolvable == 13);

    std::vector<SlopeSample> tiny;
    for (double e : g.values()) tiny.push_back({e, 1e-16});
    CHECK(fit_slope(tiny).machine_zero());

    std::vector<SlopeSample> floored;
    for (double e : g.values()) floored.push_back({e, std::pow(e, 2.0), 1e-8});
    const SlopeFit ff = fit_slope(floored);
    CHECK(ff.points_resolvable < 13);
    CHECK(ff.slope == doctest::Approx(2.0).epsilon(1e-12));

    std::vector<SlopeSample> bad{{0.5, 1.0}, {0.25, -1.0}, {0.125, 1.0}, {0.0625, 1.0}};
    CHECK_THROWS_AS(fit_slope(bad), std::invalid_argument);
  }

  TEST_CASE("simd variants agree with the scalar reference") {
    const KernelTable* wide = avx2_kernels();
    if (wide == nullptr || detected_isa() != Isa::avx2) {
      MESSAGE("AVX2 unavailable, comparing scalar with itself");
      wide = &scalar_kernels();
    }
    const KernelTable& ref = scalar_kernels();
    ProbeRng rng(77);
    for (std::size_t n = 0; n < 70; ++n) {
      const auto w = random_vector(rng, n, -1.0, 1.0);
      const auto f = random_vector(rng, n, -5.0, 5.0);
      const WeightedSum a = ref.weighted_sum(w, f), b = wide->weighted_sum(w, f);
      const double bound = 4.0 * static_cast<double>(n + 1) * 1.2e-16 * a.abs_sum;
      CHECK(std::fabs(a.sum - b.sum) <= bound);
      CHECK(std::fabs(a.abs_sum - b.abs_sum) <= bound);
      CHECK(ref.max_abs(f) == wide->max_abs(f));
      std::vector<double> o1(n), o2(n);
      ref.affine_map(f, 0.37, -1.25, o1);
      wide->affine_map(f, 0.37, -1.25, o2);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::fabs(o1[i] - o2[i]) <= 1e-15 * (1 + std::fabs(o1[i])));
      const RegressionSums r1 = ref.regression_sums(w, f), r2 = wide->regression_sums(w, f);
      CHECK(r1.n == r2.n);
      CHECK(std::fabs(r1.sxy - r2.sxy) <= 1e-13 * (1 + static_cast<double>(n)));
      CHECK(std::fabs(r1.syy - r2.syy) <= 1e-12 * (1 + static_cast<double>(n)));
    }
  }

  TEST_CASE("isa override") {
    const Isa before = active_isa();
    force_isa(Isa::scalar);
    CHECK(active_isa() == Isa::scalar);
    CHECK(&kernels() == &scalar_kernels());
    if (avx2_kernels() == nullptr || detected_isa() != Isa::avx2) {
      CHECK_THROWS_AS(force_isa(Isa::avx2), std::invalid_argument);
    }
    force_isa(before);
    CHECK(name(Isa::scalar) == "scalar");
  }

  TEST_CASE("parallel_for is order independent and rethrows the lowest failure") {
    std::vector<double> a(100), b(100);
    parallel_for(a.size(), 1, [&](std::size_t i) { a[i] = std::sqrt(static_cast<double>(i)); });
    parallel_for(b.size(), 4, [&](std::size_t i) { b[i] = std::sqrt(static_cast<double>(i)); });
    CHECK(a == b);
    try {
      parallel_for(50, 3, [](std::size_t i) {
        if (i == 7 || i == 31) throw std::runtime_error(std::to_string(i));
      });
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "7");
    }
  }

  TEST_CASE("number formatting") {
    CHECK(format_number(0.3) == "0.3");
    CHECK(format_number(2.0) == "2");
    CHECK(format_number(-1.5) == "-1.5");
  }
}
