#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "colombeau/grading.hpp"
#include "colombeau/registry.hpp"
#include "colombeau/suites.hpp"

using namespace colombeau;

TEST_SUITE("grading") {
  TEST_CASE("sup sweep of iota(delta) is the peak of the scaled net") {
    const MomentMollifier phi = make_moment_mollifier(0);
    const EpsilonGrid grid = EpsilonGrid::powers_of_two(2, 6);
    const auto sup = sup_sweep(embed_distribution(Distribution::delta(0.0)), phi, grid);
    REQUIRE(sup.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(sup[i] == doctest::Approx(phi.profile()(0.0) / grid[i]).epsilon(1e-13));
    }
  }

  TEST_CASE("probe points include the layer around singular points") {
    const Representative d = embed_distribution(Distribution::delta(0.25));
    const auto pts = probe_points(d, 0.01, 1.0);
    CHECK(pts.size() == 41 + 2 * kLayerProbes + 1);
    CHECK(std::find(pts.begin(), pts.end(), 0.25) != pts.end());
    const auto plain = probe_points(embed_smooth("sin", *find_function("sin")), 0.01, 1.0);
    CHECK(plain.size() == 41);
  }

  TEST_CASE("moderate orders of the delta family") {
    const MomentMollifier phi = make_moment_mollifier(0);
    const EpsilonGrid grid = EpsilonGrid::standard();
    const Representative d = embed_distribution(Distribution::delta(0.0));
    const GradingReport r0 = grade_moderate(d, phi, grid, 0);
    CHECK(r0.classification == Classification::moderate);
    CHECK(r0.order == 1);
    CHECK(r0.classification_label() == "moderate(1)");
    const GradingReport r1 = grade_moderate(d, phi, grid, 1);
    CHECK(r1.order == 2);
    CHECK(r1.series.size() == 2);
    const GradingReport s = grade_moderate(embed_smooth("cos", *find_function("cos")), phi, grid, 0);
    CHECK(s.classification == Classification::moderate);
    CHECK(s.order == 0);
    CHECK(std::fabs(s.fitted_slope()) < 0.05);
    CHECK(s.convention == std::string(kGradingConvention));
  }

  TEST_CASE("negligibility") {
    const EpsilonGrid grid = negligibility_grid();
    const GradingReport z = grade_negligible(zero_representative(), grid, 1, {2});
    CHECK(z.classification == Classification::machine_zero);
    const GradingReport d = grade_negligible(embed_distribution(Distribution::delta(0.0)), grid, 0, {2});
    CHECK(d.classification != Classification::negligible);
    CHECK_FALSE(d.diagnostic.empty());
    const Representative f = embed_smooth("sin", *find_function("sin"));
    CHECK(quotient_equal(f, f, grid, 1, {2}).first);
    CHECK_THROWS_AS(grade_negligible(f, grid, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(grade_negligible(f, grid, 0, {4, 2}), std::invalid_argument);
  }

  TEST_CASE("weak limits") {
    const MomentMollifier phi = make_moment_mollifier(0);
    const TestObject psi = make_bump(0.1, 1.0);
    const WeakLimit d = weak_limit(embed_distribution(Distribution::delta(0.0)), psi, phi,
                                   EpsilonGrid::standard());
    CHECK(d.converged);
    CHECK(d.value == doctest::Approx(psi(0.0)).epsilon(1e-6));
    const auto sin_ints = weak_integrals(embed_smooth("sin", *find_function("sin")), psi, phi,
                                         EpsilonGrid::powers_of_two(2, 5));
    for (double v : sin_ints) CHECK(v == doctest::Approx(sin_ints.front()).epsilon(1e-12));
    const AssociationReport same = associate(embed_distribution(Distribution::heaviside(0.0)),
                                             embed_distribution(Distribution::heaviside(0.0)), psi,
                                             phi, EpsilonGrid::standard());
    CHECK(same.associated);
    CHECK(same.extrapolated_limit == 0.0);
  }
}
