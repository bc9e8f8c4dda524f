#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cardrec/bessel.hpp"
#include "cardrec/errors.hpp"
#include "cardrec/families.hpp"

using namespace cardrec;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

TEST_CASE("constructor invariants") {
  CHECK_THROWS_AS(InterpolatorFamily::polyharmonic(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(InterpolatorFamily::polyharmonic(2, 1), std::invalid_argument);  // 2k > n
  CHECK_NOTHROW(InterpolatorFamily::polyharmonic(2, 2));
  CHECK_THROWS_AS(InterpolatorFamily::gaussian(1, 0.5), std::invalid_argument);
  CHECK_NOTHROW(InterpolatorFamily::gaussian(1, 0.5, true));
  CHECK_THROWS_AS(InterpolatorFamily::multiquadric(1, 0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(InterpolatorFamily::multiquadric(1, 1.0, 2.0), std::invalid_argument);
  CHECK_NOTHROW(InterpolatorFamily::multiquadric(1, 1.0, 0.5));
}

TEST_CASE("spectrum values") {
  const auto poly = InterpolatorFamily::polyharmonic(1, 1);
  const double xi_pi[] = {kPi};
  CHECK(spectrum(poly, xi_pi) == doctest::Approx(1.0 / (kPi * kPi)).epsilon(1e-14));
  CHECK(spectrum(poly, xi_pi) == doctest::Approx(0.1013212).epsilon(1e-6));

  const auto gauss = InterpolatorFamily::gaussian(1, 1.0);
  const double zero[] = {0.0};
  CHECK(spectrum(gauss, zero) == doctest::Approx(1.0));

  const auto mq = InterpolatorFamily::multiquadric(1, 1.0, 0.5);
  const double one[] = {1.0};
  CHECK(spectrum(mq, one) == doctest::Approx(bessel_k(1.0, 1.0)).epsilon(1e-14));
  CHECK(spectrum(mq, one) == doctest::Approx(0.601907).epsilon(1e-5));

  CHECK_THROWS_AS(spectrum(poly, zero), OriginSingularity);
  CHECK_THROWS_AS(spectrum(mq, zero), OriginSingularity);
}

TEST_CASE("m_ratio values and conventions") {
  const auto gauss = InterpolatorFamily::gaussian(1, 0.1, true);
  const double zero[] = {0.0};
  CHECK(m_ratio(gauss, {1}, zero) ==
        doctest::Approx(std::exp(-4.0 * kPi * kPi * 0.1)).epsilon(1e-13));
  CHECK(m_ratio(gauss, {1}, zero) == doctest::Approx(0.019296).epsilon(1e-4));

  const auto poly = InterpolatorFamily::polyharmonic(1, 1);
  CHECK(m_ratio(poly, {1}, zero) == 0.0);  // singular-denominator limit
  const double at_mpi[] = {-kPi};
  CHECK(m_ratio(poly, {2}, at_mpi) == doctest::Approx(1.0 / 9.0).epsilon(1e-13));

  CHECK_THROWS_AS(m_ratio(poly, {0}, at_mpi), std::invalid_argument);
}

TEST_CASE("m_bound closed forms") {
  const auto poly = InterpolatorFamily::polyharmonic(1, 1);
  CHECK(m_bound(poly, {2}) == doctest::Approx(1.0 / 9.0).epsilon(1e-13));
  const auto gauss = InterpolatorFamily::gaussian(1, 1.0);
  CHECK(m_bound(gauss, {1}) == doctest::Approx(1.0));
  CHECK(m_bound(gauss, {2}) ==
        doctest::Approx(std::exp(-8.0 * kPi * kPi)).epsilon(1e-12));
  CHECK_THROWS_AS(m_bound(poly, {0}), std::invalid_argument);
}

TEST_CASE("R2 certificate: ratios below bounds on a dense node set") {
  const FrequencyGrid grid(1, 64);
  std::vector<double> xi(1);
  const auto families = {InterpolatorFamily::polyharmonic(1, 1),
                         InterpolatorFamily::gaussian(1, 0.25, true),
                         InterpolatorFamily::multiquadric(1, 1.0, 0.5)};
  for (const auto& fam : families) {
    for (int jv = -10; jv <= 10; ++jv) {
      if (jv == 0) continue;
      const Index j{jv};
      const double bound = m_bound(fam, j);
      for (std::size_t m = 0; m < grid.node_count(); ++m) {
        if (fam.origin_singular() && m == grid.origin_node()) continue;
        grid.node(m, xi);
        CHECK(m_ratio(fam, j, xi) <= bound * (1.0 + 1e-12));
      }
    }
  }
}

TEST_CASE("m_ratio symmetry under (j, xi) -> (-j, -xi)") {
  const auto poly = InterpolatorFamily::polyharmonic(1, 2);
  const auto gauss = InterpolatorFamily::gaussian(1, 2.0);
  for (double x : {-2.5, -0.3, 0.7, 3.0}) {
    const double xp[] = {x}, xn[] = {-x};
    for (int jv : {1, 2, 5}) {
      CHECK(m_ratio(poly, {jv}, xp) == m_ratio(poly, {-jv}, xn));
      CHECK(m_ratio(gauss, {jv}, xp) == m_ratio(gauss, {-jv}, xn));
    }
  }
}

TEST_CASE("scale invariance of ratio-type formulas") {
  // weights and M ratios only ever see phi_hat through quotients; scaling
  // the spectrum by 1e+-6 must leave them unchanged to machine precision
  auto base = [](double xi) { return 1.0 / ((xi * xi + 0.3) * (xi * xi + 0.3)); };
  for (double scale : {1e6, 1e-6}) {
    for (double xi : {-2.0, 0.4, 1.7}) {
      double num = base(xi + kTwoPi), den = base(xi);
      double ratio0 = num / den;
      double ratio1 = (scale * num) / (scale * den);
      CHECK(ratio1 == doctest::Approx(ratio0).epsilon(1e-15));
      double w0 = den / (den + num);
      double w1 = (scale * den) / (scale * den + scale * num);
      CHECK(w1 == doctest::Approx(w0).epsilon(1e-15));
    }
  }
}

TEST_CASE("tail_radius certified values") {
  const auto gauss = InterpolatorFamily::gaussian(1, 1.0);
  CHECK(tail_radius(gauss, 1e-12) == 1);

  const auto poly1 = InterpolatorFamily::polyharmonic(1, 1);
  CHECK(tail_radius(poly1, 1e-6) == 50661);

  const auto poly3 = InterpolatorFamily::polyharmonic(1, 3);
  CHECK(tail_radius(poly3, 1e-10) <= 60);

  CHECK_THROWS_AS(tail_radius(poly1, 1e-30), NumericalFailure);
  CHECK_THROWS_AS(tail_radius(poly1, 0.0), std::invalid_argument);
}

TEST_CASE("majorant_tail sums the closed-form bounds") {
  // 1-D polyharmonic k=1: sum_{|d|>W} (2|d|-1)^{-2} via the odd zeta value
  const auto poly = InterpolatorFamily::polyharmonic(1, 1);
  const double all_odd = kPi * kPi / 8.0;  // sum over odd m of m^{-2}
  double partial = 0.0;
  for (int d = 1; d <= 3; ++d) partial += std::pow(2.0 * d - 1.0, -2.0);
  const double expect = 2.0 * (all_odd - partial);
  const double got = majorant_tail(poly, 3);
  CHECK(got >= expect * (1.0 - 1e-9));  // certificate: never below the true sum
  CHECK(got <= expect * 1.01 + 1e-4);

  const auto gauss = InterpolatorFamily::gaussian(1, 0.25, true);
  CHECK(majorant_tail(gauss, 3) ==
        doctest::Approx(2.0 * std::exp(-4.0 * kPi * kPi * 0.25 * 12.0)).epsilon(1e-8));
  CHECK(majorant_tail(gauss, 3) < 1e-15);
}

TEST_CASE("verify_conditions: gaussian sweep passes") {
  std::vector<InterpolatorFamily> fams;
  for (double a : {0.25, 0.5, 1.0, 2.0, 4.0})
    fams.push_back(InterpolatorFamily::gaussian(1, a, true));
  const FrequencyGrid grid(1, 64);
  const auto rep = verify_conditions(fams, grid, 5, 1e-12);
  CHECK(rep.passed);
  CHECK(rep.r2_violations == 0);
  CHECK(rep.h2_delta == doctest::Approx(std::exp(-0.25 * kPi * kPi)).epsilon(1e-12));
  CHECK(rep.h2_delta == doctest::Approx(0.0848).epsilon(1e-3));
}

TEST_CASE("verify_conditions: polyharmonic sweep passes") {
  std::vector<InterpolatorFamily> fams;
  for (int k : {1, 2, 3}) fams.push_back(InterpolatorFamily::polyharmonic(1, k));
  const FrequencyGrid grid(1, 64);
  const auto rep = verify_conditions(fams, grid, 5, 1e-12);
  CHECK(rep.passed);
  CHECK(rep.h2_delta == doctest::Approx(1.0 / (kPi * kPi)).epsilon(1e-12));
}

TEST_CASE("verify_conditions: synthetic H2 violation fails") {
  std::vector<InterpolatorFamily> fams = {InterpolatorFamily::synthetic_h2fail(1)};
  const FrequencyGrid grid(1, 64);
  const auto rep = verify_conditions(fams, grid, 3, 1e-12);
  CHECK(!rep.passed);
  CHECK(rep.h2_delta == 0.0);  // the -pi node sits on the spectrum's zero
}

TEST_CASE("verify_conditions: R1 trend is nonincreasing per j") {
  std::vector<InterpolatorFamily> fams;
  for (double a : {0.25, 0.5, 1.0, 2.0, 4.0})
    fams.push_back(InterpolatorFamily::gaussian(1, a, true));
  const FrequencyGrid grid(1, 64);
  const auto rep = verify_conditions(fams, grid, 5, 1e-12);
  for (const auto& [j, trend] : rep.r1_trend) {
    for (std::size_t i = 1; i < trend.size(); ++i)
      CHECK(trend[i] <= trend[i - 1] + 1e-12);
    CHECK(trend.back() < 0.75);
  }
}

TEST_CASE("verify_conditions parameter errors") {
  const FrequencyGrid grid(1, 32);
  std::vector<InterpolatorFamily> empty;
  CHECK_THROWS_AS(verify_conditions(empty, grid, 5, 1e-12), std::invalid_argument);
}
