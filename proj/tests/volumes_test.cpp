#include <cmath>
#include <numbers>

#include "cltet/volumes.hpp"
#include "test_util.hpp"

using namespace cltet;

const double pi = std::numbers::pi;

TEST(Bernoulli, Values) {
  EXPECT_DOUBLE_EQ(bernoulli(0), 1);
  EXPECT_NEAR(bernoulli(2), 1.0 / 6, 1e-16);
  EXPECT_NEAR(bernoulli(4), -1.0 / 30, 1e-16);
  EXPECT_NEAR(bernoulli(6), 1.0 / 42, 1e-16);
  EXPECT_ERRC(bernoulli(3), Errc::DomainError);
}

TEST(Clausen, Values) {
  for (Lambda l : {Lambda::minus, Lambda::zero, Lambda::plus}) EXPECT_EQ(clausen(l, 0), 0);
  EXPECT_NEAR(clausen(Lambda::plus, pi / 2), 0.9159655942, 1e-10);
  EXPECT_NEAR(clausen(Lambda::zero, 2), 0.6137056389, 1e-10);
  EXPECT_NEAR(clausen(Lambda::plus, pi / 2 + 2 * pi), 0.9159655942, 1e-10);
  EXPECT_NEAR(clausen(Lambda::plus, -pi / 2), -0.9159655942, 1e-10);
}

TEST(Clausen, HyperbolicMatchesDefiningIntegral) {
  // -int_0^1 log(2 sinh(t/2)) dt, midpoint-free: split off log t analytically.
  const double x = 1.0;
  auto g = [](double t) { return std::log(2 * std::sinh(t / 2) / t); };
  const double smooth = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, 0, x, 10, 1e-14);
  const double expect = -(smooth + x * std::log(x) - x);
  EXPECT_NEAR(clausen(Lambda::minus, x), expect, 1e-13);
}

TEST(IdealVolume, ClosedForms) {
  EXPECT_NEAR(ideal_volume(Lambda::plus, pi / 3, pi / 3), 1.0149416064, 1e-9);
  EXPECT_NEAR(ideal_volume(Lambda::zero, 1, 1), 1.3862943611, 1e-9);
  EXPECT_NEAR(ideal_volume(Lambda::plus, 1e-9, 1.0), 0, 1e-7);
  EXPECT_ERRC(ideal_volume(Lambda::plus, 2, 2), Errc::DomainError);
}

TEST(LightlikeVolume, FlatAndSeries) {
  EXPECT_NEAR(lightlike_volume(Lambda::zero, 1, 1), 2.0 / 3, 1e-15);
  for (Lambda l : {Lambda::minus, Lambda::plus}) {
    EXPECT_NEAR(lightlike_volume(l, 0.3, 0.3), lightlike_volume_series(to_int(l), 0.3, 0.3, 20), 1e-10);
  }
}

TEST(Series, LeadingTermAndLimits) {
  for (double lam : {-1.0, 0.0, 1.0}) EXPECT_NEAR(lightlike_volume_series(lam, 0.4, 0.7, 1), 0.4 * 0.7 * 1.1 / 3, 1e-15);
  EXPECT_NEAR(lightlike_volume_series(1e-8, 1, 1, 10), 2.0 / 3, 1e-8);
  EXPECT_ERRC(lightlike_volume_series(1, 2, 2, 5), Errc::ConvergenceWarning);
  EXPECT_ERRC(lightlike_volume_series(1, 0.2, 0.2, 0), Errc::DomainError);
}

TEST(Quadrature, MatchesKnownValues) {
  const double tol = 1e-8;
  const auto a = volume_quadrature(Kind::lightlike, Lambda::zero, 1, 1, tol);
  EXPECT_NEAR(a.value, 2.0 / 3, 1e-8);
  const auto b = volume_quadrature(Kind::ideal, Lambda::plus, pi / 3, pi / 3, tol);
  EXPECT_NEAR(b.value, 1.0149416064, 1e-8);
  const auto c = volume_quadrature(Kind::ideal, Lambda::zero, 1, 1, tol);
  EXPECT_NEAR(c.value, 1.3862943611, 1e-8);
  EXPECT_ERRC(volume_quadrature(Kind::ideal, Lambda::zero, 1, 1, 1e-12), Errc::DomainError);
}

TEST(Quadrature, BudgetExhaustionReportsBestEstimate) {
  auto f = [](double x, double y) { return 1.0 / std::sqrt(std::abs(x - 0.3137) + std::abs(y - 0.271)); };
  CubatureOptions opt;
  opt.rel_tol = 1e-14;
  opt.max_evaluations = 5000;
  try {
    cubature(f, {Rect{0, 1, 0, 1}}, opt);
    FAIL() << "expected ToleranceNotReached";
  } catch (const ToleranceNotReached& e) {
    EXPECT_GT(e.best_estimate(), 0);
    EXPECT_GT(e.error_estimate(), 0);
  }
}

TEST(VolumeReport, Discrepancy) {
  const auto r = volume_report(Kind::lightlike, Lambda::minus, 0.3, 0.3, true, 1e-9, 20);
  ASSERT_TRUE(r.oracle && r.series && r.rel_discrepancy);
  EXPECT_LE(*r.rel_discrepancy, 1e-6);
  EXPECT_NEAR(*r.series, r.closed_form, 1e-10);
  EXPECT_ERRC(volume_report(Kind::ideal, Lambda::minus, 0.3, 0.3, false, 1e-9, 5), Errc::DomainError);
}
