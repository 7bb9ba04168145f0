#include <cmath>
#include <complex>
#include <numbers>

#include "cltet/gcnum.hpp"
#include "test_util.hpp"

using namespace cltet;

TEST(GcArithmetic, ZeroDivisorsForLambdaMinus) {
  const Lambda l = Lambda::minus;
  const GC p = GC(1, 1, l) * GC(1, -1, l);
  EXPECT_DOUBLE_EQ(p.re, 0);
  EXPECT_DOUBLE_EQ(p.im, 0);
  EXPECT_DOUBLE_EQ(modulus_sq(GC(1, 1, l)), 0);
  EXPECT_ERRC(inverse(GC(1, 1, l)), Errc::ZeroDivisor);
}

TEST(GcArithmetic, EllSquared) {
  const GC p = GC::ell(Lambda::plus) * GC::ell(Lambda::plus);
  EXPECT_DOUBLE_EQ(p.re, -1);
  EXPECT_DOUBLE_EQ(p.im, 0);
  EXPECT_DOUBLE_EQ((GC::ell(Lambda::zero) * GC::ell(Lambda::zero)).re, 0);
  EXPECT_DOUBLE_EQ((GC::ell(Lambda::minus) * GC::ell(Lambda::minus)).re, 1);
}

TEST(GcArithmetic, DualNumberInverse) {
  const GC z = inverse(GC(2, 3, Lambda::zero));
  EXPECT_NEAR(z.re, 0.5, 1e-15);
  EXPECT_NEAR(z.im, -0.75, 1e-15);
}

TEST(GcArithmetic, ModulusSquared) {
  EXPECT_DOUBLE_EQ(modulus_sq(GC(3, 4, Lambda::plus)), 25);
  EXPECT_DOUBLE_EQ(modulus_sq(GC(2.5, 7, Lambda::zero)), 6.25);
}

TEST(GcArithmetic, MixedLambdaRejected) {
  EXPECT_ERRC(GC(1, 0, Lambda::plus) + GC(1, 0, Lambda::minus), Errc::LambdaMismatch);
}

TEST(GenTrig, Values) {
  EXPECT_DOUBLE_EQ(gen_s(Lambda::zero, 2.5), 2.5);
  EXPECT_NEAR(gen_s(Lambda::plus, std::numbers::pi / 2), 1, 1e-15);
  EXPECT_NEAR(gen_s(Lambda::minus, 1), 1.1752011936, 1e-10);
  EXPECT_NEAR(gen_t_inv(Lambda::plus, 1), std::numbers::pi / 4, 1e-15);
  EXPECT_NEAR(gen_ct_inv(Lambda::plus, 0), std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(gen_ct_inv(Lambda::minus, 2), 0.5493061443, 1e-10);
}

TEST(GenTrig, PythagoreanIdentity) {
  for (Lambda l : {Lambda::minus, Lambda::zero, Lambda::plus}) {
    for (double th = -2; th <= 2; th += 0.25) {
      const double c = gen_c(l, th), s = gen_s(l, th);
      EXPECT_NEAR(c * c + to_int(l) * s * s, 1, 1e-12);
    }
  }
}

TEST(GenTrig, CotangentPoleRaises) {
  EXPECT_ERRC(gen_ct(Lambda::plus, 0), Errc::PoleAt);
}

TEST(GenTrig, InverseRoundTrip) {
  for (Lambda l : {Lambda::minus, Lambda::zero, Lambda::plus}) {
    const double th = 0.7;
    EXPECT_NEAR(gen_t_inv(l, gen_t(l, th)), th, 1e-12);
    EXPECT_NEAR(gen_ct_inv(l, gen_ct(l, th)), th, 1e-12);
  }
}

TEST(AnalyticContinuation, ExpGivesGeneralizedTrig) {
  auto f = [](auto x) { return std::exp(x); };
  for (Lambda l : {Lambda::minus, Lambda::zero, Lambda::plus}) {
    const GC z = analytic_continue(f, f, GC(0, 0.8, l));
    EXPECT_NEAR(z.re, gen_c(l, 0.8), 1e-14);
    EXPECT_NEAR(z.im, gen_s(l, 0.8), 1e-14);
  }
}

TEST(AnalyticContinuation, SquareOfDualNumber) {
  auto f = [](auto x) { return x * x; };
  auto df = [](double x) { return 2 * x; };
  const GC z = analytic_continue(f, df, GC(1, 1, Lambda::zero));
  EXPECT_DOUBLE_EQ(z.re, 1);
  EXPECT_DOUBLE_EQ(z.im, 2);
}

TEST(Polar, RoundTrip) {
  for (Lambda l : {Lambda::minus, Lambda::zero, Lambda::plus}) {
    const GC z = exp_ell(l, 0.4) * 1.7;
    double rho = 0, phi = 0;
    ASSERT_TRUE(polar(z, rho, phi));
    EXPECT_NEAR(rho, 1.7, 1e-12);
    EXPECT_NEAR(phi, 0.4, 1e-12);
  }
}
