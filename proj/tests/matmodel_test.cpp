#include <cmath>
#include <random>

#include "cltet/matmodel.hpp"
#include "test_util.hpp"

using namespace cltet;

namespace {

Mat2 random_mat(std::mt19937_64& rng, Lambda l) {
  std::uniform_real_distribution<double> u(-1, 1);
  return {GC(u(rng), u(rng), l), GC(u(rng), u(rng), l), GC(u(rng), u(rng), l), GC(u(rng), u(rng), l)};
}

Isometry random_isometry(std::mt19937_64& rng, Lambda l) {
  for (;;) {
    const Mat2 m = random_mat(rng, l);
    if (modulus_sq(det(m)) > 0.05) return Isometry(m);
  }
}

}  // namespace

TEST(Involutions, CircAndDag) {
  const Lambda l = Lambda::plus;
  const Mat2 m{GC(1, 2, l), GC(3, 4, l), GC(5, 6, l), GC(7, 8, l)};
  const Mat2 c = circ(m);
  EXPECT_EQ(c.a.re, 7);
  EXPECT_EQ(c.a.im, -8);
  EXPECT_EQ(c.b.re, -3);
  EXPECT_EQ(c.b.im, 4);
  EXPECT_EQ(c.c.re, -5);
  EXPECT_EQ(c.d.im, -2);
  std::mt19937_64 rng(3);
  for (Lambda k : {Lambda::minus, Lambda::zero, Lambda::plus}) {
    const Mat2 r = random_mat(rng, k);
    EXPECT_EQ(max_abs_diff(circ(circ(r)), r), 0);
    EXPECT_EQ(max_abs_diff(dag(dag(r)), r), 0);
  }
}

TEST(Embedding, OriginAndFormula) {
  const Lambda l = Lambda::minus;
  EXPECT_EQ(max_abs_diff(embed(Vec4(1, 0, 0, 0), Space::Y, l), Mat2::identity(l)), 0);
  const Mat2 y = embed(Vec4(2, 3, 5, 7), Space::Y, l);
  EXPECT_DOUBLE_EQ(y.a.re, 7);
  EXPECT_DOUBLE_EQ(y.b.re, 7);
  EXPECT_DOUBLE_EQ(y.b.im, 3);
  EXPECT_DOUBLE_EQ(y.c.im, -3);
  EXPECT_DOUBLE_EQ(y.d.re, -3);
  for (Space s : {Space::X, Space::Y}) {
    const Vec4 v(0.3, -1.2, 0.8, 2.0);
    EXPECT_LT((unembed(embed(v, s, l), s) - v).norm(), 1e-15);
  }
}

TEST(Isometry, RejectsNonPositiveDeterminantModulus) {
  const Lambda l = Lambda::minus;
  EXPECT_ERRC(Isometry(Mat2::diag(GC(1, 1, l), GC::real(1, l))), Errc::ZeroDivisor);
  EXPECT_ERRC(Isometry(Mat2::diag(GC(0, 1, l), GC::real(1, l))), Errc::ZeroDivisor);
}

TEST(Action, IdentityAndGroupLaw) {
  std::mt19937_64 rng(11);
  for (Lambda l : {Lambda::minus, Lambda::zero, Lambda::plus}) {
    for (Space s : {Space::X, Space::Y}) {
      const Point p = act(random_isometry(rng, l), Point::origin(s, l));
      EXPECT_TRUE(projectively_equal(act(Isometry::identity(l), p), p));
      const Isometry A = random_isometry(rng, l), B = random_isometry(rng, l);
      EXPECT_TRUE(projectively_equal(act(A * B, p), act(A, act(B, p))));
    }
  }
}

TEST(PointSqrt, DiagonalAndRandom) {
  const Lambda l = Lambda::minus;
  const double a = 0.6;
  const Point p(Space::X, Mat2::diag(exp_ell(l, a), exp_ell(l, -a)));
  const Isometry A = point_sqrt(p);
  EXPECT_TRUE(projectively_equal(A, Isometry(Mat2::diag(exp_ell(l, a / 2), exp_ell(l, -a / 2)))));
  std::mt19937_64 rng(5);
  for (Lambda k : {Lambda::minus, Lambda::zero, Lambda::plus}) {
    for (Space s : {Space::X, Space::Y}) {
      const Point q = act(random_isometry(rng, k), Point::origin(s, k));
      EXPECT_TRUE(projectively_equal(act(point_sqrt(q), Point::origin(s, k)), q));
    }
  }
}

TEST(Tangents, CausalTypes) {
  EXPECT_EQ(causal_type(Mat2::ell(1, 0, 0, -1, Lambda::minus), Space::X), 1);
  EXPECT_EQ(causal_type(Mat2::ell(0, 0, 1, 0, Lambda::minus), Space::X), 0);
  const Lambda l = Lambda::plus;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 50; ++i) {
    const Mat2 y = Tangent::from_coords(Eigen::Vector3d(u(rng), u(rng), u(rng)), Space::Y, l);
    EXPECT_EQ(causal_type(y, Space::Y), 1);
  }
  EXPECT_DOUBLE_EQ(model_metric(Mat2::ell(1, 0, 0, -1, l), Mat2::ell(1, 0, 0, -1, l), Space::X), 1);
}

TEST(Tangents, MetricIsInvariant) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1, 1);
  for (Lambda l : {Lambda::minus, Lambda::zero, Lambda::plus}) {
    for (Space s : {Space::X, Space::Y}) {
      const Tangent t(s, Tangent::from_coords(Eigen::Vector3d(u(rng), u(rng), u(rng)), s, l));
      const Tangent moved = t.transported(random_isometry(rng, l));
      EXPECT_NEAR(tangent_metric(moved, moved), tangent_metric(t, t), 1e-12);
    }
  }
}

TEST(Exponential, DiagonalAndSeries) {
  for (Lambda l : {Lambda::minus, Lambda::zero, Lambda::plus}) {
    const double th = 0.9;
    const Tangent T(Space::X, Mat2::ell(1, 0, 0, -1, l));
    const Point p = exp_point(th, T);
    EXPECT_TRUE(projectively_equal(p, Point(Space::X, Mat2::diag(exp_ell(l, th), exp_ell(l, -th)))));
    const Isometry half(exp_series(T.rep() * (th / 2)));
    EXPECT_TRUE(projectively_equal(p, act(half, Point::origin(Space::X, l))));
    EXPECT_TRUE(projectively_equal(exp_point(0, T), Point::origin(Space::X, l)));
  }
}
