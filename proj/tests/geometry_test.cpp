#include <cmath>
#include <random>

#include "cltet/geometry.hpp"
#include "test_util.hpp"

using namespace cltet;

namespace {

Isometry random_isometry(std::mt19937_64& rng, Lambda l) {
  std::uniform_real_distribution<double> u(-1, 1);
  for (;;) {
    const Mat2 m{GC(u(rng), u(rng), l), GC(u(rng), u(rng), l), GC(u(rng), u(rng), l), GC(u(rng), u(rng), l)};
    if (modulus_sq(det(m)) > 0.05) return Isometry(m);
  }
}

const Lambda all[] = {Lambda::minus, Lambda::zero, Lambda::plus};

}  // namespace

TEST(ArcLength, SpacelikeGeodesicParameter) {
  for (Lambda l : all) {
    const Geodesic g = make_geodesic(Tangent(Space::X, Mat2::ell(1, 0, 0, -1, l)));
    for (double t : {0.3, 0.8, 1.4}) {
      const ArcLength a = arc_length(geodesic_eval(g, 0), geodesic_eval(g, t));
      EXPECT_EQ(a.sigma, 1);
      EXPECT_NEAR(a.d, t, 1e-9);
    }
    EXPECT_NEAR(arc_length(geodesic_eval(g, 0), geodesic_eval(g, 0)).d, 0, 1e-12);
  }
}

TEST(ArcLength, InvariantUnderIsometries) {
  std::mt19937_64 rng(4);
  for (Lambda l : all) {
    const Geodesic g = make_geodesic(Tangent(Space::Y, Mat2::real(1, 0.2, 0.2, -1, l)));
    const Point p = geodesic_eval(g, 0.1), q = geodesic_eval(g, 0.9);
    const Isometry A = random_isometry(rng, l);
    const ArcLength a = arc_length(p, q), b = arc_length(act(A, p), act(A, q));
    EXPECT_EQ(a.sigma, b.sigma);
    EXPECT_NEAR(a.d, b.d, 1e-8);
  }
}

TEST(Geodesic, YSpacelikeUsesHyperbolicFunctions) {
  const Lambda l = Lambda::plus;
  const Mat2 y = Mat2::real(1, 0, 0, -1, l);
  const Geodesic g = make_geodesic(Tangent(Space::Y, y));
  const double t = 0.7;
  const Mat2 expect = Mat2::identity(l) * std::cosh(t) + y * std::sinh(t);
  EXPECT_TRUE(projectively_equal(geodesic_eval(g, t), Point(Space::Y, expect)));
}

TEST(Planes, LightlikeNormalsMeetInGeodesic) {
  for (Lambda l : {Lambda::minus, Lambda::plus}) {
    const auto [n1, n2] = null_normals(Mat2::ell(1, 0, 0, -1, l), Space::X);
    const Point o = Point::origin(Space::X, l);
    const Plane P1 = plane_from_normal(o, n1), P2 = plane_from_normal(o, n2);
    EXPECT_TRUE(is_lightlike(P1));
    EXPECT_TRUE(is_lightlike(P2));
    const Geodesic g = intersect_lightlike_planes(P1, P2);
    const Geodesic h = make_geodesic(Tangent(Space::X, Mat2::ell(1, 0, 0, -1, l)));
    EXPECT_TRUE(same_line(g, h));
    for (double t : {0.2, 1.1}) {
      EXPECT_TRUE(plane_contains(P1, geodesic_eval(h, t)));
      EXPECT_TRUE(plane_contains(P2, geodesic_eval(h, t)));
    }
  }
}

TEST(Planes, StandardTripleMeetsAtOrigin) {
  std::mt19937_64 rng(9);
  for (Lambda l : all) {
    const auto ns = standard_normals(l);
    const Point o = Point::origin(Space::X, l);
    const CommonPoint c = common_point_three_planes(plane_from_normal(o, ns[0]), plane_from_normal(o, ns[1]),
                                                    plane_from_normal(o, ns[2]));
    EXPECT_TRUE(projectively_equal(c.point, o));
    const Isometry A = random_isometry(rng, l);
    const CommonPoint d = common_point_three_planes(plane_from_normal(Tangent(Space::X, A, ns[0])),
                                                    plane_from_normal(Tangent(Space::X, A, ns[1])),
                                                    plane_from_normal(Tangent(Space::X, A, ns[2])));
    EXPECT_TRUE(projectively_equal(d.point, act(A, o), 1e-7));
  }
}

TEST(Boundary, NormalizeStandardTriple) {
  std::mt19937_64 rng(12);
  for (Lambda l : all) {
    const auto inf = BoundaryPoint::infinity(l), zero = BoundaryPoint::zero(l), one = BoundaryPoint::one(l);
    EXPECT_TRUE(projectively_equal(boundary_normalize(inf, zero, one), Isometry::identity(l)));
    const Isometry B = random_isometry(rng, l);
    const Isometry N = boundary_normalize(act(B, inf), act(B, zero), act(B, one));
    EXPECT_TRUE(projectively_equal(N, B.inverse(), 1e-7));
  }
}

TEST(Boundary, ZeroDivisorBracketRejected) {
  const Lambda l = Lambda::minus;
  const BoundaryPoint a = BoundaryPoint::zero(l);
  const BoundaryPoint b = BoundaryPoint::affine(GC(1, 1, l));
  EXPECT_ERRC(boundary_normalize(a, b, BoundaryPoint::infinity(l)), Errc::NotSpacelikeConnected);
}

TEST(CrossRatio, NormalFormAndPermutation) {
  for (Lambda l : all) {
    const GC z(0.4, 0.3, l);
    const auto inf = BoundaryPoint::infinity(l), zero = BoundaryPoint::zero(l), one = BoundaryPoint::one(l);
    const auto w = BoundaryPoint::affine(z);
    const GC c = cross_ratio(inf, zero, one, w);
    EXPECT_NEAR(c.re, z.re, 1e-14);
    EXPECT_NEAR(c.im, z.im, 1e-14);
    const Isometry T(perm_T(l));
    const GC p = cross_ratio(act(T, inf), act(T, zero), act(T, one), act(T, w));
    const GC q = cross_ratio(one, inf, zero, w);
    EXPECT_NEAR(p.re, c.re, 1e-12);
    EXPECT_NEAR(q.re, inverse(GC::real(1, l) - z).re, 1e-12);
    EXPECT_NEAR(q.im, inverse(GC::real(1, l) - z).im, 1e-12);
  }
}

TEST(Duality, PointPlaneInvolution) {
  std::mt19937_64 rng(21);
  for (Lambda l : all) {
    for (Space s : {Space::X, Space::Y}) {
      const Point p = act(random_isometry(rng, l), Point::origin(s, l));
      EXPECT_TRUE(projectively_equal(dualize(dualize(p)), p, 1e-8));
    }
  }
}

TEST(Duality, GeodesicDualIsIndependentOfPoints) {
  for (Lambda l : all) {
    const Geodesic g = make_geodesic(Tangent(Space::X, Mat2::ell(1, 0.3, 0.3, -1, l)));
    const Geodesic h = geodesic_through(geodesic_eval(g, 0.4), geodesic_eval(g, 1.3));
    EXPECT_TRUE(same_line(dualize(g), dualize(h)));
    EXPECT_TRUE(same_line(dualize(dualize(g)), g));
  }
}

TEST(Stabilizer, TranslationAndAngle) {
  for (Lambda l : all) {
    const Geodesic g = make_geodesic(Tangent(Space::X, Mat2::ell(1, 0, 0, -1, l)));
    const Isometry U = stabilizer_element(g, 0.6, 1, 0);
    EXPECT_TRUE(projectively_equal(act(U, geodesic_eval(g, 0.2)), geodesic_eval(g, 0.8)));
    const double phi = 0.5;
    const Lambda mu = to_lambda(-g.sigma);
    EXPECT_NEAR(stabilizer_angle(g, gen_c(mu, phi / 2), gen_s(mu, phi / 2)), phi, 1e-12);
  }
}
