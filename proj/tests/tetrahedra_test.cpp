#include <cmath>
#include <numbers>
#include <random>

#include "cltet/tetrahedra.hpp"
#include "test_util.hpp"

using namespace cltet;

namespace {

Isometry random_isometry(std::mt19937_64& rng, Lambda l) {
  std::uniform_real_distribution<double> u(-1, 1);
  for (;;) {
    const Mat2 m{GC(u(rng), u(rng), l), GC(u(rng), u(rng), l), GC(u(rng), u(rng), l), GC(u(rng), u(rng), l)};
    if (modulus_sq(det(m)) > 0.05 * std::pow(frob(m), 4) / 16) return Isometry(m);
  }
}

const Lambda all[] = {Lambda::minus, Lambda::zero, Lambda::plus};

}  // namespace

TEST(Lightlike, StandardVerticesDualNumbers) {
  const Lambda l = Lambda::zero;
  const auto xs = standard_lightlike_vertices(l, 1, 1);
  EXPECT_TRUE(projectively_equal(xs[2], Point(Space::X, Mat2::diag(GC(1, 2, l), GC(1, -2, l)))));
  EXPECT_TRUE(projectively_equal(xs[3], Point::origin(Space::X, l)));
}

TEST(Lightlike, EdgeLengths) {
  for (Lambda l : all) {
    const double a = 0.6, b = 0.9;
    const Tetrahedron t = lightlike_from_angles(l, a, b);
    for (const auto& [i, j] : edge_list) {
      const ArcLength d = arc_length(t.xs[i], t.xs[j]);
      EXPECT_EQ(d.sigma, 1);
      EXPECT_NEAR(d.d, edge_value(a, b, i, j), 1e-9) << i << j;
    }
  }
}

TEST(Lightlike, RejectsDegenerateAngles) {
  EXPECT_ERRC(lightlike_from_angles(Lambda::plus, 1.5, std::numbers::pi - 1.5), Errc::DomainError);
  EXPECT_ERRC(lightlike_from_angles(Lambda::minus, 0, 1), Errc::DomainError);
}

TEST(Ideal, StandardVerticesAndShape) {
  for (Lambda l : all) {
    const double a = 0.5, b = 0.8;
    const auto ys = standard_ideal_vertices(l, a, b);
    EXPECT_EQ(max_abs_diff(ys[0].matrix(), Mat2::real(1, 0, 0, 0, l)), 0);
    EXPECT_EQ(max_abs_diff(ys[1].matrix(), Mat2::real(0, 0, 0, 1, l)), 0);
    EXPECT_EQ(max_abs_diff(ys[2].matrix(), Mat2::real(1, 1, 1, 1, l)), 0);
    const GC z = cross_ratio(ys[0], ys[1], ys[2], ys[3]);
    const GC expect = exp_ell(l, -(a + b)) * (-gen_s(l, b) / gen_s(l, a));
    EXPECT_NEAR(z.re, expect.re, 1e-14);
    EXPECT_NEAR(z.im, expect.im, 1e-14);
    const Tetrahedron t = ideal_from_angles(l, a, b);
    for (const auto& e : edge_data(t)) EXPECT_NEAR(e.value, edge_value(a, b, e.i - 1, e.j - 1), 1e-12);
  }
}

TEST(ShapeParameters, ProductAndRegularCase) {
  for (Lambda l : all) {
    const auto zs = shape_parameters(l, 0.4, 1.1);
    const GC p = zs[0].first * zs[1].first * zs[2].first;
    EXPECT_NEAR(p.re, -1, 1e-12);
    EXPECT_NEAR(p.im, 0, 1e-12);
  }
  const double third = std::numbers::pi / 3;
  const Tetrahedron t = ideal_from_angles(Lambda::plus, third, third);
  for (const auto& e : edge_data(t)) {
    EXPECT_NEAR(e.modulus, 1, 1e-12);
    EXPECT_NEAR(e.phi, 0, 1e-12);
  }
  const GC z12 = edge_data(t)[0].z;
  EXPECT_NEAR(z12.re, std::cos(third), 1e-12);
  EXPECT_NEAR(z12.im, std::sin(third), 1e-12);
}

TEST(Recovery, RandomPoseAndPermutation) {
  std::mt19937_64 rng(17);
  for (Lambda l : all) {
    const double a = 0.7, b = 0.4;
    const Isometry A = random_isometry(rng, l);
    const Tetrahedron t = lightlike_from_angles(l, a, b, A);
    const Recovery r = recover_parameters(t.xs);
    EXPECT_NEAR(r.alpha, a, 1e-9);
    EXPECT_NEAR(r.beta, b, 1e-9);
    EXPECT_TRUE(projectively_equal(r.pose, A, 1e-7));
    const Recovery p = recover_parameters(std::array<Point, 4>{t.xs[1], t.xs[0], t.xs[3], t.xs[2]});
    EXPECT_NEAR(p.alpha, a, 1e-9);
    EXPECT_NEAR(p.beta, b, 1e-9);
    const Tetrahedron s = ideal_from_angles(l, a, b, A);
    const Recovery q = recover_parameters(s.ys);
    EXPECT_NEAR(q.alpha, a, 1e-9);
    EXPECT_NEAR(q.beta, b, 1e-9);
  }
}

TEST(Recovery, GridRoundTrip) {
  for (Lambda l : all) {
    for (double a = 0.1; a < 1.55; a += 0.2) {
      for (double b = 0.1; b < 1.55; b += 0.2) {
        if (l == Lambda::plus && a + b >= std::numbers::pi - 0.1) continue;
        const Recovery r = recover_parameters(lightlike_from_angles(l, a, b));
        EXPECT_NEAR(r.alpha, a, 1e-9);
        EXPECT_NEAR(r.beta, b, 1e-9);
      }
    }
  }
}

TEST(OppositeEdges, FlatLongestPairIsTimelike) {
  const double a = 0.8, b = 1.3;
  const Tetrahedron t = lightlike_from_angles(Lambda::zero, a, b);
  const ArcLength d = opposite_edge_distance(t, 3, 0, 0);
  EXPECT_EQ(d.sigma, -1);
  EXPECT_NEAR(d.d * d.d, a * b, 1e-9);
}

TEST(OppositeEdges, MatchesFormulaAndCausalClass) {
  std::mt19937_64 rng(5);
  for (Lambda l : all) {
    const double a = 0.6, b = 0.9;
    const Tetrahedron t = lightlike_from_angles(l, a, b);
    const std::array<double, 3> al{a, b, a + b};
    for (int i = 1; i <= 3; ++i) {
      std::uniform_real_distribution<double> u(-0.45 * al[i - 1], 0.45 * al[i - 1]);
      for (int n = 0; n < 10; ++n) {
        const double s = u(rng), v = u(rng);
        const ArcLength d = opposite_edge_distance(t, i, s, v);
        const double rhs = opposite_edge_formula(l, a, b, i, s, v);
        if (i < 3) {
          EXPECT_EQ(d.sigma, 1);
        }
        if (l == Lambda::zero) {
          EXPECT_NEAR(d.sigma * d.d * d.d, rhs, 1e-9);
        } else {
          EXPECT_NEAR(gen_c(scaled(l, d.sigma), d.d), rhs, 1e-9);
        }
      }
    }
  }
}

TEST(NullProjection, LandsOnEdge) {
  for (Lambda l : all) {
    const Tetrahedron t = lightlike_from_angles(l, 0.5, 0.7);
    for (int i = 0; i < 4; ++i) {
      for (const auto& [k, m] : edge_list) {
        if (k == i || m == i) continue;
        const Point p = null_projection(t, i, k, m);
        const Geodesic g = edge_geodesic(t, k, m);
        const Plane through = plane_through(t.xs[k], t.xs[m], t.xs[i]);
        EXPECT_TRUE(plane_contains(through, p));
        const ArcLength d = arc_length(t.xs[i], p);
        EXPECT_TRUE(d.lightlike || d.d < 1e-9);
        (void)g;
      }
    }
  }
}

TEST(EdgeSymmetry, MapsVertices) {
  for (Lambda l : all) {
    const Tetrahedron s = ideal_from_angles(l, 0.5, 0.9);
    const Tetrahedron t = lightlike_from_angles(l, 0.5, 0.9);
    for (const auto& [i, j] : edge_list) {
      const Isometry T = edge_symmetry(s, i, j);
      EXPECT_TRUE(projectively_equal(act(T, s.ys[i]), s.ys[i], 1e-8));
      EXPECT_TRUE(projectively_equal(act(T, s.ys[j]), s.ys[j], 1e-8));
      const auto o = detail::complement(i, j);
      const bool swapped = projectively_equal(act(T, s.ys[o.first]), s.ys[o.second], 1e-8) ||
                           projectively_equal(act(T, s.ys[o.second]), s.ys[o.first], 1e-8);
      EXPECT_TRUE(swapped);
      EXPECT_TRUE(projectively_equal(act(edge_symmetry(t, i, j), t.xs[i]), t.xs[j], 1e-8));
    }
  }
}

TEST(Duality, LightlikeToIdeal) {
  for (Lambda l : all) {
    const double a = 0.6, b = 1.0;
    const Tetrahedron t = lightlike_from_angles(l, a, b);
    const Tetrahedron d = dualize_tet(t);
    EXPECT_EQ(d.kind, Kind::ideal);
    // Lambda = 1 keeps the labels; otherwise the dual is the mirror image.
    const double da = l == Lambda::plus ? a : b, db = l == Lambda::plus ? b : a;
    EXPECT_NEAR(d.alpha, da, 1e-9);
    EXPECT_NEAR(d.beta, db, 1e-9);
    const Tetrahedron back = dualize_tet(d);
    EXPECT_EQ(back.kind, Kind::lightlike);
    EXPECT_NEAR(back.alpha + back.beta, a + b, 1e-9);
  }
}

TEST(Duality, EdgeLengthsAreDualDihedralAngles) {
  for (Lambda l : all) {
    const Tetrahedron t = lightlike_from_angles(l, 0.3, 1.1);
    const Tetrahedron d = dualize_tet(t);
    const auto ys = dual_ideal_vertices(t);
    const Recovery r = recover_parameters(ys);
    for (const auto& [i, j] : edge_list) {
      const auto c = detail::complement(i, j);
      EXPECT_NEAR(edge_value(t.alpha, t.beta, i, j), detail::recovered_edge(r, c.first, c.second), 1e-9);
    }
    (void)d;
  }
}

TEST(Membership, VerticesAndSamples) {
  std::mt19937_64 rng(3);
  for (Lambda l : all) {
    const Isometry A = random_isometry(rng, l);
    const Tetrahedron t = lightlike_from_angles(l, 0.7, 0.8, A);
    for (const auto& x : t.xs) EXPECT_TRUE(contains(t, x));
    for (const auto& p : sample(t, 50, 9)) {
      EXPECT_TRUE(contains(t, p));
      EXPECT_TRUE(cone_contains(t, p));
    }
    const Tetrahedron s = ideal_from_angles(l, 0.7, 0.8, A);
    for (const auto& p : sample(s, 50, 9)) EXPECT_TRUE(contains(s, p));
    EXPECT_ERRC(cone_contains(s, s.xs[0]), Errc::DomainError);
  }
}

TEST(Membership, JustBeyondChartBound) {
  for (Lambda l : all) {
    const double a = 0.7, b = 0.8;
    const Tetrahedron t = lightlike_from_angles(l, a, b);
    const double A = 0.3, B = 0.4;
    const double r = lightlike_chart_bound(l, a, b, A, B);
    EXPECT_TRUE(contains(t, lightlike_chart_point(l, 0.99 * r, A, B)));
    EXPECT_FALSE(contains(t, lightlike_chart_point(l, 1.01 * r, A, B)));
  }
}
