#pragma once

// Invariant suites shared by `cltet verify` and the acceptance binary.

#include <chrono>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "cltet/descriptor.hpp"
#include "cltet/volumes.hpp"

namespace cltet::suites {

struct Result {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Suite {
  std::string name;
  std::function<std::string(std::uint64_t)> run;  // returns a failure message or ""
};

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

/// Tracks the largest deviation against a tolerance.
class Check {
 public:
  void le(double value, double tol, const std::string& what) {
    if (!(value <= tol)) {
      ++failures_;
      if (first_.empty()) first_ = what + ": " + fmt(value) + " > " + fmt(tol);
    }
    worst_ = std::max(worst_, std::isfinite(value) ? value / std::max(tol, 1e-300) : 1e300);
  }
  void ok(bool cond, const std::string& what) {
    if (!cond) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  std::string message() const {
    if (failures_ == 0) return "";
    return std::to_string(failures_) + " failure(s); first: " + first_;
  }

 private:
  int failures_ = 0;
  double worst_ = 0;
  std::string first_;
};

inline double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

inline double gc_dist(const GC& a, const GC& b) {
  return std::hypot(a.re - b.re, a.im - b.im) / std::max(1.0, std::hypot(b.re, b.im));
}

inline constexpr std::array<Lambda, 3> all_lambdas{Lambda::minus, Lambda::zero, Lambda::plus};

inline Isometry random_isometry(Lambda l, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    Mat2 m{GC(n(rng), n(rng), l), GC(n(rng), n(rng), l), GC(n(rng), n(rng), l), GC(n(rng), n(rng), l)};
    const double d = modulus_sq(det(m));
    const double f = frob(m);
    if (d > 0.05 * f * f * f * f / 16) return Isometry(m);
  }
}

inline std::pair<double, double> random_angles(Lambda l, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.1, 1.5);
  for (;;) {
    const double a = u(rng), b = u(rng);
    if (l != Lambda::plus || a + b < std::numbers::pi - 0.1) return {a, b};
  }
}

// ---------------------------------------------------------------------------
// Acceptance criteria

inline std::string milnor_lobachevsky(std::uint64_t) {
  Check c;
  const double a = std::numbers::pi / 3;
  const double v = ideal_volume(Lambda::plus, a, a);
  c.le(std::abs(v - 1.0149416064), 1e-8, "ideal volume vs frozen value");
  // Fourier series of Cl at 2 pi / 3; the tail after N terms is O(1 / N^2).
  double fourier = 0;
  const double x = 2 * a;
  for (int k = 1; k <= 2'000'000; ++k) fourier += std::sin(k * x) / (double(k) * k);
  c.le(std::abs(v - 1.5 * fourier), 1e-8, "ideal volume vs Fourier series");
  const auto q = volume_quadrature(Kind::ideal, Lambda::plus, a, a, 1e-9);
  c.le(relative_discrepancy(v, q.value), 1e-6, "ideal volume vs cubature");
  return c.message();
}

inline std::string lightlike_flat(std::uint64_t) {
  Check c;
  for (double a : {0.5, 1.0, 2.0})
    for (double b : {0.5, 1.0, 2.0}) {
      const double v = lightlike_volume(Lambda::zero, a, b);
      c.ok(v == a * b * (a + b) / 3, "closed form not exact at " + fmt(a) + "," + fmt(b));
      const auto q = volume_quadrature(Kind::lightlike, Lambda::zero, a, b, 1e-9);
      c.le(relative_discrepancy(v, q.value), 1e-6, "cubature at " + fmt(a) + "," + fmt(b));
    }
  return c.message();
}

inline std::string volume_sweep(std::uint64_t) {
  Check c;
  for (Lambda l : all_lambdas)
    for (double a : {0.2, 0.5, 0.9})
      for (double b : {0.2, 0.5, 0.9}) {
        if (l == Lambda::plus && !(a + b < std::numbers::pi)) continue;
        const std::string at = "L=" + std::to_string(to_int(l)) + " " + fmt(a) + "," + fmt(b);
        const auto qi = volume_quadrature(Kind::ideal, l, a, b, 1e-9);
        c.le(relative_discrepancy(ideal_volume(l, a, b), qi.value), 1e-6, "ideal " + at);
        const auto ql = volume_quadrature(Kind::lightlike, l, a, b, 1e-9);
        c.le(relative_discrepancy(lightlike_volume(l, a, b), ql.value), 1e-6, "lightlike " + at);
      }
  return c.message();
}

inline std::string series_consistency(std::uint64_t) {
  Check c;
  for (Lambda l : {Lambda::minus, Lambda::plus})
    for (double a : {0.1, 0.25, 0.4}) {
      const double cf = lightlike_volume(l, a, a);
      c.le(std::abs(cf - lightlike_volume_series(to_int(l), a, a, 20)), 1e-10, "K=20 at " + fmt(a));
    }
  for (double lam : {-1.0, 1.0, 0.3})
    for (auto [a, b] : {std::pair{0.3, 0.7}, std::pair{1.0, 1.0}}) {
      const double lead = a * b * (a + b) / 3;
      c.le(std::abs(lightlike_volume_series(lam, a, b, 1) - lead), 4 * std::numeric_limits<double>::epsilon() * lead,
           "K=1 leading term");
    }
  c.le(std::abs(lightlike_volume_series(1e-8, 1, 1, 20) - lightlike_volume(Lambda::zero, 1, 1)), 1e-8,
       "Lambda = 1e-8 limit");
  return c.message();
}

inline std::string trig_identities(std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  for (int n = 0; n < 10000; ++n) {
    const Lambda l = all_lambdas[pick(rng)];
    const double L = to_int(l);
    const double x = ang(rng), y = 0.5 * ang(rng);
    const double cx = gen_c(l, x), sx = gen_s(l, x), cy = gen_c(l, y), sy = gen_s(l, y);
    const double scale = std::max({1.0, cx * cx, sx * sx});
    c.le(std::abs(cx * cx + L * sx * sx - 1) / scale, 1e-12, "c^2 + L s^2 = 1");
    const double sc = std::max(1.0, std::abs(cx * cy) + std::abs(sx * sy));
    c.le(std::abs(gen_c(l, x + y) - (cx * cy - L * sx * sy)) / sc, 1e-12, "cosine addition");
    c.le(std::abs(gen_s(l, x + y) - (sx * cy + cx * sy)) / sc, 1e-12, "sine addition");
    const double h = 1e-5;
    const double dc = (gen_c(l, x + h) - gen_c(l, x - h)) / (2 * h);
    const double ds = (gen_s(l, x + h) - gen_s(l, x - h)) / (2 * h);
    c.le(std::abs(dc + L * sx) / std::max(1.0, std::abs(sx)), 1e-6, "c' = -L s");
    c.le(std::abs(ds - cx) / std::max(1.0, std::abs(cx)), 1e-6, "s' = c");
  }
  return c.message();
}

inline bool same_vertex_set(const std::array<Point, 4>& a, const std::array<Point, 4>& b, double tol) {
  for (const auto& p : a) {
    bool hit = false;
    for (const auto& q : b) hit = hit || projectively_equal(p, q, tol);
    if (!hit) return false;
  }
  return true;
}

inline bool same_vertex_set(const std::array<BoundaryPoint, 4>& a, const std::array<BoundaryPoint, 4>& b, double tol) {
  for (const auto& p : a) {
    bool hit = false;
    for (const auto& q : b) hit = hit || projectively_equal(p, q, tol);
    if (!hit) return false;
  }
  return true;
}

inline std::string duality(std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  const std::array<double, 5> grid{0.2, 0.45, 0.7, 0.95, 1.2};
  for (Lambda l : all_lambdas)
    for (double a : grid)
      for (double b : grid) {
        const std::string at = "L=" + std::to_string(to_int(l)) + " " + fmt(a) + "," + fmt(b);
        const auto t = lightlike_from_angles(l, a, b, random_isometry(l, rng));
        const auto d = dualize_tet(t);
        c.ok(d.kind == Kind::ideal, "dual kind " + at);
        const auto dd = dualize_tet(d);
        c.ok(dd.kind == Kind::lightlike, "double dual kind " + at);
        c.ok(same_vertex_set(dd.xs, t.xs, 1e-9) && same_vertex_set(t.xs, dd.xs, 1e-9), "lightlike involution " + at);
        const auto s = ideal_from_angles(l, a, b, random_isometry(l, rng));
        const auto sdd = dualize_tet(dualize_tet(s));
        c.ok(same_vertex_set(sdd.ys, s.ys, 1e-9) && same_vertex_set(s.ys, sdd.ys, 1e-9), "ideal involution " + at);
        // y_j is dual to the face opposite x_j: the length of x_i x_j is the dihedral angle at y_k y_l.
        const auto ys = dual_ideal_vertices(t);
        const Recovery r = recover_parameters(ys);
        for (const auto& [i, j] : edge_list) {
          const double len = arc_length(t.xs[i], t.xs[j]).d;
          const auto [k, m] = detail::complement(i, j);
          c.le(std::abs(len - detail::recovered_edge(r, k, m)), 1e-9, "edge length vs dual angle " + at);
        }
      }
  return c.message();
}

inline std::string edge_geometry(std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::array<double, 4> grid{0.2, 0.5, 0.9, 1.3};
  for (Lambda l : all_lambdas)
    for (double a : grid)
      for (double b : grid) {
        const std::string at = "L=" + std::to_string(to_int(l)) + " " + fmt(a) + "," + fmt(b);
        const auto t = lightlike_from_angles(l, a, b);
        for (const auto& [i, j] : edge_list) {
          const auto d = arc_length(t.xs[i], t.xs[j]);
          c.ok(d.sigma == 1, "edge not spacelike " + at);
          c.le(std::abs(d.d - edge_value(a, b, i, j)), 1e-9, "edge length " + at);
        }
        // x_43 and x_12 carry the longest length alpha + beta.
        const auto mid = opposite_edge_distance(t, 3, 0, 0);
        c.ok(mid.sigma == -1, "longest pair not timelike " + at);
        if (l == Lambda::zero) c.le(std::abs(mid.d * mid.d - a * b), 1e-9, "d^2 = alpha beta " + at);
        for (int i : {1, 2}) {
          const double half = 0.5 * (i == 1 ? a : b);
          for (int n = 0; n < 5; ++n) {
            const auto d = opposite_edge_distance(t, i, 0.95 * half * u(rng), 0.95 * half * u(rng));
            c.ok(d.sigma == 1, "non-longest pair not spacelike " + at);
          }
        }
      }
  return c.message();
}

inline std::string cross_ratios(std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (Lambda l : all_lambdas) {
    const auto inf = BoundaryPoint::infinity(l), zero = BoundaryPoint::zero(l), one = BoundaryPoint::one(l);
    const GC unit = GC::real(1, l);
    for (int n = 0; n < 40; ++n) {
      const GC z(u(rng), u(rng), l);
      if (!is_unit(z, 1e-2) || !is_unit(z - unit, 1e-2)) continue;
      const GC cr = cross_ratio(inf, zero, one, BoundaryPoint::affine(z));
      c.ok(cr.re == z.re && cr.im == z.im && cr.lam == z.lam, "cr(inf, 0, 1, z) != z");
      const std::array<GC, 6> orbit{z, inverse(unit - z), (z - unit) / z, inverse(z), unit - z, z / (z - unit)};
      const std::array<BoundaryPoint, 4> ys{inf, zero, one, BoundaryPoint::affine(z)};
      std::array<int, 4> p{0, 1, 2, 3};
      std::set<int> hit;
      do {
        const GC w = cross_ratio(ys[p[0]], ys[p[1]], ys[p[2]], ys[p[3]]);
        int found = -1;
        for (int k = 0; k < 6; ++k)
          if (gc_dist(w, orbit[k]) < 1e-10) found = k;
        c.ok(found >= 0, "permuted cross-ratio outside the orbit");
        hit.insert(found);
      } while (std::next_permutation(p.begin(), p.end()));
      c.ok(hit.size() == 6, "orbit not exhausted");
      for (const Mat2& g : {perm_T(l), perm_I(l)}) {
        const Isometry G(g);
        const GC w = cross_ratio(act(G, inf), act(G, zero), act(G, one), act(G, ys[3]));
        c.le(gc_dist(w, z), 1e-12, "generator invariance");
      }
      c.le(gc_dist(z * orbit[1] * orbit[2], -unit), 1e-12, "z z' z'' = -1");
    }
    for (int n = 0; n < 100; ++n) {
      const auto [a, b] = random_angles(l, rng);
      const auto t = ideal_from_angles(l, a, b);
      const GC z = cross_ratio(t.ys[0], t.ys[1], t.ys[2], t.ys[3]);
      const auto e = edge_data(t);
      c.le(gc_dist(z, e[0].z), 1e-12, "cross-ratio vs z12");
      c.le(gc_dist(e[0].z * e[1].z * e[3].z, -unit), 1e-10, "z12 z13 z23 = -1");
      const Isometry B = random_isometry(l, rng);
      std::array<BoundaryPoint, 4> m;
      for (int i = 0; i < 4; ++i) m[i] = act(B, t.ys[i]);
      c.le(gc_dist(cross_ratio(m[0], m[1], m[2], m[3]), z), 1e-10, "isometry invariance");
    }
  }
  return c.message();
}

inline std::string edge_symmetries(std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  for (Lambda l : all_lambdas)
    for (int n = 0; n < 10; ++n) {
      const auto [a, b] = random_angles(l, rng);
      const auto t = lightlike_from_angles(l, a, b, random_isometry(l, rng));
      const auto s = ideal_from_angles(l, a, b, random_isometry(l, rng));
      for (const auto& [i, j] : edge_list) {
        const auto [k, m] = detail::complement(i, j);
        const Isometry T = edge_symmetry(t, i, j);
        c.ok(projectively_equal(act(T, t.xs[i]), t.xs[j], 1e-9), "T_ij x_i != x_j");
        Eigen::Matrix<double, 4, 3> span;
        span << t.xs[i].vec().normalized(), t.xs[j].vec().normalized(), act(T, t.xs[j]).vec().normalized();
        c.ok(detail::numeric_rank(span, 1e-9) == 2, "lightlike edge not preserved");
        const Plane pk = plane_through(t.xs[i], t.xs[j], t.xs[k]);
        const Plane pm = plane_through(t.xs[i], t.xs[j], t.xs[m]);
        for (int q : {k, m}) {
          const Point img = act(T, t.xs[q]);
          c.ok(plane_contains(pk, img) || plane_contains(pm, img), "adjacent null planes not preserved");
        }
        const Isometry S = edge_symmetry(s, i, j);
        c.ok(projectively_equal(act(S, s.ys[i]), s.ys[i], 1e-9), "T_ij moves y_i");
        c.ok(projectively_equal(act(S, s.ys[j]), s.ys[j], 1e-9), "T_ij moves y_j");
        const bool kl = projectively_equal(act(S, s.ys[k]), s.ys[m], 1e-9);
        const bool lk = projectively_equal(act(S, s.ys[m]), s.ys[k], 1e-9);
        c.ok(kl || lk, "T_ij does not swap the opposite vertices");
      }
    }
  return c.message();
}

/// Permuted inputs fix (alpha, beta) and the pose up to the tetrahedron's own relabeling symmetries;
/// for ideal tetrahedra with Lambda = 1 the three dihedral angles are only defined up to cyclic order.
inline std::string normalization(std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  for (int n = 0; n < 100; ++n) {
    const Lambda l = all_lambdas[n % 3];
    const auto [a, b] = random_angles(l, rng);
    const Isometry P = random_isometry(l, rng);
    std::array<int, 4> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::string at = "L=" + std::to_string(to_int(l)) + " " + fmt(a) + "," + fmt(b);

    const auto t = lightlike_from_angles(l, a, b, P);
    const auto r0 = recover_parameters(t.xs);
    c.le(std::abs(r0.alpha - a) + std::abs(r0.beta - b), 1e-9, "lightlike angles " + at);
    c.ok(projectively_equal(r0.pose, P, 1e-9), "lightlike pose " + at);
    std::array<Point, 4> xs;
    for (int i = 0; i < 4; ++i) xs[i] = t.xs[perm[i]];
    const auto r1 = recover_parameters(xs);
    c.le(std::abs(r1.alpha - a) + std::abs(r1.beta - b), 1e-9, "permuted lightlike angles " + at);
    c.ok(same_vertex_set(lightlike_from_angles(l, r1.alpha, r1.beta, r1.pose).xs, t.xs, 1e-9),
         "permuted lightlike pose " + at);

    const auto s = ideal_from_angles(l, a, b, P);
    const auto q0 = recover_parameters(s.ys);
    c.le(std::abs(q0.alpha - a) + std::abs(q0.beta - b), 1e-9, "ideal angles " + at);
    c.ok(projectively_equal(q0.pose, P, 1e-9), "ideal pose " + at);
    std::array<BoundaryPoint, 4> ys;
    for (int i = 0; i < 4; ++i) ys[i] = s.ys[perm[i]];
    const auto q1 = recover_parameters(ys);
    if (l == Lambda::plus) {
      const double g = std::numbers::pi - a - b;
      const double d = std::min({std::abs(q1.alpha - a) + std::abs(q1.beta - b),
                                 std::abs(q1.alpha - b) + std::abs(q1.beta - g),
                                 std::abs(q1.alpha - g) + std::abs(q1.beta - a)});
      c.le(d, 1e-9, "permuted ideal angles (cyclic class) " + at);
    } else {
      c.le(std::abs(q1.alpha - a) + std::abs(q1.beta - b), 1e-9, "permuted ideal angles " + at);
    }
    c.ok(same_vertex_set(ideal_from_angles(l, q1.alpha, q1.beta, q1.pose).ys, s.ys, 1e-9),
         "permuted ideal pose " + at);
  }
  return c.message();
}

// ---------------------------------------------------------------------------
// Module invariants

inline std::string gcnum_invariants(std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  for (Lambda l : all_lambdas)
    for (int k = 0; k < 500; ++k) {
      const GC a(n(rng), n(rng), l), b(n(rng), n(rng), l), d(n(rng), n(rng), l);
      c.le(gc_dist((a * b) * d, a * (b * d)), 1e-12, "associativity");
      c.le(gc_dist(a * (b + d), a * b + a * d), 1e-12, "distributivity");
      c.le(std::abs(modulus_sq(a * b) - modulus_sq(a) * modulus_sq(b)) / std::max(1.0, std::abs(modulus_sq(a) * modulus_sq(b))),
           1e-12, "multiplicative modulus");
      if (is_unit(a, 1e-3)) c.le(gc_dist(a * inverse(a), GC::real(1, l)), 1e-10, "inverse");
      const double th = 2 * n(rng), ph = n(rng);
      c.le(gc_dist(exp_ell(l, th) * exp_ell(l, ph), exp_ell(l, th + ph)), 1e-10, "exp_ell homomorphism");
      const GC z(0.3 * n(rng), 0.3 * n(rng), l);
      const GC e = analytic_continue([](auto x) { return std::exp(x); }, [](double x) { return std::exp(x); }, z);
      c.le(gc_dist(e, exp_ell(l, z.im) * std::exp(z.re)), 1e-12, "analytic continuation of exp");
      const double r = 0.9 * std::tanh(n(rng));
      c.le(std::abs(gen_t(l, gen_t_inv(l, r)) - r), 1e-12, "t(t^-1)");
    }
  return c.message();
}

inline std::string matmodel_invariants(std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  for (Lambda l : all_lambdas)
    for (int k = 0; k < 50; ++k) {
      const Isometry A = random_isometry(l, rng), B = random_isometry(l, rng);
      for (Space s : {Space::X, Space::Y}) {
        const Point p = act(random_isometry(l, rng), Point::origin(s, l));
        const Point lhs = act(A * B, p), rhs = act(A, act(B, p));
        c.ok(projectively_equal(lhs, rhs, 1e-9), "group action law");
        const Vec4 v = p.vec();
        c.le((unembed(embed(v, s, l), s) - v).norm() / v.norm(), 1e-12, "embed round trip");
        c.ok(projectively_equal(act(point_sqrt(p), Point::origin(s, l)), p, 1e-9), "point_sqrt");
        const Mat2 M = A.rep();
        c.le(max_abs_diff(involution(involution(M, s), s), M), 1e-12, "involutivity");
        const Eigen::Vector3d co(n(rng), n(rng), n(rng));
        const Tangent T(s, Isometry::identity(l), Tangent::from_coords(co, s, l));
        if (causal_type(T) != 0) {
          const Tangent U = normalize_tangent(T);
          const double th = 0.4;
          const Point e = exp_point(th, U);
          c.ok(projectively_equal(e, Point(s, exp_series(U.rep() * (0.5 * th)) * involution(exp_series(U.rep() * (0.5 * th)), s), false), 1e-9),
               "exp_point vs series");
        }
      }
    }
  return c.message();
}

inline std::string geometry_invariants(std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  for (Lambda l : all_lambdas)
    for (int k = 0; k < 30; ++k) {
      const Point x = act(random_isometry(l, rng), Point::origin(Space::X, l));
      const Point y = act(random_isometry(l, rng), Point::origin(Space::Y, l));
      const bool xy = plane_contains(dualize(y), x, 1e-9);
      const bool yx = plane_contains(dualize(x), y, 1e-9);
      c.ok(xy == yx, "duality incidence");
      c.ok(projectively_equal(dualize(dualize(x)), x, 1e-9), "dualize twice (X)");
      c.ok(projectively_equal(dualize(dualize(y)), y, 1e-9), "dualize twice (Y)");
      const Isometry A = random_isometry(l, rng);
      const auto t = lightlike_from_angles(l, 0.6, 0.5);
      const auto f = std::array<Plane, 3>{plane_through(t.xs[1], t.xs[2], t.xs[3]), plane_through(t.xs[0], t.xs[2], t.xs[3]),
                                          plane_through(t.xs[0], t.xs[1], t.xs[3])};
      const auto cp = common_point_three_planes(f[0], f[1], f[2]);
      c.ok(projectively_equal(cp.point, t.xs[3], 1e-9), "common point of three faces");
      std::array<Plane, 3> g;
      for (int i = 0; i < 3; ++i) {
        std::array<Point, 3> v;
        int m = 0;
        for (int q = 0; q < 4; ++q)
          if (q != i) v[m++] = act(A, t.xs[q]);
        g[i] = plane_through(v[0], v[1], v[2]);
      }
      c.ok(projectively_equal(common_point_three_planes(g[0], g[1], g[2]).point, act(A, t.xs[3]), 1e-9),
           "common point equivariance");
    }
  return c.message();
}

inline std::string tetrahedra_invariants(std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  for (Lambda l : all_lambdas)
    for (int k = 1; k <= 15; ++k)
      for (int m = 1; m <= 15; ++m) {
        const double a = 0.1 * k, b = 0.1 * m;
        if (l == Lambda::plus && !(a + b < std::numbers::pi - 0.1)) continue;
        const auto r = recover_parameters(lightlike_from_angles(l, a, b).xs);
        c.le(std::abs(r.alpha - a) + std::abs(r.beta - b), 1e-9, "round trip grid");
      }
  for (Lambda l : all_lambdas)
    for (int n = 0; n < 5; ++n) {
      const auto [a, b] = random_angles(l, rng);
      const auto t = lightlike_from_angles(l, a, b, random_isometry(l, rng));
      for (const auto& p : t.xs) c.ok(contains(t, p), "vertex not contained");
      int agree = 0, total = 0;
      for (const auto& p : sample(t, 50, seed + n)) {
        ++total;
        agree += contains(t, p) && cone_contains(t, p);
      }
      c.ok(agree == total, "lightlike samples outside");
      const auto s = ideal_from_angles(l, a, b, random_isometry(l, rng));
      for (const auto& p : sample(s, 50, seed + n)) c.ok(contains(s, p), "ideal sample outside");
      // a chart point just beyond r(A, B)
      const double A = 0.3, B = 0.2;
      const double R = lightlike_chart_bound(l, a, b, A, B);
      c.ok(!contains(lightlike_from_angles(l, a, b), lightlike_chart_point(l, R * 1.01, A, B)), "point beyond r(A, B)");
      const auto e = edge_data(t);
      for (const auto& d : e) {
        const auto [i, j] = std::pair{d.i - 1, d.j - 1};
        const auto [k, m] = detail::complement(i, j);
        const auto& o = e[std::find_if(e.begin(), e.end(), [&](const EdgeData& q) { return q.i == k + 1 && q.j == m + 1; }) - e.begin()];
        c.le(std::abs(d.value - o.value), 0, "opposite edges differ");
        c.le(gc_dist(d.z, o.z), 0, "opposite shape parameters differ");
      }
    }
  return c.message();
}

inline std::string volume_invariants(std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.01, 3.0);
  boost::math::quadrature::tanh_sinh<double> ts;
  for (Lambda l : all_lambdas)
    for (int k = 0; k < 40; ++k) {
      const double x = u(rng);
      c.le(std::abs(clausen(l, -x) + clausen(l, x)), 1e-12, "oddness");
      auto f = [l](double t) { return -std::log(std::abs(2 * gen_s(l, t / 2))); };
      c.le(std::abs(clausen(l, x) - ts.integrate(f, 0.0, x)), 1e-9, "defining integral");
    }
  for (Lambda l : all_lambdas)
    for (double a : {0.2, 0.5, 0.9})
      for (double b : {0.2, 0.5, 0.9}) {
        c.le(std::abs(ideal_volume(l, a, b) - ideal_volume(l, b, a)), 1e-12, "ideal symmetry");
        c.le(std::abs(lightlike_volume(l, a, b) - lightlike_volume(l, b, a)), 1e-12, "lightlike symmetry");
        c.ok(ideal_volume(l, a, b) > 0 && lightlike_volume(l, a, b) > 0, "positivity");
      }
  c.le(std::abs(bernoulli(2) - 1.0 / 6), 1e-16, "B2");
  c.le(std::abs(bernoulli(4) + 1.0 / 30), 1e-16, "B4");
  c.le(std::abs(bernoulli(6) - 1.0 / 42), 1e-16, "B6");
  return c.message();
}

inline std::string descriptor_invariants(std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  for (Lambda l : all_lambdas)
    for (Kind k : {Kind::lightlike, Kind::ideal}) {
      const auto [a, b] = random_angles(l, rng);
      const auto t = from_angles(k, l, a, b, random_isometry(l, rng));
      const std::string once = dump(describe(t));
      const auto d = parse_descriptor(once);
      c.ok(dump(d) == once, "descriptor round trip not byte-identical");
      c.ok(d.alpha == a && d.beta == b, "descriptor angles changed");
      const auto back = build(d);
      const auto r = recover_parameters(back);
      c.le(std::abs(r.alpha - a) + std::abs(r.beta - b), 1e-9, "descriptor rebuild");
    }
  return c.message();
}

inline std::vector<Suite> acceptance_suites() {
  return {{"1 Milnor-Lobachevsky reproduction", milnor_lobachevsky},
          {"2 lightlike flat-space volume", lightlike_flat},
          {"3 closed form vs cubature sweep", volume_sweep},
          {"4 series consistency", series_consistency},
          {"5 trigonometric identities", trig_identities},
          {"6 duality", duality},
          {"7 edge geometry", edge_geometry},
          {"8 cross-ratios", cross_ratios},
          {"9 edge symmetries", edge_symmetries},
          {"10 normalization", normalization}};
}

inline std::vector<Suite> module_suites() {
  return {{"gcnum invariants", gcnum_invariants},       {"matmodel invariants", matmodel_invariants},
          {"geometry invariants", geometry_invariants}, {"tetrahedra invariants", tetrahedra_invariants},
          {"volumes invariants", volume_invariants},    {"descriptor invariants", descriptor_invariants}};
}

inline Result run(const Suite& s, std::uint64_t seed) {
  Result r;
  r.name = s.name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.detail = s.run(seed);
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace cltet::suites
