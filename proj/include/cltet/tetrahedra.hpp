#pragma once

// Lightlike tetrahedra in X_Lambda and generalized ideal tetrahedra in Y_Lambda.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cltet/geometry.hpp"

namespace cltet {

enum class Kind { lightlike, ideal };

inline const char* kind_name(Kind k) { return k == Kind::lightlike ? "lightlike" : "ideal"; }

inline void check_angles(Lambda l, double alpha, double beta) {
  if (!(alpha > 0) || !(beta > 0)) fail(Errc::DomainError, "alpha and beta must be positive");
  if (l == Lambda::plus && !(alpha + beta < std::numbers::pi))
    fail(Errc::DomainError, "Lambda = 1 needs alpha + beta < pi");
}

/// Standard lifts x1..x4 with x4 = 1.
inline std::array<Point, 4> standard_lightlike_vertices(Lambda l, double alpha, double beta) {
  const double gamma = -(alpha + beta);
  const GC z0 = GC::real(0, l);
  const Mat2 x1{exp_ell(l, alpha), GC(0, -2 * gen_s(l, alpha), l), z0, exp_ell(l, -alpha)};
  const Mat2 x2{exp_ell(l, beta), z0, GC(0, 2 * gen_s(l, beta), l), exp_ell(l, -beta)};
  const Mat2 x3 = Mat2::diag(exp_ell(l, -gamma), exp_ell(l, gamma));
  return {Point(Space::X, x1, false), Point(Space::X, x2, false), Point(Space::X, x3, false),
          Point::origin(Space::X, l)};
}

/// z = -(s(beta) / s(alpha)) e^{l gamma}.
inline GC ideal_shape(Lambda l, double alpha, double beta) {
  return exp_ell(l, -(alpha + beta)) * (-gen_s(l, beta) / gen_s(l, alpha));
}

inline std::array<BoundaryPoint, 4> standard_ideal_vertices(Lambda l, double alpha, double beta) {
  return {BoundaryPoint::infinity(l), BoundaryPoint::zero(l), BoundaryPoint::one(l),
          BoundaryPoint::affine(ideal_shape(l, alpha, beta))};
}

struct Tetrahedron {
  Kind kind = Kind::lightlike;
  Lambda lam = Lambda::plus;
  double alpha = 0;
  double beta = 0;
  Isometry pose;
  std::array<Point, 4> xs;          // lightlike vertices (lifts)
  std::array<BoundaryPoint, 4> ys;  // ideal vertices

  double gamma() const { return -(alpha + beta); }
  Space space() const { return kind == Kind::lightlike ? Space::X : Space::Y; }
};

inline Tetrahedron lightlike_from_angles(Lambda l, double alpha, double beta, const Isometry& pose) {
  check_angles(l, alpha, beta);
  if (pose.lam() != l) fail(Errc::LambdaMismatch, "pose and tetrahedron Lambda differ");
  Tetrahedron t;
  t.kind = Kind::lightlike;
  t.lam = l;
  t.alpha = alpha;
  t.beta = beta;
  t.pose = pose.canonical();
  const auto std_x = standard_lightlike_vertices(l, alpha, beta);
  for (int i = 0; i < 4; ++i) t.xs[i] = act(pose, std_x[i]);
  return t;
}

inline Tetrahedron lightlike_from_angles(Lambda l, double alpha, double beta) {
  return lightlike_from_angles(l, alpha, beta, Isometry::identity(l));
}

inline Tetrahedron ideal_from_angles(Lambda l, double alpha, double beta, const Isometry& pose) {
  check_angles(l, alpha, beta);
  if (pose.lam() != l) fail(Errc::LambdaMismatch, "pose and tetrahedron Lambda differ");
  Tetrahedron t;
  t.kind = Kind::ideal;
  t.lam = l;
  t.alpha = alpha;
  t.beta = beta;
  t.pose = pose.canonical();
  const auto std_y = standard_ideal_vertices(l, alpha, beta);
  for (int i = 0; i < 4; ++i) t.ys[i] = act(pose, std_y[i]);
  return t;
}

inline Tetrahedron ideal_from_angles(Lambda l, double alpha, double beta) {
  return ideal_from_angles(l, alpha, beta, Isometry::identity(l));
}

inline Tetrahedron from_angles(Kind k, Lambda l, double alpha, double beta, const Isometry& pose) {
  return k == Kind::lightlike ? lightlike_from_angles(l, alpha, beta, pose) : ideal_from_angles(l, alpha, beta, pose);
}

/// Edge length (lightlike) or dihedral angle (ideal) of edge {i, j}, 0-based labels.
inline double edge_value(double alpha, double beta, int i, int j) {
  if (i > j) std::swap(i, j);
  if ((i == 0 && j == 1) || (i == 2 && j == 3)) return alpha + beta;
  if ((i == 0 && j == 2) || (i == 1 && j == 3)) return beta;
  return alpha;
}

// ---------------------------------------------------------------------------
// Normalization

struct Recovery {
  Isometry pose;
  double alpha = 0;
  double beta = 0;
  std::array<int, 4> perm{0, 1, 2, 3};  // standard vertex i is input vertex perm[i]
};

namespace detail {

inline constexpr double recover_tol = 1e-7;

/// arg of z = rho e^{l phi} with rho > 0.
inline bool positive_arg(const GC& z, double& phi) {
  double rho = 0;
  if (!polar(z, rho, phi)) return false;
  return rho > 0;
}

inline bool valid_angles(Lambda l, double a, double b) {
  if (!(a > 1e-12) || !(b > 1e-12)) return false;
  if (l == Lambda::plus && !(a + b < std::numbers::pi)) return false;
  return true;
}

inline bool close_rel(const Mat2& m, const Mat2& n, double tol) {
  return max_abs_diff(m, n) <= tol * std::max(1.0, frob(n));
}

}  // namespace detail

inline Recovery recover_parameters(const std::array<Point, 4>& xs) {
  const Lambda l = xs[0].lam();
  for (const auto& x : xs) {
    if (x.space() != Space::X) fail(Errc::NotATetrahedron, "lightlike vertices live in X");
    if (x.lam() != l) fail(Errc::LambdaMismatch, "vertices with different Lambda");
  }
  std::array<Plane, 4> faces;
  try {
    for (int j = 0; j < 4; ++j) {
      std::array<int, 3> o{};
      int n = 0;
      for (int k = 0; k < 4; ++k)
        if (k != j) o[n++] = k;
      faces[j] = plane_through(xs[o[0]], xs[o[1]], xs[o[2]]);
      if (!is_lightlike(faces[j])) fail(Errc::NotATetrahedron, "face " + std::to_string(j + 1) + " is not lightlike");
    }
  } catch (const Error& e) {
    if (e.code() == Errc::NotATetrahedron) throw;
    fail(Errc::NotATetrahedron, e.what());
  }
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    CommonPoint cp;
    try {
      cp = common_point_three_planes(faces[perm[0]], faces[perm[1]], faces[perm[2]]);
    } catch (const Error&) {
      continue;
    }
    std::array<Mat2, 4> m;
    for (int i = 0; i < 4; ++i) m[i] = act(cp.iso, xs[perm[i]]).unit_rep();
    if (l == Lambda::plus) {
      if (tr(m[3]).re < 0)
        for (auto& x : m) x = -x;
    } else {
      for (auto& x : m)
        if (tr(x).re < 0) x = -x;
    }
    double a = 0, b = 0, mg = 0;
    if (!detail::positive_arg(m[0].a, a) || !detail::positive_arg(m[1].a, b) || !detail::positive_arg(m[2].a, mg))
      continue;
    if (!detail::valid_angles(l, a, b)) continue;
    const auto std_x = standard_lightlike_vertices(l, a, b);
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i) ok = detail::close_rel(m[i], std_x[i].rep(), detail::recover_tol);
    if (!ok) continue;
    return {cp.iso.inverse().canonical(), a, b, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  fail(Errc::NotATetrahedron, "no labeling puts the vertices in standard position");
}

inline Recovery recover_parameters(const std::array<BoundaryPoint, 4>& input) {
  const Lambda l = input[0].lam();
  for (const auto& y : input)
    if (y.lam() != l) fail(Errc::LambdaMismatch, "vertices with different Lambda");
  std::array<BoundaryPoint, 4> ys;
  for (int i = 0; i < 4; ++i) ys[i] = input[i].canonical();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!spacelike_connected(ys[i], ys[j])) fail(Errc::NotATetrahedron, "vertices not pairwise spacelike connected");
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    Isometry B;
    try {
      B = boundary_normalize(ys[perm[0]], ys[perm[1]], ys[perm[2]]);
    } catch (const Error&) {
      continue;
    }
    const BoundaryPoint y4 = act(B, ys[perm[3]]);
    if (!is_unit(y4.v2())) continue;
    const GC z = y4.v1() / y4.v2();
    // -z = rho e^{l gamma} with rho = s(beta)/s(alpha) > 0, then t(beta) = -rho s(gamma) / (1 + rho c(gamma)).
    double rho = 0, g = 0;
    if (!polar(-z, rho, g) || !(rho > 0)) continue;
    if (l == Lambda::plus && g >= 0) continue;
    const double num = -rho * gen_s(l, g);
    const double den = 1 + rho * gen_c(l, g);
    double b = 0;
    if (l == Lambda::plus) {
      b = std::atan2(num, den);
    } else {
      if (!(den > 0)) continue;
      const double r = num / den;
      if (l == Lambda::minus && !(std::abs(r) < 1)) continue;
      b = l == Lambda::minus ? std::atanh(r) : r;
    }
    const double a = -b - g;
    if (!detail::valid_angles(l, a, b)) continue;
    const GC zr = ideal_shape(l, a, b);
    if (std::hypot(zr.re - z.re, zr.im - z.im) > detail::recover_tol * std::max(1.0, std::hypot(z.re, z.im))) continue;
    return {B.inverse().canonical(), a, b, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  fail(Errc::NotATetrahedron, "no labeling puts the vertices in standard position");
}

/// Tetrahedron from its vertices, relabeled to the canonical order.
inline Tetrahedron tetrahedron_from_vertices(const std::array<Point, 4>& xs) {
  const Recovery r = recover_parameters(xs);
  return lightlike_from_angles(xs[0].lam(), r.alpha, r.beta, r.pose);
}

inline Tetrahedron tetrahedron_from_vertices(const std::array<BoundaryPoint, 4>& ys) {
  const Recovery r = recover_parameters(ys);
  return ideal_from_angles(ys[0].lam(), r.alpha, r.beta, r.pose);
}

inline Recovery recover_parameters(const Tetrahedron& t) {
  return t.kind == Kind::lightlike ? recover_parameters(t.xs) : recover_parameters(t.ys);
}

// ---------------------------------------------------------------------------
// Edges

struct EdgeData {
  int i = 0, j = 0;  // 1-based vertex labels
  std::string label;
  double value = 0;  // edge length (lightlike) or dihedral angle (ideal)
  GC z;              // shape parameter
  double modulus = 0;
  double phi = 0;    // Lorentzian angle or shearing distance, unsigned
  int sigma = 1;     // sign of the ratio of generalized sines
};

/// The three distinct shape parameters z12, z31, z23 and their sine ratios.
inline std::array<std::pair<GC, double>, 3> shape_parameters(Lambda l, double alpha, double beta) {
  const double gamma = -(alpha + beta);
  const double sa = gen_s(l, alpha), sb = gen_s(l, beta), sg = gen_s(l, gamma);
  return {std::pair{exp_ell(l, gamma) * (-sb / sa), sb / sa}, std::pair{exp_ell(l, beta) * (-sa / sg), sa / sg},
          std::pair{exp_ell(l, alpha) * (-sg / sb), sg / sb}};
}

/// Index into shape_parameters for edge {i, j}, 0-based.
inline int shape_index(int i, int j) {
  if (i > j) std::swap(i, j);
  if ((i == 0 && j == 1) || (i == 2 && j == 3)) return 0;
  if ((i == 0 && j == 2) || (i == 1 && j == 3)) return 1;
  return 2;
}

inline constexpr std::array<std::pair<int, int>, 6> edge_list{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline std::array<EdgeData, 6> edge_data(const Tetrahedron& t) {
  const auto zs = shape_parameters(t.lam, t.alpha, t.beta);
  std::array<EdgeData, 6> out;
  for (int e = 0; e < 6; ++e) {
    const auto [i, j] = edge_list[e];
    EdgeData d;
    d.i = i + 1;
    d.j = j + 1;
    d.label = std::to_string(i + 1) + std::to_string(j + 1);
    d.value = edge_value(t.alpha, t.beta, i, j);
    const auto& [z, ratio] = zs[shape_index(i, j)];
    d.z = z;
    d.modulus = std::sqrt(std::abs(modulus_sq(z)));
    d.phi = std::abs(std::log(d.modulus));
    d.sigma = ratio < 0 ? -1 : 1;
    out[e] = d;
  }
  return out;
}

/// Model vectors X_ij at 1 and the isometries A_i of the standard lightlike tetrahedron.
struct LightlikeFrame {
  Lambda lam;
  std::array<double, 3> al;  // alpha, beta, gamma
  std::array<Mat2, 3> X4;    // X_41, X_42, X_43
  std::array<Mat2, 4> A;     // A_i with A_i |> 1 = x_i

  LightlikeFrame(Lambda l, double alpha, double beta) : lam(l), al{alpha, beta, -(alpha + beta)} {
    X4 = {Mat2::ell(1, -2, 0, -1, l), Mat2::ell(1, 0, 2, -1, l), Mat2::ell(-1, 0, 0, 1, l)};
    for (int i = 0; i < 3; ++i) A[i] = unit_exp(X4[i], Space::X, 1, 0.5 * al[i]);
    A[3] = Mat2::identity(l);
  }

  /// Unit vector X_ij with x_ij(t) = A_i |> exp(t X_ij), 0-based labels.
  Mat2 X(int i, int j) const {
    if (i == 3) return X4[j];
    if (j == 3) return -X4[i];
    const double k = gen_s(lam, al[j]) / gen_s(lam, al[i] + al[j]);
    return X4[i] - (X4[i] + X4[j]) * k;
  }

  /// Parameter of x_j on x_ij.
  double t(int i, int j) const {
    if (i == 3) return al[j];
    if (j == 3) return al[i];
    return -al[i] - al[j];
  }
};

/// Edge geodesic through vertices i and j (0-based), parametrized from vertex i.
inline Geodesic edge_geodesic(const Tetrahedron& t, int i, int j) {
  if (i < 0 || i > 3 || j < 0 || j > 3 || i == j) fail(Errc::DomainError, "invalid edge");
  if (t.kind == Kind::lightlike) {
    const LightlikeFrame f(t.lam, t.alpha, t.beta);
    return {Space::X, t.pose * Isometry(f.A[i]), f.X(i, j), 1};
  }
  return geodesic_from_span(Space::Y, t.lam, t.ys[i].vec(), t.ys[j].vec());
}

/// Distance between x_4i(alpha_i / 2 + s) and x_jk(alpha_i / 2 + u) for i in {1, 2, 3}.
inline ArcLength opposite_edge_distance(const Tetrahedron& t, int i, double s, double u) {
  if (t.kind != Kind::lightlike) fail(Errc::DomainError, "opposite edge distance needs a lightlike tetrahedron");
  if (i < 1 || i > 3) fail(Errc::DomainError, "pair index must be 1, 2 or 3");
  const LightlikeFrame f(t.lam, t.alpha, t.beta);
  const int a = i - 1;
  const double half = 0.5 * std::abs(f.al[a]);
  if (!(std::abs(s) < half) || !(std::abs(u) < half)) fail(Errc::DomainError, "parameters outside the edge");
  std::array<int, 2> jk{};
  int n = 0;
  for (int m = 0; m < 3; ++m)
    if (m != a) jk[n++] = m;
  const Geodesic g1{Space::X, t.pose, f.X4[a], 1};
  const Geodesic g2{Space::X, t.pose * Isometry(f.A[jk[0]]), f.X(jk[0], jk[1]), 1};
  const Point p = geodesic_eval(g1, 0.5 * f.al[a] + s);
  const Point q = geodesic_eval(g2, 0.5 * f.al[a] + u);
  return arc_length(p, q);
}

/// Right-hand side of the opposite edge formula: c_{sigma L}(d) for L != 0, sigma d^2 for L = 0.
inline double opposite_edge_formula(Lambda l, double alpha, double beta, int i, double s, double u) {
  const std::array<double, 3> al{alpha, beta, -(alpha + beta)};
  const int a = i - 1;
  std::array<int, 2> jk{};
  int n = 0;
  for (int m = 0; m < 3; ++m)
    if (m != a) jk[n++] = m;
  const double aj = al[jk[0]], ak = al[jk[1]];
  if (l == Lambda::zero) return ((s + u) * (s + u) * aj + (s - u) * (s - u) * ak) / (aj + ak) - aj * ak;
  return (gen_c(l, s + u) * gen_s(l, aj) + gen_c(l, s - u) * gen_s(l, ak)) / gen_s(l, aj + ak);
}

/// Null projection of vertex i on the edge geodesic through k and l (0-based).
inline Point null_projection(const Tetrahedron& t, int i, int k, int l) {
  if (t.kind != Kind::lightlike) fail(Errc::NoIntersection, "null projections need a lightlike tetrahedron");
  if (i < 0 || i > 3 || k < 0 || k > 3 || l < 0 || l > 3 || k == l || i == k || i == l)
    fail(Errc::NoIntersection, "vertex must not lie on the edge");
  const int j = 6 - i - k - l;
  const std::array<int, 3> on{i, k, l};
  const Plane face = plane_through(t.xs[on[0]], t.xs[on[1]], t.xs[on[2]]);
  const auto n = normal_at(face, t.xs[i]);
  if (!n || causal_type(*n, Space::X) != 0) fail(Errc::NoIntersection, "face is not lightlike");
  const Isometry A = point_sqrt(t.xs[i]);
  const Vec4 d = unembed(act(A, *n, Space::X), Space::X);
  Eigen::Matrix4d m;
  m.col(0) = detail::normalized(t.xs[i].vec());
  m.col(1) = detail::normalized(d);
  m.col(2) = -detail::normalized(t.xs[k].vec());
  m.col(3) = -detail::normalized(t.xs[l].vec());
  if (detail::numeric_rank(m, 1e-10) > 3) fail(Errc::NoIntersection, "lines are skew");
  const Vec4 c = detail::null_space(m, 1).col(0);
  const Vec4 v = c[2] * m.col(2) + c[3] * m.col(3);
  (void)j;
  if (!(det(embed(v, Space::X, t.lam)).re > 1e-14 * v.squaredNorm())) fail(Errc::NoIntersection, "intersection outside X");
  return Point::from_vec(-v, Space::X, t.lam);
}

/// Lorentzian angle between two planes through a common point p.
inline double plane_angle(const Plane& P, const Plane& Q, const Point& p) {
  const auto n1 = normal_at(P, p);
  const auto n2 = normal_at(Q, p);
  if (!n1 || !n2) fail(Errc::DegenerateNormal, "plane without normal");
  const double a = model_metric(*n1, *n2, P.space);
  const double b = model_metric(*n1, *n1, P.space) * model_metric(*n2, *n2, P.space);
  return std::acosh(std::max(1.0, std::abs(a) / std::sqrt(std::abs(b))));
}

/// Isometry along edge (i, j), 0-based: lightlike maps x_i to x_j; ideal fixes y_i, y_j and maps y_k to y_l.
inline Isometry edge_symmetry(const Tetrahedron& t, int i, int j) {
  if (i < 0 || i > 3 || j < 0 || j > 3 || i == j) fail(Errc::DomainError, "invalid edge");
  const Lambda l = t.lam;
  if (t.kind == Kind::lightlike) {
    const LightlikeFrame f(l, t.alpha, t.beta);
    const auto zs = shape_parameters(l, t.alpha, t.beta);
    const auto& [z, ratio] = zs[shape_index(i, j)];
    const double sg = ratio < 0 ? -1.0 : 1.0;
    const Mat2 imx = from_parts(im_part(f.X(i, j)), Eigen::Matrix2d::Zero(), l);
    const Mat2 one = Mat2::identity(l);
    const Mat2 core = z * (one + imx) * 0.5 - (one - imx) * (0.5 * sg);
    const Mat2 T = f.A[i] * core * inverse(f.A[i]);
    return Isometry(t.pose.rep() * T * inverse(t.pose.rep()));
  }
  int k = -1, m = -1;
  for (int a = 0; a < 4; ++a) {
    if (a == i || a == j) continue;
    if (k < 0) k = a;
    else m = a;
  }
  // Make (i, j, k, m) an even permutation.
  std::array<int, 4> p{i, j, k, m};
  int inv = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (p[a] > p[b]) ++inv;
  if (inv % 2) std::swap(k, m);
  const Isometry Bn = boundary_normalize(t.ys[i], t.ys[j], t.ys[k]);
  const GC z = cross_ratio(t.ys[i], t.ys[j], t.ys[k], t.ys[m]);
  const Mat2 B = inverse(Bn.rep());
  return Isometry(B * Mat2::diag(z, GC::real(1, l)) * Bn.rep());
}

// ---------------------------------------------------------------------------
// Duality

namespace detail {
inline std::array<int, 3> others(int j) {
  std::array<int, 3> o{};
  int n = 0;
  for (int k = 0; k < 4; ++k)
    if (k != j) o[n++] = k;
  return o;
}

inline std::pair<int, int> complement(int a, int b) {
  int k = -1, m = -1;
  for (int q = 0; q < 4; ++q) {
    if (q == a || q == b) continue;
    if (k < 0) k = q;
    else m = q;
  }
  return {k, m};
}

/// Edge values of a recovered tetrahedron, indexed by the input labels.
inline double recovered_edge(const Recovery& r, int a, int b) {
  std::array<int, 4> inv{};
  for (int i = 0; i < 4; ++i) inv[r.perm[i]] = i;
  return edge_value(r.alpha, r.beta, inv[a], inv[b]);
}
}  // namespace detail

/// y_j dual to the face opposite x_j, in input order.
inline std::array<BoundaryPoint, 4> dual_ideal_vertices(const Tetrahedron& t) {
  if (t.kind != Kind::lightlike) fail(Errc::DomainError, "needs a lightlike tetrahedron");
  std::array<BoundaryPoint, 4> ys;
  for (int j = 0; j < 4; ++j) {
    const auto o = detail::others(j);
    ys[j] = dualize_to_boundary(plane_through(t.xs[o[0]], t.xs[o[1]], t.xs[o[2]]));
  }
  return ys;
}

/// x_j common to the dual planes of the other three y, in input order. Lambda = 1 lifts carry arbitrary signs.
inline std::array<Point, 4> dual_lightlike_vertices(const Tetrahedron& t) {
  if (t.kind != Kind::ideal) fail(Errc::DomainError, "needs an ideal tetrahedron");
  std::array<Plane, 4> planes;
  for (int j = 0; j < 4; ++j) planes[j] = dualize(t.ys[j]);
  std::array<Point, 4> xs;
  for (int j = 0; j < 4; ++j) {
    const auto o = detail::others(j);
    xs[j] = common_point_three_planes(planes[o[0]], planes[o[1]], planes[o[2]]).point;
  }
  return xs;
}

/// The projective dual, relabeled canonically.
inline Tetrahedron dualize_tet(const Tetrahedron& t) {
  const Lambda l = t.lam;
  if (t.kind == Kind::lightlike) return tetrahedron_from_vertices(dual_ideal_vertices(t));
  const auto xs = dual_lightlike_vertices(t);
  const Recovery ri = recover_parameters(t.ys);
  // Lambda = 1 vertices are lifts; pick the signs whose edge lengths match the dual dihedral angles.
  const int combos = l == Lambda::plus ? 8 : 1;
  for (int c = 0; c < combos; ++c) {
    std::array<Point, 4> cand = xs;
    for (int b = 0; b < 3; ++b)
      if (c & (1 << b)) cand[b] = cand[b].negated();
    Recovery r;
    try {
      r = recover_parameters(cand);
    } catch (const Error&) {
      continue;
    }
    bool match = true;
    for (const auto& [a, b] : edge_list) {
      const auto [k, m] = detail::complement(a, b);
      if (std::abs(detail::recovered_edge(r, a, b) - detail::recovered_edge(ri, k, m)) > 1e-7) match = false;
    }
    if (match) return lightlike_from_angles(l, r.alpha, r.beta, r.pose);
  }
  fail(Errc::NotATetrahedron, "dual vertices do not bound a lightlike tetrahedron");
}

// ---------------------------------------------------------------------------
// Membership and sampling

inline constexpr double chart_tol = 1e-10;

struct LightlikeChart {
  double r, A, B;
};

struct IdealChart {
  double t, r, theta;
};

/// r(A, B) of the lightlike chart.
inline double lightlike_chart_bound(Lambda l, double alpha, double beta, double A, double B) {
  const double gamma = -(alpha + beta);
  const double nx = std::sqrt(1 - 4 * A * B);
  const double arg = (A / gen_t(l, alpha) + B / gen_t(l, beta) + (A + B - 1) / gen_t(l, gamma)) / nx;
  return gen_ct_inv(l, arg);
}

inline Point lightlike_chart_point(Lambda l, double r, double A, double B) {
  const double nx = std::sqrt(1 - 4 * A * B);
  const Mat2 X = Mat2::ell(1, -2 * A, 2 * B, -1, l) * (1.0 / nx);
  return Point(Space::X, unit_exp(X, Space::X, 1, r), false);
}

/// t(r, theta) and r(theta) of the ideal chart.
inline double ideal_chart_height(Lambda l, double alpha, double beta, double r, double theta) {
  const double gamma = -(alpha + beta);
  const double v = gen_s(l, theta - gamma) / gen_s(l, alpha) * r - r * r;
  return std::sqrt(std::max(0.0, v));
}

inline double ideal_chart_radius(Lambda l, double alpha, double beta, double theta) {
  const double gamma = -(alpha + beta);
  return gen_s(l, beta) / gen_s(l, alpha) * gen_s(l, gamma) / gen_s(l, theta - beta);
}

inline Point ideal_chart_point(Lambda l, double alpha, double beta, double t, double r, double theta) {
  const GC z = exp_ell(l, theta - beta) * r + ideal_shape(l, alpha, beta);
  const Mat2 y{GC::real(t * t + modulus_sq(z), l), z, conj(z), GC::real(1, l)};
  return Point(Space::Y, y * (1.0 / t), false);
}

namespace detail {

inline bool lightlike_contains_std(Lambda l, double alpha, double beta, const Mat2& m) {
  const double dt = det(m).re;
  if (!(dt > 0)) fail(Errc::ChartInversionFailure, "point has non-positive determinant");
  const double lam = std::sqrt(dt);
  const Mat2 w = traceless(m);
  const double wn = Tangent::coords_of(w, Space::X).norm();
  const double c = 0.5 * tr(m).re / lam;
  if (wn <= 1e-12 * lam) return c > 0;  // the vertex x4
  const double im11 = w.a.im;
  if (!(im11 > 0)) return false;
  const double A = -w.b.im / (2 * im11);
  const double B = w.c.im / (2 * im11);
  const double tol = 1e-9;
  if (A < -tol || B < -tol || A + B > 1 + tol) return false;
  const double ww = model_metric(w, w, Space::X);
  if (!(ww > 0)) return false;
  const double s = std::sqrt(ww) / lam;
  double r = 0;
  switch (l) {
    case Lambda::plus: r = std::atan2(s, c); break;
    case Lambda::minus:
      if (!(c > 0) || !(s < c)) return false;
      r = std::atanh(s / c);
      break;
    case Lambda::zero:
      if (!(c > 0)) return false;
      r = s / c;
      break;
  }
  const double Ac = std::clamp(A, 0.0, 1.0), Bc = std::clamp(B, 0.0, 1.0 - std::clamp(A, 0.0, 1.0));
  double R = 0;
  try {
    R = lightlike_chart_bound(l, alpha, beta, Ac, Bc);
  } catch (const Error&) {
    fail(Errc::ChartInversionFailure, "chart bound undefined");
  }
  if (!std::isfinite(r) || !std::isfinite(R)) fail(Errc::ChartInversionFailure, "non-finite chart coordinates");
  return r <= R + tol;
}

inline bool ideal_contains_std(Lambda l, double alpha, double beta, const Mat2& m) {
  Mat2 p = m;
  if (p.d.re < 0) p = -p;
  if (!(p.d.re > 0)) fail(Errc::ChartInversionFailure, "point not in the chart domain");
  const double dt = det(p).re;
  if (!(dt > 0)) fail(Errc::ChartInversionFailure, "point has non-positive determinant");
  const double t = std::sqrt(dt) / p.d.re;
  const GC z = p.b / p.d.re;
  const GC w = z - ideal_shape(l, alpha, beta);
  const double tol = 1e-9;
  const double wn = std::hypot(w.re, w.im);
  if (wn <= 1e-13) return t >= -tol;
  double rho = 0, phi = 0;
  if (!polar(w, rho, phi)) return false;
  if (!(rho > 0)) return false;
  const double theta = phi + beta;
  if (theta < -alpha - tol || theta > tol) return false;
  const double thc = std::clamp(theta, -alpha, 0.0);
  const double rmax = ideal_chart_radius(l, alpha, beta, thc);
  if (rho > rmax * (1 + tol) + tol) return false;
  const double tmin = ideal_chart_height(l, alpha, beta, std::min(rho, rmax), thc);
  return t >= tmin - tol * std::max(1.0, tmin);
}

}  // namespace detail

inline bool contains(const Tetrahedron& t, const Point& p) {
  if (p.space() != t.space()) fail(Errc::DomainError, "point in the wrong space");
  const Point q = act(t.pose.inverse(), p);
  if (t.kind == Kind::lightlike) {
    const Mat2 m = q.unit_rep();
    return detail::lightlike_contains_std(t.lam, t.alpha, t.beta, m) ||
           detail::lightlike_contains_std(t.lam, t.alpha, t.beta, -m);
  }
  return detail::ideal_contains_std(t.lam, t.alpha, t.beta, q.unit_rep());
}

/// Barycentric membership test in the convex cone of the lifted vertices (lightlike only).
inline bool cone_contains(const Tetrahedron& t, const Point& p, double tol = 1e-9) {
  if (t.kind != Kind::lightlike) fail(Errc::DomainError, "cone test needs lifted vertices");
  Eigen::Matrix4d V;
  for (int i = 0; i < 4; ++i) V.col(i) = t.xs[i].vec();
  const Vec4 c = V.colPivHouseholderQr().solve(p.vec());
  const double sc = c.cwiseAbs().maxCoeff();
  return c.minCoeff() >= -tol * sc || (-c).minCoeff() >= -tol * sc;
}

/// Points drawn uniformly in chart coordinates.
inline std::vector<Point> sample(const Tetrahedron& t, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::vector<Point> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    if (t.kind == Kind::lightlike) {
      double A = u01(rng), B = u01(rng);
      if (A + B > 1) {
        A = 1 - A;
        B = 1 - B;
      }
      const double R = lightlike_chart_bound(t.lam, t.alpha, t.beta, A, B);
      const double r = u01(rng) * R;
      out.push_back(act(t.pose, lightlike_chart_point(t.lam, r, A, B)));
    } else {
      const double theta = -t.alpha * u01(rng);
      const double r = u01(rng) * ideal_chart_radius(t.lam, t.alpha, t.beta, theta);
      const double h = ideal_chart_height(t.lam, t.alpha, t.beta, r, theta);
      const double u = std::max(u01(rng), 1e-3);
      const double tt = std::max(h, 1e-6) / u;
      out.push_back(act(t.pose, ideal_chart_point(t.lam, t.alpha, t.beta, tt, r, theta)));
    }
  }
  return out;
}

}  // namespace cltet
