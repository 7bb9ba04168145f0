#pragma once

// Geodesics, planes, the ideal boundary and projective duality.

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <utility>

#include "cltet/matmodel.hpp"

namespace cltet {

namespace detail {

inline Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, int dim) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(dim);
}

/// Rank of m with a relative singular value cutoff.
inline int numeric_rank(const Eigen::MatrixXd& m, double tol = 1e-9) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0) return 0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s[i] > tol * s[0]) ++r;
  return r;
}

inline Vec4 normalized(const Vec4& v) { return v / v.norm(); }

}  // namespace detail

/// Pairing matrix of the duality: <x,y>_L - (1 - |L|) x2 y2 = x^T D y.
inline Mat4 duality_form(Lambda l) {
  const int L = to_int(l);
  const double kappa = L - (1 - std::abs(L));
  return Vec4(-1, kappa, 1, 1).asDiagonal();
}

// ---------------------------------------------------------------------------
// Geodesics

struct Geodesic {
  Space space = Space::X;
  Isometry base;
  Mat2 dir = Mat2::zero(Lambda::plus);  // unit or lightlike model vector at 1
  int sigma = 1;

  Lambda lam() const { return dir.lam(); }
};

inline Geodesic make_geodesic(const Tangent& t) {
  const Tangent u = normalize_tangent(t);
  return {t.space(), t.base(), u.rep(), causal_type(u)};
}

inline Point geodesic_eval(const Geodesic& g, double t) {
  const Mat2 m = unit_exp(g.dir, g.space, g.sigma, t);
  return act(g.base, Point(g.space, m, false));
}

inline Tangent geodesic_tangent(const Geodesic& g) { return Tangent(g.space, g.base, g.dir); }

struct ArcLength {
  int sigma = 0;
  double d = 0.0;
  bool lightlike = false;
};

namespace detail {

/// q expressed at 1 relative to p: the unit-det lift of A^-1 |> q, where
/// A = point_sqrt(p) and the sign is chosen so that p itself maps to +1.
inline Mat2 relative_lift(const Point& p, const Point& q, Isometry& A) {
  A = point_sqrt(p);
  const Mat2 pu = p.unit_rep();
  const double sp = tr(pu).re < 0 ? -1.0 : 1.0;
  const Isometry ai = A.inverse();
  const Mat2 qr = act(ai, q.unit_rep(), q.space());
  const double pr = det(act(ai, pu, p.space())).re;
  return qr * (sp / std::sqrt(pr));
}

inline Mat2 traceless(const Mat2& m) {
  const GC h = tr(m) * 0.5;
  return m - Mat2::diag(h, h);
}

}  // namespace detail

inline constexpr double arc_tol = 1e-9;

/// Length and causal class of the geodesic segment from p to q, computed
/// from the given lifts.
inline ArcLength arc_length(const Point& p, const Point& q) {
  if (p.space() != q.space()) fail(Errc::NotComparable, "points in different spaces");
  if (p.lam() != q.lam()) fail(Errc::LambdaMismatch, "points with different Lambda");
  const Space s = p.space();
  const Lambda l = p.lam();
  Isometry A;
  const Mat2 rel = detail::relative_lift(p, q, A);
  const Mat2 w = detail::traceless(rel);
  const double wn = Tangent::coords_of(w, s).norm();
  const double c = 0.5 * tr(p.unit_rep() * inverse(q.unit_rep())).re;
  int sigma = causal_type(w, s);
  if (wn < 1e-12) return {0, 0.0, false};
  if (sigma == 0) return {0, 0.0, true};
  const Lambda mu = geodesic_index(s, l, sigma);
  switch (mu) {
    case Lambda::plus:
      if (std::abs(c) > 1 + arc_tol) fail(Errc::NotComparable, "trace outside [-1, 1]");
      return {sigma, std::acos(std::clamp(c, -1.0, 1.0)), false};
    case Lambda::minus:
      if (std::abs(c) < 1 - arc_tol) fail(Errc::NotComparable, "trace inside (-1, 1)");
      return {sigma, std::acosh(std::max(std::abs(c), 1.0)), false};
    case Lambda::zero: {
      // Minkowski: sigma d^2 = -det Im(q - p) with lifts of equal trace sign.
      Mat2 pu = p.unit_rep();
      Mat2 qu = q.unit_rep();
      if (tr(pu).re < 0) pu = -pu;
      if (tr(qu).re < 0) qu = -qu;
      const double sd2 = -im_part(qu - pu).determinant();
      return {sigma, std::sqrt(std::abs(sd2)), false};
    }
  }
  return {};
}

/// The geodesic through p and q, parametrized by arc length from p, with q
/// at parameter arc_length(p, q).d (lightlike: parameter 1).
inline Geodesic geodesic_through(const Point& p, const Point& q) {
  const Space s = p.space();
  Isometry A;
  const Mat2 rel = detail::relative_lift(p, q, A);
  const Mat2 w = detail::traceless(rel);
  const ArcLength al = arc_length(p, q);
  if (al.d == 0 && !al.lightlike) fail(Errc::Degenerate, "points coincide");
  if (al.lightlike) return {s, A, w * (1.0 / (0.5 * tr(rel).re)), 0};
  const Lambda mu = geodesic_index(s, p.lam(), al.sigma);
  double sd = gen_s(mu, al.d);
  // On the far sheet the lift of q is -(c + s X).
  if (mu == Lambda::minus && 0.5 * tr(rel).re < 0) sd = -sd;
  if (mu == Lambda::zero) sd *= 0.5 * tr(rel).re;
  return {s, A, w * (1.0 / sd), al.sigma};
}

// ---------------------------------------------------------------------------
// Planes

struct Plane {
  Space space = Space::X;
  Lambda lam = Lambda::plus;
  Vec4 coeffs = Vec4::Zero();     // plane = {v : coeffs . v = 0}, unit norm
  std::optional<Isometry> base;   // A with A |> 1 in the plane
  std::optional<Mat2> normal;     // model normal at 1 (absent if degenerate)
  std::optional<int> sigma;       // causal class of the normal
};

inline constexpr double incidence_tol = 1e-9;

inline bool plane_contains(const Plane& P, const Point& p, double tol = incidence_tol) {
  return std::abs(P.coeffs.dot(detail::normalized(p.vec()))) <= tol;
}

/// Linear functional of the plane pulled back to the model space at A |> 1.
inline Eigen::Vector3d model_functional(const Vec4& coeffs, const Isometry& A, Space s) {
  const Vec4 w = action_matrix(A, s).transpose() * coeffs;
  Eigen::Vector3d om;
  for (int k = 0; k < 3; ++k) {
    Eigen::Vector3d e = Eigen::Vector3d::Zero();
    e[k] = 1;
    om[k] = w.dot(unembed(Tangent::from_coords(e, s, A.lam()), s));
  }
  return om;
}

/// Normal at A |> 1 of the plane with the given coefficients, if the metric allows one.
inline std::optional<Mat2> normal_from_functional(const Eigen::Vector3d& om, Space s, Lambda l) {
  const Eigen::Matrix3d g = tangent_gram(s, l);
  if (s == Space::Y && l == Lambda::zero) {
    if (std::abs(om[2]) > 1e-12 * om.norm()) return std::nullopt;
    return Tangent::from_coords(Eigen::Vector3d(om[0], om[1], 0.0), s, l);
  }
  return Tangent::from_coords(g.inverse() * om, s, l);
}

/// Point of the projective subspace spanned by the columns of b that lies in the model space.
inline std::optional<Vec4> point_in_span(const Eigen::MatrixXd& b, Space s, Lambda l) {
  const Eigen::MatrixXd r = b.transpose() * det_form(s, l) * b;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r);
  const int k = static_cast<int>(r.rows()) - 1;
  const double top = es.eigenvalues()[k];
  if (!(top > 1e-12 * es.eigenvalues().cwiseAbs().maxCoeff())) return std::nullopt;
  return detail::normalized(b * es.eigenvectors().col(k));
}

namespace detail {
inline Plane finish_plane(Space s, Lambda l, const Vec4& coeffs) {
  Plane P;
  P.space = s;
  P.lam = l;
  P.coeffs = normalized(coeffs);
  const Eigen::MatrixXd basis = null_space(P.coeffs.transpose(), 3);
  const auto v = point_in_span(basis, s, l);
  if (!v) return P;
  const Isometry A = point_sqrt(Point::from_vec(*v, s, l));
  P.base = A;
  P.normal = normal_from_functional(model_functional(P.coeffs, A, s), s, l);
  if (P.normal) P.sigma = causal_type(*P.normal, s);
  return P;
}
}  // namespace detail

inline Plane plane_from_coeffs(Space s, Lambda l, const Vec4& coeffs) {
  if (coeffs.norm() == 0) fail(Errc::DegenerateNormal, "zero plane coefficients");
  return detail::finish_plane(s, l, coeffs);
}

/// Plane through the base point of N with normal N.
inline Plane plane_from_normal(const Tangent& N) {
  const Space s = N.space();
  const Lambda l = N.lam();
  const Eigen::Vector3d n = N.coords();
  const Eigen::Vector3d gn = tangent_gram(s, l) * n;
  if (n.norm() == 0 || gn.norm() <= 1e-14 * n.norm()) fail(Errc::DegenerateNormal, "normal vector vanishes");
  const Eigen::MatrixXd perp = detail::null_space(gn.transpose(), 2);
  Eigen::Matrix<double, 4, 3> pts;
  pts.col(0) = unembed(Mat2::identity(l), s);
  pts.col(1) = unembed(Tangent::from_coords(perp.col(0), s, l), s);
  pts.col(2) = unembed(Tangent::from_coords(perp.col(1), s, l), s);
  const Mat4 L = action_matrix(N.base(), s);
  const Eigen::MatrixXd img = L * pts;
  const Vec4 w = detail::null_space(img.transpose(), 1).col(0);
  Plane P;
  P.space = s;
  P.lam = l;
  P.coeffs = detail::normalized(w);
  P.base = N.base();
  P.normal = N.rep();
  P.sigma = causal_type(N);
  return P;
}

inline Plane plane_from_normal(const Point& base, const Mat2& model_normal) {
  return plane_from_normal(Tangent(base.space(), point_sqrt(base), model_normal));
}

inline Plane plane_through(const Point& p1, const Point& p2, const Point& p3) {
  Eigen::Matrix<double, 3, 4> m;
  m.row(0) = detail::normalized(p1.vec()).transpose();
  m.row(1) = detail::normalized(p2.vec()).transpose();
  m.row(2) = detail::normalized(p3.vec()).transpose();
  if (detail::numeric_rank(m) < 3) fail(Errc::Degenerate, "points are collinear");
  return detail::finish_plane(p1.space(), p1.lam(), detail::null_space(m, 1).col(0));
}

/// Model normal of P at the point p (pulled back by point_sqrt(p)).
inline std::optional<Mat2> normal_at(const Plane& P, const Point& p) {
  return normal_from_functional(model_functional(P.coeffs, point_sqrt(p), P.space), P.space, P.lam);
}

inline bool is_lightlike(const Plane& P) { return P.sigma && *P.sigma == 0; }

/// Geodesic in the projective line spanned by u and v.
inline Geodesic geodesic_from_span(Space s, Lambda l, const Vec4& u, const Vec4& v) {
  Eigen::Matrix<double, 4, 2> b;
  b.col(0) = detail::normalized(u);
  b.col(1) = detail::normalized(v);
  if (detail::numeric_rank(b) < 2) fail(Errc::NoIntersection, "span is not a line");
  const Eigen::Matrix2d r = b.transpose() * det_form(s, l) * b;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(r);
  if (!(es.eigenvalues()[1] > 1e-12)) fail(Errc::NoIntersection, "line does not meet the model space");
  const Vec4 p = b * es.eigenvectors().col(1);
  const Vec4 w = b * es.eigenvectors().col(0);
  const Isometry A = point_sqrt(Point::from_vec(p, s, l));
  const Vec4 wr = action_matrix(A, s).inverse() * w;
  Mat2 dir = detail::traceless(embed(wr, s, l));
  const int sigma = causal_type(dir, s);
  if (sigma != 0) dir = dir * (1.0 / std::sqrt(std::abs(model_metric(dir, dir, s))));
  else dir = dir * (1.0 / Tangent::coords_of(dir, s).norm());
  return {s, A, dir, sigma};
}

inline Geodesic intersect_lightlike_planes(const Plane& P1, const Plane& P2) {
  if (P1.space != Space::X || P2.space != Space::X) fail(Errc::NotLightlike, "lightlike planes live in X");
  if (!is_lightlike(P1) || !is_lightlike(P2)) fail(Errc::NotLightlike, "plane is not lightlike");
  Eigen::Matrix<double, 2, 4> m;
  m.row(0) = P1.coeffs.transpose();
  m.row(1) = P2.coeffs.transpose();
  if (detail::numeric_rank(m) < 2) fail(Errc::NoIntersection, "planes coincide");
  const Eigen::MatrixXd ns = detail::null_space(m, 2);
  const Geodesic g = geodesic_from_span(Space::X, P1.lam, ns.col(0), ns.col(1));
  if (g.sigma != 1) fail(Errc::NoIntersection, "intersection is not a spacelike geodesic");
  return g;
}

/// Null vectors orthogonal to a spacelike model vector x.
inline std::pair<Mat2, Mat2> null_normals(const Mat2& x, Space s) {
  const Lambda l = x.lam();
  const Eigen::Matrix3d g = tangent_gram(s, l);
  const Eigen::Vector3d gx = g * Tangent::coords_of(x, s);
  const Eigen::MatrixXd b = detail::null_space(gx.transpose(), 2);
  const Eigen::Matrix2d r = b.transpose() * g * b;
  const double disc = r(0, 1) * r(0, 1) - r(0, 0) * r(1, 1);
  if (!(disc > 0)) fail(Errc::WrongCausalClass, "orthogonal complement is not Lorentzian");
  Eigen::Vector2d u1, u2;
  if (std::abs(r(0, 0)) > std::abs(r(1, 1))) {
    u1 = {(-r(0, 1) + std::sqrt(disc)) / r(0, 0), 1.0};
    u2 = {(-r(0, 1) - std::sqrt(disc)) / r(0, 0), 1.0};
  } else if (r(1, 1) != 0) {
    u1 = {1.0, (-r(0, 1) + std::sqrt(disc)) / r(1, 1)};
    u2 = {1.0, (-r(0, 1) - std::sqrt(disc)) / r(1, 1)};
  } else {
    u1 = {1.0, 0.0};
    u2 = {0.0, 1.0};
  }
  return {Tangent::from_coords(b * u1, s, l), Tangent::from_coords(b * u2, s, l)};
}

inline std::pair<Plane, Plane> spacelike_geodesic_to_plane_pair(const Geodesic& g) {
  if (g.space != Space::X || g.sigma != 1) fail(Errc::WrongCausalClass, "needs a spacelike geodesic in X");
  const auto [n1, n2] = null_normals(g.dir, g.space);
  return {plane_from_normal(Tangent(g.space, g.base, n1)), plane_from_normal(Tangent(g.space, g.base, n2))};
}

/// Point (u : v) of RP^1 attached to a null model vector l[[p, q], [r, -p]].
inline Eigen::Vector2d null_direction(const Mat2& n) {
  const double p = n.a.im, q = n.b.im, r = n.c.im;
  // n ~ [[uv, -u^2], [v^2, -uv]]
  if (std::abs(r) >= std::abs(q)) return {p, r};
  return {-q, p};
}

/// Standard null normals at 1 of the three faces through a vertex.
inline std::array<Mat2, 3> standard_normals(Lambda l) {
  return {Mat2::ell(0, 0, 1, 0, l), Mat2::ell(0, -1, 0, 0, l), Mat2::ell(1, -1, 1, -1, l)};
}

struct CommonPoint {
  Point point;
  Isometry iso;  // maps point to 1 and the three normals to the standard ones
};

inline CommonPoint common_point_three_planes(const Plane& P1, const Plane& P2, const Plane& P3) {
  for (const Plane* P : {&P1, &P2, &P3})
    if (P->space != Space::X || !is_lightlike(*P)) fail(Errc::NotLightlike, "plane is not lightlike");
  Eigen::Matrix<double, 3, 4> m;
  m.row(0) = P1.coeffs.transpose();
  m.row(1) = P2.coeffs.transpose();
  m.row(2) = P3.coeffs.transpose();
  if (detail::numeric_rank(m) < 3) fail(Errc::NoCommonPoint, "planes are not independent");
  const Vec4 v = detail::null_space(m, 1).col(0);
  const Lambda l = P1.lam;
  const double dv = det(embed(v, Space::X, l)).re;
  if (!(dv > 1e-12)) fail(Errc::NoCommonPoint, "common point lies outside the model space");
  const Point p = Point::from_vec(v, Space::X, l);
  const Isometry A = point_sqrt(p);
  std::array<Eigen::Vector2d, 3> w;
  const Plane* planes[3] = {&P1, &P2, &P3};
  for (int i = 0; i < 3; ++i) {
    const auto n = normal_from_functional(model_functional(planes[i]->coeffs, A, Space::X), Space::X, l);
    if (!n || causal_type(*n, Space::X) != 0) fail(Errc::NoCommonPoint, "normal at the common point is not null");
    w[i] = null_direction(*n);
  }
  auto br = [](const Eigen::Vector2d& x, const Eigen::Vector2d& y) { return x[0] * y[1] - x[1] * y[0]; };
  const double k1 = br(w[2], w[1]);
  const double k2 = br(w[2], w[0]);
  if (std::abs(k1) < 1e-12 || std::abs(k2) < 1e-12 || std::abs(br(w[0], w[1])) < 1e-12)
    fail(Errc::NoCommonPoint, "null normals are not distinct");
  const Mat2 U = Mat2::real(k1 * w[0][1], -k1 * w[0][0], k2 * w[1][1], -k2 * w[1][0], l);
  return {p, Isometry(U * A.inverse().rep())};
}

// ---------------------------------------------------------------------------
// Ideal boundary

class BoundaryPoint {
 public:
  BoundaryPoint() = default;
  BoundaryPoint(const GC& v1, const GC& v2) : v1_(v1), v2_(v2) {
    if (v1.lam != v2.lam) fail(Errc::LambdaMismatch, "boundary entries with different Lambda");
    if (frob(matrix()) <= 1e-14 * (v1.re * v1.re + v1.im * v1.im + v2.re * v2.re + v2.im * v2.im))
      fail(Errc::Degenerate, "v v^dag vanishes");
  }

  static BoundaryPoint infinity(Lambda l) { return {GC::real(1, l), GC::real(0, l)}; }
  static BoundaryPoint zero(Lambda l) { return {GC::real(0, l), GC::real(1, l)}; }
  static BoundaryPoint one(Lambda l) { return {GC::real(1, l), GC::real(1, l)}; }
  static BoundaryPoint affine(const GC& z) { return {z, GC::real(1, z.lam)}; }

  const GC& v1() const { return v1_; }
  const GC& v2() const { return v2_; }
  Lambda lam() const { return v1_.lam; }

  Mat2 matrix() const { return {v1_ * conj(v1_), v1_ * conj(v2_), v2_ * conj(v1_), v2_ * conj(v2_)}; }
  Vec4 vec() const { return unembed(matrix(), Space::Y); }

  /// Scaled so that the second entry is 1, or the first if the second is a zero divisor.
  BoundaryPoint canonical() const {
    if (is_unit(v2_)) {
      const GC k = cltet::inverse(v2_);
      return BoundaryPoint(v1_ * k, GC::real(1, lam()));
    }
    const GC k = cltet::inverse(v1_);
    return BoundaryPoint(GC::real(1, lam()), v2_ * k);
  }

 private:
  GC v1_ = GC::real(1, Lambda::plus);
  GC v2_ = GC::real(0, Lambda::plus);
};

inline BoundaryPoint act(const Isometry& B, const BoundaryPoint& y) {
  const Mat2& m = B.rep();
  return {m.a * y.v1() + m.b * y.v2(), m.c * y.v1() + m.d * y.v2()};
}

/// Equality up to a unit of C_Lambda.
inline bool projectively_equal(const BoundaryPoint& x, const BoundaryPoint& y, double tol = proj_tol) {
  const Mat2 mx{x.v1(), x.v2(), GC::real(0, x.lam()), GC::real(0, x.lam())};
  const Mat2 my{y.v1(), y.v2(), GC::real(0, y.lam()), GC::real(0, y.lam())};
  return projective_distance(mx, my) <= tol && projective_distance(my, mx) <= tol;
}

/// [v, w] = v1 w2 - v2 w1.
inline GC bracket(const BoundaryPoint& v, const BoundaryPoint& w) { return v.v1() * w.v2() - v.v2() * w.v1(); }

inline bool spacelike_connected(const BoundaryPoint& v, const BoundaryPoint& w) {
  const double scale = std::max({std::abs(v.v1().re), std::abs(v.v1().im), std::abs(v.v2().re), std::abs(v.v2().im)}) *
                       std::max({std::abs(w.v1().re), std::abs(w.v1().im), std::abs(w.v2().re), std::abs(w.v2().im)});
  const GC b = bracket(v, w);
  return std::abs(modulus_sq(b)) > eps_unit * scale * scale;
}

/// The isometry B with B |> y1 = infinity, B |> y2 = 0, B |> y3 = 1.
inline Isometry boundary_normalize(const BoundaryPoint& y1, const BoundaryPoint& y2, const BoundaryPoint& y3) {
  if (!spacelike_connected(y1, y2) || !spacelike_connected(y1, y3) || !spacelike_connected(y2, y3))
    fail(Errc::NotSpacelikeConnected, "a bracket of the triple is a zero divisor");
  const GC k1 = bracket(y3, y1);
  const GC k2 = bracket(y3, y2);
  const Mat2 m{k1 * y2.v2(), -(k1 * y2.v1()), k2 * y1.v2(), -(k2 * y1.v1())};
  const GC dt = det(m);
  if (!(modulus_sq(dt) > 0)) fail(Errc::NotSpacelikeConnected, "normalizing matrix has |det|^2 <= 0");
  return Isometry(m);
}

inline GC cross_ratio(const BoundaryPoint& y1, const BoundaryPoint& y2, const BoundaryPoint& y3,
                      const BoundaryPoint& y4) {
  const BoundaryPoint* ys[4] = {&y1, &y2, &y3, &y4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!spacelike_connected(*ys[i], *ys[j])) fail(Errc::NotSpacelikeConnected, "points not pairwise connected");
  const GC z = bracket(y3, y1) * bracket(y4, y2) / (bracket(y3, y2) * bracket(y4, y1));
  if (!is_unit(z) || !is_unit(GC::real(1, z.lam) - z)) fail(Errc::Degenerate, "cross-ratio is 0, 1 or a zero divisor");
  return z;
}

/// Generators of the order-six group permuting infinity, 0, 1.
inline Mat2 perm_T(Lambda l) { return Mat2::real(0, 1, -1, 1, l); }
inline Mat2 perm_I(Lambda l) { return Mat2::real(0, 1, 1, 0, l); }

// ---------------------------------------------------------------------------
// Duality

inline Space other(Space s) { return s == Space::X ? Space::Y : Space::X; }

inline Plane dualize(const Point& p) {
  return plane_from_coeffs(other(p.space()), p.lam(), duality_form(p.lam()) * p.vec());
}

inline Point dualize(const Plane& P) {
  const Space s = other(P.space);
  const Vec4 v = duality_form(P.lam) * P.coeffs;
  if (!(det(embed(v, s, P.lam)).re > 1e-12)) fail(Errc::WrongCausalClass, "plane is not dual to a point");
  return Point::from_vec(v, s, P.lam);
}

inline Plane dualize(const BoundaryPoint& y) {
  Plane P = plane_from_coeffs(Space::X, y.lam(), duality_form(y.lam()) * y.vec());
  return P;
}

/// Boundary point dual to a lightlike plane of X.
inline BoundaryPoint dualize_to_boundary(const Plane& P) {
  if (P.space != Space::X) fail(Errc::WrongCausalClass, "boundary duals come from planes in X");
  const Lambda l = P.lam;
  const Vec4 v = duality_form(l) * P.coeffs;
  const Mat2 m = embed(v, Space::Y, l);
  const double scale = frob(m);
  if (std::abs(det(m).re) > 1e-9 * scale * scale) fail(Errc::WrongCausalClass, "plane is not lightlike");
  // Column j of v v^dag is v * conj(v_j).
  const bool first = std::abs(m.a.re) >= std::abs(m.d.re);
  const BoundaryPoint y = first ? BoundaryPoint(m.a, m.c) : BoundaryPoint(m.b, m.d);
  if (real_projective_distance(y.matrix(), m) > 1e-8 && real_projective_distance(m, y.matrix()) > 1e-8)
    fail(Errc::Degenerate, "cannot factor the rank one matrix");
  return y;
}

/// Dual of a spacelike geodesic: the line orthogonal to its span.
inline Geodesic dualize(const Geodesic& g) {
  if (g.sigma == 0) fail(Errc::WrongCausalClass, "lightlike geodesics have no dual geodesic");
  const Vec4 p = geodesic_eval(g, 0.0).vec();
  const Vec4 d = unembed(act(g.base, g.dir, g.space), g.space);
  const Mat4 D = duality_form(g.lam());
  Eigen::Matrix<double, 2, 4> m;
  m.row(0) = (D * p).transpose();
  m.row(1) = (D * d).transpose();
  const Eigen::MatrixXd ns = detail::null_space(m, 2);
  return geodesic_from_span(other(g.space), g.lam(), ns.col(0), ns.col(1));
}

/// True if the two geodesics trace the same projective line.
inline bool same_line(const Geodesic& g, const Geodesic& h, double tol = 1e-9) {
  if (g.space != h.space) return false;
  Eigen::Matrix<double, 4, 4> m;
  m.col(0) = detail::normalized(geodesic_eval(g, 0).vec());
  m.col(1) = detail::normalized(unembed(act(g.base, g.dir, g.space), g.space));
  m.col(2) = detail::normalized(geodesic_eval(h, 0).vec());
  m.col(3) = detail::normalized(unembed(act(h.base, h.dir, h.space), h.space));
  return detail::numeric_rank(m, tol) == 2;
}

// ---------------------------------------------------------------------------
// Stabilizers

/// A exp(theta X / 2) U A^-1 with U = a + b Im X (X case) or a + l b Y (Y case).
inline Isometry stabilizer_element(const Geodesic& g, double theta, double a, double b) {
  if (g.sigma == 0) fail(Errc::WrongCausalClass, "lightlike geodesics are not supported");
  const Lambda l = g.lam();
  Mat2 u;
  if (g.space == Space::X) {
    if (std::abs(a * a - g.sigma * b * b) <= 1e-14 * (a * a + b * b))
      fail(Errc::Inadmissible, "a^2 = sigma b^2");
    u = Mat2::identity(l) * a + from_parts(im_part(g.dir), Eigen::Matrix2d::Zero(), l) * b;
  } else {
    if (std::abs(a * a + to_int(l) * g.sigma * b * b) <= 1e-14 * (a * a + b * b))
      fail(Errc::Inadmissible, "a^2 = -Lambda sigma b^2");
    u = Mat2::identity(l) * a + GC::ell(l) * g.dir * b;
  }
  const Mat2 half = unit_exp(g.dir, g.space, g.sigma, 0.5 * theta);
  return Isometry(g.base.rep() * half * u * inverse(g.base.rep()));
}

/// Rotation or boost angle 2 ct^-1(a / b) described by (a, b).
inline double stabilizer_angle(const Geodesic& g, double a, double b) {
  const Lambda mu = g.space == Space::X ? to_lambda(-g.sigma) : scaled(g.lam(), g.sigma);
  if (b == 0) return 0.0;
  return 2.0 * gen_ct_inv(mu, a / b);
}

}  // namespace cltet
