#pragma once

// 2x2 matrices over C_Lambda and the matrix models of X_Lambda and Y_Lambda.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <string>

#include "cltet/gcnum.hpp"

namespace cltet {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

enum class Space { X, Y };

inline const char* space_name(Space s) { return s == Space::X ? "X" : "Y"; }

struct Mat2 {
  GC a, b, c, d;

  Mat2() = default;
  Mat2(const GC& a_, const GC& b_, const GC& c_, const GC& d_) : a(a_), b(b_), c(c_), d(d_) {
    if (b.lam != a.lam || c.lam != a.lam || d.lam != a.lam)
      fail(Errc::LambdaMismatch, "Mat2 entries carry different Lambda tags");
  }

  Lambda lam() const { return a.lam; }

  static Mat2 identity(Lambda l) { return {GC::real(1, l), GC::real(0, l), GC::real(0, l), GC::real(1, l)}; }
  static Mat2 zero(Lambda l) { return {GC::real(0, l), GC::real(0, l), GC::real(0, l), GC::real(0, l)}; }
  static Mat2 real(double a, double b, double c, double d, Lambda l) {
    return {GC::real(a, l), GC::real(b, l), GC::real(c, l), GC::real(d, l)};
  }
  /// l * [[a, b], [c, d]] with real a..d.
  static Mat2 ell(double a, double b, double c, double d, Lambda l) {
    return {GC(0, a, l), GC(0, b, l), GC(0, c, l), GC(0, d, l)};
  }
  static Mat2 diag(const GC& p, const GC& q) {
    const Lambda l = p.lam;
    return {p, GC::real(0, l), GC::real(0, l), q};
  }
};

inline Mat2 operator*(const Mat2& m, const Mat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}
inline Mat2 operator+(const Mat2& m, const Mat2& n) { return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d}; }
inline Mat2 operator-(const Mat2& m, const Mat2& n) { return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d}; }
inline Mat2 operator-(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }
inline Mat2 operator*(const Mat2& m, double s) { return {m.a * s, m.b * s, m.c * s, m.d * s}; }
inline Mat2 operator*(double s, const Mat2& m) { return m * s; }
inline Mat2 operator*(const GC& z, const Mat2& m) { return {z * m.a, z * m.b, z * m.c, z * m.d}; }
inline Mat2 operator*(const Mat2& m, const GC& z) { return z * m; }

inline GC det(const Mat2& m) { return m.a * m.d - m.b * m.c; }
inline GC tr(const Mat2& m) { return m.a + m.d; }

inline Mat2 adjugate(const Mat2& m) { return {m.d, -m.b, -m.c, m.a}; }

inline Mat2 inverse(const Mat2& m) {
  const GC dt = det(m);
  if (!is_unit(dt)) fail(Errc::ZeroDivisor, "matrix determinant is not a unit");
  return inverse(dt) * adjugate(m);
}

inline Mat2 conj(const Mat2& m) { return {conj(m.a), conj(m.b), conj(m.c), conj(m.d)}; }

enum class Involution { circ, dag };

inline Mat2 circ(const Mat2& m) { return {conj(m.d), -conj(m.b), -conj(m.c), conj(m.a)}; }
inline Mat2 dag(const Mat2& m) { return {conj(m.a), conj(m.c), conj(m.b), conj(m.d)}; }

inline Mat2 involution(const Mat2& m, Involution kind) { return kind == Involution::circ ? circ(m) : dag(m); }

inline Mat2 involution(const Mat2& m, Space s) { return s == Space::X ? circ(m) : dag(m); }

inline Eigen::Matrix2d re_part(const Mat2& m) {
  Eigen::Matrix2d r;
  r << m.a.re, m.b.re, m.c.re, m.d.re;
  return r;
}

inline Eigen::Matrix2d im_part(const Mat2& m) {
  Eigen::Matrix2d r;
  r << m.a.im, m.b.im, m.c.im, m.d.im;
  return r;
}

inline Mat2 from_parts(const Eigen::Matrix2d& re, const Eigen::Matrix2d& im, Lambda l) {
  return {GC(re(0, 0), im(0, 0), l), GC(re(0, 1), im(0, 1), l), GC(re(1, 0), im(1, 0), l),
          GC(re(1, 1), im(1, 1), l)};
}

/// The eight real coordinates, row-major, (re, im) per entry.
inline Eigen::Matrix<double, 8, 1> flat(const Mat2& m) {
  Eigen::Matrix<double, 8, 1> v;
  v << m.a.re, m.a.im, m.b.re, m.b.im, m.c.re, m.c.im, m.d.re, m.d.im;
  return v;
}

inline double frob(const Mat2& m) { return flat(m).norm(); }

inline double max_abs_diff(const Mat2& m, const Mat2& n) { return (flat(m) - flat(n)).cwiseAbs().maxCoeff(); }

// ---------------------------------------------------------------------------
// Embeddings of R^4

inline Mat2 embed(const Vec4& v, Space s, Lambda l) {
  if (s == Space::X) {
    return {GC(v[1], v[3], l), GC(0, v[2] - v[0], l), GC(0, v[2] + v[0], l), GC(v[1], -v[3], l)};
  }
  return {GC(v[0] + v[2], 0, l), GC(v[3], v[1], l), GC(v[3], -v[1], l), GC(v[0] - v[2], 0, l)};
}

/// Inverse of embed on hermitian matrices; non-hermitian parts are averaged out.
inline Vec4 unembed(const Mat2& m, Space s) {
  if (s == Space::X) {
    return {0.5 * (m.c.im - m.b.im), 0.5 * (m.a.re + m.d.re), 0.5 * (m.b.im + m.c.im), 0.5 * (m.a.im - m.d.im)};
  }
  return {0.5 * (m.a.re + m.d.re), 0.5 * (m.b.im - m.c.im), 0.5 * (m.a.re - m.d.re), 0.5 * (m.b.re + m.c.re)};
}

/// Gram matrix of the quadratic form v -> det(embed(v)).
inline Mat4 det_form(Space s, Lambda l) {
  const double L = to_int(l);
  Vec4 d = s == Space::X ? Vec4(-L, 1, L, L) : Vec4(1, -L, -1, -1);
  return d.asDiagonal();
}

/// <v,w>_L = -v1 w1 + L v2 w2 + v3 w3 + v4 w4.
inline double minkowski_form(const Vec4& v, const Vec4& w, Lambda l) {
  return -v[0] * w[0] + to_int(l) * v[1] * w[1] + v[2] * w[2] + v[3] * w[3];
}

// ---------------------------------------------------------------------------
// Isometries

/// Element of PGL+(2, C_Lambda).
class Isometry {
 public:
  Isometry() = default;
  explicit Isometry(const Mat2& rep) : rep_(rep) {
    const GC dt = det(rep_);
    const double scale = frob(rep_);
    if (!(modulus_sq(dt) > eps_unit * scale * scale * scale * scale))
      fail(Errc::ZeroDivisor, "isometry representative needs |det|^2 > 0");
  }

  static Isometry identity(Lambda l) { return Isometry(Mat2::identity(l)); }

  const Mat2& rep() const { return rep_; }
  Lambda lam() const { return rep_.lam(); }

  Isometry inverse() const { return Isometry(adjugate(rep_)); }

  /// Representative scaled to det = +1 when possible (det = -1 otherwise) and Re tr >= 0.
  Isometry canonical() const {
    Mat2 m = rep_;
    const GC d0 = det(m);
    // Already canonical: keep the bits so that repeated canonicalization is stable.
    if (std::abs(d0.re - 1) < 1e-13 && std::abs(d0.im) < 1e-13 && tr(m).re > 0) return *this;
    double rho = 0, phi = 0;
    if (polar(d0, rho, phi)) {
      const GC w = exp_ell(lam(), -0.5 * phi) * (1.0 / std::sqrt(std::abs(rho)));
      m = w * m;
    }
    const double t = tr(m).re;
    bool flip = t < 0;
    if (t == 0) {
      const auto f = flat(m);
      for (int i = 0; i < 8; ++i) {
        if (f[i] != 0) {
          flip = f[i] < 0;
          break;
        }
      }
    }
    if (flip) m = -m;
    Isometry out;
    out.rep_ = m;
    return out;
  }

 private:
  Mat2 rep_ = Mat2::identity(Lambda::plus);
};

inline Isometry operator*(const Isometry& a, const Isometry& b) { return Isometry(a.rep() * b.rep()); }

/// Relative distance of m from the C_Lambda-line through n (least squares in the unit u).
inline double projective_distance(const Mat2& m, const Mat2& n) {
  const auto vm = flat(m);
  const auto vn = flat(n);
  const auto vl = flat(GC::ell(n.lam()) * n);
  Eigen::Matrix<double, 8, 2> basis;
  basis.col(0) = vn;
  basis.col(1) = vl;
  const Eigen::Vector2d coef = basis.colPivHouseholderQr().solve(vm);
  const double nm = vm.norm();
  if (nm == 0.0) return vn.norm() == 0.0 ? 0.0 : 1.0;
  return (vm - basis * coef).norm() / nm;
}

/// Relative distance of m from the real line through n.
inline double real_projective_distance(const Mat2& m, const Mat2& n) {
  const auto vm = flat(m);
  const auto vn = flat(n);
  const double nn = vn.squaredNorm();
  const double nm = vm.norm();
  if (nm == 0.0 || nn == 0.0) return nm == nn ? 0.0 : 1.0;
  return (vm - (vm.dot(vn) / nn) * vn).norm() / nm;
}

inline constexpr double proj_tol = 1e-9;

inline bool projectively_equal(const Isometry& a, const Isometry& b, double tol = proj_tol) {
  return projective_distance(a.rep(), b.rep()) <= tol && projective_distance(b.rep(), a.rep()) <= tol;
}

// ---------------------------------------------------------------------------
// Points

inline constexpr double herm_tol = 1e-9;

class Point {
 public:
  Point() = default;
  Point(Space s, const Mat2& rep, bool validate = true) : space_(s), rep_(rep) {
    if (validate) check();
  }

  static Point origin(Space s, Lambda l) { return Point(s, Mat2::identity(l), false); }
  static Point from_vec(const Vec4& v, Space s, Lambda l) { return Point(s, embed(v, s, l)); }

  Space space() const { return space_; }
  const Mat2& rep() const { return rep_; }
  Lambda lam() const { return rep_.lam(); }
  Vec4 vec() const { return unembed(rep_, space_); }
  /// Real determinant of the representative (positive for valid points).
  double det_re() const { return det(rep_).re; }

  /// Representative with det = 1, keeping the lift sign.
  Mat2 unit_rep() const { return rep_ * (1.0 / std::sqrt(det_re())); }

  Point negated() const { return Point(space_, -rep_, false); }

 private:
  void check() const {
    const double scale = frob(rep_);
    if (scale == 0) fail(Errc::DomainError, "zero matrix is not a point");
    if (max_abs_diff(involution(rep_, space_), rep_) > herm_tol * scale)
      fail(Errc::DomainError, std::string("matrix is not hermitian for the ") + space_name(space_) + " involution");
    const GC dt = det(rep_);
    if (!(dt.re > herm_tol * scale * scale))
      fail(Errc::DomainError, "point representative must have positive determinant");
  }

  Space space_ = Space::X;
  Mat2 rep_ = Mat2::identity(Lambda::plus);
};

/// Equality up to nonzero real scale (either sign).
inline bool projectively_equal(const Point& p, const Point& q, double tol = proj_tol) {
  return p.space() == q.space() && real_projective_distance(p.rep(), q.rep()) <= tol;
}

inline Mat2 act(const Isometry& A, const Mat2& m, Space s) { return A.rep() * m * involution(A.rep(), s); }

inline Point act(const Isometry& A, const Point& p) {
  if (A.lam() != p.lam()) fail(Errc::LambdaMismatch, "isometry and point carry different Lambda");
  return Point(p.space(), act(A, p.rep(), p.space()), false);
}

/// Real 4x4 matrix of v -> unembed(A embed(v) A^inv-involution).
inline Mat4 action_matrix(const Isometry& A, Space s) {
  Mat4 L;
  for (int k = 0; k < 4; ++k) {
    Vec4 e = Vec4::Zero();
    e[k] = 1;
    L.col(k) = unembed(act(A, embed(e, s, A.lam()), s), s);
  }
  return L;
}

/// A with A = A^involution and A |> 1 = p, following 1 + x' with det x' = 1, tr x' >= 0.
inline Isometry point_sqrt(const Point& p) {
  const double dt = p.det_re();
  if (!(dt > 0)) fail(Errc::NormalizationFailure, "no representative with det = 1");
  Mat2 x = p.rep() * (1.0 / std::sqrt(dt));
  if (tr(x).re < 0) x = -x;
  const Mat2 a = Mat2::identity(p.lam()) + x;
  if (!(det(a).re > 0)) fail(Errc::NormalizationFailure, "1 + x' is singular");
  return Isometry(a);
}

// ---------------------------------------------------------------------------
// Tangent vectors

/// Tangent vector stored as a model vector at 1 together with the isometry
/// carrying 1 to the base point.
class Tangent {
 public:
  Tangent() = default;
  Tangent(Space s, const Mat2& rep) : Tangent(s, Isometry::identity(rep.lam()), rep) {}
  Tangent(Space s, const Isometry& base, const Mat2& rep) : space_(s), base_(base), rep_(rep) {
    const double scale = std::max(frob(rep_), 1.0);
    if (std::abs(tr(rep_).re) + std::abs(tr(rep_).im) > herm_tol * scale)
      fail(Errc::DomainError, "tangent representative must be traceless");
    if (max_abs_diff(involution(rep_, s), rep_) > herm_tol * scale)
      fail(Errc::DomainError, "tangent representative is not hermitian");
  }

  Space space() const { return space_; }
  const Isometry& base() const { return base_; }
  const Mat2& rep() const { return rep_; }
  Lambda lam() const { return rep_.lam(); }
  Point base_point() const { return act(base_, Point::origin(space_, lam())); }

  /// Three real coordinates: X = l[[p,q],[r,-p]] or Y = [[p, q + l r],[q - l r, -p]].
  Eigen::Vector3d coords() const { return coords_of(rep_, space_); }

  static Eigen::Vector3d coords_of(const Mat2& m, Space s) {
    if (s == Space::X) return {m.a.im, m.b.im, m.c.im};
    return {m.a.re, m.b.re, m.b.im};
  }
  static Mat2 from_coords(const Eigen::Vector3d& c, Space s, Lambda l) {
    if (s == Space::X) return Mat2::ell(c[0], c[1], c[2], -c[0], l);
    return {GC(c[0], 0, l), GC(c[1], c[2], l), GC(c[1], -c[2], l), GC(-c[0], 0, l)};
  }

  Tangent scaled(double k) const { return Tangent(space_, base_, rep_ * k); }
  Tangent transported(const Isometry& A) const { return Tangent(space_, A * base_, rep_); }

 private:
  Space space_ = Space::X;
  Isometry base_;
  Mat2 rep_ = Mat2::zero(Lambda::plus);
};

/// Gram matrix of the invariant form in Tangent::coords.
inline Eigen::Matrix3d tangent_gram(Space s, Lambda l) {
  Eigen::Matrix3d g = Eigen::Matrix3d::Zero();
  if (s == Space::X) {
    g(0, 0) = 1;
    g(1, 2) = g(2, 1) = 0.5;
  } else {
    g(0, 0) = 1;
    g(1, 1) = 1;
    g(2, 2) = to_int(l);
  }
  return g;
}

inline double model_metric(const Mat2& m, const Mat2& n, Space s) {
  return Tangent::coords_of(m, s).dot(tangent_gram(s, m.lam()) * Tangent::coords_of(n, s));
}

namespace detail {
/// Express t2's model vector relative to t1's base isometry; both must have the same base point.
inline Mat2 rebase(const Tangent& t1, const Tangent& t2) {
  if (projectively_equal(t1.base(), t2.base())) {
    return t2.rep();
  }
  if (!projectively_equal(t1.base_point(), t2.base_point())) fail(Errc::BaseMismatch, "tangents at different points");
  // U = A1^-1 A2 stabilizes 1 and acts on the model space by conjugation.
  const Mat2 u = inverse(t1.base().rep()) * t2.base().rep();
  const Mat2 uu = u * involution(u, t1.space());
  const double k = uu.a.re;
  return u * t2.rep() * involution(u, t1.space()) * (1.0 / k);
}
}  // namespace detail

inline double tangent_metric(const Tangent& t1, const Tangent& t2) {
  if (t1.space() != t2.space()) fail(Errc::BaseMismatch, "tangents in different spaces");
  return model_metric(t1.rep(), detail::rebase(t1, t2), t1.space());
}

inline constexpr double causal_tol = 1e-10;

inline int sign_with_tol(double v, double scale) {
  if (std::abs(v) <= causal_tol * std::max(scale, 1e-300)) return 0;
  return v > 0 ? 1 : -1;
}

inline int causal_type(const Mat2& m, Space s) {
  const double q = model_metric(m, m, s);
  const double n = Tangent::coords_of(m, s).squaredNorm();
  return sign_with_tol(q, n);
}

inline int causal_type(const Tangent& t) { return causal_type(t.rep(), t.space()); }

inline Tangent normalize_tangent(const Tangent& t) {
  const double q = tangent_metric(t, t);
  if (causal_type(t) == 0) return t;
  return t.scaled(1.0 / std::sqrt(std::abs(q)));
}

/// Trigonometric index for X: L sigma, for Y: -sigma.
inline Lambda geodesic_index(Space s, Lambda l, int sigma) {
  return s == Space::X ? scaled(l, sigma) : to_lambda(-sigma);
}

/// c(t) 1 + s(t) T with the index of the geodesic through 1 in direction T.
inline Mat2 unit_exp(const Mat2& t, Space s, int sigma, double th) {
  const Lambda mu = geodesic_index(s, t.lam(), sigma);
  return Mat2::identity(t.lam()) * gen_c(mu, th) + t * gen_s(mu, th);
}

/// exp(theta T / 2) |> 1 for a unit or lightlike tangent.
inline Point exp_point(double theta, const Tangent& T) {
  const int sigma = causal_type(T);
  if (sigma != 0 && std::abs(std::abs(tangent_metric(T, T)) - 1.0) > 1e-9)
    fail(Errc::DomainError, "exp_point needs a unit or lightlike tangent");
  if (theta < 0) fail(Errc::DomainError, "exp_point needs theta >= 0");
  const bool periodic = to_int(geodesic_index(T.space(), T.lam(), sigma)) == 1;
  if (periodic && theta >= 2 * std::numbers::pi) fail(Errc::DomainError, "theta must be below 2 pi on closed geodesics");
  const Mat2 half = unit_exp(T.rep(), T.space(), sigma, 0.5 * theta);
  const Isometry h(half);
  return act(T.base(), act(h, Point::origin(T.space(), T.lam())));
}

/// Truncated Taylor series of the matrix exponential, used as a test oracle.
inline Mat2 exp_series(const Mat2& m, int terms = 60) {
  Mat2 result = Mat2::identity(m.lam());
  Mat2 term = Mat2::identity(m.lam());
  for (int k = 1; k < terms; ++k) {
    term = term * m * (1.0 / k);
    result = result + term;
  }
  return result;
}

}  // namespace cltet
