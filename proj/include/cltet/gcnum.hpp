#pragma once

// Generalized complex numbers C_L = R[l]/(l^2 + L) for L in {-1, 0, 1}:
// split-complex (L=-1), dual (L=0) and complex (L=1) numbers.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "cltet/errors.hpp"

namespace cltet {

enum class Lambda : int { minus = -1, zero = 0, plus = 1 };

constexpr int to_int(Lambda l) { return static_cast<int>(l); }

inline Lambda to_lambda(int v) {
  if (v < -1 || v > 1) fail(Errc::DomainError, "Lambda must be -1, 0 or 1, got " + std::to_string(v));
  return static_cast<Lambda>(v);
}

/// Curvature index times a causal sign, as in c_{L*sigma}.
inline Lambda scaled(Lambda l, int sigma) { return to_lambda(to_int(l) * sigma); }

/// Relative threshold below which |z|^2 counts as a zero divisor.
inline constexpr double eps_unit = 1e-12;

struct GC {
  double re = 0.0;
  double im = 0.0;
  Lambda lam = Lambda::plus;

  constexpr GC() = default;
  constexpr GC(double r, double i, Lambda l) : re(r), im(i), lam(l) {}

  static constexpr GC real(double r, Lambda l) { return {r, 0.0, l}; }
  static constexpr GC ell(Lambda l) { return {0.0, 1.0, l}; }
};

namespace detail {
inline void same_lambda(const GC& a, const GC& b) {
  if (a.lam != b.lam) fail(Errc::LambdaMismatch, "mixed Lambda tags in arithmetic");
}
}  // namespace detail

inline GC operator+(const GC& a, const GC& b) {
  detail::same_lambda(a, b);
  return {a.re + b.re, a.im + b.im, a.lam};
}
inline GC operator-(const GC& a, const GC& b) {
  detail::same_lambda(a, b);
  return {a.re - b.re, a.im - b.im, a.lam};
}
inline GC operator-(const GC& a) { return {-a.re, -a.im, a.lam}; }
inline GC operator*(const GC& a, const GC& b) {
  detail::same_lambda(a, b);
  const double L = to_int(a.lam);
  return {a.re * b.re - L * a.im * b.im, a.re * b.im + a.im * b.re, a.lam};
}
inline GC operator*(const GC& a, double s) { return {a.re * s, a.im * s, a.lam}; }
inline GC operator*(double s, const GC& a) { return a * s; }
inline GC operator+(const GC& a, double s) { return {a.re + s, a.im, a.lam}; }
inline GC operator-(const GC& a, double s) { return {a.re - s, a.im, a.lam}; }
inline GC operator/(const GC& a, double s) { return {a.re / s, a.im / s, a.lam}; }
inline GC& operator+=(GC& a, const GC& b) { return a = a + b; }
inline GC& operator-=(GC& a, const GC& b) { return a = a - b; }
inline GC& operator*=(GC& a, const GC& b) { return a = a * b; }

inline GC conj(const GC& z) { return {z.re, -z.im, z.lam}; }

/// z * conj(z) = re^2 + L im^2; negative values occur for L = -1.
inline double modulus_sq(const GC& z) { return z.re * z.re + to_int(z.lam) * z.im * z.im; }

inline bool is_unit(const GC& z, double eps = eps_unit) {
  const double scale = z.re * z.re + z.im * z.im;
  return std::abs(modulus_sq(z)) > eps * scale;
}

inline GC inverse(const GC& z) {
  if (!is_unit(z)) fail(Errc::ZeroDivisor, "element is not a unit of C_Lambda");
  const double m = modulus_sq(z);
  return {z.re / m, -z.im / m, z.lam};
}

inline GC operator/(const GC& a, const GC& b) { return a * inverse(b); }

enum class Trig { s, c, t, ct };
enum class TrigInverse { t_inv, ct_inv };

inline double gen_c(Lambda l, double th) {
  switch (l) {
    case Lambda::plus: return std::cos(th);
    case Lambda::minus: return std::cosh(th);
    case Lambda::zero: return 1.0;
  }
  return 0.0;
}

inline double gen_s(Lambda l, double th) {
  switch (l) {
    case Lambda::plus: return std::sin(th);
    case Lambda::minus: return std::sinh(th);
    case Lambda::zero: return th;
  }
  return 0.0;
}

inline constexpr double pole_eps = 1e-14;

inline double gen_t(Lambda l, double th) {
  const double c = gen_c(l, th);
  if (std::abs(c) <= pole_eps) fail(Errc::PoleAt, "t_Lambda has a pole at " + std::to_string(th));
  return gen_s(l, th) / c;
}

inline double gen_ct(Lambda l, double th) {
  const double s = gen_s(l, th);
  if (std::abs(s) <= pole_eps) fail(Errc::PoleAt, "ct_Lambda has a pole at " + std::to_string(th));
  return gen_c(l, th) / s;
}

inline double gen_trig(Lambda l, double th, Trig which) {
  switch (which) {
    case Trig::s: return gen_s(l, th);
    case Trig::c: return gen_c(l, th);
    case Trig::t: return gen_t(l, th);
    case Trig::ct: return gen_ct(l, th);
  }
  return 0.0;
}

/// Inverse of t_Lambda; for L=1 the value lies in (-pi/2, pi/2).
inline double gen_t_inv(Lambda l, double r) {
  switch (l) {
    case Lambda::plus: return std::atan(r);
    case Lambda::minus:
      if (!(std::abs(r) < 1.0)) fail(Errc::DomainError, "artanh needs |r| < 1");
      return std::atanh(r);
    case Lambda::zero: return r;
  }
  return 0.0;
}

/// Inverse of ct_Lambda; for L=1 the value lies in (0, pi), for L=-1 it
/// carries the sign of r.
inline double gen_ct_inv(Lambda l, double r) {
  switch (l) {
    case Lambda::plus: return std::atan2(1.0, r);
    case Lambda::minus:
      if (!(std::abs(r) > 1.0)) fail(Errc::DomainError, "arcoth needs |r| > 1");
      return std::atanh(1.0 / r);
    case Lambda::zero:
      if (r == 0.0) fail(Errc::DomainError, "ct_0 inverse undefined at 0");
      return 1.0 / r;
  }
  return 0.0;
}

inline double gen_trig_inverse(Lambda l, double r, TrigInverse which) {
  return which == TrigInverse::t_inv ? gen_t_inv(l, r) : gen_ct_inv(l, r);
}

/// exp(l*theta) = c_L(theta) + l s_L(theta).
inline GC exp_ell(Lambda l, double th) { return {gen_c(l, th), gen_s(l, th), l}; }

/// Extension of a real analytic function to C_Lambda. f must accept double
/// and std::complex<double>; df (the derivative) is used only for L=0.
template <class F, class DF>
GC analytic_continue(const F& f, const DF& df, const GC& z) {
  switch (z.lam) {
    case Lambda::minus: {
      const double p = f(z.re + z.im);
      const double m = f(z.re - z.im);
      return {0.5 * (p + m), 0.5 * (p - m), z.lam};
    }
    case Lambda::plus: {
      const std::complex<double> w = f(std::complex<double>(z.re, z.im));
      return {w.real(), w.imag(), z.lam};
    }
    case Lambda::zero:
      return {f(z.re), df(z.re) * z.im, z.lam};
  }
  return {};
}

/// Polar form z = rho e^{l phi} with real rho, when it exists.
/// L=1 returns rho >= 0 and phi in (-pi, pi]; L=-1 needs |z|^2 > 0;
/// L=0 needs re != 0.
inline bool polar(const GC& z, double& rho, double& phi) {
  switch (z.lam) {
    case Lambda::plus:
      rho = std::hypot(z.re, z.im);
      phi = std::atan2(z.im, z.re);
      return rho > 0.0;
    case Lambda::minus:
      if (!(std::abs(z.re) > std::abs(z.im))) return false;
      rho = std::copysign(std::sqrt(modulus_sq(z)), z.re);
      phi = std::atanh(z.im / z.re);
      return true;
    case Lambda::zero:
      if (z.re == 0.0) return false;
      rho = z.re;
      phi = z.im / z.re;
      return true;
  }
  return false;
}

inline std::string to_string(const GC& z) {
  return std::to_string(z.re) + (z.im < 0 ? " - " : " + ") + std::to_string(std::abs(z.im)) + "l";
}

}  // namespace cltet
