#pragma once

// Clausen functions, volumes of ideal and lightlike tetrahedra, and a cubature oracle.

#include <cmath>
#include <numbers>
#include <optional>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include "cltet/cubature.hpp"
#include "cltet/tetrahedra.hpp"

namespace cltet {

/// Bernoulli number B_n for even n in [0, 60].
inline double bernoulli(int n) {
  if (n == 0) return 1.0;
  if (n < 0 || n % 2 != 0 || n > 60) fail(Errc::DomainError, "bernoulli needs an even n in [0, 60]");
  return boost::math::bernoulli_b2n<double>(n / 2);
}

namespace detail {

/// Cl(x) for |x| <= pi: x - x log|x| + sum |B_2k| x^{2k+1} / (2k (2k+1)!).
inline double clausen_circle(double x) {
  if (x == 0.0) return 0.0;
  double sum = x - x * std::log(std::abs(x));
  const double x2 = x * x;
  double p = x;
  for (int k = 1; k <= 30; ++k) {
    p *= x2;
    const double term = std::abs(bernoulli(2 * k)) * p / (2.0 * k * boost::math::factorial<double>(2 * k + 1));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

inline constexpr double clausen_delta = 1e-3;

/// -int_0^x log(2 sinh(t/2)) dt for 0 <= x.
inline double clausen_hyperbolic(double x) {
  // log(2 sinh(t/2)) = log t + t^2/24 - t^4/2880 + ...
  auto head = [](double d) {
    if (d == 0.0) return 0.0;
    return d * std::log(d) - d + d * d * d / 72.0 - std::pow(d, 5) / 14400.0;
  };
  if (x <= clausen_delta) return -head(x);
  auto g = [](double t) { return 0.5 * t + std::log1p(-std::exp(-t)); };
  const double tail =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, clausen_delta, x, 12, 1e-13);
  return -(head(clausen_delta) + tail);
}

}  // namespace detail

/// Cl_L(x) = -int_0^x log|2 s_L(t/2)| dt.
inline double clausen(Lambda l, double x) {
  if (x == 0.0) return 0.0;
  if (x < 0) return -clausen(l, -x);
  switch (l) {
    case Lambda::plus: {
      const double two_pi = 2 * std::numbers::pi;
      double r = std::fmod(x, two_pi);
      if (r > std::numbers::pi) r -= two_pi;
      return detail::clausen_circle(r);
    }
    case Lambda::zero: return x * (1 - std::log(x));
    case Lambda::minus: return detail::clausen_hyperbolic(x);
  }
  return 0.0;
}

inline double ideal_volume(Lambda l, double alpha, double beta) {
  check_angles(l, alpha, beta);
  const double gamma = -(alpha + beta);
  return 0.5 * (clausen(l, 2 * alpha) + clausen(l, 2 * beta) + clausen(l, 2 * gamma));
}

inline double lightlike_volume(Lambda l, double alpha, double beta) {
  check_angles(l, alpha, beta);
  if (l == Lambda::zero) return alpha * beta * (alpha + beta) / 3;
  const double L = to_int(l);
  const double gamma = -(alpha + beta);
  double cl = 0, lg = 0;
  for (double x : {alpha, beta, gamma}) {
    cl += clausen(l, 2 * x);
    lg += x * std::log(std::abs(gen_s(l, x)));
  }
  return cl / (2 * L) + lg / L;
}

/// Truncated power series in Lambda (any real value) to order K.
inline double lightlike_volume_series(double lam, double alpha, double beta, int K) {
  if (K < 1) fail(Errc::DomainError, "series order must be at least 1");
  if (!(alpha > 0) || !(beta > 0)) fail(Errc::DomainError, "alpha and beta must be positive");
  if (K > 30) fail(Errc::DomainError, "series order above 30 exceeds the tabulated Bernoulli numbers");
  const double y = alpha + beta;
  if (y * std::sqrt(std::abs(lam)) >= std::numbers::pi)
    fail(Errc::ConvergenceWarning, "series diverges for (alpha + beta) sqrt|Lambda| >= pi");
  double sum = 0;
  double lp = 1;     // lam^{k-1}
  double four = 1;   // 4^k
  for (int k = 1; k <= K; ++k) {
    four *= 4;
    const int n = 2 * k + 1;
    const double P = std::pow(y, n) - std::pow(alpha, n) - std::pow(beta, n);
    const double sign = k % 2 == 1 ? 1.0 : -1.0;
    sum += four * bernoulli(2 * k) * sign * lp * P / boost::math::factorial<double>(n);
    lp *= lam;
  }
  return sum;
}

struct QuadratureResult {
  double value = 0;
  double error = 0;
};

inline constexpr double min_quadrature_tol = 1e-10;

/// Volume from the volume forms of the chart parametrizations, never from the closed forms.
inline QuadratureResult volume_quadrature(Kind kind, Lambda l, double alpha, double beta, double tol) {
  check_angles(l, alpha, beta);
  if (!(tol >= min_quadrature_tol)) fail(Errc::DomainError, "tolerance must be at least 1e-10");
  CubatureOptions opt;
  opt.rel_tol = tol;
  const double gamma = -(alpha + beta);
  const double sa = gen_s(l, alpha), sb = gen_s(l, beta);
  CubatureResult res;
  if (kind == Kind::ideal) {
    // theta in [-alpha, 0], r = u r(theta); the t-integral of r / t^3 from t(r, theta) is r / (2 t^2).
    auto f = [=](double theta, double u) {
      const double k = gen_s(l, theta - gamma) / sa;
      const double rt = sb / sa * gen_s(l, gamma) / gen_s(l, theta - beta);
      return rt / (2 * (k - u * rt));
    };
    res = cubature(f, {Rect{-alpha, 0, 0, 1}}, opt);
  } else {
    const double a = 0.5 * (sa / sb - sb / sa);
    const double c = 0.5 * (sa / sb + sb / sa);
    const double b = gen_c(l, alpha + beta);
    const double d = gen_s(l, alpha + beta);
    const double L = to_int(l);
    // int_0^R s_L(r)^2 dr
    auto inner = [=](double R) {
      if (l == Lambda::zero || std::abs(R) < 1e-3) return R * R * R / 3 - L * std::pow(R, 5) / 15;
      return (gen_s(l, 2 * R) - 2 * R) / (-4 * L);
    };
    const double q = std::numbers::pi / 4;
    // s = |t| + u (pi/2 - 2|t|)
    auto f = [=](double t, double u) {
      const double w = std::numbers::pi / 2 - 2 * std::abs(t);
      const double s = std::abs(t) + u * w;
      const double R = gen_ct_inv(l, (a * std::sin(t) + b * std::cos(t) + c * std::sin(s)) / (d * std::cos(s)));
      const double cs = std::cos(s);
      return w * inner(R) / (cs * cs);
    };
    res = cubature(f, {Rect{-q, 0, 0, 1}, Rect{0, q, 0, 1}}, opt);
  }
  return {res.value, res.error};
}

struct VolumeReport {
  Kind kind = Kind::ideal;
  Lambda lam = Lambda::plus;
  double alpha = 0, beta = 0;
  double closed_form = 0;
  std::optional<double> oracle;
  std::optional<double> oracle_error;
  std::optional<double> series;
  int series_order = 0;
  std::optional<double> rel_discrepancy;
};

inline double relative_discrepancy(double closed, double oracle) {
  return std::abs(closed - oracle) / std::max(std::abs(closed), 1e-12);
}

inline VolumeReport volume_report(Kind kind, Lambda l, double alpha, double beta, bool with_oracle, double tol,
                                  int series_order = 0) {
  VolumeReport r;
  r.kind = kind;
  r.lam = l;
  r.alpha = alpha;
  r.beta = beta;
  r.closed_form = kind == Kind::ideal ? ideal_volume(l, alpha, beta) : lightlike_volume(l, alpha, beta);
  if (with_oracle) {
    const auto q = volume_quadrature(kind, l, alpha, beta, tol);
    r.oracle = q.value;
    r.oracle_error = q.error;
    r.rel_discrepancy = relative_discrepancy(r.closed_form, q.value);
  }
  if (series_order > 0) {
    if (kind != Kind::lightlike) fail(Errc::DomainError, "the series applies to lightlike volumes");
    r.series = lightlike_volume_series(to_int(l), alpha, beta, series_order);
    r.series_order = series_order;
  }
  return r;
}

}  // namespace cltet
