#pragma once

// Adaptive tensor Gauss-Kronrod (7/15) cubature on rectangles.

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cltet/errors.hpp"

namespace cltet {

struct Rect {
  double x0, x1, y0, y1;
};

struct CubatureResult {
  double value = 0;
  double error = 0;
  std::size_t evaluations = 0;
  std::size_t regions = 0;
};

struct CubatureOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-300;
  std::size_t max_evaluations = 40'000'000;
};

namespace detail {

struct GK15 {
  std::array<double, 15> x{};
  std::array<double, 15> wk{};
  std::array<double, 15> wg{};

  GK15() {
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    const auto& ka = gauss_kronrod<double, 15>::abscissa();
    const auto& kw = gauss_kronrod<double, 15>::weights();
    const auto& ga = gauss<double, 7>::abscissa();
    const auto& gw = gauss<double, 7>::weights();
    int n = 0;
    for (std::size_t i = ka.size(); i-- > 1;) x[n++] = -ka[i];
    for (std::size_t i = 0; i < ka.size(); ++i) x[n++] = ka[i];
    for (int i = 0; i < 15; ++i) {
      const double a = std::abs(x[i]);
      for (std::size_t k = 0; k < ka.size(); ++k)
        if (std::abs(ka[k] - a) < 1e-15) wk[i] = kw[k];
      for (std::size_t k = 0; k < ga.size(); ++k)
        if (std::abs(ga[k] - a) < 1e-15) wg[i] = gw[k];
    }
  }
};

inline const GK15& gk15() {
  static const GK15 rule;
  return rule;
}

struct Region {
  Rect r;
  double value;
  double error;
  int split_dim;
  std::size_t id;  // tie-breaker for a deterministic queue order
};

struct RegionOrder {
  bool operator()(const Region& a, const Region& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.id > b.id;
  }
};

template <class F>
Region integrate_rect(const F& f, const Rect& r, std::size_t id) {
  const auto& q = gk15();
  const double hx = 0.5 * (r.x1 - r.x0), cx = 0.5 * (r.x1 + r.x0);
  const double hy = 0.5 * (r.y1 - r.y0), cy = 0.5 * (r.y1 + r.y0);
  double kk = 0, gk = 0, kg = 0, gg = 0;
  for (int i = 0; i < 15; ++i) {
    const double x = cx + hx * q.x[i];
    double rk = 0, rg = 0;
    for (int j = 0; j < 15; ++j) {
      const double v = f(x, cy + hy * q.x[j]);
      rk += q.wk[j] * v;
      rg += q.wg[j] * v;
    }
    kk += q.wk[i] * rk;
    kg += q.wk[i] * rg;
    gk += q.wg[i] * rk;
    gg += q.wg[i] * rg;
  }
  const double area = hx * hy;
  const double ex = std::abs(kk - gk) * area;  // x-direction error
  const double ey = std::abs(kk - kg) * area;
  double err = std::abs(kk - gg) * area;
  if (!std::isfinite(kk)) err = std::numeric_limits<double>::infinity();
  return {r, kk * area, std::max(err, std::max(ex, ey)), ex >= ey ? 0 : 1, id};
}

}  // namespace detail

/// Integrates f(x, y) over a union of rectangles; throws ToleranceNotReached when the budget runs out.
template <class F>
CubatureResult cubature(const F& f, const std::vector<Rect>& domain, const CubatureOptions& opt = {}) {
  std::priority_queue<detail::Region, std::vector<detail::Region>, detail::RegionOrder> heap;
  std::size_t next_id = 0, evals = 0;
  constexpr std::size_t per_region = 225;
  for (const auto& r : domain) {
    heap.push(detail::integrate_rect(f, r, next_id++));
    evals += per_region;
  }
  double value = 0, error = 0;
  auto totals = [&] {
    value = 0;
    error = 0;
    auto copy = heap;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      copy.pop();
    }
  };
  totals();
  std::size_t since_refresh = 0;
  while (error > std::max(opt.abs_tol, opt.rel_tol * std::abs(value))) {
    if (evals + 2 * per_region > opt.max_evaluations) {
      totals();
      throw ToleranceNotReached(value, error, "cubature budget exhausted at error " + std::to_string(error));
    }
    const detail::Region top = heap.top();
    heap.pop();
    Rect a = top.r, b = top.r;
    if (top.split_dim == 0) {
      a.x1 = b.x0 = 0.5 * (top.r.x0 + top.r.x1);
    } else {
      a.y1 = b.y0 = 0.5 * (top.r.y0 + top.r.y1);
    }
    const auto ra = detail::integrate_rect(f, a, next_id++);
    const auto rb = detail::integrate_rect(f, b, next_id++);
    evals += 2 * per_region;
    heap.push(ra);
    heap.push(rb);
    value += ra.value + rb.value - top.value;
    error += ra.error + rb.error - top.error;
    if (++since_refresh == 4096 || !std::isfinite(error)) {
      totals();
      since_refresh = 0;
    }
  }
  totals();
  return {value, error, evals, heap.size()};
}

}  // namespace cltet
