// Copyright (c) 2026 The starkscat developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <vector>

#include "starkscat/types.hpp"

namespace stark {

struct QuadOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  long max_evals = 20'000'000;
  // Optional pre-split: extra interior breakpoints (oscillation-aware callers).
  std::vector<double> breakpoints{};
  // Cap on initial panel width; 0 disables.
  double max_panel = 0.0;
};

template <typename T>
struct QuadResult {
  T value{};
  double error = 0.0;     // absolute error estimate
  long evals = 0;
  bool converged = true;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes (positive half) and weights.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T, class F>
void gk15(F&& f, double a, double b, T& result, double& err, double& resabs) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T fv[15];
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(c - h * kXgk[j]);
    fv[14 - j] = f(c + h * kXgk[j]);
  }
  fv[7] = f(c);
  T resk{};
  T resg{};
  resabs = 0.0;
  for (int j = 0; j < 8; ++j) {
    const T sum = (j == 7) ? fv[7] : fv[j] + fv[14 - j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * ((j == 7) ? std::abs(fv[7]) : std::abs(fv[j]) + std::abs(fv[14 - j]));
  }
  for (int j = 0; j < 4; ++j) {
    const int i = 2 * j + 1;
    const T sum = (i == 7) ? fv[7] : fv[i] + fv[14 - i];
    resg += kWg[j] * sum;
  }
  result = resk * h;
  resabs *= std::abs(h);
  // quadpack-style damped error estimate
  const T mean = resk * 0.5;
  double resasc = 0.0;
  for (int j = 0; j < 8; ++j) {
    if (j == 7)
      resasc += kWgk[j] * std::abs(fv[7] - mean);
    else
      resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  }
  resasc *= std::abs(h);
  err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::fmin(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps50 = 50.0 * 1.11022302462515654e-16;
  if (resabs > 1e-290 && eps50 * resabs > err) err = eps50 * resabs;
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod 7-15 over [a, b]. Deterministic: the worst
// panel (ties broken by left endpoint) is always bisected next.
template <typename T, class F>
QuadResult<T> adaptive_gk(F&& f, double a, double b, const QuadOptions& opt = {}) {
  struct Panel {
    double a, b, err;
    T val;
  };
  auto worse = [](const Panel& p, const Panel& q) {
    if (p.err != q.err) return p.err < q.err;
    return p.a > q.a;
  };
  std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> heap(worse);

  std::vector<double> pts;
  pts.push_back(a);
  for (double x : opt.breakpoints)
    if (x > a && x < b) pts.push_back(x);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  if (opt.max_panel > 0.0) {
    std::vector<double> fine;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      fine.push_back(pts[i]);
      const double w = pts[i + 1] - pts[i];
      const int n = static_cast<int>(std::ceil(w / opt.max_panel));
      for (int j = 1; j < n; ++j) fine.push_back(pts[i] + w * j / n);
    }
    fine.push_back(b);
    pts.swap(fine);
  }

  QuadResult<T> out;
  T total{};
  double toterr = 0.0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    Panel p{pts[i], pts[i + 1], 0.0, T{}};
    double resabs;
    detail::gk15(f, p.a, p.b, p.val, p.err, resabs);
    out.evals += 15;
    total += p.val;
    toterr += p.err;
    heap.push(p);
  }

  auto tolerance = [&] { return std::fmax(opt.abs_tol, opt.rel_tol * std::abs(total)); };
  while (toterr > tolerance() && out.evals < opt.max_evals) {
    Panel p = heap.top();
    if (p.b - p.a < 1e-15 * (std::abs(p.a) + std::abs(p.b)) + 5e-308) break;
    heap.pop();
    total -= p.val;
    toterr -= p.err;
    const double mid = 0.5 * (p.a + p.b);
    for (int half = 0; half < 2; ++half) {
      Panel q{half ? mid : p.a, half ? p.b : mid, 0.0, T{}};
      double resabs;
      detail::gk15(f, q.a, q.b, q.val, q.err, resabs);
      out.evals += 15;
      total += q.val;
      toterr += q.err;
      heap.push(q);
    }
  }
  out.value = total;
  out.error = toterr;
  out.converged = toterr <= tolerance();
  return out;
}

// Integral over [0, inf) via t = s/(1-s); integrable endpoint behavior is
// handled by panel refinement near s = 1.
template <typename T, class F>
QuadResult<T> adaptive_gk_half_line(F&& f, const QuadOptions& opt = {}) {
  auto g = [&](double s) -> T {
    const double om = 1.0 - s;
    const double t = s / om;
    return f(t) / (om * om);
  };
  return adaptive_gk<T>(g, 0.0, 1.0, opt);
}

}  // namespace stark
