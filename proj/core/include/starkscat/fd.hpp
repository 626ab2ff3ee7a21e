// Copyright (c) 2026 The starkscat developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>

#include "starkscat/types.hpp"

namespace stark {

// Step sizes follow the point scale. First derivatives use 1e-5*scale with
// 5-point stencils (O(h^4)); second derivatives need a larger step or roundoff
// eps*|f|/h^2 dominates, so they use 1e-3*scale.
struct FdSteps {
  double h1;
  double h2;
};

inline FdSteps fd_steps(double x, const Vec2& y, int dm1) {
  double s = std::fmax(1.0, std::fabs(x));
  s = std::fmax(s, norm(y, dm1));
  return {1e-5 * s, 1e-3 * s};
}

// 5-point central first derivative.
template <class F>
double fd_d1(F&& f, double t, double h) {
  return (f(t - 2 * h) - 8.0 * f(t - h) + 8.0 * f(t + h) - f(t + 2 * h)) / (12.0 * h);
}

// 3-point central first derivative (O(h^2); used where the convergence order
// itself is under test).
template <class F>
double fd_d1_o2(F&& f, double t, double h) {
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

// 5-point central second derivative (O(h^4)).
template <class F>
double fd_d2(F&& f, double t, double h) {
  return (-f(t - 2 * h) + 16.0 * f(t - h) - 30.0 * f(t) + 16.0 * f(t + h) - f(t + 2 * h)) /
         (12.0 * h * h);
}

// 4-point cross stencil for a mixed second partial (O(h^2)).
template <class F2>
double fd_cross(F2&& f, double u, double v, double h) {
  return (f(u + h, v + h) - f(u + h, v - h) - f(u - h, v + h) + f(u - h, v - h)) / (4.0 * h * h);
}

// Mixed second partial as nested 5-point first derivatives (O(h^4)); needed
// where an exact zero eigenvalue leaves no room for O(h^2) truncation.
template <class F2>
double fd_cross_o4(F2&& f, double u, double v, double h) {
  auto dv = [&](double uu) { return fd_d1([&](double vv) { return f(uu, vv); }, v, h); };
  return fd_d1(dv, u, h);
}

// Gradient of f(x, y) in the d active coordinates; 5-point stencils.
template <class F>
std::array<double, 3> fd_gradient(F&& f, double x, Vec2 y, int dm1, double h) {
  std::array<double, 3> g{};
  g[0] = fd_d1([&](double t) { return f(t, y); }, x, h);
  for (int i = 0; i < dm1; ++i) {
    g[1 + i] = fd_d1(
        [&](double t) {
          Vec2 yt = y;
          yt[i] = t;
          return f(x, yt);
        },
        y[i], h);
  }
  return g;
}

template <class F>
double fd_laplacian(F&& f, double x, Vec2 y, int dm1, double h) {
  double lap = fd_d2([&](double t) { return f(t, y); }, x, h);
  for (int i = 0; i < dm1; ++i) {
    lap += fd_d2(
        [&](double t) {
          Vec2 yt = y;
          yt[i] = t;
          return f(x, yt);
        },
        y[i], h);
  }
  return lap;
}

// Dense d x d Hessian (d = 1 + dm1), coordinates ordered (x, y1, y2).
template <class F>
std::array<std::array<double, 3>, 3> fd_hessian(F&& f, double x, Vec2 y, int dm1, double h) {
  const int d = 1 + dm1;
  auto at = [&](std::array<double, 3> c) {
    Vec2 yy{c[1], c[2]};
    return f(c[0], yy);
  };
  std::array<double, 3> c0{x, y[0], y[1]};
  std::array<std::array<double, 3>, 3> H{};
  for (int i = 0; i < d; ++i) {
    H[i][i] = fd_d2(
        [&](double t) {
          auto c = c0;
          c[i] = t;
          return at(c);
        },
        c0[i], h);
    for (int j = i + 1; j < d; ++j) {
      const double hij = fd_cross_o4(
          [&](double u, double v) {
            auto c = c0;
            c[i] = u;
            c[j] = v;
            return at(c);
          },
          c0[i], c0[j], h);
      H[i][j] = H[j][i] = hij;
    }
  }
  return H;
}

}  // namespace stark
