// Copyright (c) 2026 The starkscat developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "starkscat/types.hpp"

namespace stark {

struct OdeOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double h_init = 1e-3;
  double h_min_rel = 1e-13;  // step underflow threshold relative to |t|+1
  std::uint64_t max_steps = 20'000'000;
};

// Dormand-Prince 5(4) embedded pair with PI step control and first-same-as-last
// reuse. Not symplectic; energy drift is monitored by callers instead. The last
// step is clipped to land exactly on the requested endpoint, and the observer
// sees every accepted step.
template <int N, class RHS, class Obs>
std::array<double, N> integrate_dopri5(RHS&& rhs, double t0, std::array<double, N> u, double t1,
                                       const OdeOptions& opt, Obs&& obs) {
  using State = std::array<double, N>;
  if (t1 == t0) return u;
  const double dir = (t1 > t0) ? 1.0 : -1.0;

  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  // difference 5th-order minus embedded 4th-order weights
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  State k1, k2, k3, k4, k5, k6, k7, utmp, unew;
  double t = t0;
  double h = std::fmin(std::fabs(opt.h_init), std::fabs(t1 - t0));
  rhs(t, u, k1);
  double err_prev = 1.0;

  for (std::uint64_t step = 0; step < opt.max_steps; ++step) {
    if (dir * (t1 - t) <= 0.0) return u;
    h = std::fmin(h, std::fabs(t1 - t));
    if (h < opt.h_min_rel * (1.0 + std::fabs(t)))
      throw integration_error("ode step size underflow at t = " + std::to_string(t), t);
    const double hs = dir * h;

    for (int i = 0; i < N; ++i) utmp[i] = u[i] + hs * a21 * k1[i];
    rhs(t + c2 * hs, utmp, k2);
    for (int i = 0; i < N; ++i) utmp[i] = u[i] + hs * (a31 * k1[i] + a32 * k2[i]);
    rhs(t + c3 * hs, utmp, k3);
    for (int i = 0; i < N; ++i) utmp[i] = u[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(t + c4 * hs, utmp, k4);
    for (int i = 0; i < N; ++i)
      utmp[i] = u[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(t + c5 * hs, utmp, k5);
    for (int i = 0; i < N; ++i)
      utmp[i] =
          u[i] + hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    rhs(t + hs, utmp, k6);
    for (int i = 0; i < N; ++i)
      unew[i] = u[i] + hs * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    rhs(t + hs, unew, k7);

    double err2 = 0.0;
    for (int i = 0; i < N; ++i) {
      const double e = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                             e7 * k7[i]);
      const double sc =
          opt.abs_tol + opt.rel_tol * std::fmax(std::fabs(u[i]), std::fabs(unew[i]));
      err2 += (e / sc) * (e / sc);
    }
    const double err = std::sqrt(err2 / N);

    if (err <= 1.0) {
      t += hs;
      u = unew;
      k1 = k7;  // first-same-as-last
      obs(t, u);
      const double grow =
          0.9 * std::pow(std::fmax(err, 1e-10), -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
      h *= std::fmin(5.0, std::fmax(0.2, grow));
      err_prev = std::fmax(err, 1e-10);
    } else {
      h *= std::fmax(0.2, 0.9 * std::pow(err, -1.0 / 5.0));
    }
  }
  throw integration_error("ode exceeded max step budget at t = " + std::to_string(t), t);
}

template <int N, class RHS>
std::array<double, N> integrate_dopri5(RHS&& rhs, double t0, std::array<double, N> u, double t1,
                                       const OdeOptions& opt) {
  return integrate_dopri5<N>(rhs, t0, u, t1, opt, [](double, const std::array<double, N>&) {});
}

}  // namespace stark
