// Copyright (c) 2026 The starkscat developers.
// SPDX-License-Identifier: Apache-2.0
#include "starkscat/parabolic.hpp"

#include <cmath>

#include "starkscat/cutoffs.hpp"
#include "starkscat/fd.hpp"

namespace stark {

ParabolicCoords to_parabolic(const CartesianPoint& p) {
  const double r = p.r();
  const double f = std::sqrt(breve_f(r + p.x));
  return {f, scale(p.y, 1.0 / f), r};
}

double theta_lambda(double f, double lambda) {
  if (!(f > 0.0)) throw domain_error("theta_lambda: f must be positive");
  return f * f * f / 3.0 + lambda * f;
}

Theta0Derivatives theta0_derivatives(const CartesianPoint& p) {
  const double r = p.r();
  if (!(r + p.x > 2.0)) throw domain_error("theta0_derivatives: needs r + x > 2");
  const int d = 1 + p.dm1;
  const double f = std::sqrt(r + p.x);  // exact branch
  const double f3 = f * f * f;
  const double r2 = r * r, r3 = r2 * r;

  Theta0Derivatives out{};
  out.gradient[0] = f3 / (2.0 * r);
  for (int i = 0; i < p.dm1; ++i) out.gradient[1 + i] = f * p.y[i] / (2.0 * r);

  auto& H = out.hessian;
  H[0][0] = 0.75 * f3 / r2 - 0.5 * f3 * p.x / r3;
  for (int i = 0; i < p.dm1; ++i) {
    H[0][1 + i] = H[1 + i][0] = 0.75 * f * p.y[i] / r2 - 0.5 * f3 * p.y[i] / r3;
    for (int j = 0; j < p.dm1; ++j) {
      double v = p.y[i] * p.y[j] * (0.25 / (r2 * f) - 0.5 * f / r3);
      if (i == j) v += 0.5 * f / r;
      H[1 + i][1 + j] = v;
    }
  }
  out.laplacian = 0.5 * d * f / r;
  return out;
}

double theta_ex(double x, const Vec2& y, int dm1) {
  const double ay = norm(y, dm1);
  if (!(x > 0.0 && ay < x)) throw domain_error("theta_ex: needs 0 <= |y| < x");
  const double w = std::sqrt((x - ay) * (x + ay));
  return (4.0 / 3.0) * std::sqrt(x + w) * (x - 0.5 * w);
}

double eikonal_residual(double x, const Vec2& y, int dm1, double fd_step) {
  auto th = [&](double xx, Vec2 yy) { return theta_ex(xx, yy, dm1); };
  const auto g = fd_gradient(th, x, y, dm1, fd_step);
  double s = 0.0;
  for (int i = 0; i <= dm1; ++i) s += g[i] * g[i];
  return 0.5 * s - x;
}

FlowFieldResiduals flow_field_checks(const CartesianPoint& p) {
  const double r0 = p.r();
  if (!(r0 + p.x > 2.0)) throw domain_error("flow_field_checks: needs r + x > 2");
  const int d = 1 + p.dm1;
  const auto steps = fd_steps(p.x, p.y, p.dm1);
  const double h = steps.h1;

  auto ffun = [&](double x, Vec2 y) {
    CartesianPoint q{x, y, p.dm1};
    return to_parabolic(q).f;
  };
  auto logJinvhalf = [&](double x, Vec2 y) {
    CartesianPoint q{x, y, p.dm1};
    const auto pc = to_parabolic(q);
    const double g2 = norm2(pc.g, p.dm1);
    // J = f^(2-d) / (f^2 + g^2)
    return 0.5 * (d - 2) * std::log(pc.f) + 0.5 * std::log(pc.f * pc.f + g2);
  };

  const double f = ffun(p.x, p.y);
  // F = 2r grad f = (f, y/f) in the exact branch
  std::array<double, 3> F{f, 0.0, 0.0};
  for (int i = 0; i < p.dm1; ++i) F[1 + i] = p.y[i] / f;

  const auto gradL = fd_gradient(logJinvhalf, p.x, p.y, p.dm1, h);
  double lhs = 0.0;
  for (int i = 0; i <= p.dm1; ++i) lhs += F[i] * gradL[i];

  double divF = fd_d1([&](double t) { return ffun(t, p.y); }, p.x, h);
  for (int i = 0; i < p.dm1; ++i) {
    divF += fd_d1(
        [&](double t) {
          Vec2 yt = p.y;
          yt[i] = t;
          return yt[i] / ffun(p.x, yt);
        },
        p.y[i], h);
  }

  FlowFieldResiduals out{};
  out.jacobian_transport = std::fabs(lhs - 0.5 * divF);

  auto invw = [&](double x, Vec2 y) {
    CartesianPoint q{x, y, p.dm1};
    const double rr = q.r();
    // keep f^2 = breve(r+x) exact so the y=0 slice is the constant 1 bitwise
    return 2.0 * rr / breve_f(rr + x);
  };
  const auto gradG = fd_gradient(invw, p.x, p.y, p.dm1, h);
  const double f4 = f * f * f * f;
  std::array<double, 3> target{-2.0 * norm2(p.y, p.dm1) / (r0 * f4), 0.0, 0.0};
  for (int i = 0; i < p.dm1; ++i) target[1 + i] = 2.0 * p.x * p.y[i] / (r0 * f4);
  double worst = 0.0;
  for (int i = 0; i <= p.dm1; ++i) worst = std::fmax(worst, std::fabs(gradG[i] - target[i]));
  out.inverse_weight = worst;
  return out;
}

PhaseComparison phase_comparison(double x, const Vec2& y, int dm1, double lambda) {
  const double ay = norm(y, dm1);
  if (!(x > 1.0 && x > 2.0 * ay)) throw domain_error("phase_comparison: needs x > max(1, 2|y|)");
  CartesianPoint p{x, y, dm1};
  const auto pc = to_parabolic(p);
  const double ratio4 = std::pow(ay / x, 4);
  const double th0 = theta_lambda(pc.f, 0.0);
  const double tex = theta_ex(x, y, dm1);
  const double f_ex = std::cbrt(3.0 * tex);

  PhaseComparison out{};
  if (ay == 0.0) {
    out.theta_ratio = 0.0;
    out.radius_ratio = 0.0;
  } else {
    out.theta_ratio = (tex - th0) / (pc.f * pc.f * pc.f * ratio4);
    out.radius_ratio = (pc.f - f_ex) / (pc.f * ratio4);
  }
  const double envelope = pc.f * pc.f * pc.f * ratio4 + pc.f * std::pow(ay / x, 2) + 1.0 / pc.f;
  out.shift_ratio = (theta_ex(x + lambda, y, dm1) - theta_lambda(pc.f, lambda)) / envelope;
  return out;
}

}  // namespace stark
