// Copyright (c) 2026 The starkscat developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "starkscat/types.hpp"

namespace stark {

// Regularized parabolic radius f = sqrt(breve_f(r+x)) and transverse g = y/f.
// In the exact branch r + x >= 2 the algebraic identities
//   f^2 + g^2 = 2r,  f^2 - g^2 = 2x,  f|g| = |y|,  2r|grad f|^2 = 1
// hold to machine precision.
struct ParabolicCoords {
  double f;
  Vec2 g;
  double r;
};

ParabolicCoords to_parabolic(const CartesianPoint& p);

// theta^lambda(f) = f^3/3 + lambda*f.
double theta_lambda(double f, double lambda);

// theta^0 = f^3/3 as a function of (x, y), exact branch only (r + x > 2):
// gradient (f^3, f*y)/(2r), closed-form Hessian, Laplacian (d/2)*(f/r).
struct Theta0Derivatives {
  std::array<double, 3> gradient;
  std::array<std::array<double, 3>, 3> hessian;
  double laplacian;
};

Theta0Derivatives theta0_derivatives(const CartesianPoint& p);

// Exact eikonal phase: (4/3) sqrt(x+w) (x - w/2), w = sqrt(x^2 - |y|^2);
// solves (1/2)|grad theta|^2 - x = 0 on {0 < |y| < x}.
double theta_ex(double x, const Vec2& y, int dm1);

// (1/2)|grad_FD theta_ex|^2 - x with 5-point central differences at step h.
double eikonal_residual(double x, const Vec2& y, int dm1, double fd_step);

// Finite-difference residuals of the two flow-field identities along F = 2r*grad f:
//   (a) d/df of ln J^(-1/2) equals (1/2) div F, J = f^(2-d)/(f^2+g^2)
//   (b) grad(2r/f^2) equals (2/(r f^4)) * (-|y|^2, x*y)
struct FlowFieldResiduals {
  double jacobian_transport;  // residual of (a)
  double inverse_weight;      // max-norm residual of (b)
};

FlowFieldResiduals flow_field_checks(const CartesianPoint& p);

// Forward-region comparison of the regularized phase against the exact one,
// x > max(1, 2|y|). Each ratio is bounded by the frozen module constants below.
struct PhaseComparison {
  double theta_ratio;   // (theta_ex - theta^0) / (f^3 |y/x|^4)
  double radius_ratio;  // (f - f_ex) / (f |y/x|^4)
  double shift_ratio;   // (theta_ex(x+lambda,y) - theta^lambda(f)) / envelope
};

// Calibrated over {2 <= x <= 2000, |y| <= 0.499x, |lambda| <= 1, d in {2,3}};
// observed maxima 0.0313, 0.0313, 0.552, frozen with ~30% headroom.
inline constexpr double kPhaseThetaBound = 0.045;
inline constexpr double kPhaseRadiusBound = 0.045;
inline constexpr double kPhaseShiftBound = 0.75;

PhaseComparison phase_comparison(double x, const Vec2& y, int dm1, double lambda);

}  // namespace stark
