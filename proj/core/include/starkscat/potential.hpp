// Copyright (c) 2026 The starkscat developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>

#include "starkscat/types.hpp"

namespace stark {

enum class PotentialFamily { zero, coulomb, power_law, gaussian };

std::string family_name(PotentialFamily f);
PotentialFamily family_from_name(const std::string& name);

struct PotentialParams {
  PotentialFamily family = PotentialFamily::zero;
  double kappa = 0.0;
  double alpha = 1.0;   // radial homogeneity of the tail (power families)
  double delta = 0.5;   // declared short-range exponent, in (0, 1/2]
  double r0 = 0.05;     // core regularization scale (power families)
  double width = 3.0;   // gaussian radial width
};

// Radial short-range potentials q(x,y) = g(r^2) with an analytic derivative
// stack through Delta^2 q; the declared decay envelope is
// |q| <= C (1+r)^-(1/2+delta) with one extra power per gradient order.
class PotentialModel {
 public:
  explicit PotentialModel(const PotentialParams& p);

  static PotentialModel zero();
  static PotentialModel coulomb(double kappa, double r0 = 0.05, double delta = 0.5);
  static PotentialModel power_law(double kappa, double alpha, double r0 = 0.0, double delta = 0.5);
  static PotentialModel gaussian(double kappa, double width = 3.0);

  double value(double x, const Vec2& y, int dm1) const;
  // Components (d/dx, d/dy1, d/dy2); inactive slots are 0.
  std::array<double, 3> gradient(double x, const Vec2& y, int dm1) const;
  double laplacian(double x, const Vec2& y, int dm1) const;
  std::array<double, 3> grad_laplacian(double x, const Vec2& y, int dm1) const;
  double bilaplacian(double x, const Vec2& y, int dm1) const;

  const PotentialParams& params() const { return p_; }
  double delta() const { return p_.delta; }
  double kappa() const { return p_.kappa; }
  bool is_zero() const { return p_.family == PotentialFamily::zero || p_.kappa == 0.0; }

 private:
  // g(v) and derivatives at v = r^2, orders 0..4.
  std::array<double, 5> radial_derivs(double v) const;

  PotentialParams p_;
};

}  // namespace stark
