// Copyright (c) 2026 The starkscat developers.
// SPDX-License-Identifier: Apache-2.0
#include "starkscat/potential.hpp"

#include <cmath>

namespace stark {

std::string family_name(PotentialFamily f) {
  switch (f) {
    case PotentialFamily::zero: return "zero";
    case PotentialFamily::coulomb: return "coulomb";
    case PotentialFamily::power_law: return "power_law";
    case PotentialFamily::gaussian: return "gaussian";
  }
  return "?";
}

PotentialFamily family_from_name(const std::string& name) {
  if (name == "zero") return PotentialFamily::zero;
  if (name == "coulomb") return PotentialFamily::coulomb;
  if (name == "power_law" || name == "power-law") return PotentialFamily::power_law;
  if (name == "gaussian") return PotentialFamily::gaussian;
  throw domain_error("unknown potential family: " + name);
}

PotentialModel::PotentialModel(const PotentialParams& p) : p_(p) {
  if (!(p.delta > 0.0 && p.delta <= 0.5))
    throw domain_error("PotentialModel: delta must lie in (0, 1/2]");
  switch (p.family) {
    case PotentialFamily::zero:
      break;
    case PotentialFamily::coulomb:
      p_.alpha = 1.0;
      [[fallthrough]];
    case PotentialFamily::power_law:
      if (!(p_.alpha > 0.0)) throw domain_error("PotentialModel: alpha must be positive");
      if (p_.alpha < 0.5 + p_.delta)
        throw domain_error("PotentialModel: tail needs alpha >= 1/2 + delta");
      if (p_.r0 < 0.0) throw domain_error("PotentialModel: r0 must be >= 0");
      break;
    case PotentialFamily::gaussian:
      if (!(p_.width > 0.0)) throw domain_error("PotentialModel: width must be positive");
      break;
  }
}

PotentialModel PotentialModel::zero() { return PotentialModel(PotentialParams{}); }

PotentialModel PotentialModel::coulomb(double kappa, double r0, double delta) {
  PotentialParams p;
  p.family = PotentialFamily::coulomb;
  p.kappa = kappa;
  p.alpha = 1.0;
  p.delta = delta;
  p.r0 = r0;
  return PotentialModel(p);
}

PotentialModel PotentialModel::power_law(double kappa, double alpha, double r0, double delta) {
  PotentialParams p;
  p.family = PotentialFamily::power_law;
  p.kappa = kappa;
  p.alpha = alpha;
  p.delta = delta;
  p.r0 = r0;
  return PotentialModel(p);
}

PotentialModel PotentialModel::gaussian(double kappa, double width) {
  PotentialParams p;
  p.family = PotentialFamily::gaussian;
  p.kappa = kappa;
  p.width = width;
  return PotentialModel(p);
}

std::array<double, 5> PotentialModel::radial_derivs(double v) const {
  std::array<double, 5> g{};
  switch (p_.family) {
    case PotentialFamily::zero:
      break;
    case PotentialFamily::coulomb:
    case PotentialFamily::power_law: {
      const double c = p_.r0 * p_.r0;
      const double base = v + c;
      double e = -0.5 * p_.alpha;
      double coef = p_.kappa;
      for (int j = 0; j <= 4; ++j) {
        g[j] = coef * std::pow(base, e);
        coef *= e;
        e -= 1.0;
      }
      break;
    }
    case PotentialFamily::gaussian: {
      const double a = -0.5 / (p_.width * p_.width);
      double coef = p_.kappa * std::exp(a * v);
      for (int j = 0; j <= 4; ++j) {
        g[j] = coef;
        coef *= a;
      }
      break;
    }
  }
  return g;
}

double PotentialModel::value(double x, const Vec2& y, int dm1) const {
  return radial_derivs(x * x + norm2(y, dm1))[0];
}

std::array<double, 3> PotentialModel::gradient(double x, const Vec2& y, int dm1) const {
  const auto g = radial_derivs(x * x + norm2(y, dm1));
  std::array<double, 3> out{};
  out[0] = 2.0 * g[1] * x;
  for (int i = 0; i < dm1; ++i) out[1 + i] = 2.0 * g[1] * y[i];
  return out;
}

double PotentialModel::laplacian(double x, const Vec2& y, int dm1) const {
  const int d = 1 + dm1;
  const double v = x * x + norm2(y, dm1);
  const auto g = radial_derivs(v);
  return 2.0 * d * g[1] + 4.0 * v * g[2];
}

std::array<double, 3> PotentialModel::grad_laplacian(double x, const Vec2& y, int dm1) const {
  const int d = 1 + dm1;
  const double v = x * x + norm2(y, dm1);
  const auto g = radial_derivs(v);
  const double c = 4.0 * (d + 2) * g[2] + 8.0 * v * g[3];
  std::array<double, 3> out{};
  out[0] = c * x;
  for (int i = 0; i < dm1; ++i) out[1 + i] = c * y[i];
  return out;
}

double PotentialModel::bilaplacian(double x, const Vec2& y, int dm1) const {
  const int d = 1 + dm1;
  const double v = x * x + norm2(y, dm1);
  const auto g = radial_derivs(v);
  return 4.0 * d * (d + 2) * g[2] + 16.0 * (d + 2) * v * g[3] + 16.0 * v * v * g[4];
}

}  // namespace stark
