// Copyright (c) 2026 The starkscat developers.
// SPDX-License-Identifier: Apache-2.0
#include "starkscat/classical.hpp"

#include <cmath>
#include <vector>

#include "starkscat/cutoffs.hpp"
#include "starkscat/fit.hpp"
#include "starkscat/ode.hpp"
#include "starkscat/rng.hpp"

namespace stark {
namespace {

// Packed Hamiltonian state (x, y1, y2, eta, zeta1, zeta2); inactive transverse
// slots stay exactly zero because the potential gradient vanishes there.
using HamState = std::array<double, 6>;

HamState pack(const PhasePoint& p) {
  return {p.x, p.y[0], p.y[1], p.eta, p.zeta[0], p.zeta[1]};
}

PhasePoint unpack(const HamState& u, int dm1) {
  PhasePoint p;
  p.x = u[0];
  p.y = {u[1], u[2]};
  p.eta = u[3];
  p.zeta = {u[4], u[5]};
  p.dm1 = dm1;
  return p;
}

struct HamRhs {
  const PotentialModel& q;
  int dm1;

  void operator()(double, const HamState& u, HamState& du) const {
    const Vec2 y{u[1], u[2]};
    const auto g = q.gradient(u[0], y, dm1);
    du[0] = u[3];
    du[1] = u[4];
    du[2] = u[5];
    du[3] = 1.0 - g[0];
    du[4] = -g[1];
    du[5] = -g[2];
  }
};

}  // namespace

PhasePoint free_flow(const PhasePoint& p0, double t) {
  PhasePoint p = p0;
  p.x = 0.5 * t * t + t * p0.eta + p0.x;
  p.y = add(p0.y, scale(p0.zeta, t));
  p.eta = t + p0.eta;
  p.zeta = p0.zeta;
  return p;
}

double hamiltonian_energy(const PhasePoint& p, const PotentialModel& q) {
  return 0.5 * (p.eta * p.eta + norm2(p.zeta, p.dm1)) - p.x + q.value(p.x, p.y, p.dm1);
}

PhasePoint perturbed_flow(const PhasePoint& p0, double t, const PotentialModel& q, double tol) {
  if (!(tol > 0.0)) throw domain_error("perturbed_flow: tol must be positive");
  OdeOptions opt;
  opt.rel_tol = tol;
  opt.abs_tol = tol;
  HamRhs rhs{q, p0.dm1};
  const HamState u = integrate_dopri5<6>(rhs, 0.0, pack(p0), t, opt);
  return unpack(u, p0.dm1);
}

MomentumLimit asymptotic_transverse_momentum(const PhasePoint& p0, const PotentialModel& q,
                                             Sign direction, double tol) {
  if (!(tol > 0.0)) throw domain_error("asymptotic_transverse_momentum: tol must be positive");
  if (q.is_zero()) return {p0.zeta, 0.0, 0.0};

  const double twodelta = 2.0 * q.delta();
  const double dir = sign_value(direction);
  const double kTmax = 1 << 20;
  OdeOptions opt;
  opt.rel_tol = 1e-2 * tol;
  opt.abs_tol = 1e-2 * tol;
  opt.max_steps = 50'000'000;

  HamRhs rhs{q, p0.dm1};
  HamState u = pack(p0);
  double T = 0.0;
  for (double Tnext = 8.0; Tnext <= kTmax; Tnext *= 2.0) {
    // Calibrate |grad_y q| * t^(2+2delta) over the newly integrated stretch,
    // which is exactly the last doubling decade once Tnext >= 16.
    double C = 0.0;
    auto watch = [&](double t, const HamState& s) {
      const Vec2 y{s[1], s[2]};
      const auto g = q.gradient(s[0], y, p0.dm1);
      double gy = 0.0;
      for (int i = 0; i < p0.dm1; ++i) gy += g[1 + i] * g[1 + i];
      C = std::fmax(C, std::sqrt(gy) * std::pow(std::fabs(t), 2.0 + twodelta));
    };
    u = integrate_dopri5<6>(rhs, dir * T, u, dir * Tnext, opt, watch);
    T = Tnext;

    const bool escaping = u[0] > 0.0 && dir * u[3] > 0.0;
    const double bound = 2.0 * C * std::pow(T, -(1.0 + twodelta)) / (1.0 + twodelta);
    if (escaping && bound <= tol) {
      MomentumLimit out;
      out.zeta = {u[4], u[5]};
      out.error_bound = bound;
      out.T = T;
      return out;
    }
  }
  throw construction_error(
      "asymptotic_transverse_momentum: tail bound not certified within horizon budget");
}

double symbol_a(const PhasePoint& p, int m) {
  const double wm = weighted_norm(p.y, m, p.dm1);
  const double fm = std::sqrt(breve_f(2.0 * p.x + 2.0 * wm));
  return (p.eta + dot(p.y, p.zeta, p.dm1) / wm) / fm;
}

double symbol_a_unreg(const PhasePoint& p, int m) {
  const double wm = weighted_norm(p.y, m, p.dm1);
  const double b = 2.0 * p.x + 2.0 * wm;
  if (!(b > 0.0)) throw domain_error("symbol_a_unreg: needs x + <y>_m > 0");
  return (p.eta + dot(p.y, p.zeta, p.dm1) / wm) / std::sqrt(b);
}

bool in_invariant_region(const PhasePoint& p, const InvariantRegionSpec& spec) {
  if (spec.m < 1) throw domain_error("invariant region: m must be a positive integer");
  if (!(spec.eps > 0.0 && spec.eps < 1.0))
    throw domain_error("invariant region: eps must lie in (0,1)");
  const double wm = weighted_norm(p.y, spec.m, p.dm1);
  if (!(p.x + wm > 0.0)) return false;
  return sign_value(spec.sign) * symbol_a_unreg(p, spec.m) > -spec.eps;
}

InvarianceReport region_invariance_check(const PhasePoint& p0, const InvariantRegionSpec& spec,
                                         double T, int steps) {
  if (!(T > 0.0) || steps < 1)
    throw domain_error("region_invariance_check: need T > 0 and steps >= 1");
  if (!in_invariant_region(p0, spec))
    throw domain_error("region_invariance_check: seed outside the invariant region");

  const double dir = sign_value(spec.sign);
  const double B0 = 2.0 * p0.x + 2.0 * weighted_norm(p0.y, spec.m, p0.dm1);
  const double sqrtB0 = std::sqrt(B0);

  InvarianceReport rep;
  rep.final_margin = rep.intermediate_margin = rep.symbol_margin = 1e300;
  for (int i = 0; i <= steps; ++i) {
    const double t = dir * T * i / steps;
    const PhasePoint p = free_flow(p0, t);
    const double Bt = 2.0 * p.x + 2.0 * weighted_norm(p.y, spec.m, p.dm1);
    const double tt = t * t;
    rep.final_margin = std::fmin(rep.final_margin, Bt - (1.0 - spec.eps) * (tt + B0));
    rep.intermediate_margin = std::fmin(
        rep.intermediate_margin, Bt - (tt - 2.0 * std::fabs(t) * spec.eps * sqrtB0 + B0));
    rep.symbol_margin =
        std::fmin(rep.symbol_margin, dir * symbol_a_unreg(p, spec.m) + spec.eps);
  }
  // The intermediate line touches zero at t = 0 by construction; everything
  // else is strictly positive on region seeds.
  rep.pass = rep.final_margin > 0.0 && rep.intermediate_margin > -1e-9 &&
             rep.symbol_margin > 0.0;
  return rep;
}

double mourre_monotonicity(const PhasePoint& p0, const InvariantRegionSpec& spec, double T,
                           int steps) {
  if (!(T > 0.0) || steps < 1) throw domain_error("mourre_monotonicity: need T > 0, steps >= 1");
  if (!in_invariant_region(p0, spec))
    throw domain_error("mourre_monotonicity: seed outside the invariant region");

  const double dir = sign_value(spec.sign);
  auto a_of_t = [&](double t) { return symbol_a_unreg(free_flow(p0, t), spec.m); };

  double worst = 1e300;
  for (int i = 0; i <= steps; ++i) {
    // Keep the widest FD probe (t -+ 2h) on the certified side of t = 0, where
    // 2x(t) + 2<y(t)>_m >= (1-eps)(t^2 + B0) > 0 guards the square root.
    double tau = T * static_cast<double>(i) / steps;
    if (tau < 3e-3) tau = 3e-3;
    const double t = dir * tau;
    const double h = 1e-3 * (1.0 + 0.1 * std::fabs(t));
    const double da = (a_of_t(t - 2 * h) - 8.0 * a_of_t(t - h) + 8.0 * a_of_t(t + h) -
                       a_of_t(t + 2 * h)) /
                      (12.0 * h);
    const PhasePoint p = free_flow(p0, t);
    const double B = 2.0 * p.x + 2.0 * weighted_norm(p.y, spec.m, p.dm1);
    const double a = symbol_a_unreg(p, spec.m);
    // The derivative bound is one-sided in the same orientation for both scan
    // directions; only the scanned half-axis depends on the sign.
    worst = std::fmin(worst, da - (1.0 - a * a) / std::sqrt(B));
  }
  return worst;
}

DecayExponents verify_potential_decay(const PotentialModel& q, double delta, int rays,
                                      std::uint64_t seed) {
  if (q.is_zero()) throw domain_error("verify_potential_decay: potential is identically zero");
  if (rays < 1) throw domain_error("verify_potential_decay: need rays >= 1");

  CounterRng rng(seed);
  const int kRadii = 40;
  DecayExponents out{1e300, 1e300, false};
  for (int ray = 0; ray < rays; ++ray) {
    // Uniform direction on S^2 (third component folded into y2).
    const double cth = rng.uniform(0, ray, -1.0, 1.0);
    const double phi = rng.uniform(1, ray, 0.0, 6.283185307179586);
    const double sth = std::sqrt(1.0 - cth * cth);
    const double ux = cth, uy1 = sth * std::cos(phi), uy2 = sth * std::sin(phi);

    std::vector<double> r(kRadii), vq(kRadii), vg(kRadii);
    for (int i = 0; i < kRadii; ++i) {
      r[i] = 10.0 * std::pow(200.0, static_cast<double>(i) / (kRadii - 1));
      const double x = r[i] * ux;
      const Vec2 y{r[i] * uy1, r[i] * uy2};
      vq[i] = std::fabs(q.value(x, y, 2));
      const auto g = q.gradient(x, y, 2);
      vg[i] = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
    }
    out.value = std::fmin(out.value, -fit_power_law(r, vq).slope);
    out.gradient = std::fmin(out.gradient, -fit_power_law(r, vg).slope);
  }
  out.pass = out.value >= 0.5 + delta - 0.05 && out.gradient >= 1.5 + delta - 0.05;
  return out;
}

}  // namespace stark
