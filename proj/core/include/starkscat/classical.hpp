// Copyright (c) 2026 The starkscat developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "starkscat/potential.hpp"
#include "starkscat/types.hpp"

namespace stark {

// Free Stark flow: x(t) = t^2/2 + t*eta0 + x0, y = t*zeta0 + y0, eta = t + eta0,
// zeta = zeta0.
PhasePoint free_flow(const PhasePoint& p0, double t);

// h(p) = (eta^2 + |zeta|^2)/2 - x + q(x, y).
double hamiltonian_energy(const PhasePoint& p, const PotentialModel& q);

// Hamilton equations for h0 + q, adaptive with local error <= tol. Throws
// integration_error if the orbit runs into an unregularized singularity.
PhasePoint perturbed_flow(const PhasePoint& p0, double t, const PotentialModel& q, double tol);

// Transverse momentum limit zeta(+-inf) with a certified tail bound: along an
// escaping orbit r(t) >= c*t^2, so |grad_y q| <= C t^-(2+2*delta) with C
// calibrated from the last decade of samples; the integrated tail then is
// below C' * T^-(1+2*delta).
struct MomentumLimit {
  Vec2 zeta;
  double error_bound;
  double T;  // integration horizon actually used
};

MomentumLimit asymptotic_transverse_momentum(const PhasePoint& p0, const PotentialModel& q,
                                             Sign direction, double tol = 1e-8);

// Regularized flow symbol a_m = (eta + yhat_m . zeta)/f_m, with
// f_m = sqrt(breve_f(2x + 2<y>_m)); defined everywhere.
double symbol_a(const PhasePoint& p, int m);

// Unregularized form with f = sqrt(2x + 2<y>_m); needs x + <y>_m > 0; equals
// symbol_a for x + <y>_m > 1.
double symbol_a_unreg(const PhasePoint& p, int m);

struct InvariantRegionSpec {
  int m = 1;
  double eps = 0.5;  // in (0,1)
  Sign sign = Sign::plus;
};

bool in_invariant_region(const PhasePoint& p, const InvariantRegionSpec& spec);

// Sampled margins of the forward-region conservation law along the free flow,
// +-t in [0, T]:
//   final:        2x(t) + 2<y(t)>_m - (1-eps)(t^2 + 2x + 2<y>_m)
//   intermediate: 2x(t) + 2<y(t)>_m - (t^2 - 2|t| eps sqrt(2x+2<y>_m) + 2x+2<y>_m)
//   symbol:       +-a(t) + eps   (unregularized a)
// All three stay nonnegative on region seeds; the report carries the minima.
struct InvarianceReport {
  double final_margin;
  double intermediate_margin;
  double symbol_margin;
  bool pass;
};

InvarianceReport region_invariance_check(const PhasePoint& p0, const InvariantRegionSpec& spec,
                                         double T, int steps);

// Minimum over the trajectory of d/dt a(t) - (1 - a(t)^2)/sqrt(2x(t)+2<y(t)>_m)
// (5-point FD time derivative of the unregularized symbol); >= -1e-8 on region
// seeds.
double mourre_monotonicity(const PhasePoint& p0, const InvariantRegionSpec& spec, double T,
                           int steps = 400);

// Log-log decay fits along random rays, radii in [10, 2000]; exponents are for
// |q| ~ r^-p (value) and |grad q| ~ r^-p (gradient), minima over rays. The
// short-range envelope for declared delta asks for p >= 1/2 + delta (value)
// and 3/2 + delta (gradient); `pass` allows 0.05 of fit slack.
struct DecayExponents {
  double value;
  double gradient;
  bool pass;
};

DecayExponents verify_potential_decay(const PotentialModel& q, double delta, int rays,
                                      std::uint64_t seed = 42);

}  // namespace stark
