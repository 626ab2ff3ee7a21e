// Copyright (c) 2026 The starkscat developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "starkscat/jet.hpp"
#include "starkscat/types.hpp"

namespace stark {

// Smooth threshold cutoffs built by integrating the normalized bump
// exp(-1/(1-s^2)). A "below" cutoff of threshold kappa != 0 is identically 1
// left of its transition window and 0 right of it, with
//   kappa > 0: plateau guaranteed through 3*kappa/4, support inside (-inf, kappa)
//   kappa < 0: plateau guaranteed through 4*kappa/3, support inside (-inf, kappa)
// window_fraction in (0,1) sets how much of the allowed transition range is used.
class SmoothCutoff {
 public:
  enum class Kind { below, above };

  SmoothCutoff(Kind kind, double kappa, double window_fraction = 0.5);

  double operator()(double t) const;
  double derivative(double t) const;

  // Composition with a jet argument (exact derivatives of the cutoff chain).
  RJet jet(const RJet& t) const;

  Kind kind() const { return kind_; }
  double kappa() const { return kappa_; }
  // Transition window in the argument of the *below* representation.
  double window_lo() const { return lo_; }
  double window_hi() const { return hi_; }

 private:
  Kind kind_;
  double kappa_;
  double lo_, hi_;  // below-form transition window
};

inline double chi_below(double kappa, double t, double window_fraction = 0.5) {
  return SmoothCutoff(SmoothCutoff::Kind::below, kappa, window_fraction)(t);
}
inline double chi_above(double kappa, double t, double window_fraction = 0.5) {
  return SmoothCutoff(SmoothCutoff::Kind::above, kappa, window_fraction)(t);
}
inline double chi_perp_below(double kappa, double t, double window_fraction = 0.5) {
  return 1.0 - chi_below(kappa, t, window_fraction);
}
inline double chi_perp_above(double kappa, double t, double window_fraction = 0.5) {
  return 1.0 - chi_above(kappa, t, window_fraction);
}

// Symmetric plateau bump: 1 on [-eps, eps], support inside (-2*eps, 2*eps).
double plateau_bump(double eps, double t);
RJet plateau_bump_jet(double eps, const RJet& t);

// Smooth convex envelope of max(1, t): mollification with a bump of half-width
// `width` (default 1/4), so the value is exactly 1 for t <= 1 - width and
// exactly t for t >= 1 + width, convex and >= max(1, t) everywhere.
class ConvexRegularizer {
 public:
  explicit ConvexRegularizer(double width = 0.25);

  double operator()(double t) const;
  double derivative(double t) const;
  double width() const { return width_; }

 private:
  double width_;
};

inline double breve_f(double t, double width = 0.25) { return ConvexRegularizer(width)(t); }

// Normalized bump exp(-1/(1-s^2))/Z on (-1,1) and its tabulated integrals;
// exposed for oracle-style tests.
namespace bumpdetail {
double bump(double s);                 // normalized, 0 outside (-1,1)
RJet bump_jet(const RJet& s);
double bump_cdf(double s);             // int_{-1}^s bump
double bump_first_moment(double s);    // int_{-1}^s u*bump(u) du
}  // namespace bumpdetail

}  // namespace stark
