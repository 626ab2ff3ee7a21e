// Copyright (c) 2026 The starkscat developers.
// SPDX-License-Identifier: Apache-2.0
#include "starkscat/cutoffs.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace stark {
namespace {

double raw_bump(double s) {
  const double d = 1.0 - s * s;
  if (d <= 0.0) return 0.0;
  return std::exp(-1.0 / d);
}

// Cumulative tables on [-1, 1]: per-cell 15-point Gauss-Legendre prefix sums
// (machine-exact per cell), cubic Hermite inside a cell with the exact
// integrand as slope. Cell width 2/kCells keeps interpolation error ~1e-15.
struct BumpTables {
  static constexpr int kCells = 8192;
  double norm = 0.0;                       // int_{-1}^1 raw_bump
  std::vector<double> cdf;                 // raw prefix at cell edges, size kCells+1
  std::vector<double> mom;                 // raw first-moment prefix at cell edges

  static const BumpTables& instance() {
    static const BumpTables t;
    return t;
  }

  BumpTables() {
    static const double gx[8] = {0.0, 0.2011940939974345, 0.3941513470775634,
                                 0.5709721726085388, 0.7244177313601700,
                                 0.8482065834104272, 0.9372733924007059,
                                 0.9879925180204854};
    static const double gw[8] = {0.2025782419255613, 0.1984314853271116,
                                 0.1861610000155622, 0.1662692058169939,
                                 0.1395706779261543, 0.1071592204671719,
                                 0.0703660474881081, 0.0307532419961173};
    cdf.resize(kCells + 1);
    mom.resize(kCells + 1);
    cdf[0] = 0.0;
    mom[0] = 0.0;
    double c0 = 0.0, c1 = 0.0;  // Kahan carries
    double m0 = 0.0, m1 = 0.0;
    for (int i = 0; i < kCells; ++i) {
      const double a = -1.0 + 2.0 * i / kCells;
      const double b = -1.0 + 2.0 * (i + 1) / kCells;
      const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
      double sc = 0.0, sm = 0.0;
      for (int j = 0; j < 8; ++j) {
        if (j == 0) {
          const double f = raw_bump(mid);
          sc += gw[0] * f;
          sm += gw[0] * f * mid;
        } else {
          const double xl = mid - half * gx[j], xr = mid + half * gx[j];
          const double fl = raw_bump(xl), fr = raw_bump(xr);
          sc += gw[j] * (fl + fr);
          sm += gw[j] * (fl * xl + fr * xr);
        }
      }
      sc *= half;
      sm *= half;
      kahan_add(c0, c1, sc);
      kahan_add(m0, m1, sm);
      cdf[i + 1] = c0 + c1;
      mom[i + 1] = m0 + m1;
    }
    norm = cdf[kCells];
  }

  static void kahan_add(double& sum, double& carry, double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }

  double prefix(const std::vector<double>& table, bool moment, double s) const {
    if (s <= -1.0) return 0.0;
    if (s >= 1.0) return table[kCells];
    const double u = (s + 1.0) * (kCells / 2.0);
    int i = static_cast<int>(u);
    if (i >= kCells) i = kCells - 1;
    const double a = -1.0 + 2.0 * i / kCells;
    const double h = 2.0 / kCells;
    const double x = (s - a) / h;  // in [0,1]
    const double fa = table[i], fb = table[i + 1];
    const double b_ = -1.0 + 2.0 * (i + 1) / kCells;
    double da = raw_bump(a), db = raw_bump(b_);
    if (moment) {
      da *= a;
      db *= b_;
    }
    da *= h;
    db *= h;
    const double x2 = x * x, x3 = x2 * x;
    return fa * (2 * x3 - 3 * x2 + 1) + da * (x3 - 2 * x2 + x) + fb * (-2 * x3 + 3 * x2) +
           db * (x3 - x2);
  }
};

}  // namespace

namespace bumpdetail {

double bump(double s) { return raw_bump(s) / BumpTables::instance().norm; }

RJet bump_jet(const RJet& s) {
  const double Z = BumpTables::instance().norm;
  if (std::fabs(s.value()) >= 1.0) return RJet::constant(0.0, s.len);
  const RJet d = 1.0 - s * s;
  return exp(-d.reciprocal()) / Z;
}

double bump_cdf(double s) {
  const auto& t = BumpTables::instance();
  return t.prefix(t.cdf, false, s) / t.norm;
}

double bump_first_moment(double s) {
  const auto& t = BumpTables::instance();
  return t.prefix(t.mom, true, s) / t.norm;
}

}  // namespace bumpdetail

SmoothCutoff::SmoothCutoff(Kind kind, double kappa, double window_fraction)
    : kind_(kind), kappa_(kappa) {
  if (kappa == 0.0) throw domain_error("SmoothCutoff: threshold must be nonzero");
  if (!(window_fraction > 0.0 && window_fraction < 1.0))
    throw domain_error("SmoothCutoff: window fraction must lie in (0, 1)");
  // Below-form window: plateau edge at 3k/4 (k>0) or 4k/3 (k<0), transition
  // strictly inside (edge, kappa). An "above" cutoff evaluates via t -> -t,
  // kappa -> -kappa, so only the below-form window is stored.
  const double k = (kind == Kind::below) ? kappa : -kappa;
  const double edge = (k > 0.0) ? 0.75 * k : (4.0 / 3.0) * k;
  lo_ = edge;
  hi_ = edge + window_fraction * (k - edge);
}

double SmoothCutoff::operator()(double t) const {
  const double u = (kind_ == Kind::below) ? t : -t;
  if (u <= lo_) return 1.0;
  if (u >= hi_) return 0.0;
  const double s = (2.0 * u - lo_ - hi_) / (hi_ - lo_);
  return 1.0 - bumpdetail::bump_cdf(s);
}

double SmoothCutoff::derivative(double t) const {
  const double u = (kind_ == Kind::below) ? t : -t;
  if (u <= lo_ || u >= hi_) return 0.0;
  const double s = (2.0 * u - lo_ - hi_) / (hi_ - lo_);
  const double d = -bumpdetail::bump(s) * 2.0 / (hi_ - lo_);
  return (kind_ == Kind::below) ? d : -d;
}

RJet SmoothCutoff::jet(const RJet& t) const {
  const RJet u = (kind_ == Kind::below) ? t : -t;
  if (u.value() <= lo_) return RJet::constant(1.0, t.len);
  if (u.value() >= hi_) return RJet::constant(0.0, t.len);
  const RJet s = (2.0 * u - RJet::constant(lo_ + hi_, u.len)) / (hi_ - lo_);
  // chi = 1 - CDF(s): differentiate once through the bump, then integrate the
  // coefficient series back with the tabulated value as the constant term.
  RJet out;
  out.len = t.len;
  out.c[0] = 1.0 - bumpdetail::bump_cdf(s.value());
  if (t.len > 1) {
    RJet strunc = s;
    strunc.len = t.len - 1;
    const RJet ds = s.derivative();
    const RJet deriv = -1.0 * bumpdetail::bump_jet(strunc) * ds;  // d(chi)/d(arg)
    for (int k = 1; k < t.len; ++k) out.c[k] = deriv.c[k - 1] / k;
  }
  return out;
}

double plateau_bump(double eps, double t) {
  if (!(eps > 0.0)) throw domain_error("plateau_bump: eps must be positive");
  // chi_below at threshold 2*eps applied to |t|: 1 on |t| <= 3*eps/2,
  // support |t| < 7*eps/4 c (-2*eps, 2*eps).
  return chi_below(2.0 * eps, std::fabs(t));
}

RJet plateau_bump_jet(double eps, const RJet& t) {
  if (!(eps > 0.0)) throw domain_error("plateau_bump: eps must be positive");
  SmoothCutoff chi(SmoothCutoff::Kind::below, 2.0 * eps);
  if (t.value() >= 0.0) return chi.jet(t);
  return chi.jet(-t);
}

ConvexRegularizer::ConvexRegularizer(double width) : width_(width) {
  if (!(width > 0.0 && width <= 0.5))
    throw domain_error("ConvexRegularizer: width must lie in (0, 1/2]");
}

double ConvexRegularizer::operator()(double t) const {
  if (t <= 1.0 - width_) return 1.0;
  if (t >= 1.0 + width_) return t;
  // mollified max: 1 + (t-1)*CDF(z) - w*M1(z) at z = (t-1)/w
  const double z = (t - 1.0) / width_;
  return 1.0 + (t - 1.0) * bumpdetail::bump_cdf(z) - width_ * bumpdetail::bump_first_moment(z);
}

double ConvexRegularizer::derivative(double t) const {
  if (t <= 1.0 - width_) return 0.0;
  if (t >= 1.0 + width_) return 1.0;
  return bumpdetail::bump_cdf((t - 1.0) / width_);
}

}  // namespace stark
