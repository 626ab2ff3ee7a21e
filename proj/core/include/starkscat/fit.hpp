// Copyright (c) 2026 The starkscat developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "starkscat/types.hpp"

namespace stark {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
  std::size_t n = 0;
};

inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw domain_error("fit_line: need >= 2 matched samples");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double det = n * sxx - sx * sx;
  if (std::fabs(det) < 1e-300) throw domain_error("fit_line: degenerate abscissas");
  LineFit f;
  f.slope = (n * sxy - sx * sy) / det;
  f.intercept = (sy * sxx - sx * sxy) / det;
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ss += r * r;
  }
  f.rms_residual = std::sqrt(ss / n);
  f.n = x.size();
  return f;
}

// Fit |v| ~ C * s^p on log-log axes. Returns slope p, intercept log C.
inline LineFit fit_power_law(const std::vector<double>& s, const std::vector<double>& v) {
  std::vector<double> lx, ly;
  lx.reserve(s.size());
  ly.reserve(v.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] <= 0.0 || v[i] <= 0.0) continue;
    lx.push_back(std::log(s[i]));
    ly.push_back(std::log(v[i]));
  }
  return fit_line(lx, ly);
}

}  // namespace stark
