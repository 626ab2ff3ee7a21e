// Copyright (c) 2026 The starkscat developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace stark::cheb {

// Chebyshev interpolation on first-kind points (interior only, so integrands
// with a limit-only endpoint can still be sampled).
inline constexpr int kN = 16;  // nodes per panel, polynomial degree kN-1

inline const std::array<double, kN>& nodes() {
  static const std::array<double, kN> x = [] {
    std::array<double, kN> v{};
    for (int j = 0; j < kN; ++j)
      v[j] = std::cos(M_PI * (2.0 * j + 1.0) / (2.0 * kN));  // descending in j
    return v;
  }();
  return x;
}

using Coeffs = std::array<double, kN>;

// values[j] = f(nodes()[j]) -> Chebyshev coefficients (discrete cosine sum).
inline Coeffs coeffs_from_values(const std::array<double, kN>& values) {
  Coeffs c{};
  for (int k = 0; k < kN; ++k) {
    double s = 0.0;
    for (int j = 0; j < kN; ++j)
      s += values[j] * std::cos(k * M_PI * (2.0 * j + 1.0) / (2.0 * kN));
    c[k] = 2.0 * s / kN;
  }
  c[0] *= 0.5;
  return c;
}

inline double eval(const Coeffs& c, double u) {
  // Clenshaw recurrence on [-1, 1]
  double b1 = 0.0, b2 = 0.0;
  for (int k = kN - 1; k >= 1; --k) {
    const double b0 = 2.0 * u * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return u * b1 - b2 + c[0];
}

// Coefficients of the antiderivative with value 0 at u = -1; `halfwidth` maps
// the reference interval to a physical panel of width 2*halfwidth.
inline Coeffs antiderivative(const Coeffs& c, double halfwidth) {
  Coeffs a{};
  // A_k = (c_{k-1} - c_{k+1}) / (2k), top coefficients truncated
  for (int k = 1; k < kN; ++k) {
    const double lo = c[k - 1];
    const double hi = (k + 1 < kN) ? c[k + 1] : 0.0;
    a[k] = halfwidth * (lo - hi) / (2.0 * k);
  }
  a[0] = 0.0;
  a[0] = -eval(a, -1.0);
  return a;
}

// Unresolved-energy estimate: magnitude of the top coefficients.
inline double tail_magnitude(const Coeffs& c) {
  return std::fabs(c[kN - 1]) + std::fabs(c[kN - 2]);
}

}  // namespace stark::cheb
