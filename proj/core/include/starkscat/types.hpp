// Copyright (c) 2026 The starkscat developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace stark {

using Complex = std::complex<double>;

// Transverse coordinates live in R^(d-1) with d in {2,3}; a fixed-size array
// avoids heap traffic in integrand-level hot loops. Slots beyond dm1 stay 0.
using Vec2 = std::array<double, 2>;

constexpr Vec2 kZeroVec{0.0, 0.0};

inline double dot(const Vec2& a, const Vec2& b, int dm1) {
  double s = a[0] * b[0];
  if (dm1 > 1) s += a[1] * b[1];
  return s;
}

inline double norm2(const Vec2& a, int dm1) { return dot(a, a, dm1); }
inline double norm(const Vec2& a, int dm1) { return std::sqrt(norm2(a, dm1)); }

inline Vec2 add(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 sub(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec2 scale(const Vec2& a, double c) { return {c * a[0], c * a[1]}; }

struct CartesianPoint {
  double x = 0.0;
  Vec2 y = kZeroVec;
  int dm1 = 2;

  double r() const { return std::sqrt(x * x + norm2(y, dm1)); }
};

struct PhasePoint {
  double x = 0.0;
  Vec2 y = kZeroVec;
  double eta = 0.0;
  Vec2 zeta = kZeroVec;
  int dm1 = 2;

  CartesianPoint position() const { return {x, y, dm1}; }
};

enum class Sign : int { plus = +1, minus = -1 };

inline int sign_value(Sign s) { return static_cast<int>(s); }

// m >= 1 integer. <y>_m = sqrt(m^2 + |y|^2).
inline double weighted_norm(const Vec2& y, int m, int dm1) {
  if (m < 1) throw std::invalid_argument("weighted_norm: m must be a positive integer");
  return std::sqrt(static_cast<double>(m) * m + norm2(y, dm1));
}

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition violated (point outside the declared region, bad parameter).
struct domain_error : error {
  using error::error;
};

// Config file rejected; message lists every offending field.
struct config_error : error {
  using error::error;
};

// A certified accuracy target could not be met; carries the achieved bound.
struct accuracy_error : error {
  double achieved;
  accuracy_error(const std::string& msg, double achieved_) : error(msg), achieved(achieved_) {}
};

// Adaptive ODE step size underflowed; carries the failure time.
struct integration_error : error {
  double t_fail;
  integration_error(const std::string& msg, double t) : error(msg), t_fail(t) {}
};

// Constructive search (cutoff ladder, fits) exhausted its budget.
struct construction_error : error {
  using error::error;
};

}  // namespace stark
