// Copyright (c) 2026 The starkscat developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace stark {

// Truncated Taylor expansion in one variable: c[0] + c[1] h + ... + c[len-1] h^(len-1).
// `len` tracks how many coefficients are trustworthy; binary ops truncate to the
// shorter operand, derivative() drops one order. Used to push exact eta-derivatives
// through amplitude/cutoff code without symbolic algebra.
template <typename T, int MaxN = 8>
struct Jet {
  std::array<T, MaxN> c{};
  int len = 1;

  Jet() = default;

  static Jet constant(T v, int n) {
    Jet j;
    j.len = n;
    j.c[0] = v;
    return j;
  }

  static Jet variable(T v, int n) {
    Jet j;
    j.len = n;
    j.c[0] = v;
    if (n > 1) j.c[1] = T(1);
    return j;
  }

  T value() const { return c[0]; }

  Jet derivative() const {
    Jet d;
    d.len = len > 1 ? len - 1 : 0;
    if (d.len == 0) throw std::logic_error("Jet::derivative: no orders left");
    for (int k = 0; k < d.len; ++k) d.c[k] = static_cast<double>(k + 1) * c[k + 1];
    return d;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet r;
    r.len = std::min(a.len, b.len);
    for (int k = 0; k < r.len; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    Jet r;
    r.len = std::min(a.len, b.len);
    for (int k = 0; k < r.len; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
  }
  friend Jet operator-(const Jet& a) {
    Jet r = a;
    for (int k = 0; k < r.len; ++k) r.c[k] = -a.c[k];
    return r;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    r.len = std::min(a.len, b.len);
    for (int k = 0; k < r.len; ++k) {
      T s{};
      for (int j = 0; j <= k; ++j) s += a.c[j] * b.c[k - j];
      r.c[k] = s;
    }
    return r;
  }
  friend Jet operator*(T s, const Jet& a) {
    Jet r = a;
    for (int k = 0; k < r.len; ++k) r.c[k] = s * a.c[k];
    return r;
  }
  friend Jet operator*(const Jet& a, T s) { return s * a; }
  friend Jet operator+(const Jet& a, T s) {
    Jet r = a;
    r.c[0] += s;
    return r;
  }
  friend Jet operator+(T s, const Jet& a) { return a + s; }
  friend Jet operator-(const Jet& a, T s) { return a + (-s); }
  friend Jet operator-(T s, const Jet& a) { return (-a) + s; }

  Jet reciprocal() const {
    Jet r;
    r.len = len;
    r.c[0] = T(1) / c[0];
    for (int k = 1; k < len; ++k) {
      T s{};
      for (int j = 1; j <= k; ++j) s += c[j] * r.c[k - j];
      r.c[k] = -r.c[0] * s;
    }
    return r;
  }
  friend Jet operator/(const Jet& a, const Jet& b) { return a * b.reciprocal(); }
  friend Jet operator/(T s, const Jet& b) { return s * b.reciprocal(); }
  friend Jet operator/(const Jet& a, T s) { return a * (T(1) / s); }
};

template <typename T, int MaxN>
Jet<T, MaxN> exp(const Jet<T, MaxN>& u) {
  using std::exp;
  Jet<T, MaxN> e;
  e.len = u.len;
  e.c[0] = exp(u.c[0]);
  for (int k = 1; k < u.len; ++k) {
    T s{};
    for (int j = 1; j <= k; ++j) s += static_cast<double>(j) * u.c[j] * e.c[k - j];
    e.c[k] = s / static_cast<double>(k);
  }
  return e;
}

// u^a for real exponent a; requires u.c[0] > 0 for T = double.
template <typename T, int MaxN>
Jet<T, MaxN> pow(const Jet<T, MaxN>& u, double a) {
  using std::pow;
  Jet<T, MaxN> p;
  p.len = u.len;
  p.c[0] = pow(u.c[0], a);
  for (int k = 1; k < u.len; ++k) {
    T s{};
    for (int j = 1; j <= k; ++j)
      s += ((a + 1.0) * j - static_cast<double>(k)) * u.c[j] * p.c[k - j];
    p.c[k] = s / (static_cast<double>(k) * u.c[0]);
  }
  return p;
}

template <typename T, int MaxN>
Jet<T, MaxN> sqrt(const Jet<T, MaxN>& u) {
  return pow(u, 0.5);
}

using RJet = Jet<double, 8>;
using CJet = Jet<std::complex<double>, 8>;

inline CJet to_complex(const RJet& r) {
  CJet c;
  c.len = r.len;
  for (int k = 0; k < r.len; ++k) c.c[k] = r.c[k];
  return c;
}

}  // namespace stark
