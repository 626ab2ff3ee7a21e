// Copyright (c) 2026 The starkscat developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

namespace stark {

// Counter-based generator: every draw is a pure function of (seed, stream, index),
// so sweeps reproduce bit-for-bit no matter how work is split up.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t stream, std::uint64_t index) const {
    std::uint64_t z = seed_;
    z = mix(z ^ mix(stream + 0x9e3779b97f4a7c15ull));
    z = mix(z ^ mix(index + 0xbf58476d1ce4e5b9ull));
    return z;
  }

  // Uniform in [0, 1).
  double uniform(std::uint64_t stream, std::uint64_t index) const {
    return static_cast<double>(bits(stream, index) >> 11) * 0x1.0p-53;
  }

  double uniform(std::uint64_t stream, std::uint64_t index, double lo, double hi) const {
    return lo + (hi - lo) * uniform(stream, index);
  }

  // Standard normal via Box-Muller; uses indices (2*index, 2*index+1).
  double normal(std::uint64_t stream, std::uint64_t index) const {
    double u1 = uniform(stream, 2 * index);
    double u2 = uniform(stream, 2 * index + 1);
    u1 = std::fmax(u1, 0x1.0p-60);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
};

}  // namespace stark
