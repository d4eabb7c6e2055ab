// Copyright 2026 The modent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace modent {

/// splitmix64 finalizer; decorrelates nearby seeds.
constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of the independent stream for work unit `unit` (trial, restart, ...).
/// Depends only on (seed, unit), so results do not depend on the schedule.
constexpr std::uint64_t unit_seed(std::uint64_t seed, std::uint64_t unit) noexcept {
  return splitmix64(seed ^ unit);
}

using Rng = std::mt19937_64;

/// Standard complex Gaussian: real and imaginary parts iid N(0, 1/2).
inline std::complex<double> complex_gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 0.7071067811865476);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

}  // namespace modent
