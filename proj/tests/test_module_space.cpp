// Copyright 2026 The modent Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

using namespace modent;
using namespace modent::testing;

TEST(ModuleSpace, InnerProductExamples) {
  ModuleVector e1(2, 1), e2(2, 1);
  e1(0, 0) = 1.0;
  e2(1, 0) = 1.0;
  EXPECT_EQ(inner(e1, e2), AlgebraElement(std::size_t{1}));

  for (std::size_t n = 1; n <= 6; ++n) {
    ModuleVector flat(n, 1);
    for (std::size_t i = 0; i < n; ++i) flat(i, 0) = 1.0 / std::sqrt(static_cast<double>(n));
    EXPECT_NEAR(inner(flat, flat)[0].real(), 1.0, 1e-15);
  }

  const ModuleVector x(1, 2, {{1.0, 0.0}, {0.0, 1.0}});
  const ModuleVector y(1, 2, {{1.0, 0.0}, {1.0, 0.0}});
  EXPECT_EQ(inner(x, y), (AlgebraElement{{1.0, 0.0}, {0.0, 1.0}}));
  EXPECT_THROW(inner(x, ModuleVector(2, 2)), DimensionError);
}

TEST(ModuleSpace, ModuleNorm) {
  // Fiber norms 3 and 4: fiber 0 = (3, 0), fiber 1 = (0, 4).
  const ModuleVector x(2, 2, {3.0, 0.0, 0.0, 4.0});
  EXPECT_DOUBLE_EQ(module_norm(x), 4.0);

  Rng rng(21);
  const ModuleVector v = random_unit_vector(3, 4, 5);
  EXPECT_NEAR(module_norm(v), 1.0, 1e-14);
  const complex c{1.5, -2.0};
  const ModuleVector w = random_vector(4, 3, rng);
  EXPECT_NEAR(module_norm(scale(c, w)), std::abs(c) * module_norm(w), 1e-12);
}

TEST(ModuleSpace, UnitInnerProduct) {
  ModuleVector x(2, 2);
  x(0, 0) = 1.0;
  x(0, 1) = 1.0;
  EXPECT_TRUE(is_unit_inner(x, 0.0));
  EXPECT_FALSE(is_unit_inner(ModuleVector(2, 2), 1e-10));
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    EXPECT_TRUE(is_unit_inner(random_unit_vector(1 + seed % 16, 1 + seed % 8, seed), 1e-10));
}

TEST(ModuleSpace, RandomUnitVectorIsDeterministic) {
  const ModuleVector a = random_unit_vector(5, 3, 1234);
  const ModuleVector b = random_unit_vector(5, 3, 1234);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, random_unit_vector(5, 3, 1235));
}

// E|<x, e_1>|^2 = 1/n on the uniform complex sphere; the Monte Carlo mean must
// land within 3 standard errors.
TEST(ModuleSpace, RandomUnitVectorFirstMoment) {
  for (std::size_t n : {2u, 3u, 5u}) {
    constexpr std::size_t kSamples = 100000;
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t s = 0; s < kSamples; ++s) {
      const double p = std::norm(random_unit_vector(n, 1, unit_seed(99, s))(0, 0));
      sum += p;
      sum_sq += p * p;
    }
    const double mean = sum / kSamples;
    const double var = sum_sq / kSamples - mean * mean;
    const double stderr_ = std::sqrt(var / kSamples);
    EXPECT_NEAR(mean, 1.0 / static_cast<double>(n), 3.0 * stderr_) << "n = " << n;
  }
}

TEST(ModuleSpace, AxiomSuite) {
  Rng rng(22);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = uniform_size(rng, 1, 16);
    const std::size_t d = uniform_size(rng, 1, 8);
    const ModuleVector x = random_vector(n, d, rng);
    const ModuleVector y = random_vector(n, d, rng);
    const ModuleVector z = random_vector(n, d, rng);
    const AlgebraElement a = random_element(d, rng);
    const double scale_tol = 1e-10 * (1.0 + module_norm(x) * module_norm(y)) * (1.0 + norm(a));

    // (i) positivity
    EXPECT_TRUE(is_positive(inner(x, x), 1e-10));
    // (ii) additivity in the first slot
    EXPECT_LE(norm(sub(inner(add(x, y), z), add(inner(x, z), inner(y, z)))), 1e-10 * 64);
    // (iii) A-linearity
    EXPECT_LE(norm(sub(inner(act(a, x), y), mul(a, inner(x, y)))), scale_tol);
    // (iv) <x, y> = <y, x>*
    EXPECT_LE(norm(sub(inner(x, y), involution(inner(y, x)))), 1e-10);
    // (v) norm consistency
    EXPECT_NEAR(module_norm(x), std::sqrt(norm(inner(x, x))), 1e-10);
    // Cauchy-Schwarz
    EXPECT_LE(norm(inner(x, y)), module_norm(x) * module_norm(y) + 1e-10);
  }
}

TEST(ModuleSpace, Definiteness) {
  const ModuleVector zero(3, 2);
  EXPECT_EQ(norm(inner(zero, zero)), 0.0);
  ModuleVector tiny(3, 2);
  tiny(1, 1) = 1e-7;
  EXPECT_GT(norm(inner(tiny, tiny)), 0.0);

  // Every entry is bounded by sqrt(||<x, x>||), so a vanishing inner product
  // forces a vanishing vector.
  Rng rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const double s = std::pow(10.0, -static_cast<double>(uniform_size(rng, 0, 12)));
    const ModuleVector x = scale(s, random_vector(uniform_size(rng, 1, 16), uniform_size(rng, 1, 8), rng));
    const double bound = std::sqrt(norm(inner(x, x)));
    for (complex v : x.entries()) EXPECT_LE(std::abs(v), bound * (1.0 + 1e-12));
  }
}
