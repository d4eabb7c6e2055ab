// Copyright 2026 The modent Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

using namespace modent;
using namespace modent::testing;

namespace {

Frame standard_basis(std::size_t n, std::size_t d) {
  return Frame::from_fiber_rows(
      std::vector<FiberMatrix>(d, FiberMatrix::Identity(static_cast<Eigen::Index>(n),
                                                        static_cast<Eigen::Index>(n))));
}

/// sum_j <x, tau_j> tau_j through module operations only.
ModuleVector reconstruct_via_module_ops(const Frame& frame, const ModuleVector& x) {
  ModuleVector out(x.rank(), x.dim());
  for (const auto& tau : frame.vectors()) out = add(out, act(inner(x, tau), tau));
  return out;
}

/// Frame operator of fiber t as sum_j tau_j tau_j^H, from the raw vectors.
FiberMatrix frame_operator(const Frame& frame, std::size_t t) {
  const auto n = static_cast<Eigen::Index>(frame.rank());
  FiberMatrix s = FiberMatrix::Zero(n, n);
  for (const auto& tau : frame.vectors()) {
    const FiberVector v = tau.fiber(t);
    s += v * v.adjoint();
  }
  return s;
}

}  // namespace

TEST(Frames, ParsevalExamples) {
  EXPECT_TRUE(is_parseval(standard_basis(4, 3), 1e-12));
  EXPECT_FALSE(is_parseval(scaled(standard_basis(4, 3), 0.9), 1e-9));
  EXPECT_NEAR(parseval_defect(scaled(standard_basis(4, 3), 0.9)), 0.19, 1e-12);

  const Frame mb = mercedes_benz();
  EXPECT_TRUE(is_parseval(mb, 1e-12));
  // Oracle: the 2 x 2 frame operator summed directly.
  const FiberMatrix s = frame_operator(mb, 0);
  EXPECT_NEAR(std::abs(s(0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s(1, 1) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s(0, 1)), 0.0, 1e-15);
}

TEST(Frames, Reconstruct) {
  const Frame frame = gen_random_parseval(3, 7, 4, 31);
  const ModuleVector x = random_unit_vector(3, 4, 32);
  EXPECT_LE(max_entry_diff(reconstruct(frame, x), x), 1e-10);
  EXPECT_LE(max_entry_diff(reconstruct(frame, x), reconstruct_via_module_ops(frame, x)), 1e-12);
  EXPECT_EQ(reconstruct(frame, ModuleVector(3, 4)), ModuleVector(3, 4));

  const complex c{0.6, -1.1};
  const ModuleVector y = reconstruct(scaled(frame, c), x);
  EXPECT_LE(max_entry_diff(y, scale(std::norm(c), x)), 1e-10);
  EXPECT_THROW(reconstruct(frame, ModuleVector(2, 4)), DimensionError);
}

TEST(Frames, Generators) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Frame onb = gen_onb(4, 3, seed);
    EXPECT_TRUE(is_parseval(onb, 1e-10));
    EXPECT_TRUE(has_unit_inner_products(onb, 1e-10));
  }
  EXPECT_TRUE(is_parseval(gen_random_parseval(2, 5, 3, 1), 1e-10));
  EXPECT_EQ(gen_random_parseval(2, 5, 3, 1).size(), 5u);
  EXPECT_THROW(gen_random_parseval(4, 3, 1, 0), InvalidArgument);
  EXPECT_EQ(gen_onb(3, 2, 77).vectors(), gen_onb(3, 2, 77).vectors());
}

TEST(Frames, FourierPairInnerProducts) {
  const auto [a, b] = gen_fourier_pair(2, 1);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k)
      EXPECT_NEAR(std::abs(inner(a[j], b[k])[0]), 1.0 / std::sqrt(2.0), 1e-15);
  const auto [a8, b8] = gen_fourier_pair(8, 3);
  EXPECT_TRUE(is_parseval(a8, 1e-12));
  EXPECT_TRUE(is_parseval(b8, 1e-12));
}

TEST(Frames, UnitInnerProducts) {
  EXPECT_TRUE(has_unit_inner_products(gen_onb(5, 2, 3)));
  EXPECT_FALSE(has_unit_inner_products(mercedes_benz()));
  EXPECT_NEAR(inner(mercedes_benz()[1], mercedes_benz()[1])[0].real(), 2.0 / 3.0, 1e-15);
  // Fiber trace: sum_j ||tau_j(t)||^2 = n < m, so some vector is not unit.
  EXPECT_FALSE(has_unit_inner_products(gen_random_parseval(3, 5, 2, 8)));
}

TEST(Frames, RejectsTooFewVectors) {
  std::vector<ModuleVector> v{ModuleVector(3, 1), ModuleVector(3, 1)};
  EXPECT_THROW(Frame{v}, InvalidArgument);
  std::vector<ModuleVector> mixed{ModuleVector(2, 1), ModuleVector(2, 2)};
  EXPECT_THROW(Frame{mixed}, DimensionError);
}

TEST(Frames, ParsevalInvariants) {
  Rng rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = uniform_size(rng, 1, 8);
    const std::size_t m = uniform_size(rng, n, 16);
    const std::size_t d = uniform_size(rng, 1, 8);
    const Frame frame = gen_random_parseval(n, m, d, rng());
    const ModuleVector x = random_vector(n, d, rng);

    AlgebraElement sum(d);
    double max_norm = 0.0;
    for (const auto& tau : frame.vectors()) {
      sum = add(sum, mul(inner(x, tau), inner(tau, x)));
      max_norm = std::max(max_norm, module_norm(tau));
    }
    EXPECT_LE(norm(sub(sum, inner(x, x))), 1e-10 * (1.0 + norm(inner(x, x))));
    EXPECT_LE(max_norm, 1.0 + 1e-10);
  }
}

// is_parseval agrees with the reconstruction identity on random inputs.
TEST(Frames, ParsevalIffReconstruction) {
  Rng rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = uniform_size(rng, 1, 6);
    const std::size_t d = uniform_size(rng, 1, 4);
    Frame frame = gen_random_parseval(n, uniform_size(rng, n, 10), d, rng());
    if (trial % 2 == 1) frame = scaled(frame, 1.0 + 0.01 * static_cast<double>(uniform_size(rng, 1, 50)));
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const ModuleVector x = random_unit_vector(n, d, rng());
      worst = std::max(worst, max_entry_diff(reconstruct_via_module_ops(frame, x), x));
    }
    EXPECT_EQ(is_parseval(frame), worst <= 1e-8) << "trial " << trial << " worst " << worst;
  }
}
