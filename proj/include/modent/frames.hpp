// Copyright 2026 The modent Authors
// SPDX-License-Identifier: Apache-2.0
//
// Finite modular Parseval frames {tau_j}_{j<m} for E = A^n.
//
// A Frame caches one analysis matrix per fiber: the m x n matrix whose row j
// is conj(tau_j(t))^T, so that analysis(t) * x(t) is the coefficient vector
// (<x, tau_j>(t))_j. The frame is Parseval iff every analysis matrix is an
// isometry.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "modent/module_space.hpp"
#include "modent/rng.hpp"

namespace modent {

inline constexpr double kDefaultParsevalTol = 1e-9;

using FiberMatrix = Eigen::MatrixXcd;

class Frame {
 public:
  Frame() = default;

  explicit Frame(std::vector<ModuleVector> vectors) : vectors_(std::move(vectors)) {
    if (vectors_.empty()) throw InvalidArgument("Frame: needs at least one vector");
    n_ = vectors_.front().rank();
    d_ = vectors_.front().dim();
    for (const auto& v : vectors_) detail::require_same_shape(v, vectors_.front(), "Frame");
    if (vectors_.size() < n_) {
      throw InvalidArgument("Frame: m = " + std::to_string(vectors_.size()) +
                            " vectors cannot span rank n = " + std::to_string(n_));
    }
    const auto m = static_cast<Eigen::Index>(vectors_.size());
    analysis_.assign(d_, FiberMatrix(m, static_cast<Eigen::Index>(n_)));
    for (std::size_t t = 0; t < d_; ++t) {
      for (Eigen::Index j = 0; j < m; ++j) {
        analysis_[t].row(j) = vectors_[static_cast<std::size_t>(j)].fiber(t).adjoint();
      }
    }
  }

  /// Frame whose fiber-t vectors are the rows of fiber_rows[t] (each m x n).
  static Frame from_fiber_rows(const std::vector<FiberMatrix>& fiber_rows) {
    if (fiber_rows.empty()) throw InvalidArgument("Frame: d must be >= 1");
    const auto m = static_cast<std::size_t>(fiber_rows.front().rows());
    const auto n = static_cast<std::size_t>(fiber_rows.front().cols());
    std::vector<ModuleVector> vectors(m, ModuleVector(n, fiber_rows.size()));
    for (std::size_t t = 0; t < fiber_rows.size(); ++t) {
      const auto& rows = fiber_rows[t];
      if (static_cast<std::size_t>(rows.rows()) != m || static_cast<std::size_t>(rows.cols()) != n)
        throw DimensionError("Frame: fiber matrices differ in shape");
      for (std::size_t j = 0; j < m; ++j)
        vectors[j].set_fiber(t, rows.row(static_cast<Eigen::Index>(j)).transpose());
    }
    return Frame(std::move(vectors));
  }

  std::size_t size() const noexcept { return vectors_.size(); }
  std::size_t rank() const noexcept { return n_; }
  std::size_t dim() const noexcept { return d_; }

  const std::vector<ModuleVector>& vectors() const noexcept { return vectors_; }
  const ModuleVector& operator[](std::size_t j) const { return vectors_[j]; }

  /// m x n matrix with row j = conj(tau_j(t))^T.
  const FiberMatrix& analysis(std::size_t t) const { return analysis_[t]; }

  /// Coefficients (<x, tau_j>(t))_j of a fiber vector.
  Eigen::VectorXcd coefficients(std::size_t t, const FiberVector& x) const {
    return analysis_[t] * x;
  }

 private:
  std::vector<ModuleVector> vectors_;
  std::vector<FiberMatrix> analysis_;
  std::size_t n_ = 0;
  std::size_t d_ = 0;
};

namespace detail {

inline void require_frame_shape(const Frame& frame, const ModuleVector& x, const char* what) {
  require_same_dim(frame.rank(), x.rank(), what);
  require_same_dim(frame.dim(), x.dim(), what);
}

inline void require_same_frame_shape(const Frame& a, const Frame& b, const char* what) {
  require_same_dim(a.rank(), b.rank(), what);
  require_same_dim(a.dim(), b.dim(), what);
}

}  // namespace detail

/// Largest entry of |analysis(t)^H analysis(t) - I_n| over all fibers.
inline double parseval_defect(const Frame& frame) {
  double worst = 0.0;
  const auto n = static_cast<Eigen::Index>(frame.rank());
  for (std::size_t t = 0; t < frame.dim(); ++t) {
    const FiberMatrix& a = frame.analysis(t);
    const FiberMatrix gram = a.adjoint() * a - FiberMatrix::Identity(n, n);
    worst = std::max(worst, gram.cwiseAbs().maxCoeff());
  }
  return worst;
}

inline bool is_parseval(const Frame& frame, double tol = kDefaultParsevalTol) {
  return parseval_defect(frame) <= tol;
}

/// sum_j <x, tau_j> tau_j.
inline ModuleVector reconstruct(const Frame& frame, const ModuleVector& x) {
  detail::require_frame_shape(frame, x, "reconstruct");
  ModuleVector out(x.rank(), x.dim());
  for (std::size_t t = 0; t < x.dim(); ++t) {
    const FiberMatrix& a = frame.analysis(t);
    out.set_fiber(t, a.adjoint() * (a * x.fiber(t)));
  }
  return out;
}

inline bool has_unit_inner_products(const Frame& frame, double tol = 1e-10) {
  for (const auto& v : frame.vectors())
    if (!is_unit_inner(v, tol)) return false;
  return true;
}

/// Frame with every vector multiplied by c.
inline Frame scaled(const Frame& frame, complex c) {
  std::vector<ModuleVector> vectors;
  vectors.reserve(frame.size());
  for (const auto& v : frame.vectors()) vectors.push_back(scale(c, v));
  return Frame(std::move(vectors));
}

namespace detail {

/// Haar-distributed m x n isometry: Householder QR of a complex Gaussian,
/// with the phases of diag(R) absorbed into Q.
inline FiberMatrix haar_isometry(std::size_t m, std::size_t n, Rng& rng) {
  const auto rows = static_cast<Eigen::Index>(m);
  const auto cols = static_cast<Eigen::Index>(n);
  FiberMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = complex_gaussian(rng);
  Eigen::HouseholderQR<FiberMatrix> qr(g);
  FiberMatrix q = qr.householderQ() * FiberMatrix::Identity(rows, cols);
  const FiberMatrix& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < cols; ++k) {
    const complex diag = r(k, k);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(k) *= diag / mag;
  }
  return q;
}

}  // namespace detail

/// Independent Haar-random orthonormal basis in every fiber.
inline Frame gen_onb(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n == 0 || d == 0) throw InvalidArgument("gen_onb: n and d must be >= 1");
  Rng rng(seed);
  std::vector<FiberMatrix> rows;
  rows.reserve(d);
  for (std::size_t t = 0; t < d; ++t) rows.push_back(detail::haar_isometry(n, n, rng));
  return Frame::from_fiber_rows(rows);
}

/// Random Parseval frame of m vectors: per fiber, the rows of a Haar m x n isometry.
inline Frame gen_random_parseval(std::size_t n, std::size_t m, std::size_t d, std::uint64_t seed) {
  if (n == 0 || d == 0) throw InvalidArgument("gen_random_parseval: n and d must be >= 1");
  if (m < n) {
    throw InvalidArgument("gen_random_parseval: m = " + std::to_string(m) + " < n = " +
                          std::to_string(n));
  }
  Rng rng(seed);
  std::vector<FiberMatrix> rows;
  rows.reserve(d);
  for (std::size_t t = 0; t < d; ++t) rows.push_back(detail::haar_isometry(m, n, rng));
  return Frame::from_fiber_rows(rows);
}

/// Standard basis and discrete Fourier basis, replicated in every fiber.
inline std::pair<Frame, Frame> gen_fourier_pair(std::size_t n, std::size_t d) {
  if (n == 0 || d == 0) throw InvalidArgument("gen_fourier_pair: n and d must be >= 1");
  const auto size = static_cast<Eigen::Index>(n);
  const FiberMatrix standard = FiberMatrix::Identity(size, size);
  FiberMatrix fourier(size, size);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index k = 0; k < size; ++k) {
    for (Eigen::Index j = 0; j < size; ++j) {
      // Reduce jk mod n before forming the angle to keep it small.
      const auto phase = static_cast<double>((j * k) % size);
      fourier(k, j) = std::polar(scale, 2.0 * std::numbers::pi * phase / static_cast<double>(n));
    }
  }
  return {Frame::from_fiber_rows(std::vector<FiberMatrix>(d, standard)),
          Frame::from_fiber_rows(std::vector<FiberMatrix>(d, fourier))};
}

}  // namespace modent
