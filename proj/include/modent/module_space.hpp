// Copyright 2026 The modent Authors
// SPDX-License-Identifier: Apache-2.0
//
// The Hilbert C*-module E = A^n over A = C(X), |X| = d.
//
// A vector holds n algebra elements, stored as an n x d array. Fiber t of a
// vector is the column (x[0][t], ..., x[n-1][t]) in C^n, and the A-valued
// inner product is the fiberwise Euclidean one with conjugation on the second
// slot: <x, y>(t) = sum_i x[i][t] * conj(y[i][t]).

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "modent/algebra.hpp"
#include "modent/error.hpp"
#include "modent/rng.hpp"

namespace modent {

using FiberVector = Eigen::VectorXcd;

class ModuleVector {
 public:
  ModuleVector() = default;

  /// Zero vector of rank n over C(X), |X| = d.
  ModuleVector(std::size_t n, std::size_t d) : n_(n), d_(d), entries_(n * d) {
    if (n == 0 || d == 0) throw InvalidArgument("ModuleVector: n and d must be >= 1");
  }

  /// Row-major n x d entries.
  ModuleVector(std::size_t n, std::size_t d, std::vector<complex> entries)
      : n_(n), d_(d), entries_(std::move(entries)) {
    if (n == 0 || d == 0) throw InvalidArgument("ModuleVector: n and d must be >= 1");
    if (entries_.size() != n * d) throw DimensionError("ModuleVector: entries size != n*d");
  }

  /// Vector whose every fiber is `fiber`.
  static ModuleVector replicate(const FiberVector& fiber, std::size_t d) {
    ModuleVector x(static_cast<std::size_t>(fiber.size()), d);
    for (std::size_t t = 0; t < d; ++t) x.set_fiber(t, fiber);
    return x;
  }

  std::size_t rank() const noexcept { return n_; }
  std::size_t dim() const noexcept { return d_; }

  complex operator()(std::size_t i, std::size_t t) const { return entries_[i * d_ + t]; }
  complex& operator()(std::size_t i, std::size_t t) { return entries_[i * d_ + t]; }

  std::span<const complex> entries() const noexcept { return entries_; }

  /// Coordinate i as an algebra element.
  AlgebraElement coordinate(std::size_t i) const {
    return AlgebraElement(std::vector<complex>(entries_.begin() + i * d_,
                                               entries_.begin() + (i + 1) * d_));
  }

  FiberVector fiber(std::size_t t) const {
    FiberVector v(static_cast<Eigen::Index>(n_));
    for (std::size_t i = 0; i < n_; ++i) v(static_cast<Eigen::Index>(i)) = (*this)(i, t);
    return v;
  }

  void set_fiber(std::size_t t, const FiberVector& v) {
    detail::require_same_dim(n_, static_cast<std::size_t>(v.size()), "set_fiber");
    for (std::size_t i = 0; i < n_; ++i) (*this)(i, t) = v(static_cast<Eigen::Index>(i));
  }

  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t d_ = 0;
  std::vector<complex> entries_;
};

namespace detail {

inline void require_same_shape(const ModuleVector& x, const ModuleVector& y, const char* what) {
  require_same_dim(x.rank(), y.rank(), what);
  require_same_dim(x.dim(), y.dim(), what);
}

}  // namespace detail

inline ModuleVector add(const ModuleVector& x, const ModuleVector& y) {
  detail::require_same_shape(x, y, "add");
  ModuleVector out(x.rank(), x.dim());
  for (std::size_t i = 0; i < x.rank(); ++i)
    for (std::size_t t = 0; t < x.dim(); ++t) out(i, t) = x(i, t) + y(i, t);
  return out;
}

/// Left action of A: (a x)[i](t) = a(t) x[i](t).
inline ModuleVector act(const AlgebraElement& a, const ModuleVector& x) {
  detail::require_same_dim(a.dim(), x.dim(), "act");
  ModuleVector out(x.rank(), x.dim());
  for (std::size_t i = 0; i < x.rank(); ++i)
    for (std::size_t t = 0; t < x.dim(); ++t) out(i, t) = a[t] * x(i, t);
  return out;
}

inline ModuleVector scale(complex c, const ModuleVector& x) {
  ModuleVector out(x.rank(), x.dim());
  for (std::size_t i = 0; i < x.rank(); ++i)
    for (std::size_t t = 0; t < x.dim(); ++t) out(i, t) = c * x(i, t);
  return out;
}

inline AlgebraElement inner(const ModuleVector& x, const ModuleVector& y) {
  detail::require_same_shape(x, y, "inner");
  AlgebraElement out(x.dim());
  for (std::size_t i = 0; i < x.rank(); ++i)
    for (std::size_t t = 0; t < x.dim(); ++t) out[t] += x(i, t) * std::conj(y(i, t));
  return out;
}

/// sqrt(||<x, x>||), the largest Euclidean fiber norm.
inline double module_norm(const ModuleVector& x) {
  return std::sqrt(norm(inner(x, x)));
}

/// <x, x> = 1 in A, i.e. every fiber lies on the unit sphere of C^n.
inline bool is_unit_inner(const ModuleVector& x, double tol = 1e-10) {
  if (tol < 0.0) throw InvalidArgument("is_unit_inner: tol must be >= 0");
  return norm(sub(inner(x, x), identity(x.dim()))) <= tol;
}

/// Each fiber uniform on the complex unit sphere of C^n, deterministic in seed.
inline ModuleVector random_unit_vector(std::size_t n, std::size_t d, std::uint64_t seed) {
  ModuleVector x(n, d);
  Rng rng(seed);
  for (std::size_t t = 0; t < d; ++t) {
    FiberVector v(static_cast<Eigen::Index>(n));
    do {
      for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = complex_gaussian(rng);
    } while (v.norm() == 0.0);
    x.set_fiber(t, v / v.norm());
  }
  return x;
}

}  // namespace modent
