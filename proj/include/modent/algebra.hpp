// Copyright 2026 The modent Authors
// SPDX-License-Identifier: Apache-2.0
//
// The finite commutative unital C*-algebra A = C(X), |X| = d.
//
// An element is a d-tuple of complex values; every operation acts pointwise.
// The norm is the sup-norm, the involution is complex conjugation and the
// order is the pointwise order on real parts (with imaginary parts required
// to vanish). A point t of X is called a fiber throughout the library.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "modent/error.hpp"

namespace modent {

using complex = std::complex<double>;

inline constexpr double kDefaultPositivityTol = 1e-9;

class AlgebraElement {
 public:
  AlgebraElement() = default;

  /// Zero element of C(X) with |X| = d.
  explicit AlgebraElement(std::size_t d) : values_(d, complex{0.0, 0.0}) {
    if (d == 0) throw InvalidArgument("AlgebraElement: d must be >= 1");
  }

  explicit AlgebraElement(std::vector<complex> values) : values_(std::move(values)) {
    if (values_.empty()) throw InvalidArgument("AlgebraElement: d must be >= 1");
  }

  AlgebraElement(std::initializer_list<complex> values)
      : AlgebraElement(std::vector<complex>(values)) {}

  static AlgebraElement identity(std::size_t d) {
    return AlgebraElement(std::vector<complex>(d, complex{1.0, 0.0}));
  }

  /// Constant function t -> c.
  static AlgebraElement constant(std::size_t d, complex c) {
    return AlgebraElement(std::vector<complex>(d, c));
  }

  std::size_t dim() const noexcept { return values_.size(); }
  std::span<const complex> values() const noexcept { return values_; }

  complex operator[](std::size_t t) const { return values_[t]; }
  complex& operator[](std::size_t t) { return values_[t]; }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::vector<complex> values_;
};

namespace detail {

template <typename Op>
AlgebraElement pointwise(const AlgebraElement& a, const AlgebraElement& b,
                         const char* what, Op op) {
  require_same_dim(a.dim(), b.dim(), what);
  AlgebraElement out(a.dim());
  for (std::size_t t = 0; t < a.dim(); ++t) out[t] = op(a[t], b[t]);
  return out;
}

}  // namespace detail

inline AlgebraElement identity(std::size_t d) { return AlgebraElement::identity(d); }

inline AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  return detail::pointwise(a, b, "add", [](complex u, complex v) { return u + v; });
}

inline AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
  return detail::pointwise(a, b, "sub", [](complex u, complex v) { return u - v; });
}

inline AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  return detail::pointwise(a, b, "mul", [](complex u, complex v) { return u * v; });
}

inline AlgebraElement scale(complex c, const AlgebraElement& a) {
  AlgebraElement out(a.dim());
  for (std::size_t t = 0; t < a.dim(); ++t) out[t] = c * a[t];
  return out;
}

inline AlgebraElement involution(const AlgebraElement& a) {
  AlgebraElement out(a.dim());
  for (std::size_t t = 0; t < a.dim(); ++t) out[t] = std::conj(a[t]);
  return out;
}

inline AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) { return add(a, b); }
inline AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return sub(a, b); }
inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return mul(a, b); }
inline AlgebraElement operator*(complex c, const AlgebraElement& a) { return scale(c, a); }

/// Sup-norm: max_t |a(t)|.
inline double norm(const AlgebraElement& a) {
  double best = 0.0;
  for (complex v : a.values()) best = std::max(best, std::abs(v));
  return best;
}

inline bool is_positive(const AlgebraElement& a, double tol = kDefaultPositivityTol) {
  if (tol < 0.0) throw InvalidArgument("is_positive: tol must be >= 0");
  return std::all_of(a.values().begin(), a.values().end(), [tol](complex v) {
    return std::abs(v.imag()) <= tol && v.real() >= -tol;
  });
}

/// a >= b in the C*-order, i.e. a - b is positive.
inline bool order_geq(const AlgebraElement& a, const AlgebraElement& b,
                      double tol = kDefaultPositivityTol) {
  return is_positive(sub(a, b), tol);
}

/// Natural logarithm of a positive element.
///
/// Only the real parts enter; the imaginary parts of the result are exactly
/// zero. Nothing is clamped: an entry whose real part is below `floor` is a
/// DomainError carrying the fiber index.
inline AlgebraElement log_positive(const AlgebraElement& a, double floor = 1e-300) {
  if (!(floor > 0.0)) throw InvalidArgument("log_positive: floor must be > 0");
  AlgebraElement out(a.dim());
  for (std::size_t t = 0; t < a.dim(); ++t) {
    const double re = a[t].real();
    if (std::abs(a[t].imag()) > kDefaultPositivityTol) {
      throw DomainError("log_positive: entry at fiber " + std::to_string(t) + " is not real", t);
    }
    if (!(re >= floor)) {
      throw DomainError("log_positive: entry " + std::to_string(re) + " at fiber " +
                            std::to_string(t) + " is below floor",
                        t);
    }
    out[t] = complex{std::log(re), 0.0};
  }
  return out;
}

}  // namespace modent
