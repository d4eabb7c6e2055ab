// Copyright 2026 The modent Authors
// SPDX-License-Identifier: Apache-2.0
//
// Modular Shannon entropy, frame coherence, the two uncertainty bounds and the
// Buzano inequality check.
//
// For a Parseval frame {tau_j} and a unit vector x the weights
// a_j = <x, tau_j><tau_j, x> are positive elements of A summing to 1, and
//
//     S_tau(x) = -sum_j a_j log a_j
//
// is evaluated fiberwise with the continuous extension 0 log 0 = 0. For d = 1
// this is the Shannon entropy of the distribution (|<h, tau_j>|^2)_j.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "modent/algebra.hpp"
#include "modent/frames.hpp"
#include "modent/module_space.hpp"

namespace modent {

inline constexpr double kDefaultZeroTol = 1e-12;

struct EntropyOptions {
  /// Weights at or below this are treated as zero (a log a := 0).
  double zero_tol = kDefaultZeroTol;
  /// Tolerance for the <x, x> = 1 precondition.
  double unit_tol = 1e-10;
  double parseval_tol = kDefaultParsevalTol;
  /// Reject frames whose vectors do not have unit inner product.
  bool strict = false;
};

struct EntropyValue {
  AlgebraElement value;  // nats
  bool in_domain = true;
  std::size_t zero_coefficient_count = 0;
};

/// a log a, with the branch a <= zero_tol -> 0.
inline double xlogx(double a, double zero_tol = kDefaultZeroTol) {
  return a <= zero_tol ? 0.0 : a * std::log(a);
}

/// Weights |<x, tau_j>(t)|^2 of one fiber.
inline Eigen::VectorXd fiber_weights(const Frame& frame, std::size_t t, const FiberVector& x) {
  return frame.coefficients(t, x).cwiseAbs2();
}

/// Entropy of one fiber. Counts weights at or below zero_tol into *zeros when given.
inline double fiber_entropy(const Frame& frame, std::size_t t, const FiberVector& x,
                            double zero_tol = kDefaultZeroTol, std::size_t* zeros = nullptr) {
  const Eigen::VectorXd w = fiber_weights(frame, t, x);
  double sum = 0.0;
  for (Eigen::Index j = 0; j < w.size(); ++j) {
    if (w(j) <= zero_tol && zeros != nullptr) ++*zeros;
    sum -= xlogx(w(j), zero_tol);
  }
  return sum;
}

/// Euclidean gradient of fiber_entropy in C^n, packed as d/dRe + i d/dIm.
///
/// With c = analysis * x and a = |c|^2 the gradient is
/// -2 analysis^H ((1 + log a) .* c); terms with a <= zero_tol use the limit 0.
inline FiberVector fiber_entropy_gradient(const Frame& frame, std::size_t t, const FiberVector& x,
                                          double zero_tol = kDefaultZeroTol) {
  const FiberMatrix& a = frame.analysis(t);
  Eigen::VectorXcd c = a * x;
  for (Eigen::Index j = 0; j < c.size(); ++j) {
    const double w = std::norm(c(j));
    c(j) = w <= zero_tol ? complex{0.0, 0.0} : c(j) * (1.0 + std::log(w));
  }
  return -2.0 * (a.adjoint() * c);
}

/// Projection onto the tangent space of the unit sphere at x (x unit).
inline FiberVector tangent_project(const FiberVector& x, const FiberVector& g) {
  return g - x * x.dot(g).real();
}

namespace detail {

inline void check_entropy_preconditions(const Frame& frame, const ModuleVector& x,
                                        const EntropyOptions& opts) {
  require_frame_shape(frame, x, "entropy");
  if (!is_unit_inner(x, opts.unit_tol))
    throw PreconditionError("entropy: x does not have unit inner product");
  if (!is_parseval(frame, opts.parseval_tol))
    throw PreconditionError("entropy: frame is not Parseval");
  if (opts.strict && !has_unit_inner_products(frame, opts.unit_tol))
    throw PreconditionError("entropy: strict mode requires unit inner product frame vectors");
}

}  // namespace detail

inline EntropyValue entropy(const Frame& frame, const ModuleVector& x,
                            const EntropyOptions& opts = {}) {
  detail::check_entropy_preconditions(frame, x, opts);
  EntropyValue out{AlgebraElement(x.dim()), true, 0};
  for (std::size_t t = 0; t < x.dim(); ++t) {
    out.value[t] = fiber_entropy(frame, t, x.fiber(t), opts.zero_tol, &out.zero_coefficient_count);
  }
  out.in_domain = out.zero_coefficient_count == 0;
  return out;
}

/// max_t max_{j,k} |<tau_j, omega_k>(t)| for one fiber.
inline double fiber_coherence(const Frame& a, const Frame& b, std::size_t t) {
  return (a.analysis(t) * b.analysis(t).adjoint()).cwiseAbs().maxCoeff();
}

/// max_{j,k} ||<tau_j, omega_k>||.
inline double coherence(const Frame& a, const Frame& b) {
  detail::require_same_frame_shape(a, b, "coherence");
  double mu = 0.0;
  for (std::size_t t = 0; t < a.dim(); ++t) mu = std::max(mu, fiber_coherence(a, b, t));
  return mu;
}

/// -2 log((1 + mu) / 2), mu in [0, 1].
inline double deutsch_bound(double mu) {
  if (!(mu >= 0.0 && mu <= 1.0))
    throw InvalidArgument("deutsch_bound: mu = " + std::to_string(mu) + " outside [0, 1]");
  return -2.0 * std::log((1.0 + mu) / 2.0);
}

/// -2 log(mu), mu in (0, 1].
inline double mu_bound(double mu) {
  if (!(mu > 0.0 && mu <= 1.0))
    throw InvalidArgument("mu_bound: mu = " + std::to_string(mu) + " outside (0, 1]");
  return -2.0 * std::log(mu);
}

struct BuzanoResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// ||<x, z><z, y>|| <= (||x|| ||y|| + ||<x, y>||) / 2 for <z, z> = 1.
inline BuzanoResult buzano_check(const ModuleVector& x, const ModuleVector& y,
                                 const ModuleVector& z, double tol = 1e-10,
                                 double unit_tol = 1e-10) {
  detail::require_same_shape(x, y, "buzano_check");
  detail::require_same_shape(x, z, "buzano_check");
  if (!is_unit_inner(z, unit_tol))
    throw PreconditionError("buzano_check: z does not have unit inner product");
  BuzanoResult r;
  r.lhs = norm(mul(inner(x, z), inner(z, y)));
  r.rhs = 0.5 * (module_norm(x) * module_norm(y) + norm(inner(x, y)));
  r.holds = r.lhs <= r.rhs + tol;
  return r;
}

}  // namespace modent
