// Copyright 2026 The modent Authors
// SPDX-License-Identifier: Apache-2.0
//
// Batch verification of S_tau(x) + S_omega(x) >= bound in the order of A, and
// a multi-start minimizer of the left side used to probe the sharper
// -2 log(mu) bound.
//
// Every quantity is fiberwise, so a gap is always the pointwise minimum over
// fibers of (entropy sum - bound). All work units (trials, restarts) draw from
// their own RNG stream unit_seed(seed, index), and all reductions run in index
// order, so reports do not depend on the thread count.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modent/entropy.hpp"
#include "modent/frames.hpp"
#include "modent/json_io.hpp"
#include "modent/module_space.hpp"
#include "modent/parallel.hpp"
#include "modent/rng.hpp"

namespace modent {

enum class BoundKind { deutsch, maassen_uffink };

inline std::string_view to_string(BoundKind kind) {
  return kind == BoundKind::deutsch ? "deutsch" : "maassen_uffink";
}

inline BoundKind parse_bound_kind(std::string_view s) {
  if (s == "deutsch") return BoundKind::deutsch;
  if (s == "maassen_uffink" || s == "maassen-uffink" || s == "mu") return BoundKind::maassen_uffink;
  throw InvalidArgument("unknown bound kind '" + std::string(s) + "'");
}

/// Bound for coherence mu. Parseval frames have mu <= 1; values above 1 by
/// round-off (up to 1e-9) are clamped.
inline double bound_value(BoundKind kind, double mu) {
  if (mu > 1.0 && mu <= 1.0 + 1e-9) mu = 1.0;
  return kind == BoundKind::deutsch ? deutsch_bound(mu) : mu_bound(mu);
}

inline constexpr double kDefaultGapTol = 1e-9;
inline constexpr double kDefaultCandidateTol = 1e-6;

struct Violation {
  std::size_t trial = 0;
  std::size_t fiber = 0;
  double gap = 0.0;
  /// Some coefficient of the fiber is within zero_tol of 0 (outside the open domain).
  bool boundary_grazing = false;
};

struct TrialRecord {
  std::size_t trial = 0;
  double min_gap = 0.0;
  std::size_t worst_fiber = 0;
};

struct VerificationReport {
  std::size_t trials = 0;
  BoundKind bound_kind = BoundKind::deutsch;
  double coherence = 0.0;
  double bound_value = 0.0;
  double min_gap = std::numeric_limits<double>::infinity();
  std::vector<Violation> violations;
  std::vector<TrialRecord> records;
  std::uint64_t seed = 0;
  std::string frames_digest;
  double gap_tol = kDefaultGapTol;
};

struct VerifyOptions {
  double gap_tol = kDefaultGapTol;
  double zero_tol = kDefaultZeroTol;
  double parseval_tol = kDefaultParsevalTol;
  std::size_t threads = 1;
  /// Check against this value instead of the coherence-derived bound.
  std::optional<double> bound_override;
};

namespace detail {

inline void require_parseval_pair(const Frame& a, const Frame& b, double tol, const char* what) {
  require_same_frame_shape(a, b, what);
  if (!is_parseval(a, tol)) throw PreconditionError(std::string(what) + ": frame A is not Parseval");
  if (!is_parseval(b, tol)) throw PreconditionError(std::string(what) + ": frame B is not Parseval");
}

inline bool fiber_touches_boundary(const Frame& a, const Frame& b, std::size_t t,
                                   const FiberVector& x, double zero_tol) {
  return fiber_weights(a, t, x).minCoeff() <= zero_tol ||
         fiber_weights(b, t, x).minCoeff() <= zero_tol;
}

inline double fiber_entropy_sum(const Frame& a, const Frame& b, std::size_t t,
                                const FiberVector& x, double zero_tol) {
  return fiber_entropy(a, t, x, zero_tol) + fiber_entropy(b, t, x, zero_tol);
}

}  // namespace detail

/// S_tau(x) + S_omega(x) as an element of A.
inline AlgebraElement entropy_sum(const Frame& a, const Frame& b, const ModuleVector& x,
                                  double zero_tol = kDefaultZeroTol) {
  detail::require_same_frame_shape(a, b, "entropy_sum");
  EntropyOptions opts;
  opts.zero_tol = zero_tol;
  return add(entropy(a, x, opts).value, entropy(b, x, opts).value);
}

struct GapEvaluation {
  double gap = 0.0;
  std::size_t worst_fiber = 0;
  AlgebraElement entropy_sum;
};

/// Pointwise minimum over fibers of S_tau(x) + S_omega(x) - bound, from scratch.
inline GapEvaluation evaluate_gap(const Frame& a, const Frame& b, const ModuleVector& x,
                                  double bound, double zero_tol = kDefaultZeroTol) {
  GapEvaluation out{std::numeric_limits<double>::infinity(), 0, entropy_sum(a, b, x, zero_tol)};
  for (std::size_t t = 0; t < x.dim(); ++t) {
    const double gap = out.entropy_sum[t].real() - bound;
    if (gap < out.gap) {
      out.gap = gap;
      out.worst_fiber = t;
    }
  }
  return out;
}

inline VerificationReport verify(const Frame& a, const Frame& b, BoundKind kind,
                                 std::size_t trials, std::uint64_t seed,
                                 const VerifyOptions& opts = {}) {
  detail::require_parseval_pair(a, b, opts.parseval_tol, "verify");
  if (trials == 0) throw InvalidArgument("verify: trials must be >= 1");
  if (!(opts.gap_tol >= 0.0)) throw InvalidArgument("verify: gap_tol must be >= 0");

  VerificationReport report;
  report.trials = trials;
  report.bound_kind = kind;
  report.coherence = coherence(a, b);
  report.bound_value = opts.bound_override.value_or(bound_value(kind, report.coherence));
  report.seed = seed;
  report.frames_digest = frames_digest(a, b);
  report.gap_tol = opts.gap_tol;

  const std::size_t n = a.rank();
  const std::size_t d = a.dim();
  const AlgebraElement bound = AlgebraElement::constant(d, report.bound_value);
  std::vector<TrialRecord> records(trials);
  std::vector<std::vector<Violation>> per_trial(trials);

  detail::parallel_for(trials, opts.threads, [&](std::size_t i) {
    const ModuleVector x = random_unit_vector(n, d, unit_seed(seed, i));
    AlgebraElement sum(d);
    for (std::size_t t = 0; t < d; ++t)
      sum[t] = detail::fiber_entropy_sum(a, b, t, x.fiber(t), opts.zero_tol);

    TrialRecord rec{i, std::numeric_limits<double>::infinity(), 0};
    for (std::size_t t = 0; t < d; ++t) {
      const double gap = sum[t].real() - report.bound_value;
      if (gap < rec.min_gap) {
        rec.min_gap = gap;
        rec.worst_fiber = t;
      }
    }
    if (!order_geq(sum, bound, opts.gap_tol)) {
      for (std::size_t t = 0; t < d; ++t) {
        const double gap = sum[t].real() - report.bound_value;
        if (gap < -opts.gap_tol) {
          per_trial[i].push_back(
              {i, t, gap, detail::fiber_touches_boundary(a, b, t, x.fiber(t), opts.zero_tol)});
        }
      }
    }
    records[i] = rec;
  });

  for (std::size_t i = 0; i < trials; ++i) {
    report.min_gap = std::min(report.min_gap, records[i].min_gap);
    report.violations.insert(report.violations.end(), per_trial[i].begin(), per_trial[i].end());
  }
  report.records = std::move(records);
  return report;
}

// ---------------------------------------------------------------------------
// Search

struct SearchOptions {
  std::size_t restarts = 32;
  std::size_t max_iters = 2000;
  double grad_tol = 1e-8;
  double zero_tol = kDefaultZeroTol;
  double parseval_tol = kDefaultParsevalTol;
  double candidate_tol = kDefaultCandidateTol;
  /// Weights below this make the log-gradient stiff; the quadratic-fit
  /// coordinate search then runs alongside the gradient step.
  double stiff_weight = 1e-6;
  /// Also start from every normalized frame-vector fiber of both frames.
  bool anchor_starts = true;
  std::size_t threads = 1;
};

struct FiberSearch {
  double best_value = std::numeric_limits<double>::infinity();
  std::size_t best_start = 0;
  bool converged = false;
  std::size_t iterations = 0;
};

struct SearchResult {
  ModuleVector best_x;
  double best_gap = 0.0;
  std::size_t worst_fiber = 0;
  BoundKind bound_kind = BoundKind::maassen_uffink;
  double coherence = 0.0;
  double bound_value = 0.0;
  std::size_t restarts = 0;
  std::size_t iterations_used = 0;
  bool converged = false;
  /// best_gap < -candidate_tol at a point where every coefficient is nonzero.
  bool counterexample_candidate = false;
  /// best_gap < -candidate_tol but some coefficient vanishes at best_x.
  bool boundary_grazing = false;
  std::vector<double> fiber_gaps;
  std::uint64_t seed = 0;
  std::string frames_digest;
};

namespace detail {

struct LocalRun {
  FiberVector x;
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

class FiberObjective {
 public:
  FiberObjective(const Frame& a, const Frame& b, std::size_t t, double zero_tol)
      : a_(a), b_(b), t_(t), zero_tol_(zero_tol) {}

  double value(const FiberVector& x) const { return fiber_entropy_sum(a_, b_, t_, x, zero_tol_); }

  FiberVector riemannian_gradient(const FiberVector& x) const {
    return tangent_project(x, fiber_entropy_gradient(a_, t_, x, zero_tol_) +
                                  fiber_entropy_gradient(b_, t_, x, zero_tol_));
  }

  double min_weight(const FiberVector& x) const {
    return std::min(fiber_weights(a_, t_, x).minCoeff(), fiber_weights(b_, t_, x).minCoeff());
  }

 private:
  const Frame& a_;
  const Frame& b_;
  std::size_t t_;
  double zero_tol_;
};

inline FiberVector retract(const FiberVector& x) { return x / x.norm(); }

/// One pass of derivative-free line fits along the 2n real coordinate
/// directions projected onto the tangent space. Returns true on improvement.
inline bool coordinate_fit(const FiberObjective& f, FiberVector& x, double& fx, double h) {
  bool improved = false;
  const Eigen::Index n = x.size();
  for (Eigen::Index i = 0; i < 2 * n; ++i) {
    FiberVector u = FiberVector::Zero(n);
    u(i / 2) = (i % 2 == 0) ? complex{1.0, 0.0} : complex{0.0, 1.0};
    u = tangent_project(x, u);
    const double un = u.norm();
    if (un < 1e-12) continue;
    u /= un;
    const double fm = f.value(retract(x - h * u));
    const double fp = f.value(retract(x + h * u));
    double best_s = 0.0;
    double best_f = fx;
    if (fm < best_f) best_f = fm, best_s = -h;
    if (fp < best_f) best_f = fp, best_s = h;
    const double curvature = fm - 2.0 * fx + fp;
    if (curvature > 0.0) {
      const double s = std::clamp(0.5 * h * (fm - fp) / curvature, -4.0 * h, 4.0 * h);
      const double fs = f.value(retract(x + s * u));
      if (fs < best_f) best_f = fs, best_s = s;
    }
    if (best_s != 0.0) {
      x = retract(x + best_s * u);
      fx = best_f;
      improved = true;
    }
  }
  return improved;
}

/// Riemannian gradient descent on the unit sphere of C^n with Armijo
/// backtracking, falling back to coordinate fits near the boundary or when
/// no descent step is accepted.
inline LocalRun descend(const FiberObjective& f, FiberVector x, const SearchOptions& opts) {
  constexpr double kArmijo = 1e-4;
  LocalRun run;
  x = retract(x);
  double fx = f.value(x);
  double step = 1.0;
  double fit_h = 1e-2;
  std::size_t it = 0;
  for (; it < opts.max_iters; ++it) {
    const FiberVector g = f.riemannian_gradient(x);
    const double gn = g.norm();
    if (!(gn >= opts.grad_tol)) {
      run.converged = true;
      break;
    }
    bool accepted = false;
    double alpha = std::min(step, 1.0 / gn);
    while (alpha * gn > 1e-15) {
      const FiberVector trial = retract(x - alpha * g);
      const double ft = f.value(trial);
      if (ft <= fx - kArmijo * alpha * gn * gn) {
        x = trial;
        fx = ft;
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    step = accepted ? 2.0 * alpha : step;

    bool fitted = false;
    if (!accepted || f.min_weight(x) < opts.stiff_weight) {
      while (fit_h > 1e-9) {
        if (coordinate_fit(f, x, fx, fit_h)) {
          fitted = true;
          break;
        }
        fit_h *= 0.25;
      }
    }
    if (!accepted && !fitted) {
      // No descent available at working precision.
      run.converged = true;
      break;
    }
  }
  run.x = x;
  run.value = fx;
  run.iterations = it;
  return run;
}

inline std::vector<FiberVector> anchor_points(const Frame& a, const Frame& b, std::size_t t) {
  std::vector<FiberVector> out;
  for (const Frame* frame : {&a, &b}) {
    for (const auto& v : frame->vectors()) {
      const FiberVector fiber = v.fiber(t);
      if (fiber.norm() > 1e-12) out.push_back(fiber / fiber.norm());
    }
  }
  return out;
}

}  // namespace detail

/// Minimizes min_t (S_tau(x) + S_omega(x))(t) over unit-inner-product x.
///
/// The problem decouples over fibers; each fiber is minimized independently
/// from `restarts` random starts (restart r uses the vector verify draws for
/// trial r) plus the anchor starts. The worst fiber decides best_gap.
inline SearchResult minimize_entropy_sum(const Frame& a, const Frame& b, BoundKind kind,
                                         std::uint64_t seed, const SearchOptions& opts = {}) {
  detail::require_parseval_pair(a, b, opts.parseval_tol, "minimize_entropy_sum");
  if (opts.restarts == 0) throw InvalidArgument("minimize_entropy_sum: restarts must be >= 1");

  const std::size_t n = a.rank();
  const std::size_t d = a.dim();
  SearchResult result;
  result.bound_kind = kind;
  result.coherence = coherence(a, b);
  result.bound_value = bound_value(kind, result.coherence);
  result.restarts = opts.restarts;
  result.seed = seed;
  result.frames_digest = frames_digest(a, b);

  std::vector<ModuleVector> random_starts(opts.restarts);
  detail::parallel_for(opts.restarts, opts.threads, [&](std::size_t r) {
    random_starts[r] = random_unit_vector(n, d, unit_seed(seed, r));
  });

  // Work units: (fiber, start) pairs in fiber-major order.
  std::vector<std::vector<FiberVector>> starts(d);
  for (std::size_t t = 0; t < d; ++t) {
    for (const auto& x : random_starts) starts[t].push_back(x.fiber(t));
    if (opts.anchor_starts) {
      auto anchors = detail::anchor_points(a, b, t);
      starts[t].insert(starts[t].end(), anchors.begin(), anchors.end());
    }
  }
  std::vector<std::size_t> offset(d + 1, 0);
  for (std::size_t t = 0; t < d; ++t) offset[t + 1] = offset[t] + starts[t].size();

  std::vector<detail::LocalRun> runs(offset[d]);
  detail::parallel_for(offset[d], opts.threads, [&](std::size_t unit) {
    const auto t = static_cast<std::size_t>(
        std::upper_bound(offset.begin(), offset.end(), unit) - offset.begin() - 1);
    const detail::FiberObjective objective(a, b, t, opts.zero_tol);
    runs[unit] = detail::descend(objective, starts[t][unit - offset[t]], opts);
  });

  result.best_x = ModuleVector(n, d);
  std::vector<FiberSearch> fibers(d);
  for (std::size_t t = 0; t < d; ++t) {
    for (std::size_t s = 0; s < starts[t].size(); ++s) {
      const auto& run = runs[offset[t] + s];
      fibers[t].iterations += run.iterations;
      if (run.value < fibers[t].best_value) {
        fibers[t].best_value = run.value;
        fibers[t].best_start = s;
        fibers[t].converged = run.converged;
      }
    }
    result.best_x.set_fiber(t, runs[offset[t] + fibers[t].best_start].x);
    result.iterations_used += fibers[t].iterations;
  }

  // Recompute from scratch on the assembled vector.
  const GapEvaluation eval = evaluate_gap(a, b, result.best_x, result.bound_value, opts.zero_tol);
  result.best_gap = eval.gap;
  result.worst_fiber = eval.worst_fiber;
  result.converged = fibers[eval.worst_fiber].converged;
  result.fiber_gaps.resize(d);
  for (std::size_t t = 0; t < d; ++t)
    result.fiber_gaps[t] = eval.entropy_sum[t].real() - result.bound_value;

  if (result.best_gap < -opts.candidate_tol) {
    const bool grazing = detail::fiber_touches_boundary(
        a, b, eval.worst_fiber, result.best_x.fiber(eval.worst_fiber), opts.zero_tol);
    result.boundary_grazing = grazing;
    result.counterexample_candidate = !grazing;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Buzano step of the main proof

struct ChainResult {
  bool holds = true;
  /// min over (j, k) of rhs + tol - lhs; negative iff some pair fails.
  double worst_slack = std::numeric_limits<double>::infinity();
  std::size_t worst_j = 0;
  std::size_t worst_k = 0;
};

/// For every pair (j, k):
///   ||<tau_j, x><x, omega_k>|| <= (||tau_j|| ||omega_k|| + ||<tau_j, omega_k>||) / 2 + tol.
inline ChainResult proof_chain_check(const Frame& a, const Frame& b, const ModuleVector& x,
                                     double tol = 1e-10, double unit_tol = 1e-10) {
  detail::require_same_frame_shape(a, b, "proof_chain_check");
  detail::require_frame_shape(a, x, "proof_chain_check");
  if (!is_unit_inner(x, unit_tol))
    throw PreconditionError("proof_chain_check: x does not have unit inner product");

  std::vector<double> norm_a(a.size());
  std::vector<double> norm_b(b.size());
  std::vector<AlgebraElement> coeff_a(a.size());
  std::vector<AlgebraElement> coeff_b(b.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    norm_a[j] = module_norm(a[j]);
    coeff_a[j] = inner(a[j], x);
  }
  for (std::size_t k = 0; k < b.size(); ++k) {
    norm_b[k] = module_norm(b[k]);
    coeff_b[k] = inner(x, b[k]);
  }

  ChainResult out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      const double lhs = norm(mul(coeff_a[j], coeff_b[k]));
      const double rhs = 0.5 * (norm_a[j] * norm_b[k] + norm(inner(a[j], b[k])));
      const double slack = rhs + tol - lhs;
      if (slack < out.worst_slack) {
        out.worst_slack = slack;
        out.worst_j = j;
        out.worst_k = k;
      }
    }
  }
  out.holds = out.worst_slack >= 0.0;
  return out;
}

}  // namespace modent
