// Copyright 2026 The modent Authors
// SPDX-License-Identifier: Apache-2.0
//
// Report documents are {"header": {...}, "report": {...}}. Only the header
// carries run-dependent metadata (timestamp); the report body is a pure
// function of the inputs and seed.

#pragma once

#include <chrono>
#include <ctime>
#include <sstream>
#include <string>

#include "modent/json_io.hpp"
#include "modent/verify.hpp"

namespace modent {

inline json make_header(const std::string& command) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return json{{"tool", "modent"}, {"command", command}, {"timestamp", stamp}};
}

inline json to_json(const VerificationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back(json{{"trial", v.trial},
                              {"fiber", v.fiber},
                              {"gap", v.gap},
                              {"boundary_grazing", v.boundary_grazing}});
  }
  json trials = json::array();
  for (const auto& rec : r.records)
    trials.push_back(json::array({rec.trial, rec.min_gap, rec.worst_fiber}));
  return json{{"trials", r.trials},
              {"bound_kind", std::string(to_string(r.bound_kind))},
              {"coherence", r.coherence},
              {"bound_value", r.bound_value},
              {"min_gap", r.min_gap},
              {"gap_tol", r.gap_tol},
              {"violations", std::move(violations)},
              {"seed", r.seed},
              {"frames_digest", r.frames_digest},
              {"trial_gaps", std::move(trials)}};
}

inline json to_json(const SearchResult& r) {
  json fiber_gaps = json::array();
  for (double g : r.fiber_gaps) fiber_gaps.push_back(g);
  return json{{"best_x", to_json(r.best_x)},
              {"best_gap", r.best_gap},
              {"worst_fiber", r.worst_fiber},
              {"bound_kind", std::string(to_string(r.bound_kind))},
              {"coherence", r.coherence},
              {"bound_value", r.bound_value},
              {"restarts", r.restarts},
              {"iterations_used", r.iterations_used},
              {"converged", r.converged},
              {"counterexample_candidate", r.counterexample_candidate},
              {"boundary_grazing", r.boundary_grazing},
              {"fiber_gaps", std::move(fiber_gaps)},
              {"seed", r.seed},
              {"frames_digest", r.frames_digest}};
}

/// Reads back the fields needed to replay a search witness.
inline SearchResult search_result_from_json(const json& j) {
  if (!j.is_object() || !j.contains("best_x") || !j.contains("best_gap") ||
      !j.contains("bound_kind") || !j.contains("bound_value"))
    throw FormatError("search result: missing best_x/best_gap/bound_kind/bound_value");
  SearchResult r;
  r.best_x = module_vector_from_json(j["best_x"], "$.best_x");
  r.best_gap = j["best_gap"].get<double>();
  r.bound_kind = parse_bound_kind(j["bound_kind"].get<std::string>());
  r.bound_value = j["bound_value"].get<double>();
  if (j.contains("coherence")) r.coherence = j["coherence"].get<double>();
  if (j.contains("frames_digest")) r.frames_digest = j["frames_digest"].get<std::string>();
  return r;
}

inline json wrap_report(const std::string& command, json body) {
  return json{{"header", make_header(command)}, {"report", std::move(body)}};
}

/// One row per trial: trial, min fiber gap, worst fiber index.
inline std::string trials_csv(const VerificationReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << "trial,min_fiber_gap,worst_fiber\n";
  for (const auto& rec : r.records) out << rec.trial << ',' << rec.min_gap << ',' << rec.worst_fiber << '\n';
  return out.str();
}

}  // namespace modent
