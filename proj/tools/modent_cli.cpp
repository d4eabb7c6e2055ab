// Copyright 2026 The modent Authors
// SPDX-License-Identifier: Apache-2.0
//
// modent: generate frames, evaluate entropies and bounds, verify the modular
// Deutsch inequality and search for violations of the -2 log(mu) bound.
//
// Exit codes: 0 success, 1 usage/IO/validation error, 2 inequality violation
// or counterexample candidate.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "modent/modent.hpp"

namespace fs = std::filesystem;
using namespace modent;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

struct RunConfig {
  std::string command;
  std::string kind = "fourier-pair";
  std::string frame_a, frame_b, vector_x, vector_y, vector_z;
  std::string out;
  std::size_t n = 2, m = 0, d = 1;
  std::uint64_t seed = 0;
  std::size_t trials = 10000;
  std::size_t restarts = 32;
  std::size_t max_iters = 2000;
  std::size_t threads = 1;
  double gap_tol = kDefaultGapTol;
  double candidate_tol = kDefaultCandidateTol;
  double zero_tol = kDefaultZeroTol;
  double tol = 1e-10;
  bool strict = false;
  std::string bound = "deutsch";
};

fs::path output_dir(const RunConfig& cfg) {
  if (!cfg.out.empty()) return cfg.out;
  if (const char* env = std::getenv("MODENT_OUT_DIR"); env != nullptr && *env != '\0') return env;
  return ".";
}

fs::path prepare_dir(const RunConfig& cfg) {
  fs::path dir = fs::absolute(output_dir(cfg));
  fs::create_directories(dir);
  return dir;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::pair<Frame, Frame> read_pair(const RunConfig& cfg) {
  Frame a = read_frame(cfg.frame_a);
  Frame b = read_frame(cfg.frame_b);
  if (a.rank() != b.rank() || a.dim() != b.dim())
    throw DimensionError("frames have different shapes (n, d): (" + std::to_string(a.rank()) +
                         ", " + std::to_string(a.dim()) + ") vs (" + std::to_string(b.rank()) +
                         ", " + std::to_string(b.dim()) + ")");
  for (const auto& [frame, path] : {std::pair{&a, cfg.frame_a}, std::pair{&b, cfg.frame_b}}) {
    if (!is_parseval(*frame))
      throw PreconditionError(path + ": not Parseval (defect " +
                              std::to_string(parseval_defect(*frame)) + ")");
  }
  return {std::move(a), std::move(b)};
}

int run_gen(const RunConfig& cfg) {
  const fs::path dir = prepare_dir(cfg);
  if (cfg.kind == "unit-vector") {
    const fs::path path = dir / "x.json";
    write_text_file(path, serialize(to_json(random_unit_vector(cfg.n, cfg.d, cfg.seed))));
    std::cout << "wrote " << path.string() << "\n";
    return kExitOk;
  }
  std::pair<Frame, Frame> pair;
  if (cfg.kind == "fourier-pair") {
    pair = gen_fourier_pair(cfg.n, cfg.d);
  } else if (cfg.kind == "onb") {
    pair = {gen_onb(cfg.n, cfg.d, unit_seed(cfg.seed, 0)), gen_onb(cfg.n, cfg.d, unit_seed(cfg.seed, 1))};
  } else if (cfg.kind == "parseval") {
    const std::size_t m = cfg.m == 0 ? cfg.n : cfg.m;
    pair = {gen_random_parseval(cfg.n, m, cfg.d, unit_seed(cfg.seed, 0)),
            gen_random_parseval(cfg.n, m, cfg.d, unit_seed(cfg.seed, 1))};
  } else {
    throw InvalidArgument("unknown --kind '" + cfg.kind + "'");
  }
  write_text_file(dir / "a.json", serialize(to_json(pair.first)));
  write_text_file(dir / "b.json", serialize(to_json(pair.second)));
  std::cout << "wrote " << (dir / "a.json").string() << " " << (dir / "b.json").string() << "\n";
  return kExitOk;
}

int run_entropy(const RunConfig& cfg) {
  const Frame frame = read_frame(cfg.frame_a);
  const ModuleVector x = read_module_vector(cfg.vector_x);
  EntropyOptions opts;
  opts.zero_tol = cfg.zero_tol;
  opts.strict = cfg.strict;
  const EntropyValue h = entropy(frame, x, opts);
  std::cout << "entropy";
  for (complex v : h.value.values()) std::cout << ' ' << fixed6(v.real());
  std::cout << " in_domain=" << (h.in_domain ? "true" : "false")
            << " zero_coefficients=" << h.zero_coefficient_count << "\n";
  if (!cfg.out.empty()) {
    const fs::path dir = prepare_dir(cfg);
    write_text_file(dir / "entropy.json",
                    serialize(wrap_report("entropy", json{{"value", to_json(h.value)},
                                                          {"in_domain", h.in_domain},
                                                          {"zero_coefficient_count",
                                                           h.zero_coefficient_count}})));
  }
  return kExitOk;
}

int run_coherence(const RunConfig& cfg) {
  const Frame a = read_frame(cfg.frame_a);
  const Frame b = read_frame(cfg.frame_b);
  std::cout << fixed6(coherence(a, b)) << "\n";
  return kExitOk;
}

int run_verify(const RunConfig& cfg) {
  const auto [a, b] = read_pair(cfg);
  VerifyOptions opts;
  opts.gap_tol = cfg.gap_tol;
  opts.zero_tol = cfg.zero_tol;
  opts.threads = cfg.threads;
  const BoundKind kind = parse_bound_kind(cfg.bound);
  const VerificationReport report = verify(a, b, kind, cfg.trials, cfg.seed, opts);
  const fs::path dir = prepare_dir(cfg);
  write_text_file(dir / "report.json", serialize(wrap_report("verify", to_json(report))));
  write_text_file(dir / "trials.csv", trials_csv(report));
  std::cout << "verify bound=" << to_string(kind) << " mu=" << fixed6(report.coherence)
            << " bound_value=" << fixed6(report.bound_value) << " trials=" << report.trials
            << " min_gap=" << fixed6(report.min_gap) << " violations=" << report.violations.size()
            << "\n";
  return report.violations.empty() ? kExitOk : kExitViolation;
}

int run_buzano(const RunConfig& cfg) {
  const ModuleVector x = read_module_vector(cfg.vector_x);
  const ModuleVector y = read_module_vector(cfg.vector_y);
  const ModuleVector z = read_module_vector(cfg.vector_z);
  const BuzanoResult r = buzano_check(x, y, z, cfg.tol);
  std::cout << "buzano lhs=" << fixed6(r.lhs) << " rhs=" << fixed6(r.rhs)
            << " holds=" << (r.holds ? "true" : "false") << "\n";
  return r.holds ? kExitOk : kExitViolation;
}

int run_search(const RunConfig& cfg) {
  const auto [a, b] = read_pair(cfg);
  SearchOptions opts;
  opts.restarts = cfg.restarts;
  opts.max_iters = cfg.max_iters;
  opts.zero_tol = cfg.zero_tol;
  opts.candidate_tol = cfg.candidate_tol;
  opts.threads = cfg.threads;
  const BoundKind kind = parse_bound_kind(cfg.bound);
  const SearchResult r = minimize_entropy_sum(a, b, kind, cfg.seed, opts);
  const fs::path dir = prepare_dir(cfg);
  write_text_file(dir / "search.json", serialize(wrap_report("search", to_json(r))));
  std::cout << "search bound=" << to_string(kind) << " bound_value=" << fixed6(r.bound_value)
            << " best_gap=" << r.best_gap << " restarts=" << r.restarts
            << " converged=" << (r.converged ? "true" : "false")
            << (r.counterexample_candidate ? " COUNTEREXAMPLE CANDIDATE" : "")
            << (r.boundary_grazing ? " (boundary-grazing)" : "") << "\n";
  return r.counterexample_candidate ? kExitViolation : kExitOk;
}

int run_chain(const RunConfig& cfg) {
  const auto [a, b] = read_pair(cfg);
  const ModuleVector x = read_module_vector(cfg.vector_x);
  const ChainResult r = proof_chain_check(a, b, x, cfg.tol);
  std::cout << "chain holds=" << (r.holds ? "true" : "false")
            << " worst_slack=" << r.worst_slack << " at (" << r.worst_j << ", " << r.worst_k << ")\n";
  return r.holds ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular entropic uncertainty toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "Maximum parallel work units")
        ->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
  };

  auto* gen = app.add_subcommand("gen", "Generate a frame pair (a.json, b.json) or a unit vector (x.json)");
  gen->add_option("--kind", cfg.kind, "fourier-pair | onb | parseval | unit-vector")
      ->check(CLI::IsMember({"fourier-pair", "onb", "parseval", "unit-vector"}));
  gen->add_option("--n", cfg.n, "Module rank")->check(CLI::PositiveNumber);
  gen->add_option("--m", cfg.m, "Frame size (parseval; defaults to n)")->check(CLI::PositiveNumber);
  gen->add_option("--d", cfg.d, "Algebra dimension |X|")->check(CLI::PositiveNumber);
  gen->add_option("--seed", cfg.seed);
  gen->add_option("--out", cfg.out, "Output directory (default $MODENT_OUT_DIR or .)");

  auto* ent = app.add_subcommand("entropy", "Modular Shannon entropy S_tau(x)");
  ent->add_option("frame", cfg.frame_a)->required()->check(CLI::ExistingFile);
  ent->add_option("vector", cfg.vector_x)->required()->check(CLI::ExistingFile);
  ent->add_option("--zero-tol", cfg.zero_tol)->check(CLI::NonNegativeNumber);
  ent->add_flag("--strict", cfg.strict, "Require unit inner product frame vectors");
  ent->add_option("--out", cfg.out, "Write entropy.json into this directory");

  auto* coh = app.add_subcommand("coherence", "max ||<tau_j, omega_k>||");
  coh->add_option("frame_a", cfg.frame_a)->required()->check(CLI::ExistingFile);
  coh->add_option("frame_b", cfg.frame_b)->required()->check(CLI::ExistingFile);

  auto* ver = app.add_subcommand("verify", "Sample unit vectors and check the entropy sum against a bound");
  ver->add_option("frame_a", cfg.frame_a)->required()->check(CLI::ExistingFile);
  ver->add_option("frame_b", cfg.frame_b)->required()->check(CLI::ExistingFile);
  ver->add_option("--bound", cfg.bound, "deutsch | maassen-uffink");
  ver->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
  ver->add_option("--seed", cfg.seed);
  ver->add_option("--gap-tol", cfg.gap_tol)->check(CLI::NonNegativeNumber);
  ver->add_option("--zero-tol", cfg.zero_tol)->check(CLI::NonNegativeNumber);
  ver->add_option("--out", cfg.out, "Output directory for report.json and trials.csv");
  common_threads(ver);

  auto* buz = app.add_subcommand("buzano", "Check ||<x,z><z,y>|| <= (||x|| ||y|| + ||<x,y>||)/2");
  buz->add_option("x", cfg.vector_x)->required()->check(CLI::ExistingFile);
  buz->add_option("y", cfg.vector_y)->required()->check(CLI::ExistingFile);
  buz->add_option("z", cfg.vector_z)->required()->check(CLI::ExistingFile);
  buz->add_option("--tol", cfg.tol)->check(CLI::NonNegativeNumber);

  auto* sea = app.add_subcommand("search", "Minimize the entropy sum and report the gap to a bound");
  sea->add_option("frame_a", cfg.frame_a)->required()->check(CLI::ExistingFile);
  sea->add_option("frame_b", cfg.frame_b)->required()->check(CLI::ExistingFile);
  std::string search_bound = "maassen-uffink";
  sea->add_option("--bound", search_bound, "maassen-uffink (default) | deutsch");
  sea->add_option("--restarts", cfg.restarts)->check(CLI::PositiveNumber);
  sea->add_option("--max-iters", cfg.max_iters)->check(CLI::PositiveNumber);
  sea->add_option("--seed", cfg.seed);
  sea->add_option("--candidate-tol", cfg.candidate_tol)->check(CLI::NonNegativeNumber);
  sea->add_option("--zero-tol", cfg.zero_tol)->check(CLI::NonNegativeNumber);
  sea->add_option("--out", cfg.out, "Output directory for search.json");
  common_threads(sea);

  auto* chn = app.add_subcommand("chain", "Check the Buzano step of the main proof for every frame pair (j, k)");
  chn->add_option("frame_a", cfg.frame_a)->required()->check(CLI::ExistingFile);
  chn->add_option("frame_b", cfg.frame_b)->required()->check(CLI::ExistingFile);
  chn->add_option("x", cfg.vector_x)->required()->check(CLI::ExistingFile);
  chn->add_option("--tol", cfg.tol)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command == "search") cfg.bound = search_bound;
  try {
    if (cfg.command == "gen") return run_gen(cfg);
    if (cfg.command == "entropy") return run_entropy(cfg);
    if (cfg.command == "coherence") return run_coherence(cfg);
    if (cfg.command == "verify") return run_verify(cfg);
    if (cfg.command == "buzano") return run_buzano(cfg);
    if (cfg.command == "search") return run_search(cfg);
    if (cfg.command == "chain") return run_chain(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
