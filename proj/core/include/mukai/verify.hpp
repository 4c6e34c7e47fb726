#pragma once

// Verification suites over a surface model: twist involution, Coxeter
// relations, independence of the H^2 block from a, block triangularity,
// rho(phi^H) = rho(f^*) on random words, and Weyl group orders.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mukai/actions.hpp"
#include "mukai/lattice.hpp"

namespace mukai {

enum class Suite { kInvolution, kBraid, kLemma45, kProp44, kThm42, kCoxeterOrder };

std::optional<Suite> suite_from_name(std::string_view name);
std::string_view suite_name(Suite s);
const std::vector<Suite>& all_suites();

using Field = std::variant<bool, std::int64_t, double, std::string>;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::vector<std::pair<std::string, Field>> fields;
};

struct SuiteOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  double tol = 1e-6;          // theorem comparison
  double radius_tol = 1e-9;   // root solver
  std::size_t group_cap = 1'000'000;
  unsigned threads = 0;       // 0: hardware concurrency
};

struct SuiteResult {
  Suite suite;
  std::vector<CheckResult> checks;
  bool pass() const;
};

SuiteResult run_suite(const SurfaceModel& model, Suite suite, const SuiteOptions& options);

/// Per-trial seed; independent of scheduling.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

/// Length 1..8; each letter is a twist (random curve, a in [-3,3]), a tensor
/// by a declared bundle, a declared pullback or a shift by +-1. Kinds the
/// model cannot supply are skipped.
Word random_word(const SurfaceModel& model, std::mt19937_64& rng);
std::vector<Word> random_words(const SurfaceModel& model, std::size_t count, std::uint64_t master_seed);

struct Prop44Outcome {
  bool block_triangular = false;
  bool charpoly_factorizes = false;  // chi(full) = chi(H0) chi(H2) chi(H4)
  double full_radius = 0.0;
  double h2_radius = 0.0;
  double fstar_radius = 0.0;
  bool pass = false;
};

/// rho(full) = max(rho(H^2 part), rho(f^* extended)) within tol, plus the
/// exact block structure behind it.
Prop44Outcome check_prop44(const SurfaceModel& model, const Word& word, double tol = 1e-6);

/// Runs fn(i) for i in [0, count) on a small thread pool.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace mukai
