#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "mukai/entropy.hpp"

namespace mukai::cli {

enum class Format { kJson, kText };

struct RunConfig {
  std::string subcommand;  // validate radius charpoly verify entropy presets
  std::string presets_action = "list";  // list | show
  std::string presets_target;

  std::optional<std::string> surface_path;
  std::optional<std::string> preset_name;
  std::string word;

  double radius_tol = 1e-9;
  double theorem_tol = 1e-6;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  std::string suite = "all";
  std::size_t group_cap = 1'000'000;
  unsigned threads = 0;

  EntropyParams params;
  int n = 200;
  double t = 0.0;
  std::optional<int> table_n;

  Format format = Format::kJson;
};

struct Report {
  nlohmann::ordered_json body;  // schema-versioned; "timing" is the only non-deterministic key
  bool pass = true;
};

/// Executes one subcommand. Throws mukai::Error (or subclasses) on bad input.
Report run(const RunConfig& config);

/// Report JSON without the timing field, for determinism comparisons.
std::string canonical_json(const Report& report);

std::string render_text(const Report& report);

/// Full command-line entry point: parses argv, runs, writes the report to
/// `out` and structured errors to `err`. Returns the process exit code:
/// 0 all checks pass, 1 some check failed, 2 usage or input error.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mukai::cli
