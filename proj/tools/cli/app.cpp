#include "cli/app.hpp"

#include <chrono>
#include <fstream>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mukai/dynkin.hpp"
#include "mukai/spectral.hpp"
#include "mukai/surface_io.hpp"
#include "mukai/verify.hpp"
#include "mukai/word_parser.hpp"

#ifndef MUKAI_VERSION
#define MUKAI_VERSION "0.0.0"
#endif

namespace mukai::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

ordered_json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return static_cast<std::int64_t>(q.get_num().get_si());
  return q.get_str();
}

// Coefficients, leading term first.
ordered_json poly_json(const Polynomial& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : p.descending()) arr.push_back(rational_json(c));
  return arr;
}

ordered_json matrix_json(const QMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

ordered_json radius_json(const RadiusResult& r) {
  ordered_json j;
  j["radius"] = r.radius;
  j["certified_unit"] = r.certified_unit;
  j["certification"] = r.exact_certificate ? "exact" : "numeric";
  j["tolerance"] = r.tolerance;
  return j;
}

ordered_json field_json(const Field& f) {
  return std::visit([](const auto& v) { return ordered_json(v); }, f);
}

ordered_json check_json(const CheckResult& c) {
  ordered_json j;
  j["name"] = c.name;
  j["pass"] = c.pass;
  for (const auto& [key, value] : c.fields) j[key] = field_json(value);
  return j;
}

std::string model_source(const RunConfig& config) {
  if (config.preset_name) return "preset:" + *config.preset_name;
  if (config.surface_path) return "file:" + *config.surface_path;
  return "";
}

SurfaceModel resolve_model(const RunConfig& config, bool validate) {
  if (config.preset_name && config.surface_path) throw Error("give exactly one of --preset and --surface");
  if (config.preset_name) return preset(*config.preset_name);
  if (!config.surface_path) throw Error("a surface model is required: --preset NAME or --surface FILE");
  if (validate) return load_surface(*config.surface_path);
  std::ifstream in(*config.surface_path);
  if (!in) throw Error("cannot open surface file " + *config.surface_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_surface(buf.str());
}

Word resolve_word(const SurfaceModel& model, const RunConfig& config) {
  if (config.word.empty()) throw Error("--word is required");
  Word w = parse_word(config.word);
  check_word_names(model, w);
  return w;
}

void add_checks(ordered_json& body, Report& report, const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    body["checks"].push_back(check_json(c));
    report.pass = report.pass && c.pass;
  }
}

void run_validate(const RunConfig& config, Report& report, ordered_json& body) {
  const SurfaceModel model = resolve_model(config, false);
  const ValidationReport v = validate_surface(model);
  ordered_json& res = body["results"];
  res["rank"] = model.rank;
  res["curves"] = model.curves.size();
  res["dynkin"] = v.dynkin_components;
  res["violations"] = ordered_json::array();
  for (const auto& violation : v.violations)
    res["violations"].push_back({{"entity", violation.entity}, {"message", violation.message}});
  add_checks(body, report, {CheckResult{"model invariants", v.ok(), {}}});
}

void run_radius(const RunConfig& config, ordered_json& body) {
  const SurfaceModel model = resolve_model(config, true);
  const Word word = resolve_word(model, config);
  const CharPoly poly = char_poly(compose_word(model, word));
  ordered_json& res = body["results"];
  res["word"] = word.to_string();
  res["char_poly"] = poly_json(poly.poly());
  res["char_poly_text"] = poly.poly().to_string();
  const ordered_json radius = radius_json(spectral_radius(poly, config.radius_tol));
  for (const auto& [k, v] : radius.items()) res[k] = v;
}

void run_charpoly(const RunConfig& config, ordered_json& body) {
  const SurfaceModel model = resolve_model(config, true);
  const Word word = resolve_word(model, config);
  const ActionMatrix action = compose_word(model, word);
  const CharPoly full = char_poly(action);
  const CharPoly h2 = char_poly(h2_block(action));
  ordered_json& res = body["results"];
  res["word"] = word.to_string();
  res["matrix"] = matrix_json(action.matrix());
  res["char_poly"] = poly_json(full.poly());
  res["char_poly_text"] = full.poly().to_string();
  res["h2_char_poly"] = poly_json(h2.poly());
  res["unit_certificate"] = to_string(certify_unit_spectrum(full.poly()));
}

void run_verify(const RunConfig& config, Report& report, ordered_json& body) {
  const SurfaceModel model = resolve_model(config, true);
  std::vector<Suite> suites;
  if (config.suite == "all") {
    suites = all_suites();
  } else if (auto s = suite_from_name(config.suite)) {
    suites.push_back(*s);
  } else {
    throw Error("unknown suite '" + config.suite + "'");
  }
  SuiteOptions options;
  options.trials = config.trials;
  options.seed = config.seed;
  options.tol = config.theorem_tol;
  options.radius_tol = config.radius_tol;
  options.group_cap = config.group_cap;
  options.threads = config.threads;

  ordered_json& res = body["results"];
  res["suites"] = ordered_json::array();
  for (Suite s : suites) {
    const SuiteResult r = run_suite(model, s, options);
    std::size_t failed = 0;
    for (const auto& c : r.checks) failed += c.pass ? 0 : 1;
    res["suites"].push_back({{"suite", std::string(suite_name(s))}, {"pass", r.pass()}, {"checks", r.checks.size()}, {"failed", failed}});
    for (const auto& c : r.checks) {
      ordered_json j = check_json(c);
      j["suite"] = std::string(suite_name(s));
      body["checks"].push_back(std::move(j));
      report.pass = report.pass && c.pass;
    }
  }
}

void run_entropy(const RunConfig& config, Report& report, ordered_json& body) {
  const EntropyParams& params = config.params;
  const EntropyBound bound = entropy_lower_bound(params, config.n, config.t);
  const DimSequence seq = d_n_recurrence(params, config.n);
  ordered_json& res = body["results"];
  res["params"] = {{"m", params.m}, {"l", params.l}, {"p", params.p}};
  res["d"] = ordered_json::array();
  for (const auto& d : seq.values) res["d"].push_back(d.get_str());
  res["rate_sequence"] = bound.sequence;
  res["limit_estimate"] = bound.limit_estimate;
  res["analytic_limit"] = bound.analytic_limit;

  bool closed_ok = true;
  bool bound_ok = true;
  BigInt power = 1;
  for (int n = 1; n <= config.n; ++n) {
    const BigInt& d = seq.values[static_cast<std::size_t>(n - 1)];
    closed_ok = closed_ok && d == d_n_closed_form(params, n);
    bound_ok = bound_ok && d > power;
    power *= BigInt(static_cast<long>(1 - params.l));
  }
  add_checks(body, report,
             {CheckResult{"recurrence matches closed form", closed_ok, {}},
              CheckResult{"d_n > (1-l)^(n-1)", bound_ok, {}}});

  if (config.table_n) {
    const VanishingTable table = vanishing_table(params, *config.table_n);
    ordered_json t;
    t["n"] = table.n;
    t["rows"] = ordered_json::array();
    for (const auto& row : table.rows) {
      ordered_json r;
      r["complex"] = row.name;
      r["applicable"] = row.applicable;
      r["zero_above"] = row.zero_above;
      r["cells"] = ordered_json::array();
      for (const auto& cell : row.cells) {
        ordered_json c{{"degree", cell.degree}, {"status", to_string(cell.status)}};
        if (cell.dim) c["dim"] = cell.dim->get_str();
        r["cells"].push_back(c);
      }
      t["rows"].push_back(r);
    }
    res["vanishing_table"] = t;
  }
}

void run_presets(const RunConfig& config, ordered_json& body) {
  ordered_json& res = body["results"];
  if (config.presets_action == "show") {
    res["name"] = config.presets_target;
    res["model"] = ordered_json::parse(surface_to_json(preset(config.presets_target)));
    return;
  }
  res["presets"] = ordered_json::array();
  for (const auto& name : preset_names()) {
    const SurfaceModel m = preset(name);
    const ValidationReport v = validate_surface(m);
    res["presets"].push_back({{"name", name}, {"rank", m.rank}, {"curves", m.curves.size()}, {"dynkin", v.dynkin_components}});
  }
}

ordered_json inputs_json(const RunConfig& c) {
  ordered_json in;
  in["subcommand"] = c.subcommand;
  const std::string src = model_source(c);
  if (!src.empty()) in["model"] = src;
  if (c.subcommand == "radius" || c.subcommand == "charpoly") {
    in["word"] = c.word;
    in["tolerance"] = c.radius_tol;
  }
  if (c.subcommand == "verify") {
    in["suite"] = c.suite;
    in["trials"] = c.trials;
    in["seed"] = c.seed;
    in["tolerance"] = c.theorem_tol;
    in["radius_tolerance"] = c.radius_tol;
    in["group_cap"] = c.group_cap;
  }
  if (c.subcommand == "entropy") {
    in["m"] = c.params.m;
    in["l"] = c.params.l;
    in["p"] = c.params.p;
    in["n"] = c.n;
    in["t"] = c.t;
  }
  if (c.subcommand == "presets") {
    in["action"] = c.presets_action;
    if (!c.presets_target.empty()) in["name"] = c.presets_target;
  }
  return in;
}

ordered_json error_json(const std::string& kind, const std::string& message) {
  ordered_json e;
  e["schema"] = kSchemaVersion;
  e["error"] = {{"kind", kind}, {"message", message}};
  return e;
}

}  // namespace

Report run(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  ordered_json& body = report.body;
  body["schema"] = kSchemaVersion;
  body["tool"] = "mukai-lab";
  body["version"] = MUKAI_VERSION;
  body["command"] = config.subcommand;
  body["inputs"] = inputs_json(config);
  body["results"] = ordered_json::object();
  body["checks"] = ordered_json::array();

  if (config.subcommand == "validate") {
    run_validate(config, report, body);
  } else if (config.subcommand == "radius") {
    run_radius(config, body);
  } else if (config.subcommand == "charpoly") {
    run_charpoly(config, body);
  } else if (config.subcommand == "verify") {
    run_verify(config, report, body);
  } else if (config.subcommand == "entropy") {
    run_entropy(config, report, body);
  } else if (config.subcommand == "presets") {
    run_presets(config, body);
  } else {
    throw Error("unknown subcommand '" + config.subcommand + "'");
  }

  std::size_t failed = 0;
  for (const auto& c : body["checks"]) failed += c["pass"].get<bool>() ? 0 : 1;
  body["summary"] = {{"pass", report.pass}, {"checks", body["checks"].size()}, {"failed", failed}};
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  body["timing"] = {{"elapsed_ms", elapsed.count()}};
  return report;
}

std::string canonical_json(const Report& report) {
  ordered_json copy = report.body;
  copy.erase("timing");
  return copy.dump();
}

std::string render_text(const Report& report) {
  const ordered_json& b = report.body;
  std::ostringstream os;
  os << "mukai-lab " << b["command"].get<std::string>() << '\n';
  for (const auto& [key, value] : b["results"].items()) {
    if (key == "rate_sequence" || key == "d" || key == "matrix") {
      os << "  " << key << ": [" << value.size() << " entries]\n";
      continue;
    }
    os << "  " << key << ": " << value.dump() << '\n';
  }
  for (const auto& c : b["checks"]) {
    os << (c["pass"].get<bool>() ? "  PASS " : "  FAIL ");
    if (c.contains("suite")) os << c["suite"].get<std::string>() << ": ";
    os << c["name"].get<std::string>();
    if (c.contains("word")) os << "  " << c["word"].get<std::string>();
    if (c.contains("error")) os << "  (" << c["error"].get<std::string>() << ")";
    os << '\n';
  }
  const auto& s = b["summary"];
  os << (s["pass"].get<bool>() ? "OK" : "FAILED") << ": " << s["checks"].get<std::size_t>() << " checks, "
     << s["failed"].get<std::size_t>() << " failed\n";
  return os.str();
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Cohomological actions of spherical twists and standard autoequivalences on surfaces", "mukai-lab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(MUKAI_VERSION));

  std::string format = "json";
  std::string preset_opt;
  std::string surface_opt;
  auto add_model = [&](CLI::App* sub) {
    auto* p = sub->add_option("--preset", preset_opt, "Built-in surface model");
    auto* s = sub->add_option("--surface", surface_opt, "Surface-model JSON file");
    p->excludes(s);
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* validate = app.add_subcommand("validate", "Check a surface model against the A-D-E hypotheses");
  add_model(validate);
  add_format(validate);

  auto* radius = app.add_subcommand("radius", "Characteristic polynomial and spectral radius of a word");
  add_model(radius);
  add_format(radius);
  radius->add_option("--word", config.word, "Word, e.g. \"T(C,0)*L(H)\"")->required();
  radius->add_option("--tol", config.radius_tol, "Root-solver tolerance")->check(CLI::PositiveNumber);

  auto* charpoly = app.add_subcommand("charpoly", "Exact action matrix and characteristic polynomials of a word");
  add_model(charpoly);
  add_format(charpoly);
  charpoly->add_option("--word", config.word, "Word in the generator grammar")->required();

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_model(verify);
  add_format(verify);
  verify->add_option("--suite", config.suite, "involution|braid|lemma45|prop44|thm42|coxeter-order|all");
  verify->add_option("--trials", config.trials, "Random words per randomized suite");
  verify->add_option("--seed", config.seed, "Master seed (MUKAI_LAB_SEED overrides)");
  verify->add_option("--tol", config.theorem_tol, "Radius comparison tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--radius-tol", config.radius_tol, "Root-solver tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--cap", config.group_cap, "Element cap for group enumeration");
  verify->add_option("--threads", config.threads, "Worker threads (0: all cores)");

  auto* entropy = app.add_subcommand("entropy", "Top Ext dimensions and the entropy lower bound");
  add_format(entropy);
  entropy->add_option("--m", config.params.m, "deg of M on C (< 0)");
  entropy->add_option("--l", config.params.l, "deg of L on C (< 0)");
  entropy->add_option("--p", config.params.p, "deg of P on C (< 0)");
  entropy->add_option("--n", config.n, "Sequence length N (>= 2)");
  entropy->add_option("--t", config.t, "Grading parameter t");
  entropy->add_option("--table", config.table_n, "Also emit the vanishing table at this n");

  auto* presets = app.add_subcommand("presets", "List or print built-in models");
  add_format(presets);
  presets->require_subcommand(1);
  presets->add_subcommand("list", "List presets");
  auto* show = presets->add_subcommand("show", "Print a preset in the surface-model schema");
  show->add_option("name", config.presets_target)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << error_json("usage", e.what()).dump() << '\n';
    return 2;
  }

  for (auto* sub : app.get_subcommands()) config.subcommand = sub->get_name();
  if (config.subcommand == "presets") config.presets_action = presets->got_subcommand("show") ? "show" : "list";
  if (!preset_opt.empty()) config.preset_name = preset_opt;
  if (!surface_opt.empty()) config.surface_path = surface_opt;
  config.format = format == "text" ? Format::kText : Format::kJson;
  if (const char* env = std::getenv("MUKAI_LAB_SEED"); env != nullptr && *env != '\0') {
    try {
      config.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << error_json("usage", std::string("MUKAI_LAB_SEED is not an unsigned integer: ") + env).dump() << '\n';
      return 2;
    }
  }

  try {
    const Report report = run(config);
    if (config.format == Format::kText) {
      out << render_text(report);
    } else {
      out << report.body.dump(2) << '\n';
    }
    return report.pass ? 0 : 1;
  } catch (const ParseError& e) {
    ordered_json j = error_json("parse_error", e.what());
    j["error"]["offset"] = e.offset();
    j["error"]["expected"] = e.expected();
    j["error"]["found"] = e.found();
    err << j.dump() << '\n';
  } catch (const SchemaError& e) {
    ordered_json j = error_json("schema_error", e.what());
    j["error"]["field"] = e.field();
    err << j.dump() << '\n';
  } catch (const ValidationFailed& e) {
    ordered_json j = error_json("validation_failed", "surface model failed validation");
    j["error"]["violations"] = ordered_json::array();
    for (const auto& v : e.report().violations)
      j["error"]["violations"].push_back({{"entity", v.entity}, {"message", v.message}});
    err << j.dump() << '\n';
  } catch (const UnknownName& e) {
    ordered_json j = error_json("unknown_name", e.what());
    j["error"]["name"] = e.name();
    err << j.dump() << '\n';
  } catch (const ConvergenceError& e) {
    ordered_json j = error_json("convergence", e.what());
    j["error"]["best_estimate"] = e.best_estimate();
    err << j.dump() << '\n';
  } catch (const Error& e) {
    err << error_json("error", e.what()).dump() << '\n';
  }
  return 2;
}

}  // namespace mukai::cli
