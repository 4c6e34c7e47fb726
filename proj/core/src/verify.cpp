#include "mukai/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "mukai/coxeter.hpp"
#include "mukai/dynkin.hpp"
#include "mukai/spectral.hpp"

namespace mukai {
namespace {

constexpr double kRadiusTolerance = 1e-9;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

ActionMatrix twist(const SurfaceModel& model, const std::string& curve, std::int64_t a) {
  return action_of_generator(model, Twist{curve, a});
}

std::vector<CheckResult> involution_checks(const SurfaceModel& model) {
  std::vector<CheckResult> out;
  for (const auto& c : model.curves) {
    std::int64_t failures = 0;
    for (std::int64_t a = -5; a <= 5; ++a) {
      const ActionMatrix t = twist(model, c.name, a);
      if (!(t * t).matrix().is_identity()) ++failures;
    }
    out.push_back({"involution " + c.name, failures == 0, {{"a_min", std::int64_t{-5}}, {"a_max", std::int64_t{5}}, {"failures", failures}}});
  }
  return out;
}

std::vector<CheckResult> braid_checks(const SurfaceModel& model) {
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < model.curves.size(); ++i) {
    for (std::size_t j = i + 1; j < model.curves.size(); ++j) {
      const auto& ci = model.curves[i];
      const auto& cj = model.curves[j];
      const Rational meet = intersect(model, to_rational(ci.cls), to_rational(cj.cls));
      const ActionMatrix ti = twist(model, ci.name, 0);
      const ActionMatrix tj = twist(model, cj.name, 0);
      const std::string pair = ci.name + "," + cj.name;
      if (meet == 1) {
        out.push_back({"braid " + pair, ti * tj * ti == tj * ti * tj, {{"intersection", std::int64_t{1}}}});
      } else if (meet == 0) {
        out.push_back({"commute " + pair, ti * tj == tj * ti, {{"intersection", std::int64_t{0}}}});
      } else {
        out.push_back({"relation " + pair, false, {{"error", std::string("intersection ") + meet.get_str() + " is not 0 or 1"}}});
      }
    }
  }
  return out;
}

std::vector<CheckResult> lemma45_checks(const SurfaceModel& model) {
  std::vector<CheckResult> out;
  const QMatrix g = model.gram_q();
  const auto r = static_cast<std::size_t>(model.rank);
  for (const auto& c : model.curves) {
    const QVector cls = to_rational(c.cls);
    const QVector gc = g * cls;
    // w2 -> w2 + (C.w2) C
    QMatrix expected = QMatrix::identity(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) expected(i, j) += cls[i] * gc[j];
    const QMatrix base = h2_block(twist(model, c.name, 0));
    bool same = base == expected;
    for (std::int64_t a = -10; a <= 10 && same; ++a) same = h2_block(twist(model, c.name, a)) == base;
    out.push_back({"lemma45 " + c.name, same, {{"h2_block", base.to_string()}}});
  }
  return out;
}

std::vector<CheckResult> twist_structure_checks(const SurfaceModel& model) {
  std::vector<CheckResult> out;
  const auto r = static_cast<std::size_t>(model.rank);
  for (const auto& c : model.curves) {
    bool ok = true;
    for (std::int64_t a = -5; a <= 5; ++a) {
      const ActionMatrix t = twist(model, c.name, a);
      MukaiClass point = MukaiClass::zero(model.rank);
      point.w4 = 1;
      ok = ok && t.apply(point) == point;       // identity on H^4
      ok = ok && t.matrix()(0, 0) == 1;         // T(1) = 1 + R, R in H^{>=2}
      ok = ok && t.block_lower_triangular();
      (void)r;
    }
    out.push_back({"twist structure " + c.name, ok, {}});
  }
  return out;
}

template <class Fn>
std::vector<CheckResult> per_word(const SurfaceModel& model, const SuiteOptions& options, Fn fn) {
  const std::vector<Word> words = random_words(model, options.trials, options.seed);
  std::vector<CheckResult> out(words.size());
  parallel_for(words.size(), options.threads, [&](std::size_t i) {
    CheckResult& res = out[i];
    res.name = "word " + std::to_string(i);
    res.fields.emplace_back("word", words[i].to_string());
    try {
      fn(words[i], res);
    } catch (const std::exception& e) {
      res.pass = false;
      res.fields.emplace_back("error", std::string(e.what()));
    }
  });
  return out;
}

std::vector<CheckResult> prop44_checks(const SurfaceModel& model, const SuiteOptions& options) {
  std::vector<CheckResult> out = twist_structure_checks(model);
  auto words = per_word(model, options, [&](const Word& w, CheckResult& res) {
    const Prop44Outcome o = check_prop44(model, w, options.tol);
    res.pass = o.pass;
    res.fields.emplace_back("block_triangular", o.block_triangular);
    res.fields.emplace_back("charpoly_factorizes", o.charpoly_factorizes);
    res.fields.emplace_back("full_radius", o.full_radius);
    res.fields.emplace_back("h2_radius", o.h2_radius);
    res.fields.emplace_back("fstar_radius", o.fstar_radius);
  });
  out.insert(out.end(), words.begin(), words.end());
  return out;
}

std::vector<CheckResult> thm42_checks(const SurfaceModel& model, const SuiteOptions& options) {
  return per_word(model, options, [&](const Word& w, CheckResult& res) {
    const Thm42Result r = verify_thm42(model, w, options.tol);
    res.pass = r.pass;
    res.fields.emplace_back("lhs", r.lhs.radius);
    res.fields.emplace_back("rhs", r.rhs.radius);
    res.fields.emplace_back("lhs_certified_unit", r.lhs.certified_unit);
  });
}

std::vector<CheckResult> coxeter_checks(const SurfaceModel& model, const SuiteOptions& options) {
  const ValidationReport report = validate_surface(model);
  BigInt expected = 1;
  std::string types;
  for (const auto& t : report.dynkin_components) {
    expected *= weyl_group_order(t);
    types += (types.empty() ? "" : "+") + t;
  }
  const ClosureResult closure = enumerate_matrix_group(twist_h2_generators(model), options.group_cap);
  CheckResult res{"coxeter order", closure.complete && BigInt(static_cast<unsigned long>(closure.order)) == expected, {}};
  res.fields.emplace_back("diagram", types.empty() ? std::string("empty") : types);
  res.fields.emplace_back("expected_order", expected.get_str());
  res.fields.emplace_back("enumerated_order", static_cast<std::int64_t>(closure.order));
  res.fields.emplace_back("complete", closure.complete);
  if (!closure.complete) res.fields.emplace_back("error", std::string("closure exceeded the element cap"));
  return {res};
}

}  // namespace

std::optional<Suite> suite_from_name(std::string_view name) {
  for (Suite s : all_suites())
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::kInvolution:
      return "involution";
    case Suite::kBraid:
      return "braid";
    case Suite::kLemma45:
      return "lemma45";
    case Suite::kProp44:
      return "prop44";
    case Suite::kThm42:
      return "thm42";
    case Suite::kCoxeterOrder:
      return "coxeter-order";
  }
  return "?";
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{Suite::kInvolution, Suite::kBraid, Suite::kLemma45,
                                         Suite::kProp44,     Suite::kThm42, Suite::kCoxeterOrder};
  return suites;
}

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

SuiteResult run_suite(const SurfaceModel& model, Suite suite, const SuiteOptions& options) {
  SuiteResult out{suite, {}};
  switch (suite) {
    case Suite::kInvolution:
      out.checks = involution_checks(model);
      break;
    case Suite::kBraid:
      out.checks = braid_checks(model);
      break;
    case Suite::kLemma45:
      out.checks = lemma45_checks(model);
      break;
    case Suite::kProp44:
      out.checks = prop44_checks(model, options);
      break;
    case Suite::kThm42:
      out.checks = thm42_checks(model, options);
      break;
    case Suite::kCoxeterOrder:
      out.checks = coxeter_checks(model, options);
      break;
  }
  return out;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  return splitmix64(splitmix64(master) ^ (trial * 0xd1b54a32d192ed03ULL));
}

Word random_word(const SurfaceModel& model, std::mt19937_64& rng) {
  enum Kind { kTwist, kTensor, kPullback, kShift };
  std::vector<Kind> kinds;
  if (!model.curves.empty()) kinds.push_back(kTwist);
  if (!model.line_bundles.empty()) kinds.push_back(kTensor);
  if (!model.isometries.empty()) kinds.push_back(kPullback);
  kinds.push_back(kShift);

  auto pick = [&rng](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto nth_key = [](const auto& map, std::size_t i) { return std::next(map.begin(), static_cast<long>(i))->first; };

  const std::size_t length = 1 + pick(8);
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < length; ++i) {
    switch (kinds[pick(kinds.size())]) {
      case kTwist: {
        const auto& curve = model.curves[pick(model.curves.size())];
        const auto a = static_cast<std::int64_t>(pick(7)) - 3;
        gens.emplace_back(Twist{curve.name, a});
        break;
      }
      case kTensor:
        gens.emplace_back(Tensor{nth_key(model.line_bundles, pick(model.line_bundles.size()))});
        break;
      case kPullback:
        gens.emplace_back(Pullback{nth_key(model.isometries, pick(model.isometries.size()))});
        break;
      case kShift:
        gens.emplace_back(Shift{pick(2) == 0 ? std::int64_t{1} : std::int64_t{-1}});
        break;
    }
  }
  return Word(std::move(gens));
}

std::vector<Word> random_words(const SurfaceModel& model, std::size_t count, std::uint64_t master_seed) {
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng(trial_seed(master_seed, i));
    out.push_back(random_word(model, rng));
  }
  return out;
}

Prop44Outcome check_prop44(const SurfaceModel& model, const Word& word, double tol) {
  check_word_names(model, word);
  Prop44Outcome o;
  const ActionMatrix full = compose_word(model, word);
  const QMatrix h2 = h2_block(full);
  const ActionMatrix fstar = extend_isometry(standard_radius_reference(model, word), model.rank);

  o.block_triangular = full.block_lower_triangular();
  const QMatrix& m = full.matrix();
  const Polynomial h0 = Polynomial({-m(0, 0), Rational(1)});
  const Polynomial h4 = Polynomial({-m(full.h4_index(), full.h4_index()), Rational(1)});
  const CharPoly h2_poly = char_poly(h2);
  const CharPoly full_poly = char_poly(full);
  o.charpoly_factorizes = full_poly.poly() == h0 * h2_poly.poly() * h4;

  o.full_radius = spectral_radius(full_poly, kRadiusTolerance).radius;
  o.h2_radius = spectral_radius(h2_poly, kRadiusTolerance).radius;
  o.fstar_radius = spectral_radius(char_poly(fstar), kRadiusTolerance).radius;
  const double predicted = std::max(o.h2_radius, o.fstar_radius);
  o.pass = o.block_triangular && o.charpoly_factorizes &&
           std::fabs(o.full_radius - predicted) <= tol * std::max(1.0, predicted);
  return o;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace mukai
