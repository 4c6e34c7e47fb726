#include <random>

#include "doctest.h"
#include "mukai/errors.hpp"
#include "mukai/lattice.hpp"
#include "mukai/surface_io.hpp"
#include "support.hpp"

using namespace mukai;

namespace {

bool mentions(const ValidationReport& r, const std::string& entity_part, const std::string& message_part) {
  for (const auto& v : r.violations)
    if (v.entity.find(entity_part) != std::string::npos && v.message.find(message_part) != std::string::npos)
      return true;
  return false;
}

SurfaceModel two_curve_model(std::int64_t meet) {
  SurfaceModel m;
  m.rank = 2;
  m.gram = {{-2, meet}, {meet, -2}};
  m.c1 = {0, 0};
  m.curves = {{"e1", {1, 0}}, {"e2", {0, 1}}};
  return m;
}

// Bl_1 P^2 style lattice: H^2 = 1, E^2 = -1, c1 = 3H - E.
SurfaceModel blowup_model() {
  SurfaceModel m;
  m.rank = 2;
  m.gram = {{1, 0}, {0, -1}};
  m.c1 = {3, 1};
  return m;
}

}  // namespace

TEST_SUITE("mukai-lattice") {
  TEST_CASE("validate_surface accepts the A-D-E presets") {
    for (const auto& name : preset_names()) {
      CAPTURE(name);
      CHECK(validate_surface(preset(name)).ok());
    }
    const ValidationReport a2 = validate_surface(preset("A2"));
    REQUIRE(a2.dynkin_components.size() == 1);
    CHECK(a2.dynkin_components[0] == "A2");
  }

  TEST_CASE("validate_surface names a curve with the wrong self-intersection") {
    SurfaceModel m = preset("A1");
    m.gram = {{-4}};
    const ValidationReport r = validate_surface(m);
    CHECK_FALSE(r.ok());
    CHECK(mentions(r, "C", "self-intersection"));
  }

  TEST_CASE("validate_surface rejects curves meeting with multiplicity 2") {
    const ValidationReport r = validate_surface(two_curve_model(2));
    CHECK(mentions(r, "e1,e2", "adjacency not A-D-E"));
  }

  TEST_CASE("validate_surface rejects an affine A-tilde cycle") {
    SurfaceModel m;
    m.rank = 3;
    m.gram = {{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}};
    m.c1 = {0, 0, 0};
    m.curves = {{"a", {1, 0, 0}}, {"b", {0, 1, 0}}, {"c", {0, 0, 1}}};
    CHECK(mentions(validate_surface(m), "a,b,c", "adjacency not A-D-E"));
  }

  TEST_CASE("validate_surface checks c1 orthogonality and isometries") {
    SurfaceModel m = preset("A1");
    m.c1 = {1};
    CHECK(mentions(validate_surface(m), "C", "c1.C"));

    SurfaceModel a2 = preset("A2");
    a2.isometries["swap"] = {{0, 1}, {1, 0}};
    CHECK(validate_surface(a2).ok());
    a2.isometries["minus"] = {{-1, 0}, {0, -1}};
    CHECK(mentions(validate_surface(a2), "isometry minus", "not a declared curve class"));

    SurfaceModel pell = preset("Pell");
    pell.isometries["bad"] = {{1, 1}, {0, 1}};
    CHECK(mentions(validate_surface(pell), "isometry bad", "intersection form"));
  }

  TEST_CASE("validate_surface flags non-symmetric gram and bad lengths") {
    SurfaceModel m = preset("A2");
    m.gram[0][1] = 0;
    CHECK(mentions(validate_surface(m), "gram", "symmetric"));
    SurfaceModel n = preset("A2");
    n.line_bundles["short"] = {1};
    CHECK(mentions(validate_surface(n), "line bundle short", "length"));
  }

  TEST_CASE("mukai_pairing examples") {
    const SurfaceModel a1 = preset("A1");
    CHECK(mukai_pairing(a1, MukaiClass::zero(1), MukaiClass::zero(1)) == 0);

    const MukaiClass v{0, {1}, 1};
    CHECK(mukai_pairing(a1, v, v) == 2);

    std::mt19937_64 rng(7);
    for (int a = -5; a <= 5; ++a) {
      const MukaiClass va = mukai_vector_curve_sheaf(a1, "C", a);
      for (int trial = 0; trial < 20; ++trial) {
        const MukaiClass w = test::random_class(rng, 1);
        CHECK(mukai_pairing(a1, va, w) == Rational(a + 1) * w.w0 + 2 * w.w2[0]);
      }
    }
  }

  TEST_CASE("mukai_pairing is not symmetric when c1 is non-zero") {
    const SurfaceModel m = blowup_model();
    const MukaiClass one{1, {0, 0}, 0};
    const MukaiClass h{0, {1, 0}, 0};
    // c1.h / 2 = 3/2 in one order, -3/2 in the other.
    CHECK(mukai_pairing(m, one, h) == Rational(3, 2));
    CHECK(mukai_pairing(m, h, one) == Rational(-3, 2));
    // <1, 1> = c1^2 / 8 = (9 - 1) / 8.
    CHECK(mukai_pairing(m, one, one) == 1);
  }

  TEST_CASE("mukai_pairing rejects rank mismatches") {
    const SurfaceModel a1 = preset("A1");
    CHECK_THROWS_AS(mukai_pairing(a1, MukaiClass::zero(2), MukaiClass::zero(1)), RankMismatch);
  }

  TEST_CASE("mukai_vector_curve_sheaf examples") {
    const SurfaceModel a1 = preset("A1");
    CHECK(mukai_vector_curve_sheaf(a1, "C", 0) == MukaiClass{0, {1}, 1});
    CHECK(mukai_vector_curve_sheaf(a1, "C", -1) == MukaiClass{0, {1}, 0});
    CHECK(mukai_vector_curve_sheaf(preset("A2"), "e2", 3) == MukaiClass{0, {0, 1}, 4});
    CHECK_THROWS_AS(mukai_vector_curve_sheaf(a1, "D", 0), UnknownName);
  }

  TEST_CASE("exp_class examples") {
    CHECK(exp_class(preset("A1"), {0}) == MukaiClass{1, {0}, 0});
    CHECK(exp_class(preset("A1"), {1}) == MukaiClass{1, {1}, -1});
    CHECK(exp_class(preset("Pell"), {1, 1}) == MukaiClass{1, {1, 1}, -1});
    CHECK_THROWS_AS(exp_class(preset("A1"), {1, 2}), RankMismatch);
  }

  TEST_CASE("mukai_pairing is bilinear on random rational classes") {
    std::mt19937_64 rng(11);
    for (const std::string name : {"A2", "D4", "Pell"}) {
      SurfaceModel m = preset(name);
      if (name == "Pell") m.c1 = {0, 0};
      for (int trial = 0; trial < 50; ++trial) {
        const MukaiClass u = test::random_class(rng, m.rank);
        const MukaiClass v = test::random_class(rng, m.rank);
        const MukaiClass w = test::random_class(rng, m.rank);
        const Rational s = test::random_rational(rng);
        auto combo = [&](const MukaiClass& x, const MukaiClass& y) {
          MukaiClass z = x;
          z.w0 = x.w0 + s * y.w0;
          for (std::size_t i = 0; i < z.w2.size(); ++i) z.w2[i] = x.w2[i] + s * y.w2[i];
          z.w4 = x.w4 + s * y.w4;
          return z;
        };
        CHECK(mukai_pairing(m, combo(u, v), w) == mukai_pairing(m, u, w) + s * mukai_pairing(m, v, w));
        CHECK(mukai_pairing(m, w, combo(u, v)) == mukai_pairing(m, w, u) + s * mukai_pairing(m, w, v));
      }
    }
  }

  TEST_CASE("bilinearity survives a non-zero c1") {
    std::mt19937_64 rng(5);
    const SurfaceModel m = blowup_model();
    for (int trial = 0; trial < 50; ++trial) {
      const MukaiClass u = test::random_class(rng, 2);
      const MukaiClass v = test::random_class(rng, 2);
      const MukaiClass w = test::random_class(rng, 2);
      MukaiClass sum = u;
      sum.w0 += v.w0;
      sum.w2[0] += v.w2[0];
      sum.w2[1] += v.w2[1];
      sum.w4 += v.w4;
      CHECK(mukai_pairing(m, sum, w) == mukai_pairing(m, u, w) + mukai_pairing(m, v, w));
    }
  }

  TEST_CASE("curve sheaves are spherical at the lattice level: <v, v> = 2") {
    for (const auto& name : test::curve_presets()) {
      const SurfaceModel m = preset(name);
      for (const auto& c : m.curves)
        for (int a = -5; a <= 5; ++a) {
          const MukaiClass v = mukai_vector_curve_sheaf(m, c.name, a);
          CHECK(mukai_pairing(m, v, v) == 2);
        }
    }
  }

  TEST_CASE("pairing with v(O_C(a)) matches (a+1) w0 - [C].w2") {
    std::mt19937_64 rng(2024);
    for (const auto& name : test::curve_presets()) {
      const SurfaceModel m = preset(name);
      const QMatrix g = m.gram_q();
      for (const auto& c : m.curves) {
        const QVector cls = to_rational(c.cls);
        for (int a = -5; a <= 5; ++a) {
          const MukaiClass v = mukai_vector_curve_sheaf(m, c.name, a);
          for (int trial = 0; trial < 5; ++trial) {
            const MukaiClass w = test::random_class(rng, m.rank);
            CHECK(mukai_pairing(m, v, w) == Rational(a + 1) * w.w0 - bilinear(g, cls, w.w2));
          }
        }
      }
    }
  }

  TEST_CASE("pairing is symmetric on the v0 = w0 = 0 sublattice") {
    std::mt19937_64 rng(3);
    for (const SurfaceModel& m : {preset("E6"), blowup_model(), preset("Pell")}) {
      for (int trial = 0; trial < 50; ++trial) {
        MukaiClass v = test::random_class(rng, m.rank);
        MukaiClass w = test::random_class(rng, m.rank);
        v.w0 = 0;
        w.w0 = 0;
        CHECK(mukai_pairing(m, v, w) == mukai_pairing(m, w, v));
      }
    }
  }
}
