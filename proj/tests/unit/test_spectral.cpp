#include <cmath>
#include <random>

#include "doctest.h"
#include "mukai/spectral.hpp"
#include "mukai/surface_io.hpp"
#include "mukai/verify.hpp"
#include "mukai/word_parser.hpp"
#include "support.hpp"

using namespace mukai;

namespace {

const double kSilverRatio = 3.0 + 2.0 * std::sqrt(2.0);

Polynomial desc(std::vector<Rational> c) { return Polynomial::from_descending(std::move(c)); }

QMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long span = 5, long max_den = 1) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = test::random_rational(rng, span, max_den);
  return m;
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("polynomial arithmetic") {
    const Polynomial p = desc({1, -3, 2});
    CHECK(p.degree() == 2);
    CHECK(p.is_monic());
    CHECK(p.evaluate(Rational(1)) == 0);
    CHECK(p.derivative() == desc({2, -3}));
    CHECK(p * desc({1, 1}) == desc({1, -2, -1, 2}));
    const DivMod qr = divmod(desc({1, 0, 0, 5}), desc({1, 1}));
    CHECK(qr.quotient * desc({1, 1}) + qr.remainder == desc({1, 0, 0, 5}));
    CHECK(qr.remainder.degree() < 1);
    CHECK(gcd(desc({1, -3, 2}), desc({1, -1})) == desc({1, -1}));
    CHECK(squarefree_part(desc({1, -1}) * desc({1, -1}) * desc({1, 1})) == desc({1, 0, -1}));
    CHECK(Polynomial().degree() == -1);
    CHECK(desc({0, 0, 3}).degree() == 0);
  }

  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == desc({1, -1}));
    CHECK(cyclotomic(2) == desc({1, 1}));
    CHECK(cyclotomic(3) == desc({1, 1, 1}));
    CHECK(cyclotomic(4) == desc({1, 0, 1}));
    CHECK(cyclotomic(6) == desc({1, -1, 1}));
    CHECK(cyclotomic(12) == desc({1, 0, -1, 0, 1}));
    for (unsigned n = 1; n <= 40; ++n) {
      CHECK(static_cast<unsigned>(cyclotomic(n).degree()) == euler_phi(n));
      // x^n - 1 is the product of Phi_d over d | n.
      Polynomial prod = Polynomial::constant(1);
      for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) prod = prod * cyclotomic(d);
      CHECK(prod == Polynomial::monomial(1, n) - Polynomial::constant(1));
    }
  }

  TEST_CASE("char_poly examples") {
    CHECK(char_poly(QMatrix::identity(3)).poly() == desc({1, -3, 3, -1}));
    const QMatrix pell = QMatrix::from_integers({{3, 4}, {2, 3}});
    CHECK(char_poly(pell).poly() == desc({1, -6, 1}));
    const SurfaceModel a1 = preset("A1");
    const Polynomial t = char_poly(action_of_generator(a1, Twist{"C", 0})).poly();
    CHECK(t.degree() == 3);
    CHECK(divmod(desc({1, 0, -1}) * desc({1, 0, -1}), t).remainder.is_zero());
  }

  TEST_CASE("char_poly agrees with det(xI - A) at sample points") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + trial % 6;
      const QMatrix a = random_matrix(rng, n, 6, trial % 2 ? 3 : 1);
      const Polynomial chi = char_poly(a).poly();
      REQUIRE(chi.degree() == static_cast<int>(n));
      for (int x = -3; x <= static_cast<int>(n); ++x) {
        QMatrix shifted = QMatrix::identity(n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) shifted(i, j) = (i == j ? Rational(x) : Rational(0)) - a(i, j);
        CHECK(chi.evaluate(Rational(x)) == determinant(shifted));
      }
    }
  }

  TEST_CASE("char_poly(AB) = char_poly(BA)") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 2 + trial % 5;
      const QMatrix a = random_matrix(rng, n, 4, 2);
      const QMatrix b = random_matrix(rng, n, 4, 2);
      CHECK(char_poly(a * b) == char_poly(b * a));
    }
    const SurfaceModel m = test::data_model("a2_swap.json");
    for (const Word& w : random_words(m, 50, 5)) {
      const ActionMatrix x = compose_word(m, w);
      const ActionMatrix y = action_of_generator(m, Pullback{"sigma"});
      CHECK(char_poly(x * y) == char_poly(y * x));
    }
  }

  TEST_CASE("certify_unit_spectrum examples") {
    CHECK(certify_unit_spectrum(desc({1, 0, -1})) == UnitCertificate::kCertified);
    CHECK(certify_unit_spectrum(desc({1, -6, 1})) == UnitCertificate::kNotUnit);
    CHECK(certify_unit_spectrum(desc({1, 1, 1})) == UnitCertificate::kCertified);
    CHECK(certify_unit_spectrum(desc({1, Rational(1, 2), 1})) == UnitCertificate::kInapplicable);
    // x^2 - x + 1 is Phi_6; 2x^2 + 1 is not monic.
    CHECK(certify_unit_spectrum(desc({1, -1, 1}) * desc({1, -1})) == UnitCertificate::kCertified);
    CHECK(certify_unit_spectrum(desc({1, 0, 0, -2})) == UnitCertificate::kNotUnit);
    // Salem-type x^4 - x^3 - x^2 - x + 1 has a real root > 1.
    CHECK(certify_unit_spectrum(desc({1, -1, -1, -1, 1})) == UnitCertificate::kNotUnit);
  }

  TEST_CASE("split_cyclotomic multiplicities") {
    const Polynomial p = cyclotomic(1) * cyclotomic(1) * cyclotomic(5) * desc({1, -6, 1});
    const auto split = split_cyclotomic(p);
    REQUIRE(split);
    CHECK(split->cofactor == desc({1, -6, 1}));
    CHECK(split->factors == std::vector<std::pair<unsigned, int>>{{1, 2}, {5, 1}});
    CHECK_FALSE(split_cyclotomic(desc({2, 1})));
  }

  TEST_CASE("spectral_radius examples") {
    const RadiusResult silver = spectral_radius(CharPoly(desc({1, -6, 1})));
    CHECK(silver.radius == doctest::Approx(kSilverRatio).epsilon(1e-12));
    CHECK_FALSE(silver.certified_unit);

    const RadiusResult unit = spectral_radius(CharPoly(desc({1, -3, 3, -1})));
    CHECK(unit.radius == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(unit.certified_unit);
    CHECK(unit.exact_certificate);

    const SurfaceModel a1 = preset("A1");
    const RadiusResult cor = spectral_radius(char_poly(compose_word(a1, Word({Twist{"C", 0}, Tensor{QVector{1}}}))));
    CHECK(std::abs(cor.radius - 1.0) <= 1e-9);
    CHECK(cor.certified_unit);
  }

  TEST_CASE("spectral_radius on non-integral polynomials uses the numeric criterion") {
    const RadiusResult half = spectral_radius(CharPoly(desc({1, Rational(-1, 2)})));
    CHECK(half.radius == doctest::Approx(0.5));
    CHECK_FALSE(half.certified_unit);
    CHECK_FALSE(half.exact_certificate);
    // (x - 3/5 - 4/5 i)(x - 3/5 + 4/5 i) = x^2 - 6/5 x + 1, roots on the unit circle.
    const RadiusResult circle = spectral_radius(CharPoly(desc({1, Rational(-6, 5), 1})));
    CHECK(circle.radius == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(circle.certified_unit);
    CHECK_FALSE(circle.exact_certificate);
  }

  TEST_CASE("polynomial_roots on higher degree") {
    // (x - 2)(x + 3)(x^2 + 1)(x - 1/2)
    const Polynomial p = desc({1, -2}) * desc({1, 3}) * desc({1, 0, 1}) * desc({1, Rational(-1, 2)});
    const auto roots = polynomial_roots(p);
    REQUIRE(roots.size() == 5);
    long double max_abs = 0;
    for (const auto& z : roots) {
      max_abs = std::max(max_abs, std::abs(z));
      CHECK(std::abs(p.evaluate(z)) < 1e-9L);
    }
    CHECK(static_cast<double>(max_abs) == doctest::Approx(3.0).epsilon(1e-12));
  }

  TEST_CASE("rho(M^m) = rho(M)^m") {
    const SurfaceModel pell = preset("Pell");
    const SurfaceModel swap = test::data_model("a2_swap.json");
    for (const auto* m : {&pell, &swap}) {
      for (const Word& w : random_words(*m, 40, 77)) {
        const ActionMatrix a = compose_word(*m, w);
        const double r1 = spectral_radius(char_poly(a)).radius;
        ActionMatrix power = a;
        for (int k = 2; k <= 3; ++k) {
          power = power * a;
          const double rk = spectral_radius(char_poly(power)).radius;
          CHECK(std::abs(rk - std::pow(r1, k)) <= 1e-6 * std::max(1.0, std::pow(r1, k)));
        }
      }
    }
  }

  TEST_CASE("verify_thm42 examples") {
    const Thm42Result a2 = verify_thm42(preset("A2"), parse_word("T(e1,0)*T(e2,1)*L(H)"));
    CHECK(a2.lhs.radius == doctest::Approx(1.0));
    CHECK(a2.rhs.radius == doctest::Approx(1.0));
    CHECK(a2.pass);

    const Thm42Result pell = verify_thm42(preset("Pell"), parse_word("L(B)*F(M)"));
    CHECK(pell.lhs.radius == doctest::Approx(kSilverRatio).epsilon(1e-12));
    CHECK(pell.rhs.radius == doctest::Approx(kSilverRatio).epsilon(1e-12));
    CHECK(pell.pass);

    for (const auto& name : preset_names()) {
      const Thm42Result s = verify_thm42(preset(name), parse_word("S(1)"));
      CHECK(s.lhs.radius == doctest::Approx(1.0));
      CHECK(s.rhs.radius == doctest::Approx(1.0));
      CHECK(s.pass);
    }
  }

  TEST_CASE("prop44 block structure on Pell words") {
    const SurfaceModel pell = preset("Pell");
    for (const Word& w : random_words(pell, 50, 123)) {
      const Prop44Outcome o = check_prop44(pell, w);
      CHECK(o.block_triangular);
      CHECK(o.charpoly_factorizes);
      CHECK(o.pass);
    }
  }
}
