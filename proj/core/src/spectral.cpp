#include "mukai/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mukai {
namespace {

using Complex = std::complex<long double>;

constexpr double kSolverTolerance = 1e-9;

// Max |a_i| of a polynomial in long double.
long double coefficient_scale(const Polynomial& p) {
  long double s = 0;
  for (const auto& c : p.coefficients()) s = std::max(s, std::fabs(static_cast<long double>(c.get_d())));
  return s;
}

}  // namespace

CharPoly::CharPoly(Polynomial p) : p_(std::move(p)) {
  if (!p_.is_monic()) throw Error("characteristic polynomial must be monic");
}

CharPoly char_poly(const QMatrix& a) {
  if (!a.square()) throw RankMismatch("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    c[n - k] = -(a * m).trace() / static_cast<unsigned long>(k);
  }
  return CharPoly(Polynomial(std::move(c)));
}

CharPoly char_poly(const ActionMatrix& m) { return char_poly(m.matrix()); }

const char* to_string(UnitCertificate c) {
  switch (c) {
    case UnitCertificate::kCertified:
      return "certified";
    case UnitCertificate::kNotUnit:
      return "not_unit";
    case UnitCertificate::kInapplicable:
      return "inapplicable";
  }
  return "?";
}

std::optional<CyclotomicSplit> split_cyclotomic(const Polynomial& p) {
  if (!p.is_monic() || !p.is_integral()) return std::nullopt;
  CyclotomicSplit out;
  out.cofactor = p;
  const auto deg = static_cast<unsigned>(std::max(p.degree(), 1));
  // phi(n) >= sqrt(n/2), so phi(n) <= deg forces n <= 2 deg^2.
  const unsigned bound = 2 * deg * deg;
  for (unsigned n = 1; n <= bound && out.cofactor.degree() > 0; ++n) {
    const auto phi = static_cast<int>(euler_phi(n));
    int mult = 0;
    while (out.cofactor.degree() >= phi) {
      DivMod qr = divmod(out.cofactor, cyclotomic(n));
      if (!qr.remainder.is_zero()) break;
      out.cofactor = std::move(qr.quotient);
      ++mult;
    }
    if (mult > 0) out.factors.emplace_back(n, mult);
  }
  return out;
}

UnitCertificate certify_unit_spectrum(const Polynomial& p) {
  const auto split = split_cyclotomic(p);
  if (!split) return UnitCertificate::kInapplicable;
  return split->cofactor.degree() == 0 ? UnitCertificate::kCertified : UnitCertificate::kNotUnit;
}

std::vector<Complex> polynomial_roots(const Polynomial& poly, int max_iterations) {
  if (poly.degree() < 1) return {};
  const Polynomial p = poly.monic();
  const Polynomial dp = p.derivative();
  const int n = p.degree();
  if (n == 1) return {Complex(-static_cast<long double>(p.coeff(0).get_d()), 0)};

  // Initial guesses on a circle whose radius is the geometric mean of |roots|.
  const long double a0 = std::fabs(static_cast<long double>(p.coeff(0).get_d()));
  long double radius = a0 > 0 ? std::pow(a0, 1.0L / n) : 1.0L;
  radius = std::clamp(radius, 1e-3L, 1.0L + coefficient_scale(p));
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
  }

  // Aberth-Ehrlich simultaneous iteration.
  bool converged = false;
  for (int iter = 0; iter < max_iterations && !converged; ++iter) {
    converged = true;
    for (std::size_t k = 0; k < z.size(); ++k) {
      const Complex pz = p.evaluate(z[k]);
      if (pz == Complex(0)) continue;
      const Complex ratio = pz / dp.evaluate(z[k]);
      Complex repulsion = 0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != k) repulsion += 1.0L / (z[k] - z[j]);
      const Complex step = ratio / (1.0L - ratio * repulsion);
      z[k] -= step;
      if (std::abs(step) > 1e-15L * (1 + std::abs(z[k]))) converged = false;
    }
  }

  long double best = 0;
  for (const auto& r : z) best = std::max(best, std::abs(r));
  if (!converged) {
    throw ConvergenceError("root finder did not converge after " + std::to_string(max_iterations) + " iterations",
                           static_cast<double>(best));
  }

  // Newton polishing, then residual backstop.
  const long double scale = std::max(1.0L, coefficient_scale(p));
  for (auto& r : z) {
    for (int i = 0; i < 3; ++i) {
      const Complex d = dp.evaluate(r);
      if (d == Complex(0)) break;
      r -= p.evaluate(r) / d;
    }
    const long double bound = 1e-12L * scale * std::pow(1 + std::abs(r), static_cast<long double>(n));
    if (std::abs(p.evaluate(r)) > bound)
      throw ConvergenceError("root residual above backstop", static_cast<double>(best));
  }
  return z;
}

RadiusResult spectral_radius(const CharPoly& poly, double tol) {
  if (!(tol > 0)) throw Error("spectral_radius: tolerance must be positive");
  RadiusResult out;
  out.tolerance = tol;

  Polynomial rest = poly.poly();
  long double radius = 0;
  if (auto split = split_cyclotomic(rest)) {
    out.exact_certificate = true;
    if (!split->factors.empty()) radius = 1;
    rest = split->cofactor;
    out.certified_unit = rest.degree() == 0;
  }

  long double worst_unit_gap = 0;
  for (const auto& z : polynomial_roots(squarefree_part(rest))) {
    radius = std::max(radius, std::abs(z));
    worst_unit_gap = std::max(worst_unit_gap, std::fabs(std::abs(z) - 1));
  }
  if (!out.exact_certificate) out.certified_unit = worst_unit_gap <= tol;
  out.radius = static_cast<double>(radius);
  return out;
}

Thm42Result verify_thm42(const SurfaceModel& model, const Word& word, double tol) {
  check_word_names(model, word);
  Thm42Result out;
  out.lhs = spectral_radius(char_poly(compose_word(model, word)), kSolverTolerance);
  out.rhs = spectral_radius(char_poly(extend_isometry(standard_radius_reference(model, word), model.rank)),
                            kSolverTolerance);
  out.pass = std::fabs(out.lhs.radius - out.rhs.radius) <= tol * std::max(1.0, out.rhs.radius);
  return out;
}

}  // namespace mukai
