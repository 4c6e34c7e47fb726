#pragma once

// Exact characteristic polynomials and spectral radii of action matrices.

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "mukai/actions.hpp"
#include "mukai/errors.hpp"
#include "mukai/polynomial.hpp"

namespace mukai {

/// Monic characteristic polynomial det(x I - A); degree equals dim A.
class CharPoly {
 public:
  explicit CharPoly(Polynomial p);

  const Polynomial& poly() const noexcept { return p_; }
  int degree() const noexcept { return p_.degree(); }

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  Polynomial p_;
};

/// Faddeev-LeVerrier over Q.
CharPoly char_poly(const QMatrix& m);
CharPoly char_poly(const ActionMatrix& m);

enum class UnitCertificate { kCertified, kNotUnit, kInapplicable };

const char* to_string(UnitCertificate c);

/// p = prod Phi_n^e * cofactor with no cyclotomic factor left in cofactor.
struct CyclotomicSplit {
  std::vector<std::pair<unsigned, int>> factors;  // (n, multiplicity)
  Polynomial cofactor;
};

/// Strips cyclotomic factors from a monic integer polynomial by trial
/// division with Phi_n for every n with phi(n) <= deg. nullopt when the
/// polynomial is not monic with integer coefficients.
std::optional<CyclotomicSplit> split_cyclotomic(const Polynomial& p);

/// kCertified iff every irreducible factor is cyclotomic, i.e. every root is
/// a root of unity.
UnitCertificate certify_unit_spectrum(const Polynomial& p);

struct RadiusResult {
  double radius = 0.0;
  bool certified_unit = false;
  // true when certified_unit came from the cyclotomic factorization rather
  // than the numeric | |z| - 1 | <= tol criterion.
  bool exact_certificate = false;
  double tolerance = 1e-9;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_estimate)
      : Error(what), best_estimate_(best_estimate) {}
  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

/// Roots of a square-free polynomial: Aberth iteration seeded on a circle,
/// then Newton polishing against the exact coefficients.
std::vector<std::complex<long double>> polynomial_roots(const Polynomial& p, int max_iterations = 10000);

RadiusResult spectral_radius(const CharPoly& poly, double tol = 1e-9);

struct Thm42Result {
  RadiusResult lhs;  // rho of the word's action
  RadiusResult rhs;  // rho of its pullback part f^*
  bool pass = false;
};

/// Compares rho(word^H) with rho(f^*); pass iff |lhs - rhs| <= tol max(1, rhs).
Thm42Result verify_thm42(const SurfaceModel& model, const Word& word, double tol = 1e-6);

}  // namespace mukai
