#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "mukai/matrix.hpp"

namespace mukai {

/// Univariate polynomial over Q, coefficients stored lowest degree first and
/// kept normalized (no trailing zeros).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  static Polynomial from_descending(std::vector<Rational> descending);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  std::vector<Rational> descending() const;
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  bool is_monic() const;
  bool is_integral() const;
  Polynomial monic() const;
  Polynomial derivative() const;

  Rational evaluate(const Rational& x) const;
  std::complex<long double> evaluate(std::complex<long double> z) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division; divisor must be non-zero.
DivMod divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Product of the distinct monic irreducible factors: p / gcd(p, p').
Polynomial squarefree_part(const Polynomial& p);

/// n-th cyclotomic polynomial, n >= 1. Cached, thread-safe.
const Polynomial& cyclotomic(unsigned n);

/// Euler totient.
unsigned euler_phi(unsigned n);

}  // namespace mukai
