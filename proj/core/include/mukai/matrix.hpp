#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mukai {

using Rational = mpq_class;
using BigInt = mpz_class;

using QVector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

/// Dense row-major matrix over the rationals. Value type.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  static QMatrix from_integers(const IntMatrix& m);
  static QMatrix diagonal(const QVector& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QMatrix transpose() const;
  QMatrix block(std::size_t row, std::size_t col, std::size_t nrows, std::size_t ncols) const;
  Rational trace() const;
  bool is_integral() const;
  bool is_identity() const;
  bool is_zero() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QVector operator*(const QMatrix& a, const QVector& v);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QVector to_rational(const IntVector& v);

/// Exact determinant by fraction-keeping Gaussian elimination.
Rational determinant(QMatrix m);

/// Solves a x = b exactly; throws Error if a is singular.
QVector solve(QMatrix a, QVector b);

/// Bilinear form x^T g y.
Rational bilinear(const QMatrix& g, const QVector& x, const QVector& y);

std::string to_string(const Rational& q);

}  // namespace mukai
