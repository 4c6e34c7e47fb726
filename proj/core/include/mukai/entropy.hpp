#pragma once

// Dimension-level bookkeeping for phi = T_{O_C} o (- (x) L) on a (-2)-curve C.
// With m = deg M|_C, l = deg L|_C and p = deg P|_C (all negative), d_n(p) is
// the dimension of the top non-vanishing cohomology H^{n+2} of
// C_n(p) = RHom(O_C, phi^n(M) (x) P).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mukai/errors.hpp"
#include "mukai/matrix.hpp"

namespace mukai {

struct EntropyParams {
  std::int64_t m = -1;
  std::int64_t l = -1;
  std::int64_t p = -1;

  /// Throws InvalidParams naming the first non-negative degree.
  void validate() const;
};

/// dim H^0(P^1, O(d)) and dim H^1(P^1, O(d)).
std::int64_t h0_p1(std::int64_t d);
std::int64_t h1_p1(std::int64_t d);

/// dim H^j of D(q) = RHom(O_C, O_C (x) P) with deg P|_C = q < 0:
/// H^{j-1}(O(q-2)) + H^j(O(q)), so only j = 2 and j = 1 (q < -1) survive.
std::int64_t d_graded(std::int64_t q, int j);

struct DimSequence {
  EntropyParams params;
  std::vector<BigInt> values;  // d_1 .. d_N

  /// H^{n+2} is the top degree of C_n(p).
  static int top_degree(int n) { return n + 2; }
};

/// d_0(q) = h1(m+q-2), d_n(q) = d_{n-1}(l) * dim H^2(D(q)).
DimSequence d_n_recurrence(const EntropyParams& params, int count);

/// (1-m-l)(1-p)(1-l)^{n-1}.
BigInt d_n_closed_form(const EntropyParams& params, int n);

struct EntropyBound {
  std::vector<double> sequence;  // (1/n) log(e^{(n+2)t} d_n), n = 1..N
  double limit_estimate = 0.0;   // sequence[N]
  double analytic_limit = 0.0;   // t + log(1-l)
};

/// Growth rate of the t-weighted top Ext dimensions; a lower bound for h_t.
EntropyBound entropy_lower_bound(const EntropyParams& params, int count, double t = 0.0);

/// Natural log of a positive big integer.
double log_bigint(const BigInt& x);

enum class CellStatus { kZero, kNonZero, kUndetermined };

struct Cell {
  int degree = 0;
  CellStatus status = CellStatus::kUndetermined;
  std::optional<BigInt> dim;  // set only when the dimension is pinned down
};

struct ComplexRow {
  std::string name;             // "A_n(p)", "B_n(p)", "C_n(p)"
  bool applicable = true;       // B needs l + p < 0
  int zero_above = 0;           // H^j = 0 for every j > zero_above
  std::vector<Cell> cells;      // degrees n+1, n+2, n+3
};

/// The long-exact-sequence table for A_n(p) -> B_n(p) -> C_n(p).
struct VanishingTable {
  EntropyParams params;
  int n = 1;
  std::vector<ComplexRow> rows;  // A, B, C
};

VanishingTable vanishing_table(const EntropyParams& params, int n);

const char* to_string(CellStatus s);

}  // namespace mukai
