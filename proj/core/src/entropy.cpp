#include "mukai/entropy.hpp"

#include <algorithm>
#include <cmath>

namespace mukai {
namespace {

// dim H^i(P^1, O(d)).
std::int64_t h_p1(int i, std::int64_t d) {
  if (i == 0) return h0_p1(d);
  if (i == 1) return h1_p1(d);
  return 0;
}

BigInt big(std::int64_t x) { return BigInt(static_cast<long>(x)); }

// d_k(q): top cohomology of C_k(q), for any q < 0.
BigInt d_at(const EntropyParams& params, int k, std::int64_t q) {
  if (k == 0) return big(h1_p1(params.m + q - 2));
  BigInt chain = big(h1_p1(params.m + params.l - 2));  // d_0(l)
  for (int i = 1; i < k; ++i) chain *= big(d_graded(params.l, 2));
  return chain * big(d_graded(q, 2));
}

Cell zero_cell(int degree) { return Cell{degree, CellStatus::kZero, BigInt(0)}; }

Cell dim_cell(int degree, const BigInt& dim) {
  return Cell{degree, dim == 0 ? CellStatus::kZero : CellStatus::kNonZero, dim};
}

}  // namespace

void EntropyParams::validate() const {
  if (m >= 0) throw InvalidParams("m = " + std::to_string(m) + " violates deg_C(M|_C) = m < 0");
  if (l >= 0) throw InvalidParams("l = " + std::to_string(l) + " violates deg_C(L|_C) = l < 0");
  if (p >= 0) throw InvalidParams("p = " + std::to_string(p) + " violates deg_C(P|_C) = p < 0");
}

std::int64_t h0_p1(std::int64_t d) { return std::max<std::int64_t>(0, d + 1); }

std::int64_t h1_p1(std::int64_t d) { return std::max<std::int64_t>(0, -d - 1); }

std::int64_t d_graded(std::int64_t q, int j) {
  if (q >= 0) throw InvalidParams("D(q) needs q < 0, got q = " + std::to_string(q));
  return h_p1(j - 1, q - 2) + h_p1(j, q);
}

DimSequence d_n_recurrence(const EntropyParams& params, int count) {
  params.validate();
  if (count < 1) throw InvalidParams("sequence length must be at least 1");
  DimSequence seq{params, {}};
  seq.values.reserve(static_cast<std::size_t>(count));
  BigInt prev_l = big(h1_p1(params.m + params.l - 2));  // d_0(l)
  for (int n = 1; n <= count; ++n) {
    seq.values.push_back(prev_l * big(d_graded(params.p, 2)));  // d_n(p)
    prev_l *= big(d_graded(params.l, 2));                      // d_n(l)
  }
  return seq;
}

BigInt d_n_closed_form(const EntropyParams& params, int n) {
  params.validate();
  if (n < 1) throw InvalidParams("n must be at least 1");
  BigInt power;
  mpz_pow_ui(power.get_mpz_t(), big(1 - params.l).get_mpz_t(), static_cast<unsigned long>(n - 1));
  return big(1 - params.m - params.l) * big(1 - params.p) * power;
}

double log_bigint(const BigInt& x) {
  if (sgn(x) <= 0) throw Error("log of a non-positive integer");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

EntropyBound entropy_lower_bound(const EntropyParams& params, int count, double t) {
  if (count < 2) throw InvalidParams("entropy sequence needs N >= 2");
  const DimSequence seq = d_n_recurrence(params, count);
  EntropyBound out;
  out.sequence.reserve(seq.values.size());
  for (std::size_t i = 0; i < seq.values.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    out.sequence.push_back((log_bigint(seq.values[i]) + (n + 2) * t) / n);
  }
  out.limit_estimate = out.sequence.back();
  out.analytic_limit = t + std::log(static_cast<double>(1 - params.l));
  return out;
}

VanishingTable vanishing_table(const EntropyParams& params, int n) {
  params.validate();
  if (n < 1) throw InvalidParams("n must be at least 1");
  VanishingTable table{params, n, {}};

  ComplexRow a{"A_n(p)", true, n + 3, {}};
  const BigInt a_top = d_at(params, n - 1, params.l) * big(d_graded(params.p, 2));
  if (n == 1) {
    // A_1 = C_0(l) (x) D(p) with C_0(l) concentrated in degree 2.
    const BigInt base = d_at(params, 0, params.l);
    a.cells = {zero_cell(2), dim_cell(3, base * big(d_graded(params.p, 1))), dim_cell(4, a_top)};
  } else {
    a.cells = {Cell{n + 1, CellStatus::kUndetermined, {}}, Cell{n + 2, CellStatus::kUndetermined, {}},
               dim_cell(n + 3, a_top)};
  }

  ComplexRow b{"B_n(p)", params.l + params.p < 0, n + 1, {}};
  if (b.applicable) {
    b.cells = {dim_cell(n + 1, d_at(params, n - 1, params.l + params.p)), zero_cell(n + 2), zero_cell(n + 3)};
  } else {
    b.cells = {Cell{n + 1, CellStatus::kUndetermined, {}}, Cell{n + 2, CellStatus::kUndetermined, {}},
               Cell{n + 3, CellStatus::kUndetermined, {}}};
  }

  ComplexRow c{"C_n(p)", true, n + 2, {}};
  // For n = 1, H^2(B_1) injects into H^2(C_1) because H^2(A_1) = 0.
  const Cell c_low = n == 1 ? Cell{2, CellStatus::kNonZero, {}} : Cell{n + 1, CellStatus::kUndetermined, {}};
  c.cells = {c_low, dim_cell(n + 2, d_at(params, n, params.p)), zero_cell(n + 3)};

  table.rows = {std::move(a), std::move(b), std::move(c)};
  return table;
}

const char* to_string(CellStatus s) {
  switch (s) {
    case CellStatus::kZero:
      return "zero";
    case CellStatus::kNonZero:
      return "nonzero";
    case CellStatus::kUndetermined:
      return "undetermined";
  }
  return "?";
}

}  // namespace mukai
