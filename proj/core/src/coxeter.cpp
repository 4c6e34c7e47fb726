#include "mukai/coxeter.hpp"

#include <deque>
#include <unordered_set>

#include "mukai/actions.hpp"
#include "mukai/errors.hpp"

namespace mukai {
namespace {

using Flat = std::vector<std::int64_t>;

struct FlatHash {
  std::size_t operator()(const Flat& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

Flat flatten(const QMatrix& m) {
  if (!m.square() || !m.is_integral()) throw Error("group enumeration needs square integral generators");
  Flat out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const BigInt& num = m(i, j).get_num();
      if (!num.fits_slong_p()) throw Error("group generator entry does not fit 64 bits");
      out.push_back(num.get_si());
    }
  return out;
}

// a * b for n x n flattened matrices; false on overflow.
bool multiply(const Flat& a, const Flat& b, std::size_t n, Flat& out) {
  out.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(aik, b[k * n + j], &prod)) return false;
        if (__builtin_add_overflow(out[i * n + j], prod, &out[i * n + j])) return false;
      }
    }
  return true;
}

}  // namespace

ClosureResult enumerate_matrix_group(const std::vector<QMatrix>& generators, std::size_t cap) {
  ClosureResult result;
  if (generators.empty()) {
    result.complete = true;
    result.order = 1;
    return result;
  }
  const std::size_t n = generators.front().rows();
  std::vector<Flat> gens;
  for (const auto& g : generators) {
    if (g.rows() != n) throw RankMismatch("group generators of different sizes");
    gens.push_back(flatten(g));
  }

  std::unordered_set<Flat, FlatHash> seen;
  std::deque<Flat> frontier;
  const Flat id = flatten(QMatrix::identity(n));
  seen.insert(id);
  frontier.push_back(id);
  Flat product;
  while (!frontier.empty()) {
    const Flat e = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      if (!multiply(e, g, n, product)) {
        result.order = seen.size();
        return result;  // entries outgrew 64 bits: not a finite group in practice
      }
      if (seen.insert(product).second) {
        if (seen.size() > cap) {
          result.order = seen.size();
          return result;
        }
        frontier.push_back(product);
      }
    }
  }
  result.complete = true;
  result.order = seen.size();
  return result;
}

std::vector<QMatrix> twist_h2_generators(const SurfaceModel& model) {
  std::vector<QMatrix> out;
  for (const auto& c : model.curves) out.push_back(h2_block(action_of_generator(model, Twist{c.name, 0})));
  return out;
}

}  // namespace mukai
