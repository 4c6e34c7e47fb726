#include "mukai/actions.hpp"

#include <sstream>

#include "mukai/errors.hpp"

namespace mukai {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

MukaiClass basis_class(int rank, std::size_t j) {
  QVector coords(static_cast<std::size_t>(rank) + 2);
  coords[j] = 1;
  return MukaiClass::from_coordinates(coords);
}

QMatrix twist_matrix(const SurfaceModel& model, const Twist& t) {
  const MukaiClass v = mukai_vector_curve_sheaf(model, t.curve, t.a);
  const QVector vc = v.coordinates();
  const std::size_t n = vc.size();
  // T(w) = w - <v, w> v, so T = I - v phi^T with phi_j = <v, e_j>.
  QMatrix m = QMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Rational phi = mukai_pairing(model, v, basis_class(model.rank, j));
    if (sgn(phi) == 0) continue;
    for (std::size_t i = 0; i < n; ++i) m(i, j) -= vc[i] * phi;
  }
  return m;
}

QVector bundle_class(const SurfaceModel& model, const Tensor& t) {
  if (const auto* name = std::get_if<std::string>(&t.bundle)) {
    auto it = model.line_bundles.find(*name);
    if (it == model.line_bundles.end()) throw UnknownName("line bundle", *name);
    return to_rational(it->second);
  }
  return std::get<QVector>(t.bundle);
}

QMatrix tensor_matrix(const SurfaceModel& model, const Tensor& t) {
  const MukaiClass e = exp_class(model, bundle_class(model, t));
  const std::size_t n = static_cast<std::size_t>(model.rank) + 2;
  QMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const QVector col = cup(model, e, basis_class(model.rank, j)).coordinates();
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

const IntMatrix& isometry(const SurfaceModel& model, const std::string& name) {
  auto it = model.isometries.find(name);
  if (it == model.isometries.end()) throw UnknownName("isometry", name);
  return it->second;
}

}  // namespace

Word::Word(std::vector<Generator> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw Error("a word needs at least one generator");
}

std::string to_string(const Generator& g) {
  return std::visit(
      Overloaded{
          [](const Twist& t) { return "T(" + t.curve + "," + std::to_string(t.a) + ")"; },
          [](const Tensor& t) {
            if (const auto* name = std::get_if<std::string>(&t.bundle)) return "L(" + *name + ")";
            std::string s = "L[";
            const auto& v = std::get<QVector>(t.bundle);
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
            return s + "]";
          },
          [](const Pullback& p) { return "F(" + p.isometry + ")"; },
          [](const Shift& s) { return "S(" + std::to_string(s.k) + ")"; },
      },
      g);
}

std::string Word::to_string() const {
  std::string s;
  for (const auto& g : generators_) s += (s.empty() ? "" : "*") + mukai::to_string(g);
  return s;
}

ActionMatrix::ActionMatrix(QMatrix m, int rank) : m_(std::move(m)), rank_(rank) {
  const auto n = static_cast<std::size_t>(rank) + 2;
  if (m_.rows() != n || m_.cols() != n) throw RankMismatch("action matrix must be (rank+2)x(rank+2)");
}

MukaiClass ActionMatrix::apply(const MukaiClass& w) const {
  return MukaiClass::from_coordinates(m_ * w.coordinates());
}

bool ActionMatrix::block_lower_triangular() const {
  const std::size_t n = dim();
  for (std::size_t j = 1; j < n; ++j)
    if (sgn(m_(0, j)) != 0) return false;
  for (std::size_t i = h2_begin(); i < h4_index(); ++i)
    if (sgn(m_(i, h4_index())) != 0) return false;
  return true;
}

ActionMatrix operator*(const ActionMatrix& a, const ActionMatrix& b) {
  if (a.rank_ != b.rank_) throw RankMismatch("composing actions of different rank");
  return ActionMatrix(a.m_ * b.m_, a.rank_);
}

ActionMatrix action_of_generator(const SurfaceModel& model, const Generator& g) {
  const std::size_t n = static_cast<std::size_t>(model.rank) + 2;
  QMatrix m = std::visit(
      Overloaded{
          [&](const Twist& t) { return twist_matrix(model, t); },
          [&](const Tensor& t) { return tensor_matrix(model, t); },
          [&](const Pullback& p) {
            return extend_isometry(QMatrix::from_integers(isometry(model, p.isometry)), model.rank).matrix();
          },
          [&](const Shift& s) {
            QMatrix id = QMatrix::identity(n);
            if (s.k % 2 != 0)
              for (std::size_t i = 0; i < n; ++i) id(i, i) = -1;
            return id;
          },
      },
      g);
  return ActionMatrix(std::move(m), model.rank);
}

ActionMatrix compose_word(const SurfaceModel& model, const Word& word) {
  const auto& gens = word.generators();
  ActionMatrix acc = action_of_generator(model, gens.front());
  for (std::size_t i = 1; i < gens.size(); ++i) acc = acc * action_of_generator(model, gens[i]);
  return acc;
}

QMatrix h2_block(const ActionMatrix& mat) {
  const auto r = static_cast<std::size_t>(mat.rank());
  return mat.matrix().block(1, 1, r, r);
}

QMatrix standard_radius_reference(const SurfaceModel& model, const Word& word) {
  QMatrix f = QMatrix::identity(static_cast<std::size_t>(model.rank));
  for (const auto& g : word.generators())
    if (const auto* p = std::get_if<Pullback>(&g)) f = f * QMatrix::from_integers(isometry(model, p->isometry));
  return f;
}

ActionMatrix extend_isometry(const QMatrix& h2, int rank) {
  const auto r = static_cast<std::size_t>(rank);
  if (h2.rows() != r || h2.cols() != r) throw RankMismatch("isometry size does not match rank");
  QMatrix m = QMatrix::identity(r + 2);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i + 1, j + 1) = h2(i, j);
  return ActionMatrix(std::move(m), rank);
}

void check_word_names(const SurfaceModel& model, const Word& word) {
  for (const auto& g : word.generators()) {
    if (const auto* t = std::get_if<Twist>(&g); t && !model.find_curve(t->curve))
      throw UnknownName("curve", t->curve);
    if (const auto* t = std::get_if<Tensor>(&g)) bundle_class(model, *t);
    if (const auto* p = std::get_if<Pullback>(&g)) isometry(model, p->isometry);
  }
}

}  // namespace mukai
