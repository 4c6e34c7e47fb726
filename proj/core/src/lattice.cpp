#include "mukai/lattice.hpp"

#include <set>
#include <sstream>

#include "mukai/dynkin.hpp"
#include "mukai/errors.hpp"

namespace mukai {
namespace {

void require_rank(const SurfaceModel& model, std::size_t size, const char* what) {
  if (size != static_cast<std::size_t>(model.rank)) {
    std::ostringstream os;
    os << what << " has length " << size << ", model rank is " << model.rank;
    throw RankMismatch(os.str());
  }
}

// x.y through the integer Gram matrix; no rank checks.
Rational form(const IntMatrix& gram, const QVector& x, const QVector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (gram[i][j] != 0) row += Rational(static_cast<long>(gram[i][j])) * y[j];
    s += x[i] * row;
  }
  return s;
}

bool square_of_size(const IntMatrix& m, std::size_t n) {
  if (m.size() != n) return false;
  for (const auto& row : m)
    if (row.size() != n) return false;
  return true;
}

QVector apply(const IntMatrix& m, const IntVector& v) {
  QVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += Rational(static_cast<long>(m[i][j] * v[j]));
  return out;
}

}  // namespace

const CurveRecord* SurfaceModel::find_curve(std::string_view name) const {
  for (const auto& c : curves)
    if (c.name == name) return &c;
  return nullptr;
}

MukaiClass MukaiClass::zero(int rank) { return MukaiClass{0, QVector(static_cast<std::size_t>(rank)), 0}; }

QVector MukaiClass::coordinates() const {
  QVector out;
  out.reserve(w2.size() + 2);
  out.push_back(w0);
  out.insert(out.end(), w2.begin(), w2.end());
  out.push_back(w4);
  return out;
}

MukaiClass MukaiClass::from_coordinates(const QVector& coords) {
  if (coords.size() < 2) throw RankMismatch("Mukai coordinates need at least H^0 and H^4");
  return MukaiClass{coords.front(), QVector(coords.begin() + 1, coords.end() - 1), coords.back()};
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) os << "  " << v.entity << ": " << v.message << '\n';
  return os.str();
}

ValidationReport validate_surface(const SurfaceModel& model) {
  ValidationReport report;
  auto add = [&](std::string entity, std::string message) {
    report.violations.push_back({std::move(entity), std::move(message)});
  };

  if (model.rank <= 0) {
    add("rank", "rank must be positive");
    return report;
  }
  const auto r = static_cast<std::size_t>(model.rank);
  if (!square_of_size(model.gram, r)) {
    add("gram", "gram must be a " + std::to_string(r) + "x" + std::to_string(r) + " matrix");
    return report;
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (model.gram[i][j] != model.gram[j][i])
        add("gram", "not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");

  bool c1_ok = model.c1.size() == r;
  if (!c1_ok) add("c1", "length " + std::to_string(model.c1.size()) + " != rank");
  const QVector c1 = c1_ok ? to_rational(model.c1) : QVector(r);

  std::set<std::string> names;
  std::set<IntVector> classes;
  std::vector<const CurveRecord*> good;
  for (const auto& curve : model.curves) {
    const std::string entity = "curve " + curve.name;
    if (curve.name.empty()) add("curve", "empty curve name");
    if (!names.insert(curve.name).second) add(entity, "duplicate curve name");
    if (curve.cls.size() != r) {
      add(entity, "class length " + std::to_string(curve.cls.size()) + " != rank");
      continue;
    }
    if (!classes.insert(curve.cls).second) add(entity, "duplicate curve class");
    const QVector cls = to_rational(curve.cls);
    const Rational self = form(model.gram, cls, cls);
    if (self != -2) add(entity, "self-intersection " + self.get_str() + " != -2");
    if (c1_ok) {
      const Rational k = form(model.gram, c1, cls);
      if (k != 0) add(entity, "c1.C = " + k.get_str() + ", expected 0 (K_S.C = 0)");
    }
    good.push_back(&curve);
  }

  // Dual graph: pairings must be 0/1 and components Dynkin of type A, D, E.
  bool simple_graph = true;
  Adjacency adj(good.size(), std::vector<int>(good.size(), 0));
  for (std::size_t i = 0; i < good.size(); ++i) {
    for (std::size_t j = i + 1; j < good.size(); ++j) {
      const Rational x = form(model.gram, to_rational(good[i]->cls), to_rational(good[j]->cls));
      if (x == 1) {
        adj[i][j] = adj[j][i] = 1;
      } else if (x != 0) {
        simple_graph = false;
        add("curves " + good[i]->name + "," + good[j]->name,
            "adjacency not A-D-E: intersection number " + x.get_str() + " (must be 0 or 1)");
      }
    }
  }
  if (simple_graph) {
    for (const auto& comp : connected_components(adj)) {
      Adjacency sub(comp.size(), std::vector<int>(comp.size(), 0));
      for (std::size_t a = 0; a < comp.size(); ++a)
        for (std::size_t b = 0; b < comp.size(); ++b) sub[a][b] = adj[comp[a]][comp[b]];
      if (auto type = classify_dynkin(sub)) {
        report.dynkin_components.push_back(*type);
      } else {
        std::string members;
        for (auto idx : comp) members += (members.empty() ? "" : ",") + good[idx]->name;
        add("curves " + members, "adjacency not A-D-E: component is not a Dynkin diagram");
      }
    }
  }

  for (const auto& [name, m] : model.isometries) {
    const std::string entity = "isometry " + name;
    if (!square_of_size(m, r)) {
      add(entity, "must be a " + std::to_string(r) + "x" + std::to_string(r) + " matrix");
      continue;
    }
    const QMatrix mq = QMatrix::from_integers(m);
    const QMatrix g = model.gram_q();
    if (mq.transpose() * g * mq != g) add(entity, "does not preserve the intersection form (M^T G M != G)");
    if (c1_ok && mq * c1 != c1) add(entity, "does not fix c1");
    std::set<IntVector> images;
    bool permutes = true;
    for (const auto* curve : good) {
      const QVector img = apply(m, curve->cls);
      IntVector img_int;
      for (const auto& q : img) img_int.push_back(q.get_num().get_si());
      if (!classes.contains(img_int)) {
        add(entity, "image of curve " + curve->name + " is not a declared curve class");
        permutes = false;
      } else {
        images.insert(img_int);
      }
    }
    if (permutes && images.size() != good.size()) add(entity, "does not permute the curve classes");
  }

  for (const auto& [name, v] : model.line_bundles)
    if (v.size() != r) add("line bundle " + name, "length " + std::to_string(v.size()) + " != rank");

  return report;
}

Rational intersect(const SurfaceModel& model, const QVector& x, const QVector& y) {
  require_rank(model, x.size(), "H^2 class");
  require_rank(model, y.size(), "H^2 class");
  return form(model.gram, x, y);
}

Rational mukai_pairing(const SurfaceModel& model, const MukaiClass& v, const MukaiClass& w) {
  require_rank(model, v.w2.size(), "left Mukai class");
  require_rank(model, w.w2.size(), "right Mukai class");
  const QVector c1 = to_rational(model.c1);
  require_rank(model, c1.size(), "c1");

  // v^dual . w = (v0 w0, v0 w2 - w0 v2, v0 w4 - v2.w2 + v4 w0)
  QVector mid(v.w2.size());
  for (std::size_t i = 0; i < mid.size(); ++i) mid[i] = v.w0 * w.w2[i] - w.w0 * v.w2[i];
  const Rational top = v.w0 * w.w4 - form(model.gram, v.w2, w.w2) + v.w4 * w.w0;

  // times exp(c1/2) = (1, c1/2, c1^2/8), integrated
  return top + form(model.gram, c1, mid) / 2 + form(model.gram, c1, c1) * v.w0 * w.w0 / 8;
}

MukaiClass mukai_vector_curve_sheaf(const SurfaceModel& model, std::string_view curve, std::int64_t a) {
  const CurveRecord* c = model.find_curve(curve);
  if (c == nullptr) throw UnknownName("curve", std::string(curve));
  require_rank(model, c->cls.size(), "curve class");
  return MukaiClass{0, to_rational(c->cls), Rational(static_cast<long>(a)) + 1};
}

MukaiClass exp_class(const SurfaceModel& model, const QVector& bundle) {
  require_rank(model, bundle.size(), "line bundle class");
  return MukaiClass{1, bundle, form(model.gram, bundle, bundle) / 2};
}

MukaiClass cup(const SurfaceModel& model, const MukaiClass& v, const MukaiClass& w) {
  require_rank(model, v.w2.size(), "left Mukai class");
  require_rank(model, w.w2.size(), "right Mukai class");
  MukaiClass out;
  out.w0 = v.w0 * w.w0;
  out.w2.resize(v.w2.size());
  for (std::size_t i = 0; i < v.w2.size(); ++i) out.w2[i] = v.w0 * w.w2[i] + w.w0 * v.w2[i];
  out.w4 = v.w0 * w.w4 + form(model.gram, v.w2, w.w2) + v.w4 * w.w0;
  return out;
}

}  // namespace mukai
