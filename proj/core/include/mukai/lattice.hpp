#pragma once

// Even cohomology lattice H^0 + H^2 + H^4 of a surface, Mukai vectors of
// curve sheaves and the Mukai pairing. H^0 has basis 1, H^4 the point class
// [x] with integral 1, and H^2 products are read through the Gram matrix.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mukai/matrix.hpp"

namespace mukai {

struct CurveRecord {
  std::string name;
  IntVector cls;  // cycle class [C] in the H^2 basis

  friend bool operator==(const CurveRecord&, const CurveRecord&) = default;
};

/// Abstract even-cohomology model of a surface. Immutable once built.
struct SurfaceModel {
  int rank = 0;
  IntMatrix gram;
  IntVector c1;  // c_1(S) = -K_S
  std::vector<CurveRecord> curves;
  std::map<std::string, IntMatrix> isometries;    // f^* on H^2
  std::map<std::string, IntVector> line_bundles;  // c_1(L)

  const CurveRecord* find_curve(std::string_view name) const;
  QMatrix gram_q() const { return QMatrix::from_integers(gram); }

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

/// Element (w0, w2, w4) of H^0 + H^2 + H^4 with exact coefficients.
struct MukaiClass {
  Rational w0;
  QVector w2;
  Rational w4;

  static MukaiClass zero(int rank);
  QVector coordinates() const;  // (w0, w2..., w4)
  static MukaiClass from_coordinates(const QVector& coords);

  friend bool operator==(const MukaiClass&, const MukaiClass&) = default;
};

struct Violation {
  std::string entity;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  // Dynkin type of each connected component of the curve graph, e.g. "A2".
  // Filled only when the graph is A-D-E.
  std::vector<std::string> dynkin_components;

  bool ok() const noexcept { return violations.empty(); }
  std::string to_string() const;
};

/// Checks every model invariant; violations are data, never thrown.
ValidationReport validate_surface(const SurfaceModel& model);

/// Intersection product x.y of two H^2 classes through the Gram matrix.
Rational intersect(const SurfaceModel& model, const QVector& x, const QVector& y);

/// <v, w> = integral of exp(c1/2) . v^dual . w, with v^dual = (v0, -v2, v4).
/// Not symmetric in general.
Rational mukai_pairing(const SurfaceModel& model, const MukaiClass& v, const MukaiClass& w);

/// v(O_C(a)) = [C] + (a+1)[x].
MukaiClass mukai_vector_curve_sheaf(const SurfaceModel& model, std::string_view curve, std::int64_t a);

/// exp(L) truncated to degree 4: (1, L, L.L/2).
MukaiClass exp_class(const SurfaceModel& model, const QVector& bundle);

/// Cup product in H^{2*}; degree-4 part of w2.v2 goes through the Gram matrix.
MukaiClass cup(const SurfaceModel& model, const MukaiClass& v, const MukaiClass& w);

}  // namespace mukai
