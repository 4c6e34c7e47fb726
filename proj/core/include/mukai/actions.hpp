#pragma once

// Cohomological actions of autoequivalence generators on H^{2*}, acting on
// coordinate columns (w0, w2[0..r-1], w4).

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mukai/lattice.hpp"
#include "mukai/matrix.hpp"

namespace mukai {

/// Spherical twist T_{O_C(a)}.
struct Twist {
  std::string curve;
  std::int64_t a = 0;
  friend bool operator==(const Twist&, const Twist&) = default;
};

/// - (x) L, with L either a declared line bundle or an explicit class.
/// Explicit classes may be rational.
struct Tensor {
  std::variant<std::string, QVector> bundle;
  friend bool operator==(const Tensor&, const Tensor&) = default;
};

/// f^* for a declared isometry.
struct Pullback {
  std::string isometry;
  friend bool operator==(const Pullback&, const Pullback&) = default;
};

/// [k]
struct Shift {
  std::int64_t k = 0;
  friend bool operator==(const Shift&, const Shift&) = default;
};

using Generator = std::variant<Twist, Tensor, Pullback, Shift>;

/// Non-empty composition of generators. The first generator is applied last,
/// so {g1, g2, g3} means g1 o g2 o g3.
class Word {
 public:
  explicit Word(std::vector<Generator> generators);

  const std::vector<Generator>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }

  /// Textual form in the word grammar; explicit tensor classes print as L[..].
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Generator> generators_;
};

std::string to_string(const Generator& g);

/// (r+2)x(r+2) action matrix with H^0 | H^2 | H^4 grading.
class ActionMatrix {
 public:
  ActionMatrix(QMatrix m, int rank);

  const QMatrix& matrix() const noexcept { return m_; }
  int rank() const noexcept { return rank_; }
  std::size_t dim() const noexcept { return m_.rows(); }

  std::size_t h0_index() const noexcept { return 0; }
  std::size_t h2_begin() const noexcept { return 1; }
  std::size_t h4_index() const noexcept { return static_cast<std::size_t>(rank_) + 1; }

  MukaiClass apply(const MukaiClass& w) const;

  /// True when every block above the block diagonal is zero.
  bool block_lower_triangular() const;

  friend ActionMatrix operator*(const ActionMatrix& a, const ActionMatrix& b);
  friend bool operator==(const ActionMatrix&, const ActionMatrix&) = default;

 private:
  QMatrix m_;
  int rank_;
};

ActionMatrix action_of_generator(const SurfaceModel& model, const Generator& g);

/// Product of generator actions in composition order.
ActionMatrix compose_word(const SurfaceModel& model, const Word& word);

/// H^2 -> H^2 block of the action (projection after restriction).
QMatrix h2_block(const ActionMatrix& mat);

/// Product of the Pullback isometries of the word in word order (r x r);
/// identity when the word has none.
QMatrix standard_radius_reference(const SurfaceModel& model, const Word& word);

/// Extends an H^2 isometry by +1 on H^0 and H^4.
ActionMatrix extend_isometry(const QMatrix& h2, int rank);

/// Throws UnknownName if the word references something the model lacks.
void check_word_names(const SurfaceModel& model, const Word& word);

}  // namespace mukai
