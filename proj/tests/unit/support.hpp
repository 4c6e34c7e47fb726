#pragma once

#include <random>
#include <string>

#include "mukai/lattice.hpp"
#include "mukai/surface_io.hpp"

#ifndef MUKAI_DATA_DIR
#define MUKAI_DATA_DIR "data"
#endif

namespace mukai::test {

inline Rational random_rational(std::mt19937_64& rng, long span = 20, long max_den = 7) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline MukaiClass random_class(std::mt19937_64& rng, int rank) {
  MukaiClass w = MukaiClass::zero(rank);
  w.w0 = random_rational(rng);
  for (auto& x : w.w2) x = random_rational(rng);
  w.w4 = random_rational(rng);
  return w;
}

inline SurfaceModel data_model(const std::string& file) {
  return load_surface(std::string(MUKAI_DATA_DIR) + "/" + file);
}

/// Presets with at least one curve.
inline const std::vector<std::string>& curve_presets() {
  static const std::vector<std::string> names{"A1", "A2", "A3", "D4", "E6", "E7", "E8", "A1xA1"};
  return names;
}

}  // namespace mukai::test
