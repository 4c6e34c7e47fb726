#pragma once

#include <cstddef>
#include <vector>

#include "mukai/lattice.hpp"
#include "mukai/matrix.hpp"

namespace mukai {

struct ClosureResult {
  bool complete = false;  // false when the cap was hit
  std::size_t order = 0;  // elements found (a lower bound if incomplete)
};

/// Breadth-first closure of the group generated by integral matrices. Stops
/// and reports incomplete once more than `cap` elements are found.
ClosureResult enumerate_matrix_group(const std::vector<QMatrix>& generators, std::size_t cap = 1'000'000);

/// H^2 blocks of T_{O_C} for every declared curve, in declaration order.
std::vector<QMatrix> twist_h2_generators(const SurfaceModel& model);

}  // namespace mukai
