#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mukai/matrix.hpp"

namespace mukai {

/// Simple undirected graph given by a symmetric 0/1 adjacency matrix.
using Adjacency = std::vector<std::vector<int>>;

/// Connected components as lists of vertex indices, in increasing order.
std::vector<std::vector<std::size_t>> connected_components(const Adjacency& adj);

/// Names the simply-laced Dynkin diagram of a connected graph ("A3", "D4",
/// "E6", ...) or returns nullopt when the graph is not of type A, D or E.
std::optional<std::string> classify_dynkin(const Adjacency& adj);

/// Order of the Weyl group of a Dynkin type name such as "D5".
BigInt weyl_group_order(const std::string& type);

/// Cartan matrix of a simply-laced type in Bourbaki labelling.
IntMatrix cartan_matrix(const std::string& type);

}  // namespace mukai
