#include "doctest.h"
#include "mukai/coxeter.hpp"
#include "mukai/dynkin.hpp"
#include "mukai/surface_io.hpp"
#include "support.hpp"

using namespace mukai;

namespace {

Adjacency from_cartan(const IntMatrix& c) {
  Adjacency adj(c.size(), std::vector<int>(c.size(), 0));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (i != j) adj[i][j] = static_cast<int>(-c[i][j]);
  return adj;
}

// Sylvester: every leading principal minor of 2I - A is positive.
bool positive_definite(const Adjacency& adj) {
  const std::size_t n = adj.size();
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = i == j ? 2 : -adj[i][j];
    if (determinant(m) <= 0) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("mukai-lattice") {
  TEST_CASE("classify_dynkin on Cartan matrices") {
    for (const std::string type : {"A1", "A2", "A5", "D4", "D5", "D7", "E6", "E7", "E8"}) {
      CAPTURE(type);
      const auto got = classify_dynkin(from_cartan(cartan_matrix(type)));
      REQUIRE(got);
      CHECK(*got == type);
    }
  }

  TEST_CASE("classify_dynkin agrees with positive definiteness on all connected graphs up to 6 vertices") {
    for (std::size_t n = 1; n <= 6; ++n) {
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
        Adjacency adj(n, std::vector<int>(n, 0));
        for (std::size_t e = 0; e < edges.size(); ++e)
          if (mask >> e & 1) adj[edges[e].first][edges[e].second] = adj[edges[e].second][edges[e].first] = 1;
        if (connected_components(adj).size() != 1) continue;
        const auto got = classify_dynkin(adj);
        CHECK(got.has_value() == positive_definite(adj));
        if (got) CHECK(cartan_matrix(*got).size() == n);
      }
    }
  }

  TEST_CASE("connected_components") {
    const Adjacency adj{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    const auto comps = connected_components(adj);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<std::size_t>{0, 1});
    CHECK(comps[1] == std::vector<std::size_t>{2});
  }

  TEST_CASE("weyl_group_order") {
    CHECK(weyl_group_order("A1") == 2);
    CHECK(weyl_group_order("A3") == 24);
    CHECK(weyl_group_order("D4") == 192);
    CHECK(weyl_group_order("E6") == 51840);
    CHECK(weyl_group_order("E7") == 2903040);
    CHECK(weyl_group_order("E8") == 696729600);
  }
}

TEST_SUITE("spectral") {
  TEST_CASE("twist reflections generate the Weyl group") {
    const std::vector<std::pair<std::string, std::size_t>> expected{
        {"A1", 2}, {"A2", 6}, {"A3", 24}, {"D4", 192}, {"A1xA1", 4}};
    for (const auto& [name, order] : expected) {
      CAPTURE(name);
      const ClosureResult r = enumerate_matrix_group(twist_h2_generators(preset(name)));
      CHECK(r.complete);
      CHECK(r.order == order);
    }
  }

  TEST_CASE("E6 closure reaches 51840") {
    const ClosureResult r = enumerate_matrix_group(twist_h2_generators(preset("E6")));
    CHECK(r.complete);
    CHECK(r.order == 51840);
  }

  TEST_CASE("closure of an infinite-order isometry stops at the cap") {
    const SurfaceModel pell = preset("Pell");
    const QMatrix m = QMatrix::from_integers(pell.isometries.at("M"));
    const ClosureResult capped = enumerate_matrix_group({m}, 10);
    CHECK_FALSE(capped.complete);
    CHECK(capped.order > 10);
    // Entries outgrow 64 bits long before the default cap; still incomplete.
    CHECK_FALSE(enumerate_matrix_group({m}).complete);
  }

  TEST_CASE("closure of a single swap has order 2") {
    const ClosureResult r = enumerate_matrix_group({QMatrix::from_integers({{0, 1}, {1, 0}})});
    CHECK(r.complete);
    CHECK(r.order == 2);
  }
}
