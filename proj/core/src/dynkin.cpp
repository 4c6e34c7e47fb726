#include "mukai/dynkin.hpp"

#include <algorithm>
#include <array>
#include <queue>

#include "mukai/errors.hpp"

namespace mukai {
namespace {

struct TypeName {
  char family;
  int rank;
};

TypeName parse_type(const std::string& type) {
  if (type.size() < 2 || (type[0] != 'A' && type[0] != 'D' && type[0] != 'E'))
    throw Error("not a simply-laced Dynkin type: " + type);
  int n = 0;
  for (std::size_t i = 1; i < type.size(); ++i) {
    if (type[i] < '0' || type[i] > '9') throw Error("not a simply-laced Dynkin type: " + type);
    n = n * 10 + (type[i] - '0');
  }
  const char f = type[0];
  if (n < 1 || (f == 'D' && n < 4) || (f == 'E' && (n < 6 || n > 8)))
    throw Error("not a simply-laced Dynkin type: " + type);
  return {f, n};
}

// Number of vertices reachable from `start` without passing through `block`.
std::size_t arm_length(const Adjacency& adj, std::size_t block, std::size_t start) {
  std::size_t length = 0;
  std::size_t prev = block;
  std::size_t cur = start;
  for (;;) {
    ++length;
    std::size_t next = cur;
    for (std::size_t v = 0; v < adj.size(); ++v)
      if (adj[cur][v] && v != prev) next = v;
    if (next == cur) return length;
    prev = cur;
    cur = next;
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> connected_components(const Adjacency& adj) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(adj.size(), false);
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      comp.push_back(u);
      for (std::size_t v = 0; v < adj.size(); ++v) {
        if (adj[u][v] && !seen[v]) {
          seen[v] = true;
          q.push(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<std::string> classify_dynkin(const Adjacency& adj) {
  const std::size_t n = adj.size();
  if (n == 0) return std::nullopt;
  if (connected_components(adj).size() != 1) return std::nullopt;

  std::size_t edges = 0;
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i][i]) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      if (adj[i][j] != adj[j][i] || adj[i][j] < 0 || adj[i][j] > 1) return std::nullopt;
      degree[i] += static_cast<std::size_t>(adj[i][j]);
    }
    edges += degree[i];
  }
  edges /= 2;
  if (edges != n - 1) return std::nullopt;  // not a tree

  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] > 3) return std::nullopt;
    if (degree[i] == 3) branch.push_back(i);
  }
  if (branch.empty()) return "A" + std::to_string(n);
  if (branch.size() > 1) return std::nullopt;

  const std::size_t b = branch.front();
  std::vector<std::size_t> arms;
  for (std::size_t v = 0; v < n; ++v)
    if (adj[b][v]) arms.push_back(arm_length(adj, b, v));
  std::sort(arms.begin(), arms.end());
  if (arms[0] != 1) return std::nullopt;
  if (arms[1] == 1) return "D" + std::to_string(n);
  if (arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + std::to_string(n);
  return std::nullopt;
}

BigInt weyl_group_order(const std::string& type) {
  const auto [family, n] = parse_type(type);
  BigInt fact = 1;
  switch (family) {
    case 'A':
      for (int i = 2; i <= n + 1; ++i) fact *= i;
      return fact;
    case 'D': {
      for (int i = 2; i <= n; ++i) fact *= i;
      BigInt pow2 = 1;
      pow2 <<= static_cast<mp_bitcnt_t>(n - 1);
      return pow2 * fact;
    }
    default:
      if (n == 6) return BigInt(51840);
      if (n == 7) return BigInt(2903040);
      return BigInt(696729600);
  }
}

IntMatrix cartan_matrix(const std::string& type) {
  const auto [family, n] = parse_type(type);
  const auto sz = static_cast<std::size_t>(n);
  IntMatrix c(sz, IntVector(sz, 0));
  for (std::size_t i = 0; i < sz; ++i) c[i][i] = 2;
  auto link = [&](int a, int b) {  // 1-based Bourbaki labels
    c[a - 1][b - 1] = c[b - 1][a - 1] = -1;
  };
  switch (family) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    default:
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
  }
  return c;
}

}  // namespace mukai
