#pragma once

// Directed graph attached to an evolution algebra in a natural basis: an edge
// i -> j whenever a_ij != 0. Orderings of the basis that make A strictly
// upper triangular are exactly topological orders of this graph.

#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "evokit/algebra.hpp"

namespace evokit {

struct AlgebraGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // 0-based, row-major order

  bool has_edge(std::size_t i, std::size_t j) const {
    for (const auto& e : edges) {
      if (e.first == i && e.second == j) return true;
    }
    return false;
  }
  friend bool operator==(const AlgebraGraph&, const AlgebraGraph&) = default;
};

template <ExactField F>
AlgebraGraph graph_of(const EvolutionMatrix<F>& a) {
  AlgebraGraph g{a.dim(), {}};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (!a(i, j).is_zero()) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

/// Topological order of the graph (Kahn, smallest available vertex first), or
/// nothing when the graph has a cycle or a self-loop. order[k] is the original
/// index placed at position k.
inline std::optional<std::vector<std::size_t>> topological_order(const AlgebraGraph& g) {
  std::vector<std::size_t> indegree(g.vertices, 0);
  std::vector<std::vector<std::size_t>> out(g.vertices);
  for (auto [i, j] : g.edges) {
    if (i == j) return std::nullopt;
    out[i].push_back(j);
    ++indegree[j];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < g.vertices; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    auto v = ready.top();
    ready.pop();
    order.push_back(v);
    for (auto w : out[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (order.size() != g.vertices) return std::nullopt;
  return order;
}

/// Basis ordering under which A is strictly upper triangular, if one exists.
/// Only permutations of the given natural basis are considered.
template <ExactField F>
std::optional<std::vector<std::size_t>> triangular_witness(const EvolutionMatrix<F>& a) {
  return topological_order(graph_of(a));
}

/// Checks that reordering rows and columns by `order` gives a strictly upper
/// triangular matrix.
template <ExactField F>
bool is_triangular_witness(const EvolutionMatrix<F>& a, const std::vector<std::size_t>& order) {
  const std::size_t n = a.dim();
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto v : order) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c <= r; ++c) {
      if (!a(order[r], order[c]).is_zero()) return false;
    }
  }
  return true;
}

template <ExactField F>
EvolutionMatrix<F> permute(const EvolutionMatrix<F>& a, const std::vector<std::size_t>& order) {
  EvolutionMatrix<F> out(a.field(), a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = a(order.at(r), order.at(c));
  }
  return out;
}

/// Graphviz rendering. Byte-stable: nodes in index order, edges row-major.
inline std::string to_dot(const AlgebraGraph& g) {
  std::ostringstream os;
  os << "digraph evolution_algebra {\n";
  for (std::size_t v = 0; v < g.vertices; ++v) os << "  e" << v + 1 << ";\n";
  for (auto [i, j] : g.edges) os << "  e" << i + 1 << " -> e" << j + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace evokit
