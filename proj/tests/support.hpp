#pragma once

// Test-only reference helpers. These deliberately avoid the library's BFS,
// quotient and polynomial code so they can serve as independent oracles.

#include <random>
#include <vector>

#include "eqpart/graph.hpp"
#include "eqpart/ratmat.hpp"

namespace eqpart::testing {

/// All-pairs distances by Floyd-Warshall over the adjacency predicate.
inline std::vector<std::vector<int>> floyd_distances(const Graph& g) {
  const std::size_t n = g.n_vertices();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) d[v][u] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

/// 0/1 matrix of the pairs at distance exactly w.
inline RatMatrix distance_matrix(const std::vector<std::vector<int>>& d, int w) {
  RatMatrix out(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (d[i][j] == w) out(i, j) = 1;
  return out;
}

inline int hamming_distance(const VertexWord& a, const VertexWord& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

inline Rational random_rational(std::mt19937& rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  return Rational(num(rng)) / Rational(den(rng));
}

inline RatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int span = 9) {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng, span);
  return m;
}

/// Random simple graph on n vertices with edge probability 1/2.
inline Graph random_graph(std::mt19937& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

}  // namespace eqpart::testing
