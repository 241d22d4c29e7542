#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "eqpart/ratmat.hpp"

namespace eqpart {

using Vertex = std::uint32_t;

/// Coordinates of a vertex: a q-ary word (Hamming, halved cube) or the
/// sorted support of a k-subset (Johnson).
using VertexWord = std::vector<unsigned>;

inline constexpr std::size_t kDefaultVertexBudget = std::size_t{1} << 20;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built.
class Graph {
 public:
  using Decoder = std::function<VertexWord(Vertex)>;

  Graph() = default;
  /// Validates the lists: symmetric, sorted, no loops, no repeats.
  explicit Graph(std::vector<std::vector<Vertex>> adjacency, Decoder decoder = {});

  /// Throws on self-loops, duplicate edges and out-of-range endpoints.
  static Graph from_edges(std::size_t n_vertices, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t n_vertices() const noexcept { return adjacency_.size(); }
  std::size_t n_edges() const noexcept { return n_edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Common degree, or -1 when the graph is not regular (or empty).
  long regular_degree() const;

  bool has_labels() const noexcept { return static_cast<bool>(decoder_); }
  VertexWord label(Vertex v) const;

  /// Dense 0/1 adjacency matrix. Only for small graphs.
  RatMatrix adjacency_matrix() const;

  /// Sparse product A * f for an n_vertices x k matrix f.
  RatMatrix multiply(const RatMatrix& f) const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t n_edges_ = 0;
  Decoder decoder_;
};

/// q-ary n-cube: words over {0..q-1} adjacent iff they differ in exactly
/// one coordinate. Word (x_0..x_{n-1}) has index sum x_i q^(n-1-i).
Graph hamming_graph(unsigned n, unsigned q, std::size_t vertex_budget = kDefaultVertexBudget);

/// Index of a q-ary word under the hamming_graph numbering.
Vertex hamming_index(std::span<const unsigned> word, unsigned q);
VertexWord hamming_word(Vertex index, unsigned n, unsigned q);

/// k-subsets of {0..n-1} in lexicographic order, adjacent iff the
/// symmetric difference has size 2.
Graph johnson_graph(unsigned n, unsigned k, std::size_t vertex_budget = kDefaultVertexBudget);

enum class Parity { even, odd };

/// Binary n-words of the chosen weight parity in increasing index order,
/// adjacent iff at Hamming distance 2.
Graph halved_cube(unsigned n, Parity parity, std::size_t vertex_budget = kDefaultVertexBudget);

/// Cartesian product: (u', u'') ~ (v', v'') iff one coordinate is equal and
/// the other adjacent. Vertex (i', i'') has index i' * right.n_vertices() + i''.
Graph direct_product(const Graph& left, const Graph& right,
                     std::size_t vertex_budget = kDefaultVertexBudget);

/// Complete graph K_n (same as hamming_graph(1, n)).
Graph complete_graph(unsigned n);

struct DistanceProfile {
  std::vector<std::uint32_t> distance;  // per vertex
  std::uint32_t radius = 0;             // max distance (covering radius)
  std::vector<std::size_t> class_sizes; // radius + 1 entries
};

/// Multi-source BFS from code. Throws DomainError on an empty or
/// out-of-range code and DisconnectedError when some vertex is unreachable.
DistanceProfile distances_from_set(const Graph& g, std::span<const Vertex> code);

inline DistanceProfile distances_from(const Graph& g, Vertex v) {
  const Vertex code[] = {v};
  return distances_from_set(g, code);
}

/// Sum of the rows f(u) over all u with d(u, v) = w. Throws DomainError
/// when w exceeds the eccentricity of v.
std::vector<Rational> distance_w_sum(const Graph& g, Vertex v, std::uint32_t w, const RatMatrix& f);

/// Largest eccentricity; throws DisconnectedError for disconnected graphs.
std::uint32_t diameter(const Graph& g);

}  // namespace eqpart
