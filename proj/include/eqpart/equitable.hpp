#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eqpart/graph.hpp"
#include "eqpart/ratmat.hpp"

namespace eqpart {

/// Vertex coloring with colors 0..n_colors-1, every color used.
class Coloring {
 public:
  Coloring() = default;
  /// Throws DomainError if a color is out of range or unused.
  Coloring(std::size_t n_colors, std::vector<std::size_t> colors);

  /// Number of colors is inferred as max + 1.
  static Coloring from_colors(std::vector<std::size_t> colors);
  static Coloring trivial(std::size_t n_vertices) { return Coloring(1, std::vector<std::size_t>(n_vertices, 0)); }
  /// Each vertex its own color.
  static Coloring discrete(std::size_t n_vertices);

  std::size_t n_colors() const noexcept { return n_colors_; }
  std::size_t n_vertices() const noexcept { return colors_.size(); }
  std::size_t operator[](std::size_t v) const { return colors_[v]; }
  std::span<const std::size_t> colors() const noexcept { return colors_; }

  std::vector<std::size_t> class_sizes() const;
  std::vector<Vertex> members(std::size_t color) const;
  /// N x k matrix with row v equal to e_{color(v)}.
  RatMatrix indicator() const;

 private:
  std::size_t n_colors_ = 0;
  std::vector<std::size_t> colors_;
};

/// Matrix f with A f = f S over either a graph or an explicit square matrix.
/// Construction verifies the identity exactly.
class PerfectStructure {
 public:
  /// Throws AssertionFailure unless A f = f S on g.
  static PerfectStructure over_graph(const Graph& g, RatMatrix values, RatMatrix params);
  /// Throws AssertionFailure unless a f = f S.
  static PerfectStructure over_matrix(const RatMatrix& a, RatMatrix values, RatMatrix params);
  /// Indicator rows of c with the quotient matrix as parameters; throws
  /// NotEquitable if c is not perfect.
  static PerfectStructure from_coloring(const Graph& g, const Coloring& c);

  const RatMatrix& values() const noexcept { return values_; }
  const RatMatrix& params() const noexcept { return params_; }
  std::size_t n_rows() const noexcept { return values_.rows(); }
  std::size_t k() const noexcept { return params_.rows(); }

 private:
  PerfectStructure(RatMatrix values, RatMatrix params) : values_(std::move(values)), params_(std::move(params)) {}

  RatMatrix values_;
  RatMatrix params_;
};

struct StructureCheck {
  bool ok = false;
  RatMatrix residual;  // A f - f S
};

/// Exact check of A f = f S. Throws ShapeError on nonconforming shapes.
StructureCheck verify_structure(const Graph& g, const RatMatrix& f, const RatMatrix& s);
StructureCheck verify_structure(const RatMatrix& a, const RatMatrix& f, const RatMatrix& s);

/// Quotient matrix: S[i][j] is the number of color-j neighbors of any
/// color-i vertex. Throws NotEquitable naming the first (lexicographic)
/// pair of same-colored vertices with different neighbor profiles.
RatMatrix quotient_matrix(const Graph& g, const Coloring& c);

/// Color of x is d(x, code).
Coloring distance_coloring(const Graph& g, std::span<const Vertex> code);

struct CompletelyRegularCode {
  std::vector<Vertex> code;
  std::uint32_t rho = 0;
  RatMatrix params;  // (rho+1) x (rho+1), tridiagonal
  std::vector<std::size_t> class_sizes;
};

/// Throws NotEquitable if the distance coloring of code is not perfect.
CompletelyRegularCode check_completely_regular(const Graph& g, std::span<const Vertex> code);

/// Coloring of H(mk, q) by x_1 + ... + x_m mod q, where x_i is the i-th
/// block of k coordinates; the color is the hamming_graph index of the sum
/// word in H(k, q).
Coloring lattice_coloring(unsigned m, unsigned k, unsigned q, std::size_t vertex_budget = kDefaultVertexBudget);

/// Coloring of direct_product(left, right) by the right coordinate.
/// Throws DomainError if left is not regular.
Coloring fiber_coloring(const Graph& left, const Graph& right);

}  // namespace eqpart
