#include "eqpart/equitable.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "eqpart/error.hpp"

namespace eqpart {

Coloring::Coloring(std::size_t n_colors, std::vector<std::size_t> colors)
    : n_colors_(n_colors), colors_(std::move(colors)) {
  std::vector<bool> used(n_colors_, false);
  for (std::size_t c : colors_) {
    if (c >= n_colors_) throw DomainError("color " + std::to_string(c) + " out of range");
    used[c] = true;
  }
  for (std::size_t c = 0; c < n_colors_; ++c)
    if (!used[c]) throw DomainError("color " + std::to_string(c) + " has no vertices");
}

Coloring Coloring::from_colors(std::vector<std::size_t> colors) {
  const std::size_t k = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  return Coloring(k, std::move(colors));
}

Coloring Coloring::discrete(std::size_t n_vertices) {
  std::vector<std::size_t> colors(n_vertices);
  for (std::size_t v = 0; v < n_vertices; ++v) colors[v] = v;
  return Coloring(n_vertices, std::move(colors));
}

std::vector<std::size_t> Coloring::class_sizes() const {
  std::vector<std::size_t> sizes(n_colors_, 0);
  for (std::size_t c : colors_) ++sizes[c];
  return sizes;
}

std::vector<Vertex> Coloring::members(std::size_t color) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < colors_.size(); ++v)
    if (colors_[v] == color) out.push_back(static_cast<Vertex>(v));
  return out;
}

RatMatrix Coloring::indicator() const {
  RatMatrix f(colors_.size(), n_colors_);
  for (std::size_t v = 0; v < colors_.size(); ++v) f(v, colors_[v]) = 1;
  return f;
}

PerfectStructure PerfectStructure::over_graph(const Graph& g, RatMatrix values, RatMatrix params) {
  if (!verify_structure(g, values, params).ok) throw AssertionFailure("A f != f S over the graph");
  return PerfectStructure(std::move(values), std::move(params));
}

PerfectStructure PerfectStructure::over_matrix(const RatMatrix& a, RatMatrix values, RatMatrix params) {
  if (!verify_structure(a, values, params).ok) throw AssertionFailure("A f != f S over the matrix");
  return PerfectStructure(std::move(values), std::move(params));
}

PerfectStructure PerfectStructure::from_coloring(const Graph& g, const Coloring& c) {
  return over_graph(g, c.indicator(), quotient_matrix(g, c));
}

namespace {

void check_shapes(std::size_t n, const RatMatrix& f, const RatMatrix& s) {
  if (f.rows() != n) throw ShapeError("f must have one row per vertex of A");
  if (!s.is_square() || s.rows() != f.cols()) throw ShapeError("S must be k x k where f is N x k");
}

}  // namespace

StructureCheck verify_structure(const Graph& g, const RatMatrix& f, const RatMatrix& s) {
  check_shapes(g.n_vertices(), f, s);
  StructureCheck out;
  out.residual = g.multiply(f) - f * s;
  out.ok = out.residual.is_zero();
  return out;
}

StructureCheck verify_structure(const RatMatrix& a, const RatMatrix& f, const RatMatrix& s) {
  if (!a.is_square()) throw ShapeError("A must be square");
  check_shapes(a.rows(), f, s);
  StructureCheck out;
  out.residual = a * f - f * s;
  out.ok = out.residual.is_zero();
  return out;
}

RatMatrix quotient_matrix(const Graph& g, const Coloring& c) {
  if (c.n_vertices() != g.n_vertices()) throw ShapeError("coloring and graph sizes differ");
  const std::size_t k = c.n_colors();
  std::vector<std::vector<long>> profile(k);
  std::vector<Vertex> representative(k);
  std::vector<std::optional<Vertex>> first_mismatch(k);
  std::vector<long> counts(k);

  for (std::size_t v = 0; v < g.n_vertices(); ++v) {
    std::fill(counts.begin(), counts.end(), 0);
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) ++counts[c[u]];
    const std::size_t color = c[v];
    if (profile[color].empty()) {
      profile[color] = counts;
      representative[color] = static_cast<Vertex>(v);
    } else if (profile[color] != counts && !first_mismatch[color]) {
      first_mismatch[color] = static_cast<Vertex>(v);
    }
  }

  std::optional<std::pair<Vertex, Vertex>> witness;
  for (std::size_t color = 0; color < k; ++color) {
    if (!first_mismatch[color]) continue;
    std::pair<Vertex, Vertex> pair{representative[color], *first_mismatch[color]};
    if (!witness || pair < *witness) witness = pair;
  }
  if (witness) {
    throw NotEquitable(witness->first, witness->second,
                       "coloring is not equitable: vertices " + std::to_string(witness->first) + " and " +
                           std::to_string(witness->second) + " share a color but not a neighbor profile");
  }

  RatMatrix s(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) s(i, j) = profile[i][j];
  return s;
}

Coloring distance_coloring(const Graph& g, std::span<const Vertex> code) {
  const auto profile = distances_from_set(g, code);
  std::vector<std::size_t> colors(profile.distance.begin(), profile.distance.end());
  return Coloring(profile.radius + 1, std::move(colors));
}

CompletelyRegularCode check_completely_regular(const Graph& g, std::span<const Vertex> code) {
  const Coloring coloring = distance_coloring(g, code);
  RatMatrix r = quotient_matrix(g, coloring);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if ((i > j + 1 || j > i + 1) && !r(i, j).is_zero())
        throw AssertionFailure("distance coloring produced a non-tridiagonal quotient");

  CompletelyRegularCode out;
  out.code.assign(code.begin(), code.end());
  std::sort(out.code.begin(), out.code.end());
  out.code.erase(std::unique(out.code.begin(), out.code.end()), out.code.end());
  out.rho = static_cast<std::uint32_t>(coloring.n_colors() - 1);
  out.params = std::move(r);
  out.class_sizes = coloring.class_sizes();
  return out;
}

Coloring lattice_coloring(unsigned m, unsigned k, unsigned q, std::size_t vertex_budget) {
  if (m < 1 || k < 1) throw DomainError("lattice_coloring: m and k must be positive");
  if (q < 2) throw DomainError("lattice_coloring: q must be at least 2");
  if (static_cast<unsigned long>(m) * k > 64) throw BudgetError("lattice_coloring: mk too large");
  const unsigned n = m * k;
  std::size_t size = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (size > vertex_budget / q) throw BudgetError("lattice_coloring exceeds vertex budget");
    size *= q;
  }
  std::size_t n_colors = 1;
  for (unsigned i = 0; i < k; ++i) n_colors *= q;

  std::vector<std::size_t> colors(size);
  std::vector<unsigned> sum(k);
  for (std::size_t v = 0; v < size; ++v) {
    const VertexWord word = hamming_word(static_cast<Vertex>(v), n, q);
    std::fill(sum.begin(), sum.end(), 0u);
    for (unsigned block = 0; block < m; ++block)
      for (unsigned i = 0; i < k; ++i) sum[i] = (sum[i] + word[block * k + i]) % q;
    colors[v] = hamming_index(sum, q);
  }
  return Coloring(n_colors, std::move(colors));
}

Coloring fiber_coloring(const Graph& left, const Graph& right) {
  if (left.regular_degree() < 0) throw DomainError("fiber_coloring: left factor must be regular");
  const std::size_t n2 = right.n_vertices();
  std::vector<std::size_t> colors(left.n_vertices() * n2);
  for (std::size_t v = 0; v < colors.size(); ++v) colors[v] = v % n2;
  return Coloring(n2, std::move(colors));
}

}  // namespace eqpart
