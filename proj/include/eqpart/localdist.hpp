#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "eqpart/drg.hpp"
#include "eqpart/equitable.hpp"
#include "eqpart/graph.hpp"
#include "eqpart/ratmat.hpp"

namespace eqpart {

/// R' (x) I + I (x) R''.
RatMatrix tensor_params(const RatMatrix& left, const RatMatrix& right);

/// Product of two colorings: vertex (v', v'') of left x right gets color
/// c'(v') * k'' + c''(v'').
Coloring tensor_coloring(const Coloring& left, const Coloring& right);

struct TensorStructure {
  PerfectStructure product;  // over direct_product(left graph, right graph)
  std::size_t left_k = 0;
  std::size_t right_k = 0;
};

/// g' (x) g'' with parameters R' (x) I + I (x) R'', verified over the
/// product graph (throws AssertionFailure otherwise).
TensorStructure tensor_structure(const Graph& left, const PerfectStructure& g1, const Graph& right,
                                 const PerfectStructure& g2);

/// h* [i'][i'' * k + j] = h[i' * n_right + i''][j].
RatMatrix rearrange(const RatMatrix& h, std::size_t n_left, std::size_t n_right);
/// Inverse of rearrange.
RatMatrix unrearrange(const RatMatrix& h_star, std::size_t n_right, std::size_t k);

/// I (x) S - R'' (x) I, the parameter matrix of h*.
RatMatrix rearranged_params(const RatMatrix& right_params, const RatMatrix& s);

struct RearrangedDistribution {
  std::size_t n_left = 0;   // colors of g'
  std::size_t n_right = 0;  // colors of g''
  std::size_t k = 0;        // columns of f
  RatMatrix h;              // (n_left * n_right) x k
  RatMatrix h_star;         // n_left x (n_right * k)
  // Both factors are distance colorings of single vertices.
  bool factors_are_vertex_distance_colorings = false;
};

/// h = (g' (x) g'')^T f for f perfect over left x right. Asserts
/// (R'^T (x) I + I (x) R''^T) h = h S and R'^T h* = h* (I (x) S - R'' (x) I),
/// throwing AssertionFailure if either fails.
RearrangedDistribution tensor_distribution(const Graph& left, const PerfectStructure& g1,
                                           const Graph& right, const PerfectStructure& g2,
                                           const PerfectStructure& f);

/// Rows h*_i = h*_0 Pi_i(I (x) S - R'' (x) I) for i = 0..D', where Pi are the
/// P-polynomials of the left factor.
RatMatrix reconstruct_local(const PPolynomials& left_pi, const RatMatrix& right_params, const RatMatrix& s,
                            std::span<const Rational> h_star_0);
/// Same, with Pi taken from the intersection array of left (which must be
/// distance-regular).
RatMatrix reconstruct_local(const Graph& left, const RatMatrix& right_params, const RatMatrix& s,
                            std::span<const Rational> h_star_0);

struct LocalDistributions {
  RatMatrix right_local;  // h[0, i'', j]: along the right factor through the base vertex
  RatMatrix left_local;   // h[i', 0, j]: along the left factor through the base vertex
};

/// Throws DomainError unless both factors are vertex distance colorings.
LocalDistributions extract_local(const RearrangedDistribution& h);

/// True iff c is the distance coloring of some single vertex of g.
bool is_vertex_distance_coloring(const Graph& g, const Coloring& c);

}  // namespace eqpart
