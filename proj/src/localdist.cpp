#include "eqpart/localdist.hpp"

#include <algorithm>
#include <optional>

#include "eqpart/error.hpp"

namespace eqpart {

namespace {

// Recovers the coloring behind a 0/1 indicator matrix, if it is one.
std::optional<Coloring> as_coloring(const RatMatrix& values) {
  std::vector<std::size_t> colors(values.rows());
  for (std::size_t v = 0; v < values.rows(); ++v) {
    std::optional<std::size_t> hot;
    for (std::size_t j = 0; j < values.cols(); ++j) {
      const Rational& x = values(v, j);
      if (x.is_zero()) continue;
      if (x != Rational(1) || hot) return std::nullopt;
      hot = j;
    }
    if (!hot) return std::nullopt;
    colors[v] = *hot;
  }
  try {
    return Coloring(values.cols(), std::move(colors));
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

RatMatrix tensor_params(const RatMatrix& left, const RatMatrix& right) {
  if (!left.is_square() || !right.is_square()) throw ShapeError("parameter matrices must be square");
  return tensor(left, RatMatrix::identity(right.rows())) + tensor(RatMatrix::identity(left.rows()), right);
}

Coloring tensor_coloring(const Coloring& left, const Coloring& right) {
  const std::size_t n2 = right.n_vertices();
  std::vector<std::size_t> colors(left.n_vertices() * n2);
  for (std::size_t a = 0; a < left.n_vertices(); ++a)
    for (std::size_t b = 0; b < n2; ++b) colors[a * n2 + b] = left[a] * right.n_colors() + right[b];
  return Coloring(left.n_colors() * right.n_colors(), std::move(colors));
}

TensorStructure tensor_structure(const Graph& left, const PerfectStructure& g1, const Graph& right,
                                 const PerfectStructure& g2) {
  if (g1.n_rows() != left.n_vertices() || g2.n_rows() != right.n_vertices())
    throw ShapeError("factor structures do not match their graphs");
  const Graph product = direct_product(left, right);
  return {PerfectStructure::over_graph(product, tensor(g1.values(), g2.values()),
                                       tensor_params(g1.params(), g2.params())),
          g1.k(), g2.k()};
}

RatMatrix rearrange(const RatMatrix& h, std::size_t n_left, std::size_t n_right) {
  if (h.rows() != n_left * n_right) throw ShapeError("h must have n_left * n_right rows");
  const std::size_t k = h.cols();
  RatMatrix out(n_left, n_right * k);
  for (std::size_t a = 0; a < n_left; ++a)
    for (std::size_t b = 0; b < n_right; ++b)
      for (std::size_t j = 0; j < k; ++j) out(a, b * k + j) = h(a * n_right + b, j);
  return out;
}

RatMatrix unrearrange(const RatMatrix& h_star, std::size_t n_right, std::size_t k) {
  if (h_star.cols() != n_right * k) throw ShapeError("h* must have n_right * k columns");
  const std::size_t n_left = h_star.rows();
  RatMatrix out(n_left * n_right, k);
  for (std::size_t a = 0; a < n_left; ++a)
    for (std::size_t b = 0; b < n_right; ++b)
      for (std::size_t j = 0; j < k; ++j) out(a * n_right + b, j) = h_star(a, b * k + j);
  return out;
}

RatMatrix rearranged_params(const RatMatrix& right_params, const RatMatrix& s) {
  if (!right_params.is_square() || !s.is_square()) throw ShapeError("parameter matrices must be square");
  return tensor(RatMatrix::identity(right_params.rows()), s) -
         tensor(right_params, RatMatrix::identity(s.rows()));
}

RearrangedDistribution tensor_distribution(const Graph& left, const PerfectStructure& g1,
                                           const Graph& right, const PerfectStructure& g2,
                                           const PerfectStructure& f) {
  const TensorStructure g = tensor_structure(left, g1, right, g2);
  if (f.n_rows() != g.product.n_rows()) throw ShapeError("f does not live on the product graph");

  RearrangedDistribution out;
  out.n_left = g.left_k;
  out.n_right = g.right_k;
  out.k = f.k();
  out.h = g.product.values().transpose() * f.values();

  const RatMatrix r1t = g1.params().transpose();
  const RatMatrix r2t = g2.params().transpose();
  if (tensor_params(r1t, r2t) * out.h != out.h * f.params())
    throw AssertionFailure("(R'^T x I + I x R''^T) h != h S");

  out.h_star = rearrange(out.h, out.n_left, out.n_right);
  if (!verify_structure(r1t, out.h_star, rearranged_params(g2.params(), f.params())).ok)
    throw AssertionFailure("R'^T h* != h* (I x S - R'' x I)");

  const auto c1 = as_coloring(g1.values());
  const auto c2 = as_coloring(g2.values());
  out.factors_are_vertex_distance_colorings =
      c1 && c2 && is_vertex_distance_coloring(left, *c1) && is_vertex_distance_coloring(right, *c2);
  return out;
}

RatMatrix reconstruct_local(const PPolynomials& left_pi, const RatMatrix& right_params, const RatMatrix& s,
                            std::span<const Rational> h_star_0) {
  const RatMatrix m = rearranged_params(right_params, s);
  if (h_star_0.size() != m.rows()) throw ShapeError("h*_0 must have (colors of g'') * (columns of f) entries");
  RatMatrix out(left_pi.size(), m.rows());
  for (std::size_t i = 0; i < left_pi.size(); ++i) {
    const auto row = row_times(h_star_0, left_pi[i](m));
    std::copy(row.begin(), row.end(), out.row(i).begin());
  }
  return out;
}

RatMatrix reconstruct_local(const Graph& left, const RatMatrix& right_params, const RatMatrix& s,
                            std::span<const Rational> h_star_0) {
  return reconstruct_local(p_polynomials(intersection_array(left)), right_params, s, h_star_0);
}

LocalDistributions extract_local(const RearrangedDistribution& h) {
  if (!h.factors_are_vertex_distance_colorings)
    throw DomainError("local distributions need vertex distance colorings on both factors");
  LocalDistributions out;
  out.right_local = unrearrange(h.h_star.slice_rows(0, 1), h.n_right, h.k);
  out.left_local = RatMatrix(h.n_left, h.k);
  for (std::size_t a = 0; a < h.n_left; ++a)
    for (std::size_t j = 0; j < h.k; ++j) out.left_local(a, j) = h.h(a * h.n_right, j);
  return out;
}

bool is_vertex_distance_coloring(const Graph& g, const Coloring& c) {
  if (c.n_vertices() != g.n_vertices()) return false;
  const auto base = c.members(0);
  if (base.size() != 1) return false;
  try {
    const auto profile = distances_from(g, base.front());
    return std::equal(profile.distance.begin(), profile.distance.end(), c.colors().begin(),
                      [](std::uint32_t d, std::size_t color) { return d == color; });
  } catch (const DisconnectedError&) {
    return false;
  }
}

}  // namespace eqpart
