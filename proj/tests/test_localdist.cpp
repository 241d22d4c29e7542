#include "doctest.h"

#include <random>

#include "eqpart/codes.hpp"
#include "eqpart/drg.hpp"
#include "eqpart/error.hpp"
#include "eqpart/localdist.hpp"
#include "eqpart/oracle.hpp"
#include "support.hpp"

using namespace eqpart;

namespace {

Coloring vertex_coloring(const Graph& g, Vertex v) { return distance_coloring(g, std::vector<Vertex>{v}); }

PerfectStructure vertex_structure(const Graph& g, Vertex v) {
  return PerfectStructure::from_coloring(g, vertex_coloring(g, v));
}

RatMatrix ones(std::size_t n) {
  RatMatrix m(n, 1);
  for (std::size_t v = 0; v < n; ++v) m(v, 0) = 1;
  return m;
}

}  // namespace

TEST_CASE("product of the ternary square vertex colorings") {
  const Graph h = hamming_graph(2, 3);
  const auto t = tensor_structure(h, vertex_structure(h, 0), h, vertex_structure(h, 0));
  const RatMatrix expected{{0, 4, 0, 4, 0, 0, 0, 0, 0}, {1, 1, 2, 0, 4, 0, 0, 0, 0}, {0, 2, 2, 0, 0, 4, 0, 0, 0},
                           {1, 0, 0, 1, 4, 0, 2, 0, 0}, {0, 1, 0, 1, 2, 2, 0, 2, 0}, {0, 0, 1, 0, 2, 3, 0, 0, 2},
                           {0, 0, 0, 2, 0, 0, 2, 4, 0}, {0, 0, 0, 0, 2, 0, 1, 3, 2}, {0, 0, 0, 0, 0, 2, 0, 2, 4}};
  CHECK(t.product.params() == expected);
  CHECK(t.left_k == 3);
  CHECK(t.right_k == 3);
  // colorings multiply to colorings: every row is an indicator row
  const RatMatrix& vals = t.product.values();
  for (std::size_t v = 0; v < vals.rows(); ++v) {
    int count = 0;
    for (const Rational& x : vals.row(v)) {
      CHECK((x == Rational(0) || x == Rational(1)));
      count += x == Rational(1);
    }
    CHECK(count == 1);
  }
}

TEST_CASE("a one-color factor shifts by its degree") {
  const Graph h = hamming_graph(2, 3);
  const auto t = tensor_structure(h, vertex_structure(h, 0), h, PerfectStructure::from_coloring(h, Coloring::trivial(9)));
  const RatMatrix r = intersection_array(h).quotient();
  CHECK(t.product.params() == r + RatMatrix::identity(3) * Rational(4));
}

TEST_CASE("K2 x K2 vertex colorings give the discrete coloring of the 4-cycle") {
  const Graph k2 = complete_graph(2);
  const auto t = tensor_structure(k2, vertex_structure(k2, 0), k2, vertex_structure(k2, 0));
  const RatMatrix c4{{0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}};
  CHECK(t.product.params() == c4);
  const Coloring product = tensor_coloring(vertex_coloring(k2, 0), vertex_coloring(k2, 0));
  CHECK(quotient_matrix(direct_product(k2, k2), product) == c4);
}

TEST_CASE("tensor coloring numbering") {
  const Coloring a = Coloring::from_colors({0, 1, 1});
  const Coloring b = Coloring::from_colors({1, 0});
  const Coloring t = tensor_coloring(a, b);
  CHECK(t.n_colors() == 4);
  CHECK(std::vector<std::size_t>(t.colors().begin(), t.colors().end()) == std::vector<std::size_t>{1, 0, 3, 2, 3, 2});
}

TEST_CASE("all-one f counts class-size products") {
  const Graph a = johnson_graph(4, 2);
  const Graph b = hamming_graph(2, 3);
  const Graph p = direct_product(a, b);
  const auto f = PerfectStructure::over_graph(p, ones(p.n_vertices()), RatMatrix{{p.regular_degree()}});
  const auto ca = vertex_coloring(a, 0), cb = vertex_coloring(b, 0);
  const auto h = tensor_distribution(a, PerfectStructure::from_coloring(a, ca), b, PerfectStructure::from_coloring(b, cb), f);
  const auto sa = ca.class_sizes(), sb = cb.class_sizes();
  REQUIRE(h.h.rows() == sa.size() * sb.size());
  for (std::size_t i = 0; i < sa.size(); ++i)
    for (std::size_t j = 0; j < sb.size(); ++j) CHECK(h.h(i * sb.size() + j, 0) == Rational(sa[i] * sb[j]));
  CHECK(h.factors_are_vertex_distance_colorings);
}

TEST_CASE("h over the ternary 4-cube lattice coloring matches direct counting") {
  const Graph h = hamming_graph(2, 3);
  const Graph p = direct_product(h, h);
  const Coloring f = lattice_coloring(2, 2, 3);
  const auto fs = PerfectStructure::from_coloring(p, f);
  const auto c = vertex_coloring(h, 0);
  const auto dist = tensor_distribution(h, PerfectStructure::from_coloring(h, c), h, PerfectStructure::from_coloring(h, c), fs);
  CHECK(dist.h == oracle::brute_pair_distribution(tensor_coloring(c, c), f).table);
  CHECK(dist.h_star == rearrange(dist.h, 3, 3));
}

TEST_CASE("rearrange round trip") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t nl = 1 + trial % 4, nr = 1 + (trial / 4) % 3, k = 1 + trial % 3;
    const RatMatrix h = testing::random_matrix(rng, nl * nr, k);
    const RatMatrix hs = rearrange(h, nl, nr);
    REQUIRE(hs.rows() == nl);
    REQUIRE(hs.cols() == nr * k);
    for (std::size_t i1 = 0; i1 < nl; ++i1)
      for (std::size_t i2 = 0; i2 < nr; ++i2)
        for (std::size_t j = 0; j < k; ++j) CHECK(hs(i1, i2 * k + j) == h(i1 * nr + i2, j));
    CHECK(unrearrange(hs, nr, k) == h);
  }
  CHECK_THROWS_AS(rearrange(RatMatrix(5, 2), 2, 2), ShapeError);
}

TEST_CASE("rearranged parameters") {
  const RatMatrix r{{0, 1}, {1, 0}};
  const RatMatrix s{{2}};
  CHECK(rearranged_params(r, s) == RatMatrix{{2, -1}, {-1, 2}});
}

TEST_CASE("local reconstruction") {
  const Graph h = hamming_graph(2, 3);
  const Graph p = direct_product(h, h);
  const auto f = PerfectStructure::over_graph(p, ones(81), RatMatrix{{8}});
  const auto g = vertex_structure(h, 0);
  const auto dist = tensor_distribution(h, g, h, g, f);
  const RatMatrix full = reconstruct_local(h, g.params(), f.params(), dist.h_star.row(0));
  CHECK(full.slice_rows(0, 1) == dist.h_star.slice_rows(0, 1));
  CHECK(full == dist.h_star);
}

TEST_CASE("local reconstruction of the Hamming code over H(4,2) x H(3,2)") {
  const Graph left = hamming_graph(4, 2), right = hamming_graph(3, 2);
  const Graph p = direct_product(left, right);
  const Coloring f = distance_coloring(p, hamming_code(3));
  const auto fs = PerfectStructure::from_coloring(p, f);
  const auto cl = vertex_coloring(left, 0), cr = vertex_coloring(right, 0);
  const auto gl = PerfectStructure::from_coloring(left, cl), gr = PerfectStructure::from_coloring(right, cr);

  const RatMatrix brute_h = oracle::brute_pair_distribution(tensor_coloring(cl, cr), f).table;
  const RatMatrix brute_star = rearrange(brute_h, cl.n_colors(), cr.n_colors());
  const RatMatrix full = reconstruct_local(left, gr.params(), fs.params(), brute_star.row(0));
  CHECK(full == brute_star);
  const auto pi = p_polynomials(intersection_array(left));
  CHECK(reconstruct_local(pi, gr.params(), fs.params(), brute_star.row(0)) == brute_star);

  const auto dist = tensor_distribution(left, gl, right, gr, fs);
  CHECK(dist.h == brute_h);

  // local distribution along the right factor through vertex 0, counted directly
  const auto local = extract_local(dist);
  const auto dr = distances_from(right, 0);
  RatMatrix expected(4, 2);
  for (Vertex v = 0; v < right.n_vertices(); ++v) expected(dr.distance[v], f[v]) += Rational(1);
  CHECK(local.right_local == expected);
  const auto dl = distances_from(left, 0);
  RatMatrix expected_left(5, 2);
  for (Vertex v = 0; v < left.n_vertices(); ++v) expected_left(dl.distance[v], f[v * 8]) += Rational(1);
  CHECK(local.left_local == expected_left);
}

TEST_CASE("extract_local on g' (x) g'' itself") {
  const Graph h = hamming_graph(2, 3);
  const auto c = vertex_coloring(h, 0);
  const Coloring f = tensor_coloring(c, c);
  const Graph p = direct_product(h, h);
  const auto g = PerfectStructure::from_coloring(h, c);
  const auto dist = tensor_distribution(h, g, h, g, PerfectStructure::from_coloring(p, f));
  const auto local = extract_local(dist);
  const auto sizes = c.class_sizes();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 9; ++j) {
      CHECK(local.right_local(i, j) == Rational(j == i ? sizes[i] : 0));
      CHECK(local.left_local(i, j) == Rational(j == 3 * i ? sizes[i] : 0));
    }
}

TEST_CASE("one-vertex right factor") {
  const Graph left = johnson_graph(5, 2);
  const Graph point(std::vector<std::vector<Vertex>>(1));
  const Graph p = direct_product(left, point);
  const Coloring f = vertex_coloring(left, 3);
  const auto dist = tensor_distribution(left, vertex_structure(left, 0), point, vertex_structure(point, 0),
                                        PerfectStructure::from_coloring(p, f));
  const auto local = extract_local(dist);
  CHECK(local.left_local == oracle::brute_distribution(left, std::vector<Vertex>{0}, f).computed.table);
}

TEST_CASE("discrete left coloring: h* is perfect over the left graph") {
  const std::pair<Vertex, Vertex> cycle[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  const Graph c5 = Graph::from_edges(5, cycle);
  const Graph k2 = complete_graph(2);
  const auto g1 = PerfectStructure::from_coloring(c5, Coloring::discrete(5));
  CHECK(g1.params() == c5.adjacency_matrix());
  const auto g2 = vertex_structure(k2, 0);
  const Graph p = direct_product(c5, k2);
  for (const Coloring& f : {fiber_coloring(c5, k2), Coloring::trivial(10)}) {
    const auto fs = PerfectStructure::from_coloring(p, f);
    const auto dist = tensor_distribution(c5, g1, k2, g2, fs);
    CHECK(verify_structure(c5, dist.h_star, rearranged_params(g2.params(), fs.params())).ok);
    CHECK_FALSE(dist.factors_are_vertex_distance_colorings);
    CHECK_THROWS_AS(extract_local(dist), DomainError);
  }
}

TEST_CASE("vertex distance coloring recognition") {
  const Graph h = hamming_graph(2, 3);
  CHECK(is_vertex_distance_coloring(h, vertex_coloring(h, 4)));
  CHECK_FALSE(is_vertex_distance_coloring(h, Coloring::trivial(9)));
  CHECK_FALSE(is_vertex_distance_coloring(h, lattice_coloring(2, 1, 3)));
  CHECK(is_vertex_distance_coloring(Graph(std::vector<std::vector<Vertex>>(1)), Coloring::trivial(1)));
}
