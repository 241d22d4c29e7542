#include "doctest.h"

#include "eqpart/codes.hpp"
#include "eqpart/error.hpp"
#include "eqpart/oracle.hpp"

using namespace eqpart;

TEST_CASE("whole vertex set gives the column sums") {
  const Graph g = hamming_graph(2, 3);
  std::vector<Vertex> all(9);
  for (Vertex v = 0; v < 9; ++v) all[v] = v;
  const Coloring f = Coloring::from_colors({0, 1, 1, 1, 2, 2, 1, 2, 2});
  const auto report = oracle::brute_distribution(g, all, f);
  CHECK(report.computed.table == RatMatrix{{1, 4, 4}});
  CHECK(report.method == "bfs-sum");
}

TEST_CASE("a vertex against its own distance coloring") {
  const Graph g = hamming_graph(2, 3);
  const Coloring f = Coloring::from_colors({0, 1, 1, 1, 2, 2, 1, 2, 2});
  CHECK(oracle::brute_distribution(g, std::vector<Vertex>{0}, f).computed.table ==
        RatMatrix{{1, 0, 0}, {0, 4, 0}, {0, 0, 4}});
}

TEST_CASE("Hamming code eigenfunction sums") {
  const Graph g = hamming_graph(7, 2);
  const auto code = hamming_code(3);
  RatMatrix f(128, 1);
  for (Vertex v = 0; v < 128; ++v) f(v, 0) = -1;
  for (Vertex c : code) f(c, 0) = 7;
  CHECK(oracle::brute_distribution(g, code, f).computed.table == RatMatrix{{112}, {-112}});
}

TEST_CASE("pair distributions") {
  const Coloring f = Coloring::from_colors({0, 1, 1, 0, 2});
  CHECK(oracle::brute_pair_distribution(f, f).table == RatMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 1}});
  CHECK(oracle::brute_pair_distribution(Coloring::discrete(5), f).table == f.indicator());

  // H(2,2): lattice classes {00, 11}, {01, 10}; distances from 00 are 0, 1, 1, 2
  const Coloring lattice = lattice_coloring(2, 1, 2);
  const Coloring vertex = Coloring::from_colors({0, 1, 1, 2});
  CHECK(oracle::brute_pair_distribution(lattice, vertex).table == RatMatrix{{1, 0, 1}, {0, 2, 0}});
  CHECK_THROWS_AS(oracle::brute_pair_distribution(lattice, Coloring::trivial(3)), ShapeError);
}

TEST_CASE("coloring distributions are integral and sum to the vertex count") {
  const Graph g = johnson_graph(6, 3);
  const Coloring f = distance_coloring(g, std::vector<Vertex>{7});
  for (Vertex v : {0u, 5u, 19u}) {
    const auto d = oracle::brute_distribution(g, std::vector<Vertex>{v}, f).computed;
    CHECK(d.table.is_integral());
    CHECK(d.table.sum() == Rational(20));
  }
}

TEST_CASE("oracle errors propagate") {
  const Graph g = hamming_graph(2, 2);
  CHECK_THROWS_AS(oracle::brute_distribution(g, std::vector<Vertex>{}, Coloring::trivial(4)), DomainError);
  CHECK_THROWS_AS(oracle::brute_distribution(g, std::vector<Vertex>{0}, Coloring::trivial(3)), ShapeError);
  const std::pair<Vertex, Vertex> edge[] = {{0, 1}};
  CHECK_THROWS_AS(oracle::brute_distribution(Graph::from_edges(3, edge), std::vector<Vertex>{0}, Coloring::trivial(3)),
                  DisconnectedError);
}
