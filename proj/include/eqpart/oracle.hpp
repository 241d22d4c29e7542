#pragma once

#include <chrono>
#include <span>
#include <string>

#include "eqpart/distributions.hpp"
#include "eqpart/equitable.hpp"
#include "eqpart/graph.hpp"

namespace eqpart::oracle {

// Reference implementations by breadth-first search and summation only.
// Nothing here touches quotient matrices or polynomials.

struct OracleReport {
  Distribution computed;
  std::string method = "bfs-sum";
  std::chrono::nanoseconds elapsed{0};
};

/// Row w is the sum of f(v) over the vertices at distance w from code,
/// w = 0..covering radius.
OracleReport brute_distribution(const Graph& g, std::span<const Vertex> code, const RatMatrix& f);
OracleReport brute_distribution(const Graph& g, std::span<const Vertex> code, const Coloring& f);

/// Row i is the sum of f(v) over the vertices of color i in gcol.
Distribution brute_pair_distribution(const Coloring& gcol, const RatMatrix& f);
Distribution brute_pair_distribution(const Coloring& gcol, const Coloring& f);

}  // namespace eqpart::oracle
