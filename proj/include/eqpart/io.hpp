#pragma once

#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "eqpart/distributions.hpp"
#include "eqpart/drg.hpp"
#include "eqpart/equitable.hpp"
#include "eqpart/error.hpp"
#include "eqpart/graph.hpp"
#include "eqpart/localdist.hpp"

namespace eqpart::io {

using json = nlohmann::json;

// Rationals travel as "p/q" strings ("p" when integral). Readers also
// accept plain JSON integers.

json to_json(const Rational& x);
json to_json(const RatMatrix& m);
json to_json(std::span<const Rational> row);
json to_json(const Polynomial& p);
json to_json(const PPolynomials& pi);
json to_json(const IntersectionArray& ia);
/// {"rows": [[...], ...]}
json to_json(const Distribution& d);
/// {"n_left", "n_right", "k", "h", "h_star"}
json to_json(const RearrangedDistribution& r);

Rational rational_from_json(const json& j);
RatMatrix matrix_from_json(const json& j);
std::vector<Rational> row_from_json(const json& j);

/// {"gen": "hamming", "n", "q"} | {"gen": "johnson", "n", "k"} |
/// {"gen": "halved", "n", "sign": "even"|"odd"} |
/// {"gen": "product", "left": spec, "right": spec} |
/// {"n_vertices": N, "edges": [[u, v], ...]}
Graph graph_from_json(const json& j, std::size_t vertex_budget = kDefaultVertexBudget);

/// {"colors": [...]} (an optional "graph" member is ignored here) or a bare array.
Coloring coloring_from_json(const json& j);

/// {"vertices": [...]} or a bare array of vertex indices.
std::vector<Vertex> code_from_json(const json& j);

/// Matrix under "s" (or "matrix" / "R"), or a bare matrix.
RatMatrix params_from_json(const json& j);

/// The named input file could not be read.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Reads a file, or parses the argument itself when it starts with '{' or '['.
/// Throws InputError when the file cannot be opened.
json load(const std::string& file_or_inline);

}  // namespace eqpart::io
