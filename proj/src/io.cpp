#include "eqpart/io.hpp"

#include <fstream>
#include <sstream>

#include "eqpart/error.hpp"

namespace eqpart::io {

json to_json(const Rational& x) { return x.str(); }

json to_json(std::span<const Rational> row) {
  json out = json::array();
  for (const auto& x : row) out.push_back(x.str());
  return out;
}

json to_json(const RatMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

json to_json(const Polynomial& p) { return to_json(p.coeffs()); }

json to_json(const PPolynomials& pi) {
  json out = json::array();
  for (const auto& p : pi.polys) out.push_back(to_json(p));
  return out;
}

json to_json(const IntersectionArray& ia) {
  return {{"diameter", ia.diameter}, {"b", ia.b}, {"a", ia.a}, {"c", ia.c}};
}

json to_json(const Distribution& d) { return {{"rows", to_json(d.table)}}; }

json to_json(const RearrangedDistribution& r) {
  return {{"n_left", r.n_left}, {"n_right", r.n_right}, {"k", r.k}, {"h", to_json(r.h)}, {"h_star", to_json(r.h_star)}};
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw DomainError("expected a rational string or an integer, got " + j.dump());
}

std::vector<Rational> row_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("expected a JSON array row");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

RatMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("expected a JSON array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) rows.push_back(row_from_json(r));
  return RatMatrix::from_rows(rows);
}

namespace {

unsigned get_unsigned(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0)
    throw DomainError(std::string("graph spec needs a nonnegative integer '") + key + "'");
  return j[key].get<unsigned>();
}

}  // namespace

Graph graph_from_json(const json& j, std::size_t vertex_budget) {
  if (!j.is_object()) throw DomainError("graph spec must be a JSON object");
  if (j.contains("gen")) {
    const auto gen = j["gen"].get<std::string>();
    if (gen == "hamming") return hamming_graph(get_unsigned(j, "n"), get_unsigned(j, "q"), vertex_budget);
    if (gen == "johnson") return johnson_graph(get_unsigned(j, "n"), get_unsigned(j, "k"), vertex_budget);
    if (gen == "halved") {
      const std::string sign = j.value("sign", "even");
      if (sign != "even" && sign != "odd") throw DomainError("halved cube sign must be 'even' or 'odd'");
      return halved_cube(get_unsigned(j, "n"), sign == "even" ? Parity::even : Parity::odd, vertex_budget);
    }
    if (gen == "complete") return complete_graph(get_unsigned(j, "n"));
    if (gen == "product") {
      if (!j.contains("left") || !j.contains("right")) throw DomainError("product spec needs 'left' and 'right'");
      return direct_product(graph_from_json(j["left"], vertex_budget), graph_from_json(j["right"], vertex_budget),
                            vertex_budget);
    }
    throw DomainError("unknown graph generator '" + gen + "'");
  }
  if (j.contains("edges")) {
    const std::size_t n = get_unsigned(j, "n_vertices");
    if (n > vertex_budget) throw BudgetError("edge-list graph exceeds vertex budget");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) throw DomainError("edges must be [u, v] pairs");
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    return Graph::from_edges(n, edges);
  }
  throw DomainError("graph spec needs either 'gen' or 'edges'");
}

Coloring coloring_from_json(const json& j) {
  const json& colors = j.is_object() ? j.at("colors") : j;
  if (!colors.is_array()) throw DomainError("coloring needs a 'colors' array");
  std::vector<std::size_t> out;
  for (const auto& c : colors) {
    if (!c.is_number_integer() || c.get<long long>() < 0) throw DomainError("colors must be nonnegative integers");
    out.push_back(c.get<std::size_t>());
  }
  return Coloring::from_colors(std::move(out));
}

std::vector<Vertex> code_from_json(const json& j) {
  const json& vertices = j.is_object() ? j.at("vertices") : j;
  if (!vertices.is_array()) throw DomainError("code needs a 'vertices' array");
  std::vector<Vertex> out;
  for (const auto& v : vertices) {
    if (!v.is_number_integer() || v.get<long long>() < 0) throw DomainError("code vertices must be nonnegative");
    out.push_back(v.get<Vertex>());
  }
  return out;
}

RatMatrix params_from_json(const json& j) {
  if (j.is_object()) {
    for (const char* key : {"s", "matrix", "R"})
      if (j.contains(key)) return matrix_from_json(j[key]);
    throw DomainError("parameter file needs an 's' matrix");
  }
  return matrix_from_json(j);
}

json load(const std::string& file_or_inline) {
  const auto first = file_or_inline.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (file_or_inline[first] == '{' || file_or_inline[first] == '['))
    return json::parse(file_or_inline);
  std::ifstream in(file_or_inline);
  if (!in) throw InputError("cannot open '" + file_or_inline + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return json::parse(buffer.str());
}

}  // namespace eqpart::io
