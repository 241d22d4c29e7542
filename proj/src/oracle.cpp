#include "eqpart/oracle.hpp"

#include <limits>
#include <queue>

#include "eqpart/error.hpp"

namespace eqpart::oracle {

namespace {

constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs(const Graph& g, std::span<const Vertex> code) {
  if (code.empty()) throw DomainError("oracle: empty code");
  std::vector<std::size_t> dist(g.n_vertices(), kFar);
  std::queue<Vertex> todo;
  for (Vertex c : code) {
    if (c >= g.n_vertices()) throw DomainError("oracle: code vertex out of range");
    if (dist[c] == 0) continue;
    dist[c] = 0;
    todo.push(c);
  }
  while (!todo.empty()) {
    const Vertex v = todo.front();
    todo.pop();
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] == kFar) {
        dist[u] = dist[v] + 1;
        todo.push(u);
      }
    }
  }
  for (auto d : dist)
    if (d == kFar) throw DisconnectedError("oracle: some vertex is unreachable from the code");
  return dist;
}

}  // namespace

OracleReport brute_distribution(const Graph& g, std::span<const Vertex> code, const RatMatrix& f) {
  const auto start = std::chrono::steady_clock::now();
  if (f.rows() != g.n_vertices()) throw ShapeError("oracle: f must have one row per vertex");
  const auto dist = bfs(g, code);
  std::size_t radius = 0;
  for (auto d : dist) radius = std::max(radius, d);

  RatMatrix table(radius + 1, f.cols());
  for (std::size_t v = 0; v < dist.size(); ++v) {
    auto dst = table.row(dist[v]);
    auto src = f.row(v);
    for (std::size_t j = 0; j < f.cols(); ++j) dst[j] += src[j];
  }
  OracleReport report;
  report.computed.table = std::move(table);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

OracleReport brute_distribution(const Graph& g, std::span<const Vertex> code, const Coloring& f) {
  const auto start = std::chrono::steady_clock::now();
  if (f.n_vertices() != g.n_vertices()) throw ShapeError("oracle: coloring size differs from graph");
  const auto dist = bfs(g, code);
  std::size_t radius = 0;
  for (auto d : dist) radius = std::max(radius, d);

  std::vector<std::vector<long>> counts(radius + 1, std::vector<long>(f.n_colors(), 0));
  for (std::size_t v = 0; v < dist.size(); ++v) ++counts[dist[v]][f[v]];
  RatMatrix table(radius + 1, f.n_colors());
  for (std::size_t w = 0; w <= radius; ++w)
    for (std::size_t j = 0; j < f.n_colors(); ++j) table(w, j) = counts[w][j];

  OracleReport report;
  report.computed.table = std::move(table);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

Distribution brute_pair_distribution(const Coloring& gcol, const RatMatrix& f) {
  if (f.rows() != gcol.n_vertices()) throw ShapeError("oracle: f and g have different vertex counts");
  RatMatrix table(gcol.n_colors(), f.cols());
  for (std::size_t v = 0; v < f.rows(); ++v) {
    auto dst = table.row(gcol[v]);
    auto src = f.row(v);
    for (std::size_t j = 0; j < f.cols(); ++j) dst[j] += src[j];
  }
  return {std::move(table)};
}

Distribution brute_pair_distribution(const Coloring& gcol, const Coloring& f) {
  if (f.n_vertices() != gcol.n_vertices()) throw ShapeError("oracle: f and g have different vertex counts");
  std::vector<long> counts(gcol.n_colors() * f.n_colors(), 0);
  for (std::size_t v = 0; v < f.n_vertices(); ++v) ++counts[gcol[v] * f.n_colors() + f[v]];
  RatMatrix table(gcol.n_colors(), f.n_colors());
  for (std::size_t i = 0; i < gcol.n_colors(); ++i)
    for (std::size_t j = 0; j < f.n_colors(); ++j) table(i, j) = counts[i * f.n_colors() + j];
  return {std::move(table)};
}

}  // namespace eqpart::oracle
