#include "eqpart/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <memory>
#include <string>
#include <unordered_map>

#include "eqpart/error.hpp"

namespace eqpart {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

void check_budget(std::size_t n, std::size_t budget, const char* what) {
  if (n > budget) {
    throw BudgetError(std::string(what) + " needs " + std::to_string(n) +
                      " vertices, budget is " + std::to_string(budget));
  }
}

// q^n with saturation at budget + 1.
std::size_t bounded_power(unsigned q, unsigned n, std::size_t budget) {
  std::size_t out = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (out > (budget + 1) / q) return budget + 1;
    out *= q;
  }
  return out;
}

}  // namespace

Graph::Graph(std::vector<std::vector<Vertex>> adjacency, Decoder decoder)
    : adjacency_(std::move(adjacency)), decoder_(std::move(decoder)) {
  const std::size_t n = adjacency_.size();
  std::size_t arcs = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto& nb = adjacency_[v];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] >= n) throw DomainError("neighbor index out of range");
      if (nb[i] == v) throw DomainError("self-loop at vertex " + std::to_string(v));
      if (i > 0 && nb[i - 1] >= nb[i]) throw DomainError("adjacency list not strictly sorted");
    }
    arcs += nb.size();
  }
  for (std::size_t v = 0; v < n; ++v)
    for (Vertex u : adjacency_[v])
      if (!std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), static_cast<Vertex>(v)))
        throw DomainError("adjacency is not symmetric");
  n_edges_ = arcs / 2;
}

Graph Graph::from_edges(std::size_t n_vertices, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<std::vector<Vertex>> adj(n_vertices);
  for (auto [u, v] : edges) {
    if (u >= n_vertices || v >= n_vertices) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (std::size_t v = 0; v < n_vertices; ++v) {
    auto& nb = adj[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw DomainError("duplicate edge at vertex " + std::to_string(v));
  }
  return Graph(std::move(adj));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

long Graph::regular_degree() const {
  if (adjacency_.empty()) return -1;
  const std::size_t d = adjacency_.front().size();
  for (const auto& nb : adjacency_)
    if (nb.size() != d) return -1;
  return static_cast<long>(d);
}

VertexWord Graph::label(Vertex v) const {
  if (!decoder_) throw DomainError("graph carries no vertex labels");
  return decoder_(v);
}

RatMatrix Graph::adjacency_matrix() const {
  const std::size_t n = n_vertices();
  RatMatrix a(n, n);
  for (std::size_t v = 0; v < n; ++v)
    for (Vertex u : adjacency_[v]) a(v, u) = 1;
  return a;
}

RatMatrix Graph::multiply(const RatMatrix& f) const {
  if (f.rows() != n_vertices()) throw ShapeError("A*f: f must have one row per vertex");
  RatMatrix out(f.rows(), f.cols());
  for (std::size_t v = 0; v < n_vertices(); ++v) {
    auto dst = out.row(v);
    for (Vertex u : adjacency_[v]) {
      auto src = f.row(u);
      for (std::size_t j = 0; j < f.cols(); ++j)
        if (!src[j].is_zero()) dst[j] += src[j];
    }
  }
  return out;
}

Vertex hamming_index(std::span<const unsigned> word, unsigned q) {
  std::size_t index = 0;
  for (unsigned x : word) {
    if (x >= q) throw DomainError("word coordinate exceeds alphabet");
    index = index * q + x;
  }
  return static_cast<Vertex>(index);
}

VertexWord hamming_word(Vertex index, unsigned n, unsigned q) {
  VertexWord word(n);
  for (unsigned i = n; i-- > 0;) {
    word[i] = index % q;
    index /= q;
  }
  return word;
}

Graph hamming_graph(unsigned n, unsigned q, std::size_t vertex_budget) {
  if (q < 2) throw DomainError("hamming_graph: alphabet size must be at least 2");
  if (n < 1) throw DomainError("hamming_graph: length must be at least 1");
  const std::size_t size = bounded_power(q, n, vertex_budget);
  check_budget(size, vertex_budget, "hamming_graph");

  std::vector<std::vector<Vertex>> adj(size);
  for (std::size_t v = 0; v < size; ++v) {
    auto& nb = adj[v];
    nb.reserve(static_cast<std::size_t>(q - 1) * n);
    std::size_t weight = 1;  // place value q^i of the digit i places from the right
    for (unsigned i = 0; i < n; ++i, weight *= q) {
      const std::size_t digit = (v / weight) % q;
      const std::size_t base = v - digit * weight;
      for (std::size_t d = 0; d < q; ++d)
        if (d != digit) nb.push_back(static_cast<Vertex>(base + d * weight));
    }
    std::sort(nb.begin(), nb.end());
  }
  return Graph(std::move(adj), [n, q](Vertex v) { return hamming_word(v, n, q); });
}

Graph johnson_graph(unsigned n, unsigned k, std::size_t vertex_budget) {
  if (k > n) throw DomainError("johnson_graph: k exceeds n");
  if (n > 63) throw DomainError("johnson_graph: n above 63 is not supported");
  const Rational count = binomial(n, k);
  if (count > Rational(vertex_budget)) throw BudgetError("johnson_graph exceeds vertex budget");

  // Lexicographic k-subsets; a subset is a bitmask over {0..n-1}.
  auto masks = std::make_shared<std::vector<std::uint64_t>>();
  std::vector<unsigned> pick(k);
  for (unsigned i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (unsigned x : pick) mask |= std::uint64_t{1} << x;
    masks->push_back(mask);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && pick[i] == n - k + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }

  std::unordered_map<std::uint64_t, Vertex> index;
  for (std::size_t v = 0; v < masks->size(); ++v) index.emplace((*masks)[v], static_cast<Vertex>(v));

  std::vector<std::vector<Vertex>> adj(masks->size());
  for (std::size_t v = 0; v < masks->size(); ++v) {
    const std::uint64_t mask = (*masks)[v];
    for (unsigned out = 0; out < n; ++out) {
      if (!(mask >> out & 1)) continue;
      for (unsigned in = 0; in < n; ++in) {
        if (mask >> in & 1) continue;
        adj[v].push_back(index.at(mask ^ (std::uint64_t{1} << out) ^ (std::uint64_t{1} << in)));
      }
    }
    std::sort(adj[v].begin(), adj[v].end());
  }
  return Graph(std::move(adj), [masks, n](Vertex v) {
    VertexWord support;
    for (unsigned i = 0; i < n; ++i)
      if ((*masks)[v] >> i & 1) support.push_back(i);
    return support;
  });
}

Graph halved_cube(unsigned n, Parity parity, std::size_t vertex_budget) {
  if (n < 2) throw DomainError("halved_cube: n must be at least 2");
  if (n > 31) throw DomainError("halved_cube: n above 31 is not supported");
  check_budget(std::size_t{1} << (n - 1), vertex_budget, "halved_cube");

  const unsigned want = parity == Parity::even ? 0 : 1;
  auto words = std::make_shared<std::vector<std::uint32_t>>();
  std::vector<Vertex> index(std::size_t{1} << n, 0);
  for (std::uint32_t w = 0; w < (std::uint32_t{1} << n); ++w) {
    if (static_cast<unsigned>(std::popcount(w) & 1) != want) continue;
    index[w] = static_cast<Vertex>(words->size());
    words->push_back(w);
  }

  std::vector<std::vector<Vertex>> adj(words->size());
  for (std::size_t v = 0; v < words->size(); ++v) {
    const std::uint32_t w = (*words)[v];
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j)
        adj[v].push_back(index[w ^ (1u << i) ^ (1u << j)]);
    std::sort(adj[v].begin(), adj[v].end());
  }
  // The word is read with coordinate 0 as the most significant bit, as in hamming_graph.
  return Graph(std::move(adj), [words, n](Vertex v) { return hamming_word((*words)[v], n, 2); });
}

Graph direct_product(const Graph& left, const Graph& right, std::size_t vertex_budget) {
  const std::size_t n1 = left.n_vertices();
  const std::size_t n2 = right.n_vertices();
  if (n2 != 0 && n1 > vertex_budget / n2) throw BudgetError("direct_product exceeds vertex budget");

  std::vector<std::vector<Vertex>> adj(n1 * n2);
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n2; ++b) {
      auto& nb = adj[a * n2 + b];
      nb.reserve(left.degree(static_cast<Vertex>(a)) + right.degree(static_cast<Vertex>(b)));
      for (Vertex a2 : left.neighbors(static_cast<Vertex>(a)))
        nb.push_back(static_cast<Vertex>(a2 * n2 + b));
      for (Vertex b2 : right.neighbors(static_cast<Vertex>(b)))
        nb.push_back(static_cast<Vertex>(a * n2 + b2));
      std::sort(nb.begin(), nb.end());
    }

  Graph::Decoder decoder;
  if (left.has_labels() && right.has_labels()) {
    decoder = [left, right, n2](Vertex v) {
      VertexWord word = left.label(static_cast<Vertex>(v / n2));
      VertexWord tail = right.label(static_cast<Vertex>(v % n2));
      word.insert(word.end(), tail.begin(), tail.end());
      return word;
    };
  }
  return Graph(std::move(adj), std::move(decoder));
}

Graph complete_graph(unsigned n) {
  std::vector<std::vector<Vertex>> adj(n);
  for (unsigned v = 0; v < n; ++v)
    for (unsigned u = 0; u < n; ++u)
      if (u != v) adj[v].push_back(u);
  return Graph(std::move(adj));
}

DistanceProfile distances_from_set(const Graph& g, std::span<const Vertex> code) {
  if (code.empty()) throw DomainError("distance to an empty vertex set");
  const std::size_t n = g.n_vertices();
  DistanceProfile out;
  out.distance.assign(n, kUnreached);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex c : code) {
    if (c >= n) throw DomainError("code vertex out of range");
    if (out.distance[c] == 0) continue;
    out.distance[c] = 0;
    queue.push_back(c);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex u : g.neighbors(v)) {
      if (out.distance[u] != kUnreached) continue;
      out.distance[u] = out.distance[v] + 1;
      queue.push_back(u);
    }
  }
  if (queue.size() != n) {
    auto it = std::find(out.distance.begin(), out.distance.end(), kUnreached);
    throw DisconnectedError("vertex " + std::to_string(it - out.distance.begin()) +
                            " is unreachable from the code");
  }
  out.radius = out.distance[queue.back()];
  out.class_sizes.assign(out.radius + 1, 0);
  for (auto d : out.distance) ++out.class_sizes[d];
  return out;
}

std::vector<Rational> distance_w_sum(const Graph& g, Vertex v, std::uint32_t w, const RatMatrix& f) {
  if (f.rows() != g.n_vertices()) throw ShapeError("f must have one row per vertex");
  const auto profile = distances_from(g, v);
  if (w > profile.radius) {
    throw DomainError("distance " + std::to_string(w) + " exceeds eccentricity " +
                      std::to_string(profile.radius));
  }
  std::vector<Rational> sum(f.cols());
  for (std::size_t u = 0; u < g.n_vertices(); ++u) {
    if (profile.distance[u] != w) continue;
    auto r = f.row(u);
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += r[j];
  }
  return sum;
}

std::uint32_t diameter(const Graph& g) {
  std::uint32_t best = 0;
  for (std::size_t v = 0; v < g.n_vertices(); ++v)
    best = std::max(best, distances_from(g, static_cast<Vertex>(v)).radius);
  return best;
}

}  // namespace eqpart
