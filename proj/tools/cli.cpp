#include "cli.hpp"

#include <functional>
#include <optional>
#include <utility>

#include "CLI11.hpp"

#include "eqpart/codes.hpp"
#include "eqpart/distributions.hpp"
#include "eqpart/drg.hpp"
#include "eqpart/equitable.hpp"
#include "eqpart/error.hpp"
#include "eqpart/io.hpp"
#include "eqpart/localdist.hpp"
#include "eqpart/oracle.hpp"

namespace eqpart::cli {

namespace {

using io::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::size_t vertex_budget = kDefaultVertexBudget;
  std::string graph, left, right;
  std::string coloring, left_coloring, right_coloring;
  std::string code, s, structure, f0, h_star_0;
  unsigned m = 0, k = 0, n = 0, p = 0, q = 0;
  std::size_t color = 0;
  Vertex base = 0;
  Vertex left_base = 0;
  bool verify_oracle = false;
};

Graph need_graph(const std::string& spec, const Options& o, const char* flag) {
  if (spec.empty()) throw UsageError(std::string("missing ") + flag);
  return io::graph_from_json(io::load(spec), o.vertex_budget);
}

// The structure f the command talks about: a coloring or an explicit
// (f, S) pair, plus an optional override for S.
struct FInput {
  std::optional<Coloring> coloring;
  std::optional<RatMatrix> values;
  std::optional<RatMatrix> s;
};

FInput read_f(const Options& o, const Graph* g) {
  FInput in;
  if (!o.coloring.empty()) {
    in.coloring = io::coloring_from_json(io::load(o.coloring));
    if (g && in.coloring->n_vertices() != g->n_vertices())
      throw ShapeError("coloring does not match the graph size");
    in.values = in.coloring->indicator();
    if (g) in.s = quotient_matrix(*g, *in.coloring);
  } else if (!o.structure.empty()) {
    const json j = io::load(o.structure);
    in.values = io::matrix_from_json(j.at("f"));
    in.s = io::matrix_from_json(j.at("s"));
    if (g && !verify_structure(*g, *in.values, *in.s).ok)
      throw AssertionFailure("structure file does not satisfy A f = f S");
  }
  if (!o.s.empty()) in.s = io::params_from_json(io::load(o.s));
  if (!in.s) throw UsageError("need --s, --coloring or --structure");
  return in;
}

// The graph f lives on, built only when f itself is supplied.
std::optional<Graph> host_graph(const Options& o, const std::function<Graph()>& build) {
  if (o.coloring.empty() && o.structure.empty()) {
    if (o.verify_oracle) throw UsageError("--verify-oracle needs --coloring or --structure");
    return std::nullopt;
  }
  return build();
}

std::vector<Rational> sum_over(const RatMatrix& f, std::span<const Vertex> code) {
  std::vector<Rational> out(f.cols());
  for (Vertex v : code) {
    if (v >= f.rows()) throw DomainError("code vertex out of range");
    auto r = f.row(v);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += r[j];
  }
  return out;
}

std::vector<Rational> first_row(const Options& o, const FInput& in, std::span<const Vertex> code) {
  if (!o.f0.empty()) return io::row_from_json(io::load(o.f0));
  if (!in.values) throw UsageError("need --f0 or an f to sum over the code");
  return sum_over(*in.values, code);
}

void check_against_oracle(const Distribution& formula, const Graph& g, std::span<const Vertex> code,
                          const FInput& in) {
  if (!in.values) throw UsageError("--verify-oracle needs --coloring or --structure");
  const auto report = in.coloring ? oracle::brute_distribution(g, code, *in.coloring)
                                  : oracle::brute_distribution(g, code, *in.values);
  if (report.computed != formula) {
    throw AssertionFailure("formula disagrees with the brute-force oracle:\nformula\n" + to_string(formula.table) +
                           "oracle\n" + to_string(report.computed.table));
  }
}

json cmd_gen(const Options& o) {
  const Graph g = need_graph(o.graph, o, "--graph");
  json edges = json::array();
  for (Vertex v = 0; v < g.n_vertices(); ++v)
    for (Vertex u : g.neighbors(v))
      if (v < u) edges.push_back({v, u});
  json out{{"n_vertices", g.n_vertices()}, {"n_edges", g.n_edges()}, {"edges", edges}};
  const long d = g.regular_degree();
  out["regular_degree"] = d >= 0 ? json(d) : json(nullptr);
  out["diameter"] = diameter(g);
  out["distance_regular"] = false;
  if (d >= 0) {
    try {
      const auto ia = intersection_array(g);
      out["distance_regular"] = true;
      out["intersection_array"] = io::to_json(ia);
      out["p_polynomials"] = io::to_json(p_polynomials(ia));
    } catch (const NotDistanceRegular&) {
    }
  }
  return out;
}

json cmd_quotient(const Options& o) {
  const Graph g = need_graph(o.graph, o, "--graph");
  if (o.coloring.empty()) throw UsageError("missing --coloring");
  const Coloring c = io::coloring_from_json(io::load(o.coloring));
  if (c.n_vertices() != g.n_vertices()) throw ShapeError("coloring does not match the graph size");
  return {{"s", io::to_json(quotient_matrix(g, c))}, {"class_sizes", c.class_sizes()}};
}

json cmd_verify(const Options& o, int& status) {
  RatMatrix f, s;
  std::optional<Graph> g;
  std::optional<RatMatrix> a;
  if (!o.structure.empty()) {
    const json j = io::load(o.structure);
    f = io::matrix_from_json(j.at("f"));
    s = io::matrix_from_json(j.at("s"));
    if (j.contains("matrix")) a = io::matrix_from_json(j["matrix"]);
    else if (j.contains("graph")) g = io::graph_from_json(j["graph"], o.vertex_budget);
  } else if (!o.coloring.empty()) {
    f = io::coloring_from_json(io::load(o.coloring)).indicator();
    if (o.s.empty()) throw UsageError("verifying a coloring needs --s");
  } else {
    throw UsageError("need --structure or --coloring");
  }
  if (!o.s.empty()) s = io::params_from_json(io::load(o.s));
  if (!o.graph.empty()) g = need_graph(o.graph, o, "--graph");
  if (!g && !a) throw UsageError("need a graph (--graph or in the structure file) or a matrix");

  const StructureCheck check = a ? verify_structure(*a, f, s) : verify_structure(*g, f, s);
  status = check.ok ? 0 : 1;
  return {{"ok", check.ok}, {"residual", io::to_json(check.residual)}};
}

json cmd_crc(const Options& o) {
  const Graph g = need_graph(o.graph, o, "--graph");
  if (o.code.empty()) throw UsageError("missing --code");
  const auto code = io::code_from_json(io::load(o.code));
  const auto crc = check_completely_regular(g, code);
  return {{"rho", crc.rho}, {"R", io::to_json(crc.params)}, {"class_sizes", crc.class_sizes}};
}

json cmd_oracle(const Options& o) {
  const Graph g = need_graph(o.graph, o, "--graph");
  if (o.code.empty()) throw UsageError("missing --code");
  const auto code = io::code_from_json(io::load(o.code));
  if (!o.coloring.empty()) {
    const Coloring c = io::coloring_from_json(io::load(o.coloring));
    return io::to_json(oracle::brute_distribution(g, code, c).computed);
  }
  if (!o.structure.empty()) {
    const RatMatrix f = io::matrix_from_json(io::load(o.structure).at("f"));
    return io::to_json(oracle::brute_distribution(g, code, f).computed);
  }
  throw UsageError("need --coloring or --structure");
}

json cmd_distrib_vertex(const Options& o) {
  const Graph g = need_graph(o.graph, o, "--graph");
  const FInput in = read_f(o, &g);
  const Distribution d = vertex_distribution(g, *in.s, o.color);
  if (o.verify_oracle) {
    if (!in.coloring) throw UsageError("--verify-oracle for vertex distributions needs --coloring");
    const auto members = in.coloring->members(o.color);
    if (members.empty()) throw DomainError("no vertex has the requested color");
    const Vertex code[] = {members.front()};
    check_against_oracle(d, g, code, in);
  }
  return io::to_json(d);
}

json cmd_distrib_code(const Options& o) {
  const Graph g = need_graph(o.graph, o, "--graph");
  if (o.code.empty()) throw UsageError("missing --code");
  const auto code = io::code_from_json(io::load(o.code));
  const auto crc = check_completely_regular(g, code);
  const FInput in = read_f(o, &g);
  const Distribution d = code_distribution(crc, *in.s, first_row(o, in, code));
  if (o.verify_oracle) check_against_oracle(d, g, code, in);
  return io::to_json(d);
}

json cmd_distrib_lattice(const Options& o) {
  const auto host = host_graph(o, [&] { return hamming_graph(o.m * o.k, o.q, o.vertex_budget); });
  const FInput in = read_f(o, host ? &*host : nullptr);
  const auto zero_class = lattice_coloring(o.m, o.k, o.q, o.vertex_budget).members(0);
  const Distribution d = lattice_distribution(o.m, o.k, o.q, *in.s, first_row(o, in, zero_class));
  if (o.verify_oracle) check_against_oracle(d, *host, zero_class, in);
  return io::to_json(d);
}

json cmd_distrib_fiber(const Options& o) {
  const Graph left = need_graph(o.left, o, "--left");
  const Graph right = need_graph(o.right, o, "--right");
  const long d = left.regular_degree();
  if (d < 0) throw DomainError("left factor must be regular");
  if (o.base >= right.n_vertices()) throw DomainError("--base out of range");
  std::vector<Vertex> fiber;
  for (std::size_t a = 0; a < left.n_vertices(); ++a)
    fiber.push_back(static_cast<Vertex>(a * right.n_vertices() + o.base));
  const auto host = host_graph(o, [&] { return direct_product(left, right, o.vertex_budget); });
  const FInput in = read_f(o, host ? &*host : nullptr);
  const Distribution dist = fiber_distribution(right, d, *in.s, first_row(o, in, fiber));
  if (o.verify_oracle) check_against_oracle(dist, *host, fiber, in);
  return io::to_json(dist);
}

json cmd_distrib_subcube(const Options& o) {
  const auto host = host_graph(o, [&] { return hamming_graph(o.m + o.k, o.q, o.vertex_budget); });
  const FInput in = read_f(o, host ? &*host : nullptr);
  const auto face = face_code(o.m, o.k, o.q);
  const Distribution d = subcube_distribution(o.m, o.k, o.q, *in.s, first_row(o, in, face));
  if (o.verify_oracle) check_against_oracle(d, *host, face, in);
  return io::to_json(d);
}

json cmd_distrib_pcube(const Options& o) {
  if (o.p < 1 || o.p >= o.q) throw DomainError("pcube needs 1 <= p < q");
  const auto host = host_graph(o, [&] { return hamming_graph(o.n, o.q, o.vertex_budget); });
  const FInput in = read_f(o, host ? &*host : nullptr);
  const auto sub = subcube_code(o.n, o.p, o.q);
  const Distribution d = pcube_distribution(o.n, o.p, o.q, *in.s, first_row(o, in, sub));
  if (o.verify_oracle) check_against_oracle(d, *host, sub, in);
  return io::to_json(d);
}

struct Factors {
  Graph left, right;
  Coloring left_coloring, right_coloring;
};

Factors read_factors(const Options& o) {
  Factors out{need_graph(o.left, o, "--left"), need_graph(o.right, o, "--right"), {}, {}};
  const Vertex left_base[] = {o.left_base};
  const Vertex right_base[] = {o.base};
  out.left_coloring = o.left_coloring.empty() ? distance_coloring(out.left, left_base)
                                              : io::coloring_from_json(io::load(o.left_coloring));
  out.right_coloring = o.right_coloring.empty() ? distance_coloring(out.right, right_base)
                                                : io::coloring_from_json(io::load(o.right_coloring));
  return out;
}

json cmd_local_params(const Options& o) {
  const Factors f = read_factors(o);
  const auto g1 = PerfectStructure::from_coloring(f.left, f.left_coloring);
  const auto g2 = PerfectStructure::from_coloring(f.right, f.right_coloring);
  const auto t = tensor_structure(f.left, g1, f.right, g2);
  return {{"left", io::to_json(g1.params())}, {"right", io::to_json(g2.params())},
          {"params", io::to_json(t.product.params())}};
}

json cmd_local_distrib(const Options& o) {
  const Factors f = read_factors(o);
  const Graph product = direct_product(f.left, f.right, o.vertex_budget);
  const FInput in = read_f(o, &product);
  if (!in.values) throw UsageError("need --coloring or --structure for f");
  const auto g1 = PerfectStructure::from_coloring(f.left, f.left_coloring);
  const auto g2 = PerfectStructure::from_coloring(f.right, f.right_coloring);
  const auto fs = PerfectStructure::over_graph(product, *in.values, *in.s);
  const auto h = tensor_distribution(f.left, g1, f.right, g2, fs);
  if (o.verify_oracle) {
    const auto expect = oracle::brute_pair_distribution(tensor_coloring(f.left_coloring, f.right_coloring), *in.values);
    if (expect.table != h.h) throw AssertionFailure("h disagrees with the brute-force oracle");
  }
  json out = io::to_json(h);
  if (h.factors_are_vertex_distance_colorings) {
    const auto local = extract_local(h);
    out["left_local"] = io::to_json(local.left_local);
    out["right_local"] = io::to_json(local.right_local);
  }
  return out;
}

json cmd_local_reconstruct(const Options& o) {
  const Factors f = read_factors(o);
  if (!o.left_coloring.empty()) throw UsageError("reconstruction uses the distance coloring of --left-base");
  const RatMatrix r2 = quotient_matrix(f.right, f.right_coloring);
  const Graph product = direct_product(f.left, f.right, o.vertex_budget);
  const FInput in = read_f(o, &product);

  const Coloring g = tensor_coloring(f.left_coloring, f.right_coloring);
  std::vector<Rational> h0;
  if (!o.h_star_0.empty()) {
    h0 = io::row_from_json(io::load(o.h_star_0));
  } else {
    if (!in.values) throw UsageError("need --h-star-0 or an f to compute it from");
    const auto h = oracle::brute_pair_distribution(g, *in.values).table;
    const auto row = rearrange(h, f.left_coloring.n_colors(), f.right_coloring.n_colors()).row(0);
    h0.assign(row.begin(), row.end());
  }
  const RatMatrix h_star = reconstruct_local(f.left, r2, *in.s, h0);
  if (o.verify_oracle) {
    if (!in.values) throw UsageError("--verify-oracle needs --coloring or --structure");
    const auto h = oracle::brute_pair_distribution(g, *in.values).table;
    if (rearrange(h, f.left_coloring.n_colors(), f.right_coloring.n_colors()) != h_star)
      throw AssertionFailure("reconstructed h* disagrees with the brute-force oracle");
  }
  return {{"n_left", h_star.rows()},
          {"n_right", f.right_coloring.n_colors()},
          {"k", in.s->rows()},
          {"h_star", io::to_json(h_star)}};
}

json cmd_selftest(int& status) {
  json checks = json::array();
  auto check = [&checks](const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail;
    try {
      ok = body();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    json entry{{"name", name}, {"ok", ok}};
    if (!detail.empty()) entry["error"] = detail;
    checks.push_back(entry);
  };

  const RatMatrix s3{{0, 4, 0}, {1, 1, 2}, {0, 2, 2}};
  check("ternary square vertex coloring", [&] {
    const Graph g = hamming_graph(2, 3);
    const Vertex v[] = {0};
    return quotient_matrix(g, distance_coloring(g, v)) == s3;
  });
  check("9x9 tensor parameter matrix", [&] {
    const Graph g = hamming_graph(2, 3);
    const Vertex v[] = {0};
    const auto c = PerfectStructure::from_coloring(g, distance_coloring(g, v));
    const RatMatrix expected{{0, 4, 0, 4, 0, 0, 0, 0, 0}, {1, 1, 2, 0, 4, 0, 0, 0, 0}, {0, 2, 2, 0, 0, 4, 0, 0, 0},
                             {1, 0, 0, 1, 4, 0, 2, 0, 0}, {0, 1, 0, 1, 2, 2, 0, 2, 0}, {0, 0, 1, 0, 2, 3, 0, 0, 2},
                             {0, 0, 0, 2, 0, 0, 2, 4, 0}, {0, 0, 0, 0, 2, 0, 1, 3, 2}, {0, 0, 0, 0, 0, 2, 0, 2, 4}};
    return tensor_structure(g, c, g, c).product.params() == expected;
  });
  check("Hamming(7,4) code is completely regular", [] {
    return check_completely_regular(hamming_graph(7, 2), hamming_code(3)).params == RatMatrix{{0, 7}, {1, 6}};
  });
  check("extended Hamming(8,4) code is completely regular", [] {
    return check_completely_regular(hamming_graph(8, 2), extended_hamming_code(3)).params ==
           RatMatrix{{0, 8, 0}, {1, 0, 7}, {0, 8, 0}};
  });
  check("1-perfect code eigenfunction", [] {
    const Graph g = hamming_graph(7, 2);
    RatMatrix f(g.n_vertices(), 1);
    for (std::size_t v = 0; v < g.n_vertices(); ++v) f(v, 0) = -1;
    for (Vertex c : hamming_code(3)) f(c, 0) = 7;
    return verify_structure(g, f, RatMatrix{{-1}}).ok;
  });
  check("Hamming code weight distribution from a codeword", [] {
    const Graph g = hamming_graph(7, 2);
    const auto d = vertex_distribution(g, RatMatrix{{0, 7}, {1, 6}}, 0);
    const long expected[] = {1, 0, 0, 7, 7, 0, 0, 1};
    for (std::size_t w = 0; w < 8; ++w)
      if (d.table(w, 0) != Rational(expected[w])) return false;
    const auto code = hamming_code(3);
    const Vertex v[] = {code.front()};
    Coloring c = distance_coloring(g, code);
    return oracle::brute_distribution(g, v, c).computed == d;
  });
  check("lattice m=2 k=1 q=2", [] {
    const RatMatrix s{{2}};
    const Rational f0[] = {2};
    return lattice_distribution(2, 1, 2, s, f0).table == RatMatrix{{2}, {2}};
  });
  check("lattice m=2 k=2 q=2 against oracle", [] {
    const Graph g = hamming_graph(4, 2);
    const auto zero = lattice_coloring(2, 2, 2).members(0);
    const RatMatrix s{{4}};
    const Rational f0[] = {4};
    const auto d = lattice_distribution(2, 2, 2, s, f0);
    return d.table == RatMatrix{{4}, {8}, {4}} &&
           oracle::brute_distribution(g, zero, Coloring::trivial(g.n_vertices())).computed == d;
  });
  check("binary subcube in ternary square", [] {
    const RatMatrix s{{4}};
    const Rational f0[] = {4};
    return pcube_distribution(2, 2, 3, s, f0).table == RatMatrix{{4}, {4}, {1}};
  });

  bool all = true;
  for (const auto& c : checks) all = all && c["ok"].get<bool>();
  status = all ? 0 : 1;
  return {{"ok", all}, {"checks", checks}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact weight distributions of perfect colorings and completely regular codes", "eqpart"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--vertex-budget", o.vertex_budget, "Largest graph any generator may build");

  auto graph_opt = [&o](CLI::App* sub) { sub->add_option("--graph", o.graph, "Graph spec (file or inline JSON)"); };
  auto f_opts = [&o](CLI::App* sub) {
    sub->add_option("--coloring", o.coloring, "Coloring f (file or inline JSON)");
    sub->add_option("--structure", o.structure, "Perfect structure {f, s} (file or inline JSON)");
    sub->add_option("--s", o.s, "Parameter matrix S of f");
    sub->add_option("--f0", o.f0, "Sum of f over the code, as a JSON row");
    sub->add_flag("--verify-oracle", o.verify_oracle, "Fail unless the result equals the brute-force oracle");
  };
  auto product_opts = [&o](CLI::App* sub) {
    sub->add_option("--left", o.left, "Left factor G'")->required();
    sub->add_option("--right", o.right, "Right factor G''")->required();
    sub->add_option("--left-coloring", o.left_coloring, "Coloring g' of G' (default: distance coloring of --left-base)");
    sub->add_option("--right-coloring", o.right_coloring, "Coloring g'' of G'' (default: distance coloring of --base)");
    sub->add_option("--left-base", o.left_base, "Base vertex in G'");
    sub->add_option("--base", o.base, "Base vertex in G''");
  };

  auto* gen = app.add_subcommand("gen", "Build a graph and report its structure");
  graph_opt(gen);
  auto* quotient = app.add_subcommand("quotient", "Quotient matrix of a coloring");
  graph_opt(quotient);
  quotient->add_option("--coloring", o.coloring, "Coloring (file or inline JSON)");
  auto* verify = app.add_subcommand("verify", "Check A f = f S exactly");
  graph_opt(verify);
  verify->add_option("--structure", o.structure, "Structure {graph|matrix, f, s}");
  verify->add_option("--coloring", o.coloring, "Coloring whose indicator matrix is f");
  verify->add_option("--s", o.s, "Parameter matrix S");
  auto* crc = app.add_subcommand("crc-check", "Test a vertex set for complete regularity");
  graph_opt(crc);
  crc->add_option("--code", o.code, "Code vertices");
  auto* orc = app.add_subcommand("oracle", "Brute-force weight distribution");
  graph_opt(orc);
  orc->add_option("--code", o.code, "Code vertices");
  orc->add_option("--coloring", o.coloring, "Coloring f");
  orc->add_option("--structure", o.structure, "Structure {f, s}");

  auto* distrib = app.add_subcommand("distrib", "Weight distributions by formula");
  distrib->require_subcommand(1);
  auto* d_vertex = distrib->add_subcommand("vertex", "Around a vertex of a distance-regular graph");
  graph_opt(d_vertex);
  f_opts(d_vertex);
  d_vertex->add_option("--color", o.color, "Color of the base vertex")->required();
  auto* d_code = distrib->add_subcommand("code", "With respect to a completely regular code");
  graph_opt(d_code);
  f_opts(d_code);
  d_code->add_option("--code", o.code, "Code vertices");
  auto* d_lattice = distrib->add_subcommand("lattice", "With respect to the zero set of x_1+...+x_m mod q");
  f_opts(d_lattice);
  d_lattice->add_option("--m", o.m)->required();
  d_lattice->add_option("-k,--k", o.k)->required();
  d_lattice->add_option("-q,--q", o.q)->required();
  auto* d_fiber = distrib->add_subcommand("fiber", "With respect to a fiber V' x {base} of G' x G''");
  f_opts(d_fiber);
  d_fiber->add_option("--left", o.left, "Regular factor G'")->required();
  d_fiber->add_option("--right", o.right, "Distance-regular factor G''")->required();
  d_fiber->add_option("--base", o.base, "Base vertex in G''");
  auto* d_subcube = distrib->add_subcommand("subcube", "With respect to an m-face of H(m+k, q)");
  f_opts(d_subcube);
  d_subcube->add_option("--m", o.m)->required();
  d_subcube->add_option("-k,--k", o.k)->required();
  d_subcube->add_option("-q,--q", o.q)->required();
  auto* d_pcube = distrib->add_subcommand("pcube", "With respect to H(n, p) inside H(n, q)");
  f_opts(d_pcube);
  d_pcube->add_option("-n,--n", o.n)->required();
  d_pcube->add_option("-p,--p", o.p)->required();
  d_pcube->add_option("-q,--q", o.q)->required();

  auto* local = app.add_subcommand("local", "Distributions over products of colorings");
  local->require_subcommand(1);
  auto* l_params = local->add_subcommand("params", "Parameters of g' (x) g''");
  product_opts(l_params);
  auto* l_distrib = local->add_subcommand("distrib", "h = (g' (x) g'')^T f and its rearrangement h*");
  product_opts(l_distrib);
  f_opts(l_distrib);
  auto* l_rec = local->add_subcommand("reconstruct", "All rows of h* from its first row");
  product_opts(l_rec);
  f_opts(l_rec);
  l_rec->add_option("--h-star-0", o.h_star_0, "First row of h*, as a JSON row");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in worked examples");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "eqpart: " << e.what() << "\n";
    return 2;
  }

  int status = 0;
  try {
    json result;
    if (*gen) result = cmd_gen(o);
    else if (*quotient) result = cmd_quotient(o);
    else if (*verify) result = cmd_verify(o, status);
    else if (*crc) result = cmd_crc(o);
    else if (*orc) result = cmd_oracle(o);
    else if (*d_vertex) result = cmd_distrib_vertex(o);
    else if (*d_code) result = cmd_distrib_code(o);
    else if (*d_lattice) result = cmd_distrib_lattice(o);
    else if (*d_fiber) result = cmd_distrib_fiber(o);
    else if (*d_subcube) result = cmd_distrib_subcube(o);
    else if (*d_pcube) result = cmd_distrib_pcube(o);
    else if (*l_params) result = cmd_local_params(o);
    else if (*l_distrib) result = cmd_local_distrib(o);
    else if (*l_rec) result = cmd_local_reconstruct(o);
    else if (*selftest) result = cmd_selftest(status);
    out << result.dump() << "\n";
  } catch (const UsageError& e) {
    err << "eqpart: " << e.what() << "\n";
    return 2;
  } catch (const io::InputError& e) {
    err << "eqpart: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "eqpart: malformed JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "eqpart: " << e.what() << "\n";
    return 1;
  }
  return status;
}

}  // namespace eqpart::cli
