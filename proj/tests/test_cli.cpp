#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "eqpart/codes.hpp"
#include "eqpart/io.hpp"

using namespace eqpart;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  json out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  json parsed = out.str().empty() ? json() : json::parse(out.str());
  return {code, parsed, err.str()};
}

const std::string kH23 = R"({"gen":"hamming","n":2,"q":3})";
const std::string kVertexCol = "[0,1,1,1,2,2,1,2,2]";
const json kVertexR = json::parse(R"([["0","4","0"],["1","1","2"],["0","2","2"]])");

std::string code_json(const std::vector<Vertex>& code) { return json(code).dump(); }

}  // namespace

TEST_CASE("quotient") {
  const auto r = run({"quotient", "--graph", kH23, "--coloring", kVertexCol});
  CHECK(r.code == 0);
  CHECK(r.out["s"] == kVertexR);
  CHECK(r.out["class_sizes"] == json::parse("[1,4,4]"));
}

TEST_CASE("quotient of a non-equitable coloring fails with exit 1") {
  const auto r = run({"quotient", "--graph", kH23, "--coloring", "[0,0,0,0,0,0,0,0,0]"});
  CHECK(r.code == 0);
  const auto bad = run({"quotient", "--graph", kH23, "--coloring", "[0,1,0,1,1,1,1,1,1]"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("not equitable") != std::string::npos);
}

TEST_CASE("gen reports intersection arrays") {
  const auto r = run({"gen", "--graph", kH23});
  CHECK(r.code == 0);
  CHECK(r.out["n_vertices"] == 9);
  CHECK(r.out["distance_regular"] == true);
  CHECK(r.out["intersection_array"]["b"] == json::parse("[4,2,0]"));
  CHECK(r.out["p_polynomials"][2] == json::parse(R"(["-2","-1/2","1/2"])"));
}

TEST_CASE("crc-check on the Hamming codes") {
  const auto r = run({"crc-check", "--graph", R"({"gen":"hamming","n":7,"q":2})", "--code", code_json(hamming_code(3))});
  CHECK(r.code == 0);
  CHECK(r.out["rho"] == 1);
  CHECK(r.out["R"] == json::parse(R"([["0","7"],["1","6"]])"));
  const auto e = run({"crc-check", "--graph", R"({"gen":"hamming","n":8,"q":2})", "--code",
                      code_json(extended_hamming_code(3))});
  CHECK(e.out["R"] == json::parse(R"([["0","8","0"],["1","0","7"],["0","8","0"]])"));
}

TEST_CASE("verify") {
  const auto ok = run({"verify", "--graph", kH23, "--coloring", kVertexCol, "--s", kVertexR.dump()});
  CHECK(ok.code == 0);
  CHECK(ok.out["ok"] == true);
  const auto bad = run({"verify", "--graph", kH23, "--coloring", kVertexCol, "--s",
                        R"([["0","4","0"],["1","2","1"],["0","2","2"]])"});
  CHECK(bad.out["ok"] == false);
  CHECK(bad.code == 1);
}

TEST_CASE("formula and oracle agree through the CLI") {
  const auto formula = run({"distrib", "vertex", "--graph", kH23, "--coloring", kVertexCol, "--color", "0",
                            "--verify-oracle"});
  const auto brute = run({"oracle", "--graph", kH23, "--code", "[0]", "--coloring", kVertexCol});
  CHECK(formula.code == 0);
  CHECK(brute.code == 0);
  CHECK(formula.out == brute.out);
  CHECK(formula.out["rows"] == json::parse(R"([["1","0","0"],["0","4","0"],["0","0","4"]])"));
}

TEST_CASE("distrib subcommands") {
  const auto lattice = run({"distrib", "lattice", "--m", "2", "-k", "2", "-q", "2", "--s", R"([["4"]])", "--f0",
                            R"(["4"])"});
  CHECK(lattice.code == 0);
  CHECK(lattice.out["rows"] == json::parse(R"([["4"],["8"],["4"]])"));

  const auto pcube = run({"distrib", "pcube", "-n", "2", "-p", "2", "-q", "3", "--s", R"([["4"]])", "--f0", R"(["4"])"});
  CHECK(pcube.out["rows"] == json::parse(R"([["4"],["4"],["1"]])"));

  const auto fiber = run({"distrib", "fiber", "--left", R"({"gen":"complete","n":2})", "--right",
                          R"({"gen":"complete","n":2})", "--s", R"([["2"]])", "--f0", R"(["2"])"});
  CHECK(fiber.out["rows"] == json::parse(R"([["2"],["2"]])"));

  const auto subcube = run({"distrib", "subcube", "--m", "1", "-k", "1", "-q", "2", "--s", R"([["2"]])", "--f0",
                            R"(["2"])"});
  CHECK(subcube.out["rows"] == json::parse(R"([["2"],["2"]])"));

  const auto bad = run({"distrib", "pcube", "-n", "2", "-p", "3", "-q", "3", "--s", R"([["4"]])", "--f0", R"(["4"])"});
  CHECK(bad.code == 1);
}

TEST_CASE("oracle verification catches a wrong parameter matrix") {
  // An all-one f on H(2,2) really has S = [[2]]; claiming [[3]] makes the formula disagree.
  const auto ok = run({"distrib", "pcube", "-n", "2", "-p", "1", "-q", "2", "--coloring", "[0,0,0,0]", "--verify-oracle"});
  CHECK(ok.code == 0);
  const auto wrong = run({"distrib", "lattice", "--m", "2", "-k", "1", "-q", "2", "--s", R"([["3"]])", "--coloring",
                          "[0,0,0,0]", "--verify-oracle"});
  CHECK(wrong.code == 1);
}

TEST_CASE("local subcommands") {
  const auto params = run({"local", "params", "--left", kH23, "--right", kH23});
  CHECK(params.code == 0);
  CHECK(params.out["params"].size() == 9);
  CHECK(params.out["params"][4] == json::parse(R"(["0","1","0","1","2","2","0","2","0"])"));

  const Coloring lc = lattice_coloring(2, 2, 3);
  const std::string lattice = json(std::vector<std::size_t>(lc.colors().begin(), lc.colors().end())).dump();
  const auto dist = run({"local", "distrib", "--left", kH23, "--right", kH23, "--coloring", lattice, "--verify-oracle"});
  CHECK(dist.code == 0);
  CHECK(dist.out["h_star"].size() == 3);

  const auto rec = run({"local", "reconstruct", "--left", kH23, "--right", kH23, "--coloring", lattice, "--h-star-0",
                        dist.out["h_star"][0].dump(), "--verify-oracle"});
  CHECK(rec.code == 0);
  CHECK(rec.out["h_star"] == dist.out["h_star"]);
}

TEST_CASE("inputs from files") {
  const auto dir = std::filesystem::temp_directory_path() / "eqpart_cli_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "g.json") << kH23;
  std::ofstream(dir / "c.json") << R"({"colors":)" << kVertexCol << "}";
  const auto r = run({"quotient", "--graph", (dir / "g.json").string(), "--coloring", (dir / "c.json").string()});
  CHECK(r.code == 0);
  CHECK(r.out["s"] == kVertexR);
  const auto missing = run({"quotient", "--graph", (dir / "nope.json").string(), "--coloring", kVertexCol});
  CHECK(missing.code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("malformed input exits with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"quotient", "--graph", "{bad", "--coloring", "[0]"}).code == 2);
  CHECK(run({"distrib", "lattice", "--m", "x"}).code == 2);
}

TEST_CASE("vertex budget is enforced") {
  const auto r = run({"--vertex-budget", "100", "gen", "--graph", R"({"gen":"hamming","n":7,"q":2})"});
  CHECK(r.code == 1);
  CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("selftest") {
  const auto r = run({"selftest"});
  CHECK(r.code == 0);
  CHECK(r.out["ok"] == true);
}

TEST_CASE("io round trips") {
  const RatMatrix m{{Rational(1) / Rational(3), -2}, {0, 5}};
  CHECK(io::matrix_from_json(io::to_json(m)) == m);
  CHECK(io::rational_from_json(json(7)) == Rational(7));
  CHECK(io::rational_from_json(json("-3/6")) == Rational(-1) / Rational(2));
  CHECK_THROWS(io::rational_from_json(json(1.5)));
  CHECK(io::coloring_from_json(json::parse("[1,0]")).n_colors() == 2);
  CHECK(io::code_from_json(json::parse(R"({"vertices":[3,1]})")) == std::vector<Vertex>{3, 1});
  CHECK(io::graph_from_json(json::parse(R"({"n_vertices":3,"edges":[[0,1],[1,2]]})")).n_edges() == 2);
  CHECK(io::graph_from_json(json::parse(R"({"gen":"halved","n":4,"sign":"odd"})")).n_vertices() == 8);
  CHECK(io::graph_from_json(json::parse(R"({"gen":"johnson","n":5,"k":2})")).n_vertices() == 10);
  CHECK(io::graph_from_json(json::parse(
                                R"({"gen":"product","left":{"gen":"complete","n":3},"right":{"gen":"complete","n":2}})"))
            .n_vertices() == 6);
  CHECK(io::params_from_json(json::parse(R"({"R":[["1"]]})")) == RatMatrix{{1}});
}
