#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "feaslab/checker.hpp"
#include "feaslab/proof_io.hpp"

using namespace feaslab;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "feaslab");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("feaslab-test-" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("gen prints the value and line count") {
  const Result r = run({"gen", "square-cut", "3", "-o", "-"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("F(256), lines=26, end: |- F(", 0) == 0);
  CHECK(run({"gen", "unary", "0", "-o", "-"}).out.rfind("F(0), lines=1", 0) == 0);
  CHECK(run({"gen", "distorted", "2", "-o", "-"}).out.rfind("F((16, 0)), lines=28", 0) == 0);
}

TEST_CASE("generated files pass check and cutfree") {
  const std::string file = temp_path("sc3.json");
  const std::string cf = temp_path("sc3-cf.json");
  REQUIRE(run({"gen", "square-cut", "3", "-o", file}).code == 0);
  const Result ok = run({"check", file});
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("ok: ", 0) == 0);
  CHECK(ok.out.find("lines=26") != std::string::npos);

  const Result c = run({"cutfree", file, "-o", cf});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("lines 26 -> 45, cuts 11 -> 0", 0) == 0);
  const ProofDocument doc = proof_from_json(slurp(cf));
  CHECK(check(doc.proof, doc.theory).cut_count == 0);

  CHECK(run({"cutfree", file, "--budget", "10"}).code == 2);
  std::filesystem::remove(file);
  std::filesystem::remove(cf);
}

TEST_CASE("check rejects a tampered file") {
  const std::string file = temp_path("u2.json");
  REQUIRE(run({"gen", "unary", "2", "-o", file}).code == 0);
  std::string text = slurp(file);
  const auto at = text.rfind("F(s(s(0)))");
  REQUIRE(at != std::string::npos);
  text.replace(at, 10, "F(s(s(s(0))))");
  std::ofstream(file) << text;
  const Result r = run({"check", file});
  CHECK(r.code == 1);
  CHECK((r.out + r.err).find("rejected: rule-mismatch at root.1") != std::string::npos);
  std::filesystem::remove(file);
}

TEST_CASE("flow prints statistics") {
  const std::string file = temp_path("sc3-flow.json");
  const std::string dot = temp_path("sc3.dot");
  REQUIRE(run({"gen", "square-cut", "3", "-o", file}).code == 0);
  const Result r = run({"flow", file, "--dot", dot});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"nodes\":49,\"edges\":51,\"components\":1,\"cycles\":3,\"bridges\":39}\n");
  CHECK(slurp(dot).rfind("digraph flow {", 0) == 0);
  std::filesystem::remove(file);
  std::filesystem::remove(dot);
}

TEST_CASE("bench rows") {
  const Result r = run({"bench", "square-cut", "1..3"});
  CHECK(r.code == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] ==
        "n,lines_with_cuts,lines_cut_free,ratio,cut_count,contraction_count,wall_time_ms,status,cycles_with_cuts,"
        "bridges_with_cuts,cycles_cut_free,bridges_cut_free");
  CHECK(rows[1] == "1,12,9,0.75,5,0,-,ok,1,17,0,8");
  CHECK(rows[3] == "3,26,45,1.73077,11,0,-,ok,3,39,0,44");
  CHECK(run({"bench", "square-cut", "1..3"}).out == r.out);

  const auto over = lines_of(run({"bench", "square-cut", "6", "--budget", "50"}).out);
  REQUIRE(over.size() == 2);
  CHECK(over[1].find("budget-exceeded") != std::string::npos);
  CHECK(lines_of(run({"bench", "unary", "3..1"}).out).size() == 1);
  CHECK(run({"bench", "unary", "x..y"}).code == 1);
}

TEST_CASE("orbit") {
  CHECK(run({"orbit", "--matrix", "(1 1; 0 1)", "--x", "0", "-n", "3"}).out == "k=0: 0\nk=1: 1\nk=2: 2\nk=3: 3\n");
  CHECK(run({"orbit", "--matrix", "(2 1; 1 1)", "--x", "0", "-n", "2"}).out == "k=0: 0\nk=1: 1\nk=2: 3/2\n");
  CHECK(run({"orbit", "--matrix", "(0 -1; 1 0)", "--x", "0", "-n", "2"}).out == "k=0: 0\nk=1: inf\nk=2: 0\n");
  CHECK(run({"orbit", "--matrix", "(1 1; 0 1)", "--x", "0", "-n", "2", "--format", "json"}).out ==
        "{\"matrix\":\"(1 1; 0 1)\",\"x\":\"0\",\"orbit\":[\"0\",\"1\",\"2\"]}\n");
  CHECK(run({"orbit", "--matrix", "(1 2; 2 4)", "--x", "0", "-n", "2"}).code == 1);
}

TEST_CASE("oracle subcommands") {
  const auto dp = lines_of(run({"oracle", "dp", "16", "--enum-max", "4"}).out);
  REQUIRE(dp.size() == 18);
  CHECK(dp[0] == "value,dp_cost,enum_cost");
  CHECK(dp[5] == "4,5,5");
  CHECK(dp[17] == "16,11,");
  CHECK(run({"oracle", "word", "y*y*y*y", "--theory", "group:bs12", "--radius", "6"}).out == "4\n");
  const auto dist = lines_of(run({"oracle", "distortion", "--n-max", "3", "--radius", "9"}).out);
  REQUIRE(dist.size() == 5);
  CHECK(dist[3] == "2,28,16,8,bfs");
  CHECK(dist[4] == "3,35,256,<=17,conjugation-bound");
}

TEST_CASE("torus") {
  const Result r = run({"torus", "--matrix", "(2 1; 1 1)", "-n", "5", "--v", "1,0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("n=5 norm=89 ratio=0.7236") != std::string::npos);
  // The shear fixes (1, 0).
  CHECK(run({"torus", "--matrix", "(1 1; 0 1)", "-n", "5", "--v", "1,0"}).out.find("n=5 norm=1 ratio=1") !=
        std::string::npos);
  CHECK(run({"torus", "--matrix", "(2 1; 1 1)", "-n", "5", "--v", "0,0"}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run({"gen", "cubic", "3", "-o", "-"}).code == 1);
  CHECK(run({"check", temp_path("missing.json")}).code == 1);
  CHECK(run({}).code != 0);
}
