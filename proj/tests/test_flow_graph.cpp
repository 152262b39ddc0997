#include <doctest.h>

#include <functional>
#include <random>
#include <regex>
#include <sstream>

#include "feaslab/cut_elim.hpp"
#include "feaslab/flow_graph.hpp"
#include "feaslab/generators.hpp"

using namespace feaslab;

namespace {

// Breadth-first component count, ignoring one edge if asked.
std::size_t bfs_components(const Graph& g, std::size_t skip = SIZE_MAX) {
  std::vector<std::vector<std::size_t>> adj(g.vertex_count);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i == skip) continue;
    adj[g.edges[i].u].push_back(g.edges[i].v);
    adj[g.edges[i].v].push_back(g.edges[i].u);
  }
  std::vector<bool> seen(g.vertex_count);
  std::size_t comps = 0;
  for (std::size_t s = 0; s < g.vertex_count; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const std::size_t u = queue.back();
      queue.pop_back();
      for (auto w : adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return comps;
}

std::size_t brute_bridges(const Graph& g) {
  const std::size_t base = bfs_components(g);
  std::size_t n = 0;
  for (std::size_t i = 0; i < g.edges.size(); ++i) n += bfs_components(g, i) > base ? 1 : 0;
  return n;
}

std::size_t occurrence_total(const Proof& p) {
  std::size_t n = p->conclusion.antecedent.size() + p->conclusion.succedent.size();
  for (const auto& q : p->premises) n += occurrence_total(q);
  return n;
}

FlowStats stats_of(const GenReport& r) { return flow_stats(build_flow_graph(r.proof, r.theory)); }

}  // namespace

TEST_CASE("graph counts on small graphs") {
  Graph path{4, {}};
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  CHECK(component_count(path) == 1);
  CHECK(cycle_count(path) == 0);
  CHECK(bridge_count(path) == 3);

  Graph tri{4, {}};
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(2, 0);
  CHECK(component_count(tri) == 2);
  CHECK(cycle_count(tri) == 1);
  CHECK(bridge_count(tri) == 0);

  Graph twin{2, {}};
  twin.add_edge(0, 1);
  twin.add_edge(0, 1);
  CHECK(cycle_count(twin) == 1);
  CHECK(bridge_count(twin) == 0);
}

TEST_CASE("graph counts agree with brute force on random multigraphs") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g{static_cast<std::size_t>(1 + rng() % 12), {}};
    const std::size_t m = rng() % 16;
    for (std::size_t i = 0; i < m; ++i) g.add_edge(rng() % g.vertex_count, rng() % g.vertex_count);
    const std::size_t comps = bfs_components(g);
    CHECK(component_count(g) == comps);
    CHECK(cycle_count(g) == g.edges.size() + comps - g.vertex_count);
    CHECK(bridge_count(g) == brute_bridges(g));
  }
}

TEST_CASE("a logical axiom has two occurrences joined by one edge") {
  const Proof ax = logical_axiom(F(Term::variable("x")));
  const FlowGraph g = build_flow_graph(ax, arith_feasibility());
  const FlowStats s = flow_stats(g);
  CHECK(s.nodes == 2);
  CHECK(s.edges == 1);
  CHECK(s.components == 1);
  CHECK(s.cycles == 0);
  CHECK(s.bridges == 1);
  CHECK(g.graph.edges[0].tag == EdgeTag::AxiomLink);
}

TEST_CASE("one vertex per formula occurrence of the written-out tree") {
  for (const auto& name : generator_names()) {
    const GenReport r = generate(name, 2);
    const FlowGraph g = build_flow_graph(r.proof, r.theory);
    CHECK(g.graph.vertex_count == occurrence_total(r.proof));
    CHECK(g.proof_nodes.size() == r.stats.lines);
    CHECK(g.path(0) == "root");
  }
  CHECK_THROWS_AS(build_flow_graph(gen_square_cut(4).proof, arith_feasibility(), 10), FlowGraphTooLarge);
}

TEST_CASE("unary proofs have acyclic flow graphs") {
  for (std::size_t n = 0; n <= 12; ++n) CHECK(stats_of(gen_unary(n)).cycles == 0);
}

TEST_CASE("square-cut cycles are positive and nondecreasing") {
  std::size_t previous = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    const FlowStats s = stats_of(gen_square_cut(n));
    CHECK(s.cycles > 0);
    CHECK(s.cycles >= previous);
    CHECK(s.cycles == s.edges + s.components - s.nodes);
    previous = s.cycles;
  }
}

TEST_CASE("the quantifier recipe has at least as many cycles as square-cut") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(stats_of(gen_quantifier(n)).cycles >= stats_of(gen_square_cut(n)).cycles);
}

TEST_CASE("cut elimination does not add cycles") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const GenReport r = gen_square_cut(n);
    const Proof cf = eliminate_cuts(r.proof, r.theory);
    const FlowStats before = stats_of(r);
    const FlowStats after = flow_stats(build_flow_graph(cf, r.theory));
    CHECK(after.cycles <= before.cycles);
    CHECK(after.cycles == after.edges + after.components - after.nodes);
  }
}

TEST_CASE("statistics JSON") {
  const FlowStats s = stats_of(gen_square_cut(3));
  CHECK(flow_stats_json(s) == "{\"nodes\":49,\"edges\":51,\"components\":1,\"cycles\":3,\"bridges\":39}");
}

TEST_CASE("DOT output is well formed and deterministic") {
  const GenReport r = gen_square_cut(2);
  const FlowGraph g = build_flow_graph(r.proof, r.theory);
  const std::string dot = emit_dot(g);
  CHECK(dot == emit_dot(build_flow_graph(r.proof, r.theory)));

  const std::regex node_line(R"re(  n\d+ \[label="root(\.\d+)* [LR]\d+: [^"]*"\];)re");
  const std::regex edge_line(
      R"re(  n(\d+) -> n(\d+) \[color=(black|blue|red|darkgreen), label="(ancestry|axiom-link|cut-link|contraction-merge)"\];)re");
  std::istringstream in(dot);
  std::string line;
  std::getline(in, line);
  CHECK(line == "digraph flow {");
  std::size_t nodes = 0, edges = 0;
  bool closed = false;
  while (std::getline(in, line)) {
    if (line == "}") {
      closed = true;
      continue;
    }
    if (std::regex_match(line, node_line)) {
      ++nodes;
    } else if (std::smatch m; std::regex_match(line, m, edge_line)) {
      ++edges;
      CHECK(std::stoul(m[1]) < g.graph.vertex_count);
      CHECK(std::stoul(m[2]) < g.graph.vertex_count);
    } else {
      CHECK_MESSAGE((line.find("node [") != std::string::npos || line.find("edge [") != std::string::npos), line);
    }
  }
  CHECK(closed);
  CHECK(nodes == g.graph.vertex_count);
  CHECK(edges == g.graph.edges.size());
}
