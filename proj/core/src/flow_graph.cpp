#include "feaslab/flow_graph.hpp"

#include <numeric>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "feaslab/links.hpp"
#include "feaslab/syntax.hpp"

namespace feaslab {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

const char* edge_color(EdgeTag t) {
  switch (t) {
    case EdgeTag::Ancestry: return "black";
    case EdgeTag::AxiomLink: return "blue";
    case EdgeTag::CutLink: return "red";
    case EdgeTag::ContractionMerge: return "darkgreen";
  }
  return "gray";
}

}  // namespace

const char* edge_tag_name(EdgeTag t) {
  switch (t) {
    case EdgeTag::Ancestry: return "ancestry";
    case EdgeTag::AxiomLink: return "axiom-link";
    case EdgeTag::CutLink: return "cut-link";
    case EdgeTag::ContractionMerge: return "contraction-merge";
  }
  return "?";
}

std::size_t component_count(const Graph& g) {
  UnionFind uf(g.vertex_count);
  std::size_t c = g.vertex_count;
  for (const auto& e : g.edges) {
    if (uf.unite(e.u, e.v)) --c;
  }
  return c;
}

std::size_t cycle_count(const Graph& g) { return g.edges.size() + component_count(g) - g.vertex_count; }

std::size_t bridge_count(const Graph& g) {
  const std::size_t n = g.vertex_count;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbour, edge id)
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    adj[g.edges[i].u].emplace_back(g.edges[i].v, i);
    adj[g.edges[i].v].emplace_back(g.edges[i].u, i);
  }
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::size_t timer = 0, bridges = 0;
  struct Frame {
    std::size_t v, via, next;
  };
  std::vector<Frame> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] != 0) continue;
    disc[root] = low[root] = ++timer;
    stack.push_back({root, SIZE_MAX, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        const auto [w, id] = adj[f.v][f.next++];
        if (id == f.via) continue;
        if (disc[w] == 0) {
          disc[w] = low[w] = ++timer;
          stack.push_back({w, id, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          const std::size_t parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] > disc[parent]) ++bridges;
        }
      }
    }
  }
  return bridges;
}

std::string FlowGraph::path(std::size_t proof_node) const {
  std::vector<std::size_t> steps;
  for (std::size_t k = proof_node; proof_nodes[k].parent != SIZE_MAX; k = proof_nodes[k].parent) {
    steps.push_back(proof_nodes[k].child_index);
  }
  std::string out = "root";
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) out += "." + std::to_string(*it);
  return out;
}

const Formula& FlowGraph::formula(std::size_t occurrence) const {
  const Occurrence& o = occurrences[occurrence];
  const Sequent& s = proof_nodes[o.node].proof->conclusion;
  return o.succedent ? s.succedent[o.index] : s.antecedent[o.index];
}

FlowGraph build_flow_graph(const Proof& p, const Theory& th, std::size_t max_occurrences) {
  FlowGraph g;
  std::vector<std::size_t> base;  // first occurrence of each tree node
  std::vector<std::size_t> first_child;
  // Pre-order allocation; children of a tree node get consecutive indices.
  g.proof_nodes.push_back({SIZE_MAX, 0, p.get()});
  for (std::size_t k = 0; k < g.proof_nodes.size(); ++k) {
    const ProofNode* n = g.proof_nodes[k].proof;
    base.push_back(g.occurrences.size());
    const Sequent& s = n->conclusion;
    if (g.occurrences.size() + s.antecedent.size() + s.succedent.size() > max_occurrences) {
      throw FlowGraphTooLarge("flow graph exceeds " + std::to_string(max_occurrences) + " occurrences");
    }
    for (std::size_t i = 0; i < s.antecedent.size(); ++i) g.occurrences.push_back({k, false, i});
    for (std::size_t i = 0; i < s.succedent.size(); ++i) g.occurrences.push_back({k, true, i});
    first_child.push_back(g.proof_nodes.size());
    for (std::size_t i = 0; i < n->premises.size(); ++i) g.proof_nodes.push_back({k, i, n->premises[i].get()});
  }
  g.graph.vertex_count = g.occurrences.size();

  std::unordered_map<const ProofNode*, NodeLinks> cache;
  for (std::size_t k = 0; k < g.proof_nodes.size(); ++k) {
    const ProofNode& n = *g.proof_nodes[k].proof;
    auto it = cache.find(&n);
    if (it == cache.end()) it = cache.emplace(&n, node_links(n, th)).first;
    const NodeLinks& L = it->second;
    const auto here = [&](bool succ, std::size_t i) { return base[k] + (succ ? n.conclusion.antecedent.size() : 0) + i; };
    const auto above = [&](const OccRef& r) {
      const std::size_t c = first_child[k] + static_cast<std::size_t>(r.premise);
      const ProofNode& q = *g.proof_nodes[c].proof;
      return base[c] + (r.succedent ? q.conclusion.antecedent.size() : 0) + r.index;
    };
    for (std::size_t i = 0; i < L.ante.size(); ++i) {
      if (L.ante[i]) g.graph.add_edge(here(false, i), above(*L.ante[i]));
    }
    for (std::size_t i = 0; i < L.succ.size(); ++i) {
      if (L.succ[i]) g.graph.add_edge(here(true, i), above(*L.succ[i]));
    }
    switch (n.rule.tag) {
      case RuleTag::LogicalAxiom: g.graph.add_edge(here(false, 0), here(true, 0), EdgeTag::AxiomLink); break;
      case RuleTag::EqOracle:
      case RuleTag::WeakenLeft:
      case RuleTag::WeakenRight: break;
      case RuleTag::TheoryAxiom: {
        std::size_t c = 0;
        for (const auto& cr : L.created) {
          if (cr.succedent) c = here(true, cr.index);
        }
        for (const auto& cr : L.created) {
          if (!cr.succedent) g.graph.add_edge(here(false, cr.index), c, EdgeTag::AxiomLink);
        }
        for (const auto& a : L.active) g.graph.add_edge(above(a), c, EdgeTag::AxiomLink);
        break;
      }
      case RuleTag::Cut: g.graph.add_edge(above(L.active[0]), above(L.active[1]), EdgeTag::CutLink); break;
      default: {
        const auto& pr = L.created.front();
        const EdgeTag tag = n.rule.tag == RuleTag::ContractLeft || n.rule.tag == RuleTag::ContractRight
                                ? EdgeTag::ContractionMerge
                                : EdgeTag::Ancestry;
        for (const auto& a : L.active) g.graph.add_edge(above(a), here(pr.succedent, pr.index), tag);
      }
    }
  }
  return g;
}

FlowStats flow_stats(const FlowGraph& g) {
  FlowStats s;
  s.nodes = g.graph.vertex_count;
  s.edges = g.graph.edges.size();
  s.components = component_count(g.graph);
  s.cycles = s.edges + s.components - s.nodes;
  s.bridges = bridge_count(g.graph);
  return s;
}

std::string flow_stats_json(const FlowStats& s) {
  nlohmann::ordered_json j;
  j["nodes"] = s.nodes;
  j["edges"] = s.edges;
  j["components"] = s.components;
  j["cycles"] = s.cycles;
  j["bridges"] = s.bridges;
  return j.dump();
}

std::string emit_dot(const FlowGraph& g) {
  std::ostringstream out;
  out << "digraph flow {\n  node [shape=box, fontname=\"monospace\"];\n  edge [dir=none];\n";
  for (std::size_t i = 0; i < g.occurrences.size(); ++i) {
    const Occurrence& o = g.occurrences[i];
    out << "  n" << i << " [label=\"" << g.path(o.node) << (o.succedent ? " R" : " L") << o.index << ": "
        << dot_escape(to_string(g.formula(i))) << "\"];\n";
  }
  for (const auto& e : g.graph.edges) {
    out << "  n" << e.u << " -> n" << e.v << " [color=" << edge_color(e.tag) << ", label=\"" << edge_tag_name(e.tag)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace feaslab
