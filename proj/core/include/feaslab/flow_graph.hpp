#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "feaslab/proof.hpp"
#include "feaslab/theory.hpp"

namespace feaslab {

enum class EdgeTag : std::uint8_t { Ancestry, AxiomLink, CutLink, ContractionMerge };
const char* edge_tag_name(EdgeTag t);

struct Edge {
  std::size_t u = 0, v = 0;
  EdgeTag tag = EdgeTag::Ancestry;
};

/// Undirected multigraph on vertices 0..vertex_count-1.
struct Graph {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;

  void add_edge(std::size_t u, std::size_t v, EdgeTag tag = EdgeTag::Ancestry) { edges.push_back({u, v, tag}); }
};

std::size_t component_count(const Graph& g);
/// Cyclomatic number E - V + C.
std::size_t cycle_count(const Graph& g);
/// Edges whose removal disconnects their endpoints. Parallel edges are never
/// bridges.
std::size_t bridge_count(const Graph& g);

/// One formula occurrence in the written-out proof tree.
struct Occurrence {
  /// Index into FlowGraph::proof_nodes.
  std::size_t node = 0;
  bool succedent = false;
  std::size_t index = 0;
};

struct FlowGraph {
  struct TreeNode {
    std::size_t parent = SIZE_MAX;
    std::size_t child_index = 0;
    const ProofNode* proof = nullptr;
  };
  std::vector<TreeNode> proof_nodes;
  std::vector<Occurrence> occurrences;
  Graph graph;

  /// Dotted path such as "root.0.1".
  [[nodiscard]] std::string path(std::size_t proof_node) const;
  [[nodiscard]] const Formula& formula(std::size_t occurrence) const;
};

struct FlowStats {
  std::size_t nodes = 0, edges = 0, components = 0, cycles = 0, bridges = 0;
};

class FlowGraphTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws FlowGraphTooLarge when the tree has more than max_occurrences
/// formula occurrences. The proof must stay alive while the graph is used.
FlowGraph build_flow_graph(const Proof& p, const Theory& th, std::size_t max_occurrences = 20'000'000);

FlowStats flow_stats(const FlowGraph& g);
/// {"nodes":..,"edges":..,"components":..,"cycles":..,"bridges":..}
std::string flow_stats_json(const FlowStats& s);
std::string emit_dot(const FlowGraph& g);

}  // namespace feaslab
