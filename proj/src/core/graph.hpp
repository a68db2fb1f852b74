#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace interdep {

// Simple undirected graph on nodes 0..n-1. No self loops, no parallel edges.
// Intended use is build-then-query: add all edges up front, then treat the
// graph as an immutable value. All queries are const.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int node_count);
  static Graph from_edges(int node_count, const std::vector<std::pair<int, int>>& edges);

  int node_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);

  // Sorted ascending.
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;

  // Canonical edge list: (u, v) with u < v, sorted ascending.
  std::vector<std::pair<int, int>> edges() const;

  void set_label(int v, std::string label);
  const std::string* label(int v) const;
  bool has_labels() const { return !labels_.empty(); }

  bool operator==(const Graph& other) const;

 private:
  void check_node(int v) const;

  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;  // empty, or one entry per node ("" = unset)
  int edge_count_ = 0;
};

enum class CutKind { separating, trivializing };

// A set of nodes whose removal either disconnects the graph (separating, with
// a witness pair left in distinct components) or leaves at most one node
// standing (trivializing).
struct NodeCut {
  std::vector<int> nodes;  // sorted ascending
  CutKind kind = CutKind::separating;
  std::optional<std::pair<int, int>> witness_pair;
};

// Connectivity of the graph induced on the non-removed nodes. Graphs with
// fewer than two surviving nodes count as connected.
bool is_connected(const Graph& g);
bool is_connected(const Graph& g, const std::vector<int>& removed);

// Components of the induced surviving subgraph, each sorted, ordered by
// smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g, const std::vector<int>& removed);

struct StConnectivity {
  int value = 0;
  NodeCut cut;                                    // empty when value == 0 via disconnection
  std::vector<std::vector<int>> disjoint_paths;   // each path runs s..t, internally disjoint
};

// Max number of internally node-disjoint s-t paths, which equals the minimum
// s-t node cut (s, t must be distinct and non-adjacent). Unit node capacities
// on a split digraph, BFS-layered augmentation.
StConnectivity st_node_connectivity(const Graph& g, int s, int t);

struct Connectivity {
  int value = 0;
  NodeCut cut;
};

// Global node connectivity: min over all non-adjacent pairs; n-1 for complete
// graphs (trivializing cut), 0 for disconnected input.
Connectivity node_connectivity(const Graph& g);

// Shared BFS helpers used across the cut machinery. `blocked[v] != 0` means v
// is removed. Returns -1 in `parent` for unreached nodes.
std::vector<int> bfs_parents(const Graph& g, int src, const std::vector<char>& blocked);

}  // namespace interdep
