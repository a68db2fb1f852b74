#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace interdep {

// Graph plus a total node -> color map. Color ids live in [0, color_count);
// colors with no nodes are permitted (use used_colors() to enumerate the
// inhabited ones).
struct ColoredGraph {
  Graph graph;
  std::vector<int> color_of;
  int color_count = 0;

  void validate() const;
  std::vector<int> used_colors() const;
  // Nodes whose color is in `colors`, sorted ascending. `colors` need not be
  // sorted; duplicates are ignored.
  std::vector<int> covered(const std::vector<int>& colors) const;
  std::vector<std::vector<int>> color_classes() const;  // per color, sorted
};

enum class Direction { one_way, bidirectional };

// Demand graph whose nodes draw on external supply nodes 0..supply_node_count-1.
// A demand node fails only when every one of its supply nodes fails. The
// supply side's own topology is optional (needed only when the dependence
// runs both ways and the supply graph is itself a demand graph).
struct DependencySystem {
  Graph demand;
  int supply_node_count = 0;
  std::optional<Graph> supply_graph;
  std::vector<std::vector<int>> supplies_of;  // per demand node; sorted, duplicates allowed
  Direction direction = Direction::one_way;

  void validate() const;
  void canonicalize();  // sorts supply lists
};

// Swaps the two networks of a bidirectional system: the supply graph becomes
// the demand side and the dependency lists are transposed (multiplicities
// kept). Every supply node must have at least one dependent.
DependencySystem reversed(const DependencySystem& sys);

struct TransformResult {
  ColoredGraph colored;
  // copy_map[v] lists the copy node ids of demand node v, one per distinct
  // supply, in ascending supply order.
  std::vector<std::vector<int>> copy_map;
};

// Expands each demand node into one copy per distinct supply node, colored by
// that supply id. Copies of the same node stay non-adjacent; copies of
// adjacent nodes are fully wired. Duplicate supply entries collapse.
TransformResult transform(const DependencySystem& sys);

// True when removing every covered node except the protected endpoints
// disconnects s from t. Endpoints must be distinct and non-adjacent.
bool is_color_st_cut(const ColoredGraph& cg, const std::vector<int>& colors, int s, int t);

// True when the covered nodes contain a node cut: either at most one node
// survives full removal, or some non-adjacent pair ends up in different
// components once everything covered except that pair is removed.
bool is_color_cut(const ColoredGraph& cg, const std::vector<int>& colors);

// Same checks phrased against a dependency system: the failed supply set is
// mapped through the transformation and tested as a color cut there.
bool is_supply_cut(const DependencySystem& sys, const std::vector<int>& failed_supplies);
bool is_supply_st_cut(const DependencySystem& sys, const std::vector<int>& failed_supplies,
                      int s, int t);

}  // namespace interdep
