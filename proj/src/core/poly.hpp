#pragma once

#include <vector>

#include "colored.hpp"
#include "exact.hpp"
#include "graph.hpp"

namespace interdep {

struct ColorComponents {
  // components[c]: connected components of color c's induced subgraph, each
  // sorted ascending, ordered by smallest member.
  std::vector<std::vector<std::vector<int>>> components;
  int q = 0;  // max component count over inhabited colors (0 for empty graph)
};

ColorComponents color_class_components(const ColoredGraph& cg);

// Quotient of the graph with one node per color class, or per connected class
// component when per_component is set. The endpoint overload appends fresh
// source/target nodes wired to every unit containing a neighbor of s resp. t.
struct Contraction {
  Graph graph;
  std::vector<std::vector<int>> members;  // unit -> original nodes, sorted
  std::vector<int> unit_color;            // unit -> color
  std::vector<int> unit_of;               // original node -> unit
  int source = -1;
  int target = -1;
  int q = 0;
};

Contraction contract_classes(const ColoredGraph& cg, bool per_component);
Contraction contract_classes(const ColoredGraph& cg, bool per_component, int s, int t);

// Polynomial exact solvers. Every inhabited color class must induce a
// connected subgraph; ClassesNotConnected otherwise.
ColorCutResult min_color_st_cut_connected(const ColoredGraph& cg, int s, int t);
ColorCutResult min_color_cut_connected(const ColoredGraph& cg);

// Factor-q approximation for arbitrary class shapes, q = max number of
// components a single color induces. Result carries q and a certified lower
// bound; global mode ignores s and t.
ColorCutResult min_color_cut_qapprox(const ColoredGraph& cg, CutMode mode, int s = -1,
                                     int t = -1);

}  // namespace interdep
