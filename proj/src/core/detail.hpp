#pragma once

// Internal helpers shared by the cut solvers. Not part of the public surface.

#include <algorithm>
#include <utility>
#include <vector>

#include "colored.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace interdep::detail {

inline void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline void validate_st_query(const ColoredGraph& cg, int s, int t) {
  const int n = cg.graph.node_count();
  require(s >= 0 && s < n && t >= 0 && t < n, Errc::invalid_argument, "endpoint out of range");
  require(s != t, Errc::same_node, "endpoints must differ");
  require(!cg.graph.has_edge(s, t), Errc::adjacent_pair, "endpoints must not be adjacent");
}

inline void validate_cut_input(const ColoredGraph& cg) {
  cg.validate();
  require(cg.graph.node_count() >= 2, Errc::too_small, "cut queries need at least two nodes");
  require(is_connected(cg.graph), Errc::disconnected, "input graph must be connected");
}

inline NodeCut st_cut_witness(const ColoredGraph& cg, const std::vector<int>& colors, int s,
                              int t) {
  NodeCut cut;
  for (int v : cg.covered(colors))
    if (v != s && v != t) cut.nodes.push_back(v);
  cut.kind = CutKind::separating;
  cut.witness_pair = {s, t};
  return cut;
}

// Non-adjacent node pairs, cheapest-looking first (degree sum, then ids).
inline std::vector<std::pair<int, int>> non_adjacent_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> pairs;
  const int n = g.node_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) pairs.emplace_back(u, v);
  std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    int da = g.degree(a.first) + g.degree(a.second);
    int db = g.degree(b.first) + g.degree(b.second);
    if (da != db) return da < db;
    return a < b;
  });
  return pairs;
}

}  // namespace interdep::detail
