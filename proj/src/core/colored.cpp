#include "colored.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace interdep {

void ColoredGraph::validate() const {
  require(static_cast<int>(color_of.size()) == graph.node_count(), Errc::invalid_argument,
          "color map must cover every node");
  require(color_count >= 1 || graph.node_count() == 0, Errc::invalid_argument,
          "need at least one color");
  for (int v = 0; v < graph.node_count(); ++v)
    require(color_of[v] >= 0 && color_of[v] < color_count, Errc::invalid_argument,
            "color of node " + std::to_string(v) + " out of range");
}

std::vector<int> ColoredGraph::used_colors() const {
  std::vector<char> seen(color_count, 0);
  for (int c : color_of) seen[c] = 1;
  std::vector<int> out;
  for (int c = 0; c < color_count; ++c)
    if (seen[c]) out.push_back(c);
  return out;
}

std::vector<int> ColoredGraph::covered(const std::vector<int>& colors) const {
  std::vector<char> chosen(color_count, 0);
  for (int c : colors) {
    require(c >= 0 && c < color_count, Errc::invalid_argument, "color id out of range");
    chosen[c] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < graph.node_count(); ++v)
    if (chosen[color_of[v]]) out.push_back(v);
  return out;
}

std::vector<std::vector<int>> ColoredGraph::color_classes() const {
  std::vector<std::vector<int>> classes(color_count);
  for (int v = 0; v < graph.node_count(); ++v) classes[color_of[v]].push_back(v);
  return classes;
}

void DependencySystem::validate() const {
  require(supply_node_count >= 1, Errc::invalid_argument, "need at least one supply node");
  require(static_cast<int>(supplies_of.size()) == demand.node_count(), Errc::invalid_argument,
          "supply list must cover every demand node");
  for (int v = 0; v < demand.node_count(); ++v) {
    require(!supplies_of[v].empty(), Errc::invalid_argument,
            "demand node " + std::to_string(v) + " has no supply");
    for (int s : supplies_of[v])
      require(s >= 0 && s < supply_node_count, Errc::invalid_argument,
              "supply id out of range for demand node " + std::to_string(v));
  }
  if (supply_graph)
    require(supply_graph->node_count() == supply_node_count, Errc::invalid_argument,
            "supply graph size disagrees with supply node count");
}

void DependencySystem::canonicalize() {
  for (auto& s : supplies_of) std::sort(s.begin(), s.end());
}

DependencySystem reversed(const DependencySystem& sys) {
  sys.validate();
  require(sys.direction == Direction::bidirectional, Errc::invalid_argument,
          "only bidirectional systems can be reversed");
  require(sys.supply_graph.has_value(), Errc::invalid_argument,
          "reversing needs the supply-side topology");

  DependencySystem out;
  out.demand = *sys.supply_graph;
  out.supply_node_count = sys.demand.node_count();
  out.supply_graph = sys.demand;
  out.direction = Direction::bidirectional;
  out.supplies_of.resize(sys.supply_node_count);
  for (int v = 0; v < sys.demand.node_count(); ++v)
    for (int s : sys.supplies_of[v]) out.supplies_of[s].push_back(v);
  out.canonicalize();
  out.validate();  // rejects supply nodes without dependents
  return out;
}

TransformResult transform(const DependencySystem& sys) {
  sys.validate();
  const int n = sys.demand.node_count();

  TransformResult out;
  out.copy_map.resize(n);
  std::vector<int> copy_color;
  for (int v = 0; v < n; ++v) {
    auto supplies = sys.supplies_of[v];
    std::sort(supplies.begin(), supplies.end());
    supplies.erase(std::unique(supplies.begin(), supplies.end()), supplies.end());
    for (int s : supplies) {
      out.copy_map[v].push_back(static_cast<int>(copy_color.size()));
      copy_color.push_back(s);
    }
  }

  Graph g(static_cast<int>(copy_color.size()));
  for (auto [u, v] : sys.demand.edges())
    for (int cu : out.copy_map[u])
      for (int cv : out.copy_map[v]) g.add_edge(cu, cv);

  out.colored.graph = std::move(g);
  out.colored.color_of = std::move(copy_color);
  out.colored.color_count = sys.supply_node_count;
  return out;
}

namespace {

std::vector<char> covered_mask(const ColoredGraph& cg, const std::vector<int>& colors) {
  std::vector<char> chosen(cg.color_count, 0);
  for (int c : colors) {
    require(c >= 0 && c < cg.color_count, Errc::invalid_argument, "color id out of range");
    chosen[c] = 1;
  }
  std::vector<char> mask(cg.graph.node_count(), 0);
  for (int v = 0; v < cg.graph.node_count(); ++v) mask[v] = chosen[cg.color_of[v]];
  return mask;
}

bool separated(const Graph& g, const std::vector<char>& blocked, int s, int t) {
  auto parent = bfs_parents(g, s, blocked);
  return parent[t] == -1;
}

}  // namespace

bool is_color_st_cut(const ColoredGraph& cg, const std::vector<int>& colors, int s, int t) {
  cg.validate();
  const int n = cg.graph.node_count();
  require(s >= 0 && s < n && t >= 0 && t < n, Errc::invalid_argument, "endpoint out of range");
  require(s != t, Errc::same_node, "endpoints must differ");
  require(!cg.graph.has_edge(s, t), Errc::adjacent_pair, "endpoints must not be adjacent");

  auto blocked = covered_mask(cg, colors);
  blocked[s] = blocked[t] = 0;
  return separated(cg.graph, blocked, s, t);
}

bool is_color_cut(const ColoredGraph& cg, const std::vector<int>& colors) {
  cg.validate();
  const int n = cg.graph.node_count();
  require(n >= 2, Errc::too_small, "cut checks need at least two nodes");

  auto blocked = covered_mask(cg, colors);
  int covered_count = 0;
  for (char b : blocked) covered_count += b;

  if (n - covered_count <= 1) return true;

  // Pairs outside the covered set are all settled by one component sweep of
  // the bulk removal.
  {
    std::vector<int> removed;
    for (int v = 0; v < n; ++v)
      if (blocked[v]) removed.push_back(v);
    auto comps = connected_components(cg.graph, removed);
    if (comps.size() >= 2) return true;
  }

  // Remaining candidates need at least one endpoint inside the covered set;
  // protecting a pair only shrinks the removal, and removing a superset of a
  // separating set keeps the pair separated, so per-pair checks suffice.
  for (int u = 0; u < n; ++u) {
    if (!blocked[u]) continue;
    for (int v = 0; v < n; ++v) {
      if (v == u || cg.graph.has_edge(u, v)) continue;
      auto protect = blocked;
      protect[u] = protect[v] = 0;
      if (separated(cg.graph, protect, u, v)) return true;
    }
  }
  return false;
}

bool is_supply_cut(const DependencySystem& sys, const std::vector<int>& failed_supplies) {
  auto tr = transform(sys);
  return is_color_cut(tr.colored, failed_supplies);
}

bool is_supply_st_cut(const DependencySystem& sys, const std::vector<int>& failed_supplies,
                      int s, int t) {
  const int n = sys.demand.node_count();
  require(s >= 0 && s < n && t >= 0 && t < n, Errc::invalid_argument, "endpoint out of range");
  require(s != t, Errc::same_node, "endpoints must differ");
  auto tr = transform(sys);
  return is_color_st_cut(tr.colored, failed_supplies, tr.copy_map[s][0], tr.copy_map[t][0]);
}

}  // namespace interdep
