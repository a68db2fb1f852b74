#include "poly.hpp"

#include <algorithm>
#include <utility>

#include "detail.hpp"
#include "error.hpp"

namespace interdep {

using detail::sort_unique;

ColorComponents color_class_components(const ColoredGraph& cg) {
  cg.validate();
  const int n = cg.graph.node_count();
  auto classes = cg.color_classes();

  ColorComponents out;
  out.components.resize(cg.color_count);
  std::vector<char> seen(n, 0);
  for (int c = 0; c < cg.color_count; ++c) {
    for (int start : classes[c]) {
      if (seen[start]) continue;
      std::vector<int> comp{start};
      seen[start] = 1;
      for (size_t i = 0; i < comp.size(); ++i)
        for (int w : cg.graph.neighbors(comp[i]))
          if (cg.color_of[w] == c && !seen[w]) {
            seen[w] = 1;
            comp.push_back(w);
          }
      std::sort(comp.begin(), comp.end());
      out.components[c].push_back(std::move(comp));
    }
    out.q = std::max(out.q, static_cast<int>(out.components[c].size()));
  }
  return out;
}

Contraction contract_classes(const ColoredGraph& cg, bool per_component) {
  auto cc = color_class_components(cg);

  Contraction out;
  out.q = cc.q;
  for (int c = 0; c < cg.color_count; ++c) {
    if (cc.components[c].empty()) continue;
    if (per_component) {
      for (auto& comp : cc.components[c]) {
        out.members.push_back(comp);
        out.unit_color.push_back(c);
      }
    } else {
      std::vector<int> all;
      for (const auto& comp : cc.components[c]) all.insert(all.end(), comp.begin(), comp.end());
      std::sort(all.begin(), all.end());
      out.members.push_back(std::move(all));
      out.unit_color.push_back(c);
    }
  }

  const int units = static_cast<int>(out.members.size());
  out.unit_of.assign(cg.graph.node_count(), -1);
  for (int u = 0; u < units; ++u)
    for (int v : out.members[u]) out.unit_of[v] = u;

  Graph h(units);
  for (auto [a, b] : cg.graph.edges()) {
    int ua = out.unit_of[a], ub = out.unit_of[b];
    if (ua != ub) h.add_edge(ua, ub);
  }
  out.graph = std::move(h);
  return out;
}

namespace {

// New graph with fresh source/target appended to the contraction core, each
// wired to the units holding a neighbor of the original endpoint.
Graph wire_endpoints(const Contraction& core, const ColoredGraph& cg, int s, int t,
                     int& source, int& target) {
  const int units = static_cast<int>(core.members.size());
  Graph h(units + 2);
  for (auto [a, b] : core.graph.edges()) h.add_edge(a, b);
  source = units;
  target = units + 1;
  for (int w : cg.graph.neighbors(s)) h.add_edge(source, core.unit_of[w]);
  for (int w : cg.graph.neighbors(t)) h.add_edge(target, core.unit_of[w]);
  return h;
}

std::vector<int> cut_unit_colors(const Contraction& core, const std::vector<int>& cut_units) {
  std::vector<int> colors;
  colors.reserve(cut_units.size());
  for (int u : cut_units) colors.push_back(core.unit_color[u]);
  sort_unique(colors);
  return colors;
}

void require_connected_classes(const Contraction& core) {
  require(core.q <= 1, Errc::classes_not_connected,
          "a color class induces a disconnected subgraph");
}

}  // namespace

Contraction contract_classes(const ColoredGraph& cg, bool per_component, int s, int t) {
  detail::validate_st_query(cg, s, t);
  Contraction out = contract_classes(cg, per_component);
  out.graph = wire_endpoints(out, cg, s, t, out.source, out.target);
  return out;
}

ColorCutResult min_color_st_cut_connected(const ColoredGraph& cg, int s, int t) {
  detail::validate_cut_input(cg);
  detail::validate_st_query(cg, s, t);
  auto core = contract_classes(cg, true);
  require_connected_classes(core);

  int source, target;
  Graph h = wire_endpoints(core, cg, s, t, source, target);
  auto flow = st_node_connectivity(h, source, target);

  ColorCutResult result;
  result.mode = CutMode::st;
  result.method = CutMethod::poly_exact;
  result.colors = cut_unit_colors(core, flow.cut.nodes);
  result.value = static_cast<int>(result.colors.size());
  result.lower_bound = result.value;
  result.witness_cut = detail::st_cut_witness(cg, result.colors, s, t);
  return result;
}

ColorCutResult min_color_cut_connected(const ColoredGraph& cg) {
  detail::validate_cut_input(cg);
  auto core = contract_classes(cg, true);
  require_connected_classes(core);

  auto [triv_colors, triv_value] = trivializing_cover(cg);
  std::vector<int> best = std::move(triv_colors);
  int best_value = triv_value;
  int pair_u = -1, pair_v = -1;

  for (auto [u, v] : detail::non_adjacent_pairs(cg.graph)) {
    if (best_value <= 1) break;
    int source, target;
    Graph h = wire_endpoints(core, cg, u, v, source, target);
    auto flow = st_node_connectivity(h, source, target);
    if (flow.value < best_value) {
      best = cut_unit_colors(core, flow.cut.nodes);
      best_value = flow.value;
      pair_u = u;
      pair_v = v;
    }
  }

  ColorCutResult result;
  result.mode = CutMode::global;
  result.method = CutMethod::poly_exact;
  result.colors = std::move(best);
  result.value = best_value;
  result.lower_bound = best_value;
  if (pair_u >= 0) {
    result.witness_cut = detail::st_cut_witness(cg, result.colors, pair_u, pair_v);
  } else {
    result.witness_cut = {cg.covered(result.colors), CutKind::trivializing, std::nullopt};
  }
  return result;
}

ColorCutResult min_color_cut_qapprox(const ColoredGraph& cg, CutMode mode, int s, int t) {
  detail::validate_cut_input(cg);
  auto core = contract_classes(cg, true);
  const int q = std::max(core.q, 1);

  ColorCutResult result;
  result.method = CutMethod::q_approx;
  result.q = q;

  if (mode == CutMode::st) {
    detail::validate_st_query(cg, s, t);
    int source, target;
    Graph h = wire_endpoints(core, cg, s, t, source, target);
    auto flow = st_node_connectivity(h, source, target);
    result.mode = CutMode::st;
    result.colors = cut_unit_colors(core, flow.cut.nodes);
    result.value = static_cast<int>(result.colors.size());
    result.lower_bound = (flow.value + q - 1) / q;
    result.witness_cut = detail::st_cut_witness(cg, result.colors, s, t);
    return result;
  }

  auto [triv_colors, triv_value] = trivializing_cover(cg);
  std::vector<int> best = std::move(triv_colors);
  int best_value = triv_value;
  int lb = triv_value;
  int pair_u = -1, pair_v = -1;

  for (auto [u, v] : detail::non_adjacent_pairs(cg.graph)) {
    int source, target;
    Graph h = wire_endpoints(core, cg, u, v, source, target);
    auto flow = st_node_connectivity(h, source, target);
    lb = std::min(lb, (flow.value + q - 1) / q);
    auto colors = cut_unit_colors(core, flow.cut.nodes);
    if (static_cast<int>(colors.size()) < best_value) {
      best = std::move(colors);
      best_value = static_cast<int>(best.size());
      pair_u = u;
      pair_v = v;
    }
    if (best_value <= 1) break;
  }

  result.mode = CutMode::global;
  result.colors = std::move(best);
  result.value = best_value;
  result.lower_bound = std::min(lb, best_value);
  if (pair_u >= 0) {
    result.witness_cut = detail::st_cut_witness(cg, result.colors, pair_u, pair_v);
  } else {
    result.witness_cut = {cg.covered(result.colors), CutKind::trivializing, std::nullopt};
  }
  return result;
}

}  // namespace interdep
