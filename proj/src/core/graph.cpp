#include "graph.hpp"

#include <algorithm>
#include <climits>
#include <queue>

#include "error.hpp"

namespace interdep {

Graph::Graph(int node_count) {
  require(node_count >= 0, Errc::invalid_argument, "node count must be non-negative");
  adj_.resize(node_count);
}

Graph Graph::from_edges(int node_count, const std::vector<std::pair<int, int>>& edges) {
  Graph g(node_count);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_node(int v) const {
  require(v >= 0 && v < node_count(), Errc::invalid_argument,
          "node id " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(int u, int v) const {
  check_node(u);
  check_node(v);
  const auto& nu = adj_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

void Graph::add_edge(int u, int v) {
  check_node(u);
  check_node(v);
  require(u != v, Errc::invalid_argument, "self loops are not allowed");
  if (has_edge(u, v)) return;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edge_count_;
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_node(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_node(v);
  return static_cast<int>(adj_[v].size());
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < node_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::set_label(int v, std::string label) {
  check_node(v);
  if (labels_.empty()) labels_.resize(node_count());
  labels_[v] = std::move(label);
}

const std::string* Graph::label(int v) const {
  check_node(v);
  if (labels_.empty() || labels_[v].empty()) return nullptr;
  return &labels_[v];
}

bool Graph::operator==(const Graph& other) const {
  return adj_ == other.adj_ && labels_ == other.labels_;
}

std::vector<int> bfs_parents(const Graph& g, int src, const std::vector<char>& blocked) {
  std::vector<int> parent(g.node_count(), -1);
  if (blocked[src]) return parent;
  parent[src] = src;
  std::queue<int> q;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (blocked[w] || parent[w] != -1) continue;
      parent[w] = u;
      q.push(w);
    }
  }
  parent[src] = -1;  // callers recover the root from the query, keep self-loop out
  return parent;
}

namespace {

std::vector<char> removal_mask(const Graph& g, const std::vector<int>& removed) {
  std::vector<char> mask(g.node_count(), 0);
  for (int v : removed) {
    require(v >= 0 && v < g.node_count(), Errc::invalid_argument, "removed node out of range");
    mask[v] = 1;
  }
  return mask;
}

}  // namespace

bool is_connected(const Graph& g) { return is_connected(g, {}); }

bool is_connected(const Graph& g, const std::vector<int>& removed) {
  auto mask = removal_mask(g, removed);
  int first = -1, survivors = 0;
  for (int v = 0; v < g.node_count(); ++v) {
    if (!mask[v]) {
      ++survivors;
      if (first < 0) first = v;
    }
  }
  if (survivors <= 1) return true;
  auto parent = bfs_parents(g, first, mask);
  int reached = 0;
  for (int v = 0; v < g.node_count(); ++v)
    if (!mask[v] && (v == first || parent[v] != -1)) ++reached;
  return reached == survivors;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  return connected_components(g, {});
}

std::vector<std::vector<int>> connected_components(const Graph& g, const std::vector<int>& removed) {
  auto mask = removal_mask(g, removed);
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.node_count(), 0);
  for (int v = 0; v < g.node_count(); ++v) {
    if (mask[v] || seen[v]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(v);
    seen[v] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int w : g.neighbors(u)) {
        if (mask[w] || seen[w]) continue;
        seen[w] = 1;
        q.push(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

// Unit-capacity node-split max flow. Node v becomes v_in = 2v, v_out = 2v+1
// with an internal arc of capacity 1 (large for the endpoints); each
// undirected edge contributes two large-capacity arcs, so every minimum cut
// crosses internal arcs only.
class NodeFlowNetwork {
 public:
  NodeFlowNetwork(const Graph& g, int s, int t) : g_(g), s_(s), t_(t) {
    const int n = g.node_count();
    const int big = n + 1;
    head_.assign(2 * n, {});
    for (int v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
    for (auto [u, v] : g.edges()) {
      add_arc(2 * u + 1, 2 * v, big);
      add_arc(2 * v + 1, 2 * u, big);
    }
    source_ = 2 * s + 1;
    sink_ = 2 * t;
  }

  int max_flow() {
    int total = 0;
    while (build_levels()) {
      iter_.assign(head_.size(), 0);
      while (int pushed = augment(source_, INT_MAX)) total += pushed;
    }
    return total;
  }

  // After max_flow: nodes v (internal arc saturated and crossing the residual
  // reachability frontier) form the minimum s-t node cut.
  std::vector<int> min_cut_nodes() const {
    std::vector<char> reach(head_.size(), 0);
    std::queue<int> q;
    q.push(source_);
    reach[source_] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int id : head_[u]) {
        const Arc& a = arcs_[id];
        if (a.cap > 0 && !reach[a.to]) {
          reach[a.to] = 1;
          q.push(a.to);
        }
      }
    }
    std::vector<int> cut;
    for (int v = 0; v < g_.node_count(); ++v)
      if (reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
    return cut;
  }

  // Decompose the integral flow into internally disjoint s..t node paths.
  std::vector<std::vector<int>> flow_paths(int flow_value) {
    std::vector<std::vector<int>> paths;
    for (int k = 0; k < flow_value; ++k) {
      std::vector<int> path{s_};
      int u = source_;
      while (u != sink_) {
        bool advanced = false;
        for (int id : head_[u]) {
          Arc& a = arcs_[id];
          if (a.flow > 0) {
            a.flow -= 1;
            u = a.to;
            if (u % 2 == 0 && u != sink_) {
              path.push_back(u / 2);
              // hop over the internal arc of the intermediate node
              for (int id2 : head_[u]) {
                Arc& a2 = arcs_[id2];
                if (a2.flow > 0 && a2.to == u + 1) {
                  a2.flow -= 1;
                  u = u + 1;
                  break;
                }
              }
            }
            advanced = true;
            break;
          }
        }
        if (!advanced) break;
      }
      path.push_back(t_);
      paths.push_back(std::move(path));
    }
    return paths;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int flow;
    int rev;
  };

  void add_arc(int from, int to, int cap) {
    head_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap, 0, static_cast<int>(arcs_.size() + 1)});
    head_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, 0, static_cast<int>(arcs_.size() - 1)});
  }

  bool build_levels() {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    q.push(source_);
    level_[source_] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int id : head_[u]) {
        const Arc& a = arcs_[id];
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[u] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[sink_] >= 0;
  }

  int augment(int u, int limit) {
    if (u == sink_) return limit;
    for (size_t& i = iter_[u]; i < head_[u].size(); ++i) {
      Arc& a = arcs_[head_[u][i]];
      if (a.cap > 0 && level_[a.to] == level_[u] + 1) {
        int pushed = augment(a.to, std::min(limit, a.cap));
        if (pushed > 0) {
          a.cap -= pushed;
          a.flow += pushed;
          arcs_[a.rev].cap += pushed;
          arcs_[a.rev].flow -= pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  const Graph& g_;
  int s_, t_;
  int source_, sink_;
  std::vector<std::vector<int>> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<size_t> iter_;
};

}  // namespace

StConnectivity st_node_connectivity(const Graph& g, int s, int t) {
  require(s >= 0 && s < g.node_count() && t >= 0 && t < g.node_count(), Errc::invalid_argument,
          "endpoint out of range");
  require(s != t, Errc::same_node, "endpoints must differ");
  require(!g.has_edge(s, t), Errc::adjacent_pair, "endpoints must not be adjacent");

  NodeFlowNetwork net(g, s, t);
  StConnectivity result;
  result.value = net.max_flow();
  if (result.value > 0) {
    result.cut.nodes = net.min_cut_nodes();
    result.disjoint_paths = net.flow_paths(result.value);
  }
  result.cut.kind = CutKind::separating;
  result.cut.witness_pair = {s, t};
  return result;
}

Connectivity node_connectivity(const Graph& g) {
  const int n = g.node_count();
  require(n >= 2, Errc::too_small, "connectivity needs at least two nodes");

  if (!is_connected(g)) {
    auto comps = connected_components(g);
    Connectivity result;
    result.value = 0;
    result.cut.kind = CutKind::separating;
    result.cut.witness_pair = {comps[0][0], comps[1][0]};
    return result;
  }

  Connectivity best;
  best.value = -1;
  for (int u = 0; u < n && best.value != 1; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      auto st = st_node_connectivity(g, u, v);
      if (best.value < 0 || st.value < best.value) {
        best.value = st.value;
        best.cut = st.cut;
        if (best.value == 1) break;
      }
    }
  }
  if (best.value < 0) {
    // complete graph: every proper removal leaves a clique, so only the
    // trivializing cut of n-1 nodes counts
    best.value = n - 1;
    best.cut.kind = CutKind::trivializing;
    best.cut.witness_pair.reset();
    best.cut.nodes.clear();
    for (int v = 1; v < n; ++v) best.cut.nodes.push_back(v);
  }
  return best;
}

}  // namespace interdep
