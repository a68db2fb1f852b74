// Shared instance builders for the test binaries. Everything here is
// test-side scaffolding, written independently of the library code it probes.
#pragma once

#include <queue>
#include <utility>
#include <vector>

#include "core/colored.hpp"
#include "core/error.hpp"
#include "core/graph.hpp"
#include "core/rng.hpp"
#include "doctest.h"

namespace tst {

inline interdep::Graph path_graph(int n) {
  interdep::Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline interdep::Graph cycle_graph(int n) {
  interdep::Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline interdep::Graph complete_graph(int n) {
  interdep::Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i--(i+5).
inline interdep::Graph petersen() {
  interdep::Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// Rungs i--(k+i) between two rails 0..k-1 and k..2k-1.
inline interdep::Graph ladder_graph(int k) {
  interdep::Graph g(2 * k);
  for (int i = 0; i + 1 < k; ++i) {
    g.add_edge(i, i + 1);
    g.add_edge(k + i, k + i + 1);
  }
  for (int i = 0; i < k; ++i) g.add_edge(i, k + i);
  return g;
}

inline interdep::Graph random_graph(interdep::Rng& rng, int n, double p) {
  interdep::Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_unit() < p) g.add_edge(i, j);
  return g;
}

inline interdep::Graph random_connected_graph(interdep::Rng& rng, int n, double p) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    interdep::Graph g = random_graph(rng, n, p);
    if (interdep::is_connected(g)) return g;
  }
  // Stubborn parameters: keep the last sample but chain the nodes together.
  interdep::Graph g = random_graph(rng, n, p);
  for (int i = 0; i + 1 < n; ++i)
    if (!g.has_edge(i, i + 1)) g.add_edge(i, i + 1);
  return g;
}

inline interdep::ColoredGraph with_colors(interdep::Graph g, std::vector<int> colors, int n_c) {
  interdep::ColoredGraph cg{std::move(g), std::move(colors), n_c};
  cg.validate();
  return cg;
}

inline interdep::ColoredGraph distinct_colors(interdep::Graph g) {
  const int n = g.node_count();
  std::vector<int> colors(n);
  for (int v = 0; v < n; ++v) colors[v] = v;
  return with_colors(std::move(g), std::move(colors), n);
}

inline interdep::ColoredGraph random_coloring(interdep::Rng& rng, interdep::Graph g, int n_c) {
  std::vector<int> colors(g.node_count());
  for (auto& c : colors) c = rng.next_below(n_c);
  return with_colors(std::move(g), std::move(colors), n_c);
}

// Random coloring whose classes are all connected: a node either joins its
// BFS parent's class or opens a new one. Input must be connected.
inline interdep::ColoredGraph connected_class_coloring(interdep::Rng& rng, interdep::Graph g,
                                                       int max_colors) {
  const int n = g.node_count();
  std::vector<int> colors(n, -1);
  int used = 0;
  std::queue<int> frontier;
  colors[0] = used++;
  frontier.push(0);
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int w : g.neighbors(v)) {
      if (colors[w] >= 0) continue;
      if (used < max_colors && rng.next_unit() < 0.4)
        colors[w] = used++;
      else
        colors[w] = colors[v];
      frontier.push(w);
    }
  }
  return with_colors(std::move(g), std::move(colors), used);
}

// Three parallel s-t chains whose internal nodes carry the element ids
// {1,2,5}, {1,3}, {1,4,5}; both endpoints carry color 0. The smallest color
// set breaking all three chains is {1}.
struct StGadget {
  interdep::ColoredGraph cg;
  int s = 0;
  int t = 1;
};

inline StGadget three_chain_gadget() {
  interdep::Graph g(10);
  std::vector<int> colors = {0, 0, 1, 2, 5, 1, 3, 1, 4, 5};
  const std::vector<std::vector<int>> chains = {{2, 3, 4}, {5, 6}, {7, 8, 9}};
  for (const auto& chain : chains) {
    g.add_edge(0, chain.front());
    for (size_t i = 0; i + 1 < chain.size(); ++i) g.add_edge(chain[i], chain[i + 1]);
    g.add_edge(chain.back(), 1);
  }
  return {with_colors(std::move(g), std::move(colors), 6), 0, 1};
}

// Ring of four size-m cliques joined by positional matchings between clique
// halves. Two opposite matchings replay the instance's edges as color pairs;
// every other node keeps a private color. Disconnecting the ring means
// hitting both labeled matchings, so the minimum color cut value equals the
// instance's minimum vertex cover size. Odd edge counts get one edge's color
// pair repeated on fresh nodes.
// Six-node cover instance with one isolated node: nodes 1..5 form a
// complete graph minus the edges (1,3) and (1,4). The smallest vertex cover
// has three nodes and {2,4,5} is one of them.
inline interdep::Graph figure_cover_instance() {
  interdep::Graph g(6);
  for (int u = 1; u <= 5; ++u)
    for (int v = u + 1; v <= 5; ++v)
      if (!(u == 1 && (v == 3 || v == 4))) g.add_edge(u, v);
  return g;
}

inline interdep::ColoredGraph clique_ring_gadget(const interdep::Graph& instance) {
  auto inst_edges = instance.edges();
  REQUIRE(!inst_edges.empty());
  if (inst_edges.size() % 2 != 0) inst_edges.push_back(inst_edges.front());
  const int m = static_cast<int>(inst_edges.size());
  const int half = m / 2;
  const int n_prime = instance.node_count();

  interdep::Graph g(4 * m);
  auto clique = [&](int base) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) g.add_edge(base + i, base + j);
  };
  for (int c = 0; c < 4; ++c) clique(c * m);
  const int a = 0, b = m, cc = 2 * m, d = 3 * m;
  // Second half of each clique matched to the first half of the next.
  for (int i = 0; i < half; ++i) {
    g.add_edge(a + half + i, b + i);
    g.add_edge(b + half + i, cc + i);
    g.add_edge(cc + half + i, d + i);
    g.add_edge(d + half + i, a + i);
  }

  std::vector<int> colors(4 * m, -1);
  for (int i = 0; i < half; ++i) {
    colors[a + half + i] = inst_edges[i].first;  // matching a-b carries edges 0..half-1
    colors[b + i] = inst_edges[i].second;
    colors[cc + half + i] = inst_edges[half + i].first;  // matching c-d carries the rest
    colors[d + i] = inst_edges[half + i].second;
  }
  int next = n_prime;
  for (int v = 0; v < 4 * m; ++v)
    if (colors[v] < 0) colors[v] = next++;
  return with_colors(std::move(g), std::move(colors), next);
}

template <typename Fn>
interdep::Errc error_code_of(Fn fn) {
  try {
    fn();
  } catch (const interdep::Error& e) {
    return e.code();
  }
  FAIL("expected an Error to be thrown");
  return interdep::Errc::invalid_argument;
}

}  // namespace tst
