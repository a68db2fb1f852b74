#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/exact.hpp"
#include "core/graph.hpp"
#include "core/rng.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace interdep;
using namespace tst;

namespace {

// Five-node, eight-edge cover instance with an extra untouched node 0 so the
// interesting node ids run 1..5. Minimum covers have size 3; {2,4,5} is one.
void check_witness(const ColoredGraph& cg, const ColorCutResult& r, int s = -1, int t = -1) {
  auto covered = cg.covered(r.colors);
  for (int v : r.witness_cut.nodes) {
    CHECK(std::binary_search(covered.begin(), covered.end(), v));
    CHECK(v != s);
    CHECK(v != t);
  }
  if (r.witness_cut.kind == CutKind::trivializing) {
    CHECK(cg.graph.node_count() - static_cast<int>(r.witness_cut.nodes.size()) <= 1);
    return;
  }
  REQUIRE(r.witness_cut.witness_pair.has_value());
  auto [a, b] = *r.witness_cut.witness_pair;
  auto comps = connected_components(cg.graph, r.witness_cut.nodes);
  int ca = -1, cb = -1;
  for (size_t i = 0; i < comps.size(); ++i) {
    if (std::binary_search(comps[i].begin(), comps[i].end(), a)) ca = static_cast<int>(i);
    if (std::binary_search(comps[i].begin(), comps[i].end(), b)) cb = static_cast<int>(i);
  }
  CHECK(ca >= 0);
  CHECK(cb >= 0);
  CHECK(ca != cb);
}

}  // namespace

TEST_CASE("hitting system stores canonical constraints") {
  HittingSystem hs;
  hs.universe = 6;
  hs.add({5, 1, 2, 1});
  hs.add({1, 2, 5});  // identical after canonicalization, dropped
  hs.add({3, 1});
  REQUIRE(hs.constraints.size() == 2);
  CHECK(hs.constraints[0] == std::vector<int>{1, 2, 5});
  CHECK(hs.constraints[1] == std::vector<int>{1, 3});
  CHECK(error_code_of([&] { hs.add({}); }) == Errc::invalid_argument);
}

TEST_CASE("greedy disjoint families lower-bound the hitting number") {
  HittingSystem hs;
  hs.universe = 6;
  hs.add({0, 1});
  hs.add({2, 3});
  hs.add({0, 2});
  CHECK(hs.greedy_disjoint_bound() == 2);

  auto best = hs.solve(6);
  REQUIRE(best.has_value());
  CHECK(best->size() == 2);
}

TEST_CASE("hitting solver matches exhaustive search and honors the cutoff") {
  Rng rng(81);
  for (int round = 0; round < 80; ++round) {
    int universe = 2 + rng.next_below(7);
    int m = 1 + rng.next_below(8);
    HittingSystem hs;
    hs.universe = universe;
    std::vector<std::vector<int>> raw;
    for (int i = 0; i < m; ++i) {
      std::vector<int> set;
      for (int c = 0; c < universe; ++c)
        if (rng.next_unit() < 0.35) set.push_back(c);
      if (set.empty()) set.push_back(rng.next_below(universe));
      raw.push_back(set);
      hs.add(set);
    }
    int opt = oracle::min_hitting_set(universe, raw);

    auto found = hs.solve(universe + 1);
    REQUIRE(found.has_value());
    CHECK(static_cast<int>(found->size()) == opt);
    // every constraint is hit
    for (const auto& c : hs.constraints) {
      bool hit = false;
      for (int x : c)
        hit = hit || std::binary_search(found->begin(), found->end(), x);
      CHECK(hit);
    }
    CHECK_FALSE(hs.solve(opt).has_value());
    if (opt > 0) CHECK(hs.greedy_disjoint_bound() <= opt);
  }
}

TEST_CASE("trivializing cover drops one singleton class when it can") {
  auto triangle = distinct_colors(complete_graph(3));
  auto [tri_colors, tri_value] = trivializing_cover(triangle);
  CHECK(tri_value == 2);
  CHECK(tri_colors == std::vector<int>{1, 2});

  auto chain = with_colors(path_graph(3), {1, 1, 2}, 3);
  auto [chain_colors, chain_value] = trivializing_cover(chain);
  CHECK(chain_value == 1);
  CHECK(chain_colors == std::vector<int>{1});

  // no singleton class anywhere: every inhabited color is needed
  auto paired = with_colors(path_graph(4), {0, 0, 1, 1}, 2);
  auto [paired_colors, paired_value] = trivializing_cover(paired);
  CHECK(paired_value == 2);
  CHECK(paired_colors == std::vector<int>{0, 1});
}

TEST_CASE("three-chain gadget has st cut value 1 with colors {1}") {
  auto gadget = three_chain_gadget();
  auto r = min_color_st_cut_exact(gadget.cg, gadget.s, gadget.t);
  CHECK(r.value == 1);
  CHECK(r.colors == std::vector<int>{1});
  CHECK(r.lower_bound == 1);
  CHECK(r.mode == CutMode::st);
  CHECK(r.method == CutMethod::exact);
  check_witness(gadget.cg, r, gadget.s, gadget.t);

  auto brute = brute_force_min_cut(gadget.cg, CutMode::st, gadget.s, gadget.t);
  CHECK(brute.value == 1);
  CHECK(brute.colors == std::vector<int>{1});
}

TEST_CASE("clique-ring cover gadget has global cut value 3") {
  auto cg = clique_ring_gadget(figure_cover_instance());
  CHECK(cg.graph.node_count() == 32);
  CHECK(cg.graph.edge_count() == 128);
  CHECK(cg.color_count == 22);

  auto r = min_color_cut_exact(cg);
  CHECK(r.value == 3);
  CHECK(r.method == CutMethod::exact);
  check_witness(cg, r);

  // The advertised optimal cover works, and nothing smaller does.
  CHECK(is_color_cut(cg, {2, 4, 5}));
  auto brute = brute_force_min_cut(cg, CutMode::global, -1, -1, 22);
  CHECK(brute.value == 3);

  // Whatever optimum the solver picked is a vertex cover of the instance.
  Graph inst = figure_cover_instance();
  std::vector<char> in_cover(inst.node_count(), 0);
  for (int c : r.colors) {
    REQUIRE(c < inst.node_count());  // instance colors, not private filler
    in_cover[c] = 1;
  }
  CHECK(oracle::is_vertex_cover(inst, in_cover));
}

TEST_CASE("distinct colors reduce both modes to plain connectivity") {
  auto cg = distinct_colors(petersen());
  CHECK(min_color_cut_exact(cg).value == 3);
  CHECK(min_color_st_cut_exact(cg, 0, 7).value == 3);

  Rng rng(99);
  for (int round = 0; round < 15; ++round) {
    int n = 4 + rng.next_below(7);
    auto g = random_connected_graph(rng, n, 0.45);
    auto dg = distinct_colors(g);
    CHECK(min_color_cut_exact(dg).value == oracle::node_connectivity(g));
  }
}

TEST_CASE("exact solvers agree with brute force on random instances") {
  Rng rng(7177);
  int st_checked = 0;
  for (int round = 0; round < 70; ++round) {
    int n = 2 + rng.next_below(9);
    int n_c = 1 + rng.next_below(6);
    auto cg = random_coloring(rng, random_connected_graph(rng, n, 0.4), n_c);

    auto global = min_color_cut_exact(cg);
    auto global_ref = brute_force_min_cut(cg, CutMode::global);
    CHECK(global.value == global_ref.value);
    CHECK(global.lower_bound == global.value);
    CHECK(is_color_cut(cg, global.colors));
    check_witness(cg, global);

    for (int u = 0; u < n && st_checked < 120; ++u)
      for (int v = u + 1; v < n && st_checked < 120; ++v) {
        if (cg.graph.has_edge(u, v)) continue;
        auto st = min_color_st_cut_exact(cg, u, v);
        auto st_ref = brute_force_min_cut(cg, CutMode::st, u, v);
        CHECK(st.value == st_ref.value);
        CHECK(is_color_st_cut(cg, st.colors, u, v));
        check_witness(cg, st, u, v);
        ++st_checked;
      }
  }
  CHECK(st_checked >= 100);
}

TEST_CASE("global optimum is the best pair or trivializing answer") {
  Rng rng(7178);
  for (int round = 0; round < 25; ++round) {
    int n = 3 + rng.next_below(7);
    int n_c = 2 + rng.next_below(5);
    auto cg = random_coloring(rng, random_connected_graph(rng, n, 0.45), n_c);

    auto global = min_color_cut_exact(cg);
    int best = trivializing_cover(cg).second;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (cg.graph.has_edge(u, v)) continue;
        best = std::min(best, min_color_st_cut_exact(cg, u, v).value);
      }
    CHECK(global.value == best);
    CHECK(global.value >= 1);
    CHECK(global.value <= trivializing_cover(cg).second);
  }
}

TEST_CASE("solver results are locally minimal") {
  Rng rng(7179);
  for (int round = 0; round < 30; ++round) {
    int n = 3 + rng.next_below(8);
    int n_c = 2 + rng.next_below(5);
    auto cg = random_coloring(rng, random_connected_graph(rng, n, 0.4), n_c);
    auto r = min_color_cut_exact(cg);
    for (size_t drop = 0; drop < r.colors.size(); ++drop) {
      auto sub = r.colors;
      sub.erase(sub.begin() + static_cast<long>(drop));
      CHECK_FALSE(is_color_cut(cg, sub));
    }
  }
}

TEST_CASE("exhausted budget degrades to certified bounds") {
  Rng rng(4242);
  auto cg = random_coloring(rng, random_connected_graph(rng, 16, 0.3), 6);
  SolveOptions opts;
  opts.timeout_s = 0.0;

  auto global = min_color_cut_exact(cg, opts);
  CHECK(global.method == CutMethod::bound);
  CHECK(global.lower_bound >= 1);
  CHECK(global.lower_bound <= global.value);
  CHECK(is_color_cut(cg, global.colors));

  int s = -1, t = -1;
  for (int u = 0; u < 16 && s < 0; ++u)
    for (int v = u + 1; v < 16 && s < 0; ++v)
      if (!cg.graph.has_edge(u, v)) {
        s = u;
        t = v;
      }
  REQUIRE(s >= 0);
  auto st = min_color_st_cut_exact(cg, s, t, opts);
  CHECK(st.method == CutMethod::bound);
  CHECK(st.lower_bound >= 1);
  CHECK(st.lower_bound <= st.value);
  CHECK(is_color_st_cut(cg, st.colors, s, t));
}

TEST_CASE("brute force guards and trivial color sets") {
  auto cg = distinct_colors(complete_graph(4));
  CHECK(brute_force_min_cut(cg, CutMode::global).value == 3);

  auto wide = distinct_colors(complete_graph(25));
  CHECK(error_code_of([&] { brute_force_min_cut(wide, CutMode::global); }) ==
        Errc::limit_exceeded);

  // the empty set never cuts a connected graph, the full set always does
  auto chain = with_colors(path_graph(4), {0, 1, 0, 1}, 2);
  CHECK_FALSE(is_color_cut(chain, {}));
  CHECK(is_color_cut(chain, {0, 1}));

  CHECK(error_code_of([&] { min_color_cut_exact(with_colors(Graph(1), {0}, 1)); }) ==
        Errc::too_small);
  Graph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK(error_code_of([&] { min_color_cut_exact(with_colors(split, {0, 1, 0, 1}, 2)); }) ==
        Errc::disconnected);
}

TEST_CASE("lp export is byte-stable and matches the fixed layout") {
  auto chain = with_colors(path_graph(3), {1, 1, 2}, 3);

  std::ostringstream st_out;
  export_milp(chain, CutMode::st, 0, 2, st_out);
  const std::string st_expected =
      "\\ minimum color node cut (st form)\n"
      "\\ nodes 3 edges 2 colors 3 source 0 target 2\n"
      "Minimize\n"
      " obj: c0 + c1 + c2\n"
      "Subject To\n"
      " e0a: p0 - p1 + y0 + y1 >= 0\n"
      " e0b: p0 - p1 - y0 - y1 <= 0\n"
      " e1a: p1 - p2 + y1 + y2 >= 0\n"
      " e1b: p1 - p2 - y1 - y2 <= 0\n"
      " ps: p0 = 0\n"
      " pt: p2 = 1\n"
      " ys: y0 = 0\n"
      " yt: y2 = 0\n"
      " m0: y0 - c1 <= 0\n"
      " m1: y1 - c1 <= 0\n"
      " m2: y2 - c2 <= 0\n"
      "Binary\n"
      " c0\n"
      " c1\n"
      " c2\n"
      "End\n";
  CHECK(st_out.str() == st_expected);

  std::ostringstream global_out;
  export_milp(chain, CutMode::global, -1, -1, global_out);
  const std::string global_expected =
      "\\ minimum color node cut (global form)\n"
      "\\ nodes 3 edges 2 colors 3 bigm 6\n"
      "Minimize\n"
      " obj: c0 + c1 + c2\n"
      "Subject To\n"
      " e0a: p0 - p1 + y0 + y1 >= 0\n"
      " e0b: p0 - p1 - y0 - y1 <= 0\n"
      " e1a: p1 - p2 + y1 + y2 >= 0\n"
      " e1b: p1 - p2 - y1 - y2 <= 0\n"
      " d0: p0 - y0 >= 0\n"
      " d1: p1 - y1 >= 0\n"
      " d2: p2 - y2 >= 0\n"
      " g1: p0 + p1 + p2 - y0 - y1 - y2 + 6 z >= 1\n"
      " g2: p0 + p1 + p2 - 6 z <= 2\n"
      " g3: y0 + y1 + y2 - 6 z >= -4\n"
      " m0: y0 - c1 <= 0\n"
      " m1: y1 - c1 <= 0\n"
      " m2: y2 - c2 <= 0\n"
      "Binary\n"
      " c0\n"
      " c1\n"
      " c2\n"
      " p0\n"
      " p1\n"
      " p2\n"
      " y0\n"
      " y1\n"
      " y2\n"
      " z\n"
      "End\n";
  CHECK(global_out.str() == global_expected);

  // long rows wrap every eight terms
  auto wide = distinct_colors(path_graph(10));
  std::ostringstream wide_out;
  export_milp(wide, CutMode::global, -1, -1, wide_out);
  CHECK(wide_out.str().find(
            " g1: p0 + p1 + p2 + p3 + p4 + p5 + p6 + p7\n"
            "       + p8 + p9 - y0 - y1 - y2 - y3 - y4 - y5\n"
            "       - y6 - y7 - y8 - y9 + 20 z >= 1\n") != std::string::npos);

  // two runs, identical bytes
  std::ostringstream again;
  export_milp(chain, CutMode::global, -1, -1, again);
  CHECK(again.str() == global_out.str());
}

TEST_CASE("lp file export writes exactly the stream bytes") {
  auto gadget = three_chain_gadget();
  const std::string path = "lp_export_check.lp";
  export_milp_file(gadget.cg, CutMode::st, gadget.s, gadget.t, path);

  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream file_bytes;
  file_bytes << in.rdbuf();

  std::ostringstream direct;
  export_milp(gadget.cg, CutMode::st, gadget.s, gadget.t, direct);
  CHECK(file_bytes.str() == direct.str());
  std::remove(path.c_str());

  CHECK(error_code_of([&] {
          export_milp_file(gadget.cg, CutMode::st, gadget.s, gadget.t, "no_such_dir/out.lp");
        }) == Errc::io);
  CHECK(error_code_of([&] {
          std::ostringstream sink;
          export_milp(gadget.cg, CutMode::st, gadget.s, 2, sink);
        }) == Errc::adjacent_pair);
}

TEST_CASE("supply cut solver matches the expanded-graph solver") {
  // four demand nodes in a cycle, two private supplies each: breaking the
  // cycle means losing both supplies of two opposite nodes
  DependencySystem ring;
  ring.demand = cycle_graph(4);
  ring.supply_node_count = 8;
  ring.supplies_of = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  auto frozen = min_supply_cut_exact(ring);
  CHECK(frozen.value == 4);
  CHECK(frozen.method == CutMethod::exact);
  CHECK(is_supply_cut(ring, frozen.colors));

  Rng rng(4747);
  for (int round = 0; round < 40; ++round) {
    int n1 = 4 + rng.next_below(6);
    int n2 = 2 + rng.next_below(5);
    DependencySystem sys;
    sys.demand = random_connected_graph(rng, n1, 0.35);
    sys.supply_node_count = n2;
    sys.supplies_of.resize(n1);
    for (auto& list : sys.supplies_of) {
      int k = 1 + rng.next_below(2);
      for (int i = 0; i < k; ++i) list.push_back(rng.next_below(n2));
    }
    sys.canonicalize();

    auto direct = min_supply_cut_exact(sys);
    auto expanded = min_color_cut_exact(transform(sys).colored);
    CHECK(direct.value == expanded.value);
    CHECK(direct.lower_bound == direct.value);
    CHECK(is_supply_cut(sys, direct.colors));
    for (int c : direct.colors) {
      CHECK(c >= 0);
      CHECK(c < n2);
    }
  }

  // degrades to a certified bound when given no time
  SolveOptions rushed;
  rushed.timeout_s = 0.0;
  auto bound = min_supply_cut_exact(ring, rushed);
  CHECK(bound.method == CutMethod::bound);
  CHECK(bound.lower_bound >= 1);
  CHECK(bound.lower_bound <= bound.value);
  CHECK(is_supply_cut(ring, bound.colors));

  DependencySystem lonely;
  lonely.demand = Graph(1);
  lonely.supply_node_count = 2;
  lonely.supplies_of = {{0, 1}};  // expands to two isolated copies
  CHECK(error_code_of([&] { min_supply_cut_exact(lonely); }) == Errc::disconnected);
  lonely.supplies_of = {{0}};
  CHECK(error_code_of([&] { min_supply_cut_exact(lonely); }) == Errc::too_small);
}
