#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "core/assign.hpp"
#include "core/colored.hpp"
#include "core/error.hpp"
#include "core/exact.hpp"
#include "core/graph.hpp"
#include "core/rng.hpp"
#include "helpers.hpp"

using namespace interdep;
using namespace tst;

namespace {

// Reference check, written independently of the library: the set must induce
// a connected subgraph and every outside node needs a neighbour inside.
bool oracle_is_cds(const Graph& g, const std::vector<int>& nodes) {
  const int n = g.node_count();
  std::set<int> members(nodes.begin(), nodes.end());
  if (members.empty() || members.size() != nodes.size()) return false;
  if (*members.begin() < 0 || *members.rbegin() >= n) return false;

  std::vector<int> comp(n, -1);
  std::vector<int> stack{*members.begin()};
  comp[*members.begin()] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (members.count(w) && comp[w] < 0) {
        comp[w] = 0;
        stack.push_back(w);
      }
  }
  for (int v : members)
    if (comp[v] < 0) return false;

  for (int v = 0; v < n; ++v) {
    if (members.count(v)) continue;
    bool covered = false;
    for (int w : g.neighbors(v)) covered = covered || members.count(w) > 0;
    if (!covered) return false;
  }
  return true;
}

std::vector<std::vector<int>> all_cds_of(const Graph& g) {
  const int n = g.node_count();
  std::vector<std::vector<int>> found;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> nodes;
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) nodes.push_back(v);
    if (oracle_is_cds(g, nodes)) found.push_back(std::move(nodes));
  }
  return found;
}

// Smallest number of full groups whose union meets every CDS, by exhaustive
// enumeration. Returns a large sentinel when no selection works (a set can
// sit entirely in the remainder).
int min_groups_hitting_all(const CdsPartition& part, const GroupLayout& layout) {
  const int gcount = static_cast<int>(layout.groups.size());
  REQUIRE(gcount <= 20);
  std::vector<std::set<int>> group_nodes(gcount);
  for (int gi = 0; gi < gcount; ++gi)
    group_nodes[gi] = {layout.groups[gi].begin(), layout.groups[gi].end()};

  int best = 1 << 20;
  for (int mask = 0; mask < (1 << gcount); ++mask) {
    bool all_hit = true;
    for (const auto& cds : part.cds_list) {
      bool hit = false;
      for (int gi = 0; gi < gcount && !hit; ++gi) {
        if (!(mask & (1 << gi))) continue;
        for (int v : cds)
          if (group_nodes[gi].count(v)) {
            hit = true;
            break;
          }
      }
      if (!hit) {
        all_hit = false;
        break;
      }
    }
    if (all_hit) best = std::min(best, __builtin_popcount(mask));
  }
  return best;
}

CdsPartition synthetic_partition(const std::vector<int>& sizes) {
  CdsPartition part;
  int next = 0;
  for (int sz : sizes) {
    std::vector<int> set(sz);
    std::iota(set.begin(), set.end(), next);
    next += sz;
    part.cds_list.push_back(std::move(set));
  }
  return part;
}

}  // namespace

TEST_CASE("is_cds agrees with a brute-force check") {
  Graph star(5);
  for (int v = 1; v < 5; ++v) star.add_edge(0, v);
  CHECK(is_cds(star, {0}));
  CHECK_FALSE(is_cds(star, {1}));
  CHECK_FALSE(is_cds(star, {}));
  CHECK_FALSE(is_cds(star, {0, 0}));
  CHECK_FALSE(is_cds(star, {0, 7}));
  CHECK(is_cds(path_graph(4), {1, 2}));
  CHECK_FALSE(is_cds(path_graph(4), {1, 3}));  // not connected inside

  Rng rng(61);
  for (int round = 0; round < 40; ++round) {
    auto g = random_connected_graph(rng, 2 + rng.next_below(7), 0.4);
    const int n = g.node_count();
    for (int trial = 0; trial < 30; ++trial) {
      int mask = 1 + rng.next_below((1 << n) - 1);
      std::vector<int> nodes;
      for (int v = 0; v < n; ++v)
        if (mask & (1 << v)) nodes.push_back(v);
      CHECK(is_cds(g, nodes) == oracle_is_cds(g, nodes));
    }
  }
}

TEST_CASE("greedy partition folds a path into one set") {
  auto part = greedy_cds_partition(path_graph(4));
  REQUIRE(part.cds_list.size() == 1);
  CHECK(part.cds_list[0] == std::vector<int>{0, 1, 2, 3});

  // both middle nodes sit in every dominating connected set, so two disjoint
  // ones cannot exist and a single merged set is the right answer
  for (const auto& cds : all_cds_of(path_graph(4))) {
    CHECK(std::count(cds.begin(), cds.end(), 1) == 1);
    CHECK(std::count(cds.begin(), cds.end(), 2) == 1);
  }
}

TEST_CASE("greedy partition splits complete graphs into singletons") {
  auto part = greedy_cds_partition(complete_graph(5));
  REQUIRE(part.cds_list.size() == 5);
  for (int v = 0; v < 5; ++v) CHECK(part.cds_list[v] == std::vector<int>{v});

  CHECK(greedy_cds_partition(complete_graph(3)).cds_list.size() == 3);
}

TEST_CASE("greedy partition on cycles") {
  auto part6 = greedy_cds_partition(cycle_graph(6));
  REQUIRE(part6.cds_list.size() == 1);
  CHECK(part6.cds_list[0] == std::vector<int>{0, 1, 2, 3, 4, 5});
  // the smallest CDS of a 6-cycle has 4 nodes, so two disjoint ones would
  // need 8 of the 6 nodes
  size_t smallest = 99;
  for (const auto& cds : all_cds_of(cycle_graph(6))) smallest = std::min(smallest, cds.size());
  CHECK(smallest == 4);

  auto part4 = greedy_cds_partition(cycle_graph(4));
  REQUIRE(part4.cds_list.size() == 2);
  CHECK(part4.cds_list[0] == std::vector<int>{0, 1});
  CHECK(part4.cds_list[1] == std::vector<int>{2, 3});
}

TEST_CASE("greedy partition finds both ladder rails") {
  auto g = ladder_graph(4);
  auto part = greedy_cds_partition(g);
  REQUIRE(part.cds_list.size() == 2);
  CHECK(part.cds_list[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(part.cds_list[1] == std::vector<int>{4, 5, 6, 7});
  CHECK(oracle_is_cds(g, part.cds_list[0]));
  CHECK(oracle_is_cds(g, part.cds_list[1]));
}

TEST_CASE("greedy partition covers the graph with valid disjoint sets") {
  Rng rng(62);
  for (int round = 0; round < 40; ++round) {
    auto g = random_connected_graph(rng, 2 + rng.next_below(23), 0.25);
    auto part = greedy_cds_partition(g);
    REQUIRE(!part.cds_list.empty());

    std::vector<int> owner(g.node_count(), -1);
    for (size_t l = 0; l < part.cds_list.size(); ++l) {
      CHECK(oracle_is_cds(g, part.cds_list[l]));
      for (int v : part.cds_list[l]) {
        CHECK(owner[v] == -1);
        owner[v] = static_cast<int>(l);
      }
    }
    CHECK(std::count(owner.begin(), owner.end(), -1) == 0);
  }
}

TEST_CASE("partition rejects unusable graphs") {
  CHECK(error_code_of([] { greedy_cds_partition(Graph(0)); }) == Errc::too_small);
  Graph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK(error_code_of([&] { greedy_cds_partition(split); }) == Errc::disconnected);
  CHECK(greedy_cds_partition(Graph(1)).cds_list == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("group packing follows the worked example") {
  auto layout = partition_into_groups(synthetic_partition({2, 4, 6}), 3);
  REQUIRE(layout.groups.size() == 4);
  CHECK(layout.groups[0] == std::vector<int>{0, 1, 9});
  CHECK(layout.groups[1] == std::vector<int>{2, 3, 4});
  CHECK(layout.groups[2] == std::vector<int>{5, 10, 11});
  CHECK(layout.groups[3] == std::vector<int>{6, 7, 8});
  CHECK(layout.remainder.empty());
  CHECK(layout.group_size == 3);
}

TEST_CASE("group packing fills every group and spills the rest") {
  Rng rng(63);
  for (int round = 0; round < 60; ++round) {
    std::vector<int> sizes(1 + rng.next_below(6));
    int total = 0;
    for (auto& sz : sizes) total += (sz = 1 + rng.next_below(9));
    int gs = 1 + rng.next_below(5);
    auto part = synthetic_partition(sizes);
    auto layout = partition_into_groups(part, gs);

    CHECK(static_cast<int>(layout.groups.size()) == total / gs);
    for (const auto& grp : layout.groups) CHECK(static_cast<int>(grp.size()) == gs);
    CHECK(static_cast<int>(layout.remainder.size()) == total % gs);

    std::vector<int> seen;
    for (const auto& grp : layout.groups) seen.insert(seen.end(), grp.begin(), grp.end());
    seen.insert(seen.end(), layout.remainder.begin(), layout.remainder.end());
    std::sort(seen.begin(), seen.end());
    std::vector<int> want(total);
    std::iota(want.begin(), want.end(), 0);
    CHECK(seen == want);
  }

  // sets whose sizes are multiples of the group size never share a group
  auto layout = partition_into_groups(synthetic_partition({4, 2, 6}), 2);
  auto owner_of = [](int v) { return v < 4 ? 0 : v < 6 ? 1 : 2; };
  for (const auto& grp : layout.groups)
    for (int v : grp) CHECK(owner_of(v) == owner_of(grp[0]));

  auto tiny = partition_into_groups(synthetic_partition({2, 1}), 5);
  CHECK(tiny.groups.empty());
  CHECK(tiny.remainder == std::vector<int>{0, 1, 2});

  CHECK(error_code_of([] { partition_into_groups({}, 0); }) == Errc::invalid_argument);
}

TEST_CASE("full groups must be removed in bulk to hit every set") {
  // exhaustive check of the packing guarantee: hitting every CDS with whole
  // groups takes at least min(ceil((h-1)/2), group count) of them
  int layouts = 0;
  int multi = 0;
  auto check_layout = [&](const Graph& g, int gs) {
    auto part = greedy_cds_partition(g);
    auto layout = partition_into_groups(part, gs);
    if (layout.groups.empty() || layout.groups.size() > 12) return;
    const int h = static_cast<int>(part.cds_list.size());
    int need = std::min(h / 2, static_cast<int>(layout.groups.size()));
    CHECK(min_groups_hitting_all(part, layout) >= need);
    ++layouts;
    if (h >= 2) ++multi;
  };

  for (int n = 4; n <= 9; ++n)
    for (int gs = 2; gs <= 3; ++gs) check_layout(complete_graph(n), gs);
  check_layout(ladder_graph(4), 2);
  check_layout(ladder_graph(5), 2);
  check_layout(ladder_graph(4), 3);
  check_layout(petersen(), 2);
  check_layout(cycle_graph(4), 1);

  Rng rng(64);
  while (layouts < 60) {
    auto g = random_connected_graph(rng, 5 + rng.next_below(10), 0.35);
    check_layout(g, 1 + rng.next_below(4));
  }
  CHECK(layouts >= 60);
  CHECK(multi >= 15);

  // tight on complete graphs: the interleaved groups of K6 each meet two
  // singleton sets, so all three are needed
  auto part = greedy_cds_partition(complete_graph(6));
  auto layout = partition_into_groups(part, 2);
  REQUIRE(layout.groups.size() == 3);
  CHECK(min_groups_hitting_all(part, layout) == 3);
}

TEST_CASE("path assignment reaches the disjoint-path count") {
  auto c4 = cycle_graph(4);
  auto plan2 = assign_path_based(c4, 0, 2, 2);
  CHECK(plan2.kind == AssignKind::path_based);
  CHECK(plan2.paths.size() == 2);
  CHECK(plan2.guaranteed_lower_bound == 2);
  CHECK(min_color_st_cut_exact(plan_coloring(c4, plan2), 0, 2).value == 2);

  auto plan1 = assign_path_based(c4, 0, 2, 1);
  CHECK(plan1.guaranteed_lower_bound == 1);
  CHECK(min_color_st_cut_exact(plan_coloring(c4, plan1), 0, 2).value == 1);

  Rng rng(65);
  int checked = 0;
  while (checked < 30) {
    auto g = random_connected_graph(rng, 8 + rng.next_below(13), 0.4);
    const int n = g.node_count();
    int s = rng.next_below(n), t = rng.next_below(n);
    if (s == t || g.has_edge(s, t)) continue;
    int n_c = 1 + rng.next_below(5);

    auto plan = assign_path_based(g, s, t, n_c);
    int k = static_cast<int>(plan.paths.size());
    CHECK(plan.guaranteed_lower_bound == std::min(k, n_c));
    for (size_t i = 0; i < plan.paths.size() && static_cast<int>(i) < n_c; ++i)
      for (size_t j = 1; j + 1 < plan.paths[i].size(); ++j)
        CHECK(plan.supplies_of[plan.paths[i][j]] == std::vector<int>{static_cast<int>(i)});

    auto exact = min_color_st_cut_exact(plan_coloring(g, plan), s, t);
    CHECK(exact.value == std::min(k, n_c));
    ++checked;
  }
}

TEST_CASE("cds assignment certifies its floor") {
  auto plan_k6 = assign_cds_based(complete_graph(6), 6);
  CHECK(plan_k6.cds_bound == 6);
  CHECK(plan_k6.trivializing_cap == 5);
  CHECK(plan_k6.guaranteed_lower_bound == 5);
  CHECK(min_color_cut_exact(plan_coloring(complete_graph(6), plan_k6)).value == 5);

  auto lad = ladder_graph(4);
  auto plan_lad = assign_cds_based(lad, 2);
  CHECK(plan_lad.cds_bound == 2);
  CHECK(plan_lad.guaranteed_lower_bound == 2);
  CHECK(min_color_cut_exact(plan_coloring(lad, plan_lad)).value == 2);

  Rng rng(66);
  for (int round = 0; round < 25; ++round) {
    auto g = random_connected_graph(rng, 4 + rng.next_below(9), 0.35);
    int n_c = 1 + rng.next_below(4);
    auto plan = assign_cds_based(g, n_c);
    auto cg = plan_coloring(g, plan);
    for (int v = 0; v < g.node_count(); ++v) {
      CHECK(cg.color_of[v] >= 0);
      CHECK(cg.color_of[v] < n_c);
    }
    auto exact = min_color_cut_exact(cg);
    CHECK(exact.value >= plan.guaranteed_lower_bound);
    CHECK(exact.value <= plan.trivializing_cap);
  }
}

TEST_CASE("random assignment is deterministic per seed") {
  auto g = ladder_graph(5);
  auto a = assign_random(g, 4, 99);
  auto b = assign_random(g, 4, 99);
  CHECK(a.supplies_of == b.supplies_of);
  CHECK(a.kind == AssignKind::random_uniform);
  CHECK(a.guaranteed_lower_bound == 1);
  for (int v = 0; v < g.node_count(); ++v) {
    REQUIRE(a.supplies_of[v].size() == 1);
    CHECK(a.supplies_of[v][0] >= 0);
    CHECK(a.supplies_of[v][0] < 4);
  }
  auto solo = assign_random(g, 1, 7);
  for (const auto& list : solo.supplies_of) CHECK(list == std::vector<int>{0});
}

TEST_CASE("bidirectional wiring follows the worked example") {
  auto g1 = ladder_graph(4);
  auto g2 = cycle_graph(4);
  auto plans = assign_bidirectional_cds(g1, g2, 1, 2);

  REQUIRE(plans.plan1.groups.groups.size() == 4);
  CHECK(plans.plan1.groups.groups[0] == std::vector<int>{0, 1});
  CHECK(plans.plan1.groups.groups[1] == std::vector<int>{2, 3});
  CHECK(plans.plan1.groups.groups[2] == std::vector<int>{4, 5});
  CHECK(plans.plan1.groups.groups[3] == std::vector<int>{6, 7});
  CHECK(plans.plan2.groups.groups ==
        std::vector<std::vector<int>>{{0}, {1}, {2}, {3}});
  CHECK(plans.plan1.groups.remainder.empty());

  CHECK(plans.plan1.color_count == 4);
  CHECK(plans.plan2.color_count == 8);
  for (int v : {0, 1}) CHECK(plans.plan1.supplies_of[v] == std::vector<int>{0});
  for (int v : {2, 3}) CHECK(plans.plan1.supplies_of[v] == std::vector<int>{1});
  for (int v : {4, 5}) CHECK(plans.plan1.supplies_of[v] == std::vector<int>{2});
  for (int v : {6, 7}) CHECK(plans.plan1.supplies_of[v] == std::vector<int>{3});
  CHECK(plans.plan2.supplies_of[0] == std::vector<int>{0, 1});
  CHECK(plans.plan2.supplies_of[1] == std::vector<int>{2, 3});
  CHECK(plans.plan2.supplies_of[2] == std::vector<int>{4, 5});
  CHECK(plans.plan2.supplies_of[3] == std::vector<int>{6, 7});

  CHECK(plans.plan1.guaranteed_lower_bound == 1);
  CHECK(plans.plan2.guaranteed_lower_bound == 2);

  auto sys = to_system(g1, g2, plans);
  auto fwd = min_color_cut_exact(transform(sys).colored);
  CHECK(fwd.value == 2);
  auto rev = reversed(sys);
  CHECK(rev.supplies_of == plans.plan2.supplies_of);
  auto bwd = min_color_cut_exact(transform(rev).colored);
  CHECK(bwd.value == 4);
}

TEST_CASE("bidirectional bounds stay sound on random systems") {
  Rng rng(67);
  struct Shape {
    int n1, ns1, n2, ns2;
  };
  std::vector<Shape> shapes{{6, 2, 6, 2}, {8, 1, 4, 2}, {6, 2, 4, 3},
                            {9, 2, 6, 3}, {7, 2, 7, 2}, {10, 1, 5, 2}};
  for (const auto& sh : shapes) {
    for (int round = 0; round < 3; ++round) {
      auto g1 = random_connected_graph(rng, sh.n1, 0.45);
      auto g2 = random_connected_graph(rng, sh.n2, 0.45);
      auto plans = assign_bidirectional_cds(g1, g2, sh.ns1, sh.ns2);

      for (const auto& list : plans.plan1.supplies_of)
        CHECK(static_cast<int>(list.size()) == sh.ns1);
      for (const auto& list : plans.plan2.supplies_of)
        CHECK(static_cast<int>(list.size()) == sh.ns2);

      auto sys = to_system(g1, g2, plans);
      auto rev = reversed(sys);
      CHECK(rev.supplies_of == plans.plan2.supplies_of);

      auto fwd = min_color_cut_exact(transform(sys).colored);
      CHECK(fwd.value >= plans.plan1.guaranteed_lower_bound);
      auto bwd = min_color_cut_exact(transform(rev).colored);
      CHECK(bwd.value >= plans.plan2.guaranteed_lower_bound);
    }
  }
}

TEST_CASE("bidirectional random wiring keeps stubs balanced") {
  Rng rng(68);
  auto g1 = random_connected_graph(rng, 8, 0.4);
  auto g2 = random_connected_graph(rng, 4, 0.6);
  auto plans = assign_bidirectional_random(g1, g2, 1, 2, 1234);
  CHECK(plans.plan1.kind == AssignKind::bidir_random);
  for (const auto& list : plans.plan1.supplies_of) CHECK(list.size() == 1);
  for (const auto& list : plans.plan2.supplies_of) CHECK(list.size() == 2);
  CHECK(plans.plan1.guaranteed_lower_bound == 1);

  auto again = assign_bidirectional_random(g1, g2, 1, 2, 1234);
  CHECK(again.plan1.supplies_of == plans.plan1.supplies_of);

  auto sys = to_system(g1, g2, plans);
  CHECK(reversed(sys).supplies_of == plans.plan2.supplies_of);

  auto g3 = random_connected_graph(rng, 7, 0.5);
  auto plans2 = assign_bidirectional_random(g3, g3, 2, 2, 5);
  auto sys2 = to_system(g3, g3, plans2);
  CHECK(reversed(sys2).supplies_of == plans2.plan2.supplies_of);

  CHECK(error_code_of([&] { assign_bidirectional_random(g1, g2, 2, 2, 0); }) ==
        Errc::stub_mismatch);
}

TEST_CASE("assignment rejects bad inputs") {
  auto g = cycle_graph(5);
  CHECK(error_code_of([&] { assign_path_based(g, 0, 2, 0); }) == Errc::invalid_argument);
  CHECK(error_code_of([&] { assign_cds_based(g, 0); }) == Errc::invalid_argument);
  CHECK(error_code_of([&] { assign_random(g, 0, 1); }) == Errc::invalid_argument);

  Graph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK(error_code_of([&] { assign_cds_based(split, 2); }) == Errc::disconnected);
  CHECK(error_code_of([&] { assign_bidirectional_cds(split, split, 1, 1); }) ==
        Errc::disconnected);
  CHECK(error_code_of([&] { assign_bidirectional_cds(g, g, 0, 1); }) ==
        Errc::invalid_argument);

  auto plans = assign_bidirectional_cds(cycle_graph(4), cycle_graph(4), 2, 2);
  CHECK(error_code_of([&] { plan_coloring(cycle_graph(4), plans.plan1); }) ==
        Errc::invalid_argument);
  CHECK(error_code_of([&] { plan_coloring(cycle_graph(4), assign_random(g, 2, 1)); }) ==
        Errc::invalid_argument);
}
