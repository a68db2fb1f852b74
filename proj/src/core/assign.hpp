#pragma once

#include <cstdint>
#include <vector>

#include "colored.hpp"
#include "graph.hpp"

namespace interdep {

// Connected dominating set: G[nodes] connected, every other node adjacent to
// a member.
bool is_cds(const Graph& g, const std::vector<int>& nodes);

struct CdsPartition {
  std::vector<std::vector<int>> cds_list;  // disjoint, each sorted; union = V
};

// Greedy family of disjoint CDS. Seeds on the highest-degree unused node,
// grows by the unused neighbor dominating the most new nodes, prunes to
// minimality, and stops once no further CDS can be formed. Unused leftovers
// are folded into the largest CDS so the result partitions the node set.
CdsPartition greedy_cds_partition(const Graph& g);

struct GroupLayout {
  std::vector<std::vector<int>> groups;  // exactly floor(n / group_size), each full, sorted
  std::vector<int> remainder;            // n mod group_size nodes
  int group_size = 0;
};

// Packs the partition's sets into fixed-size groups: CDS ascending by size,
// each preferring a fresh empty group and spilling into the lowest-index
// partly filled ones only when no empty group remains. Overflow past the
// last group becomes the remainder.
GroupLayout partition_into_groups(const CdsPartition& cds, int group_size);

enum class AssignKind { path_based, cds_based, random_uniform, bidir_cds, bidir_random };

const char* assign_kind_name(AssignKind kind);

struct AssignmentPlan {
  AssignKind kind = AssignKind::random_uniform;
  int color_count = 0;
  std::vector<std::vector<int>> supplies_of;  // per node, sorted, duplicates allowed
  int guaranteed_lower_bound = 1;

  // cds_based diagnostics: the raw min(h, n_c) guarantee and the trivializing
  // cover of the produced coloring; the reported bound is their minimum.
  int cds_bound = 0;
  int trivializing_cap = 0;

  std::vector<std::vector<int>> paths;  // path_based: the disjoint s-t paths used
  CdsPartition cds;                     // cds_based / bidir_cds
  GroupLayout groups;                   // bidir_cds
};

// View of a one-supply-per-node plan as a colored graph over g.
ColoredGraph plan_coloring(const Graph& g, const AssignmentPlan& plan);

AssignmentPlan assign_path_based(const Graph& g, int s, int t, int n_c);
AssignmentPlan assign_cds_based(const Graph& g, int n_c);
AssignmentPlan assign_random(const Graph& g, int n_c, std::uint64_t seed);

struct BidirPlans {
  AssignmentPlan plan1;  // supplies of g1 nodes, drawn from g2 node ids
  AssignmentPlan plan2;  // transpose
};

BidirPlans assign_bidirectional_cds(const Graph& g1, const Graph& g2, int ns1, int ns2);
BidirPlans assign_bidirectional_random(const Graph& g1, const Graph& g2, int ns1, int ns2,
                                       std::uint64_t seed);

// Dependency system carrying plan1 as the forward direction.
DependencySystem to_system(const Graph& g1, const Graph& g2, const BidirPlans& plans);

}  // namespace interdep
