#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colored.hpp"
#include "exact.hpp"

namespace interdep {

// Each unordered pair becomes an edge with probability p, deterministically
// under the seed.
Graph gen_erdos_renyi(int n, double p, std::uint64_t seed);

struct ConnectedSample {
  Graph graph;
  int retries = 0;  // discarded draws before the connected one
};

// Redraws with derived seeds until the sample is connected. Graphs on fewer
// than two nodes count as connected.
ConnectedSample gen_erdos_renyi_connected(int n, double p, std::uint64_t seed,
                                          int max_attempts = 200);

// Ring of four cliques whose two labeled matchings carry the instance edges;
// the global minimum color cut value equals the instance's minimum vertex
// cover size. Instance node ids double as color ids; every other gadget node
// gets a fresh color. An odd edge count is padded by restating one edge's
// color pair on fresh nodes, which leaves the cover optimum unchanged.
ColoredGraph gen_vertex_cover_gadget(const Graph& instance);

struct HittingSetGadget {
  ColoredGraph colored;
  int s = 0;
  int t = 1;
};

// One internally disjoint s-t path per set, internal node colors naming the
// set's elements. Elements are 1..universe and double as color ids; color 0
// marks the two terminals. The minimum color s-t cut value equals the
// minimum hitting set size.
HittingSetGadget gen_hitting_set_gadget(int universe,
                                        const std::vector<std::vector<int>>& sets);

struct ExperimentConfig {
  int n1 = 50;
  int n2 = 75;
  double p1 = 0.1;
  double p2 = 0.1;
  int ns1 = 3;
  int ns2 = 2;
  int instances = 10;
  std::uint64_t seed = 1;
  double solver_timeout_s = 600.0;
  int workers = 1;
  bool run_cds = true;
  bool run_random = true;
};

struct CellValue {
  int value = 0;        // achieved connectivity; an upper bound when timed out
  int lower_bound = 0;  // equals value unless timed out
  bool timed_out = false;
};

struct InstanceRow {
  int index = 0;
  int k1 = 0, k2 = 0;      // node connectivity of each sample
  int cap1 = 0, cap2 = 0;  // min(k_i * n_si, n_j)
  CellValue cds1, cds2, rand1, rand2;
  int retries1 = 0, retries2 = 0;
};

struct ReportMeans {
  double k1 = 0, cap1 = 0, cds1 = 0, rand1 = 0;
  double k2 = 0, cap2 = 0, cds2 = 0, rand2 = 0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<InstanceRow> rows;  // one per instance, in index order
  double wall_s = 0.0;            // not part of the text forms

  ReportMeans means() const;
  int timeout_cells() const;
  int counted_cells() const;

  // Both renderings are byte-identical for a given config and seed, for any
  // worker count. Timed-out cells show as lo..hi intervals in the text form
  // and carry a flag column in the CSV.
  std::string to_text() const;
  std::string to_csv() const;
};

// Per instance: draw two connected samples, wire them with the CDS-based and
// the random bidirectional assignments, and measure both supply node
// connectivities exactly (budgeted; timeouts degrade to certified intervals,
// flagged per cell). Instances run on a worker pool; results land in index
// order regardless of scheduling.
ExperimentReport run_table1(const ExperimentConfig& cfg);

}  // namespace interdep
