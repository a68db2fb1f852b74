#pragma once

#include <chrono>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colored.hpp"

namespace interdep {

enum class CutMode { global, st };
enum class CutMethod { exact, poly_exact, q_approx, bound };

const char* cut_mode_name(CutMode m);
const char* cut_method_name(CutMethod m);

struct ColorCutResult {
  std::vector<int> colors;  // sorted ascending
  int value = 0;            // |colors|; an upper bound when method == bound
  int lower_bound = 0;      // proven lower bound; equals value unless method == bound
  NodeCut witness_cut;
  CutMode mode = CutMode::global;
  CutMethod method = CutMethod::exact;
  int q = 1;  // contraction stretch, > 1 only for q_approx results
};

struct SolveOptions {
  double timeout_s = 60.0;
  int workers = 1;
};

// Minimum-cardinality hitting set instance over color ids. Constraints are
// the color sets of surviving paths; any feasible cut must hit all of them.
struct HittingSystem {
  int universe = 0;
  std::vector<std::vector<int>> constraints;  // each sorted ascending, non-empty

  void add(std::vector<int> constraint);
  // Branch and bound: branches on the most-constrained color, bounds with a
  // greedy family of pairwise disjoint constraints. Returns a minimum hitting
  // set of size < cutoff, or nullopt when none exists.
  std::optional<std::vector<int>> solve(int cutoff) const;
  int greedy_disjoint_bound() const;
};

// Smallest color set whose covered nodes reach at least n-1 of the n nodes:
// every inhabited color, minus one singleton class when one exists.
std::pair<std::vector<int>, int> trivializing_cover(const ColoredGraph& cg);

// Exact minimum color s-t node cut via iterated hitting sets: solve the
// current constraint pool, test the candidate with the feasibility oracle,
// and on rejection add the color set of the shortest surviving path.
ColorCutResult min_color_st_cut_exact(const ColoredGraph& cg, int s, int t,
                                      const SolveOptions& opts = {});

// Exact global minimum: best over the trivializing cover and every
// non-adjacent pair (ascending degree sum), sharing the incumbent as an upper
// bound across pair subproblems. Value is exact for any worker count; witness
// selection is deterministic only with one worker.
ColorCutResult min_color_cut_exact(const ColoredGraph& cg, const SolveOptions& opts = {});

// Smallest set of supply nodes whose joint loss disconnects the demand
// network. Works on the expanded graph but scans only one representative
// copy per demand pair plus one same-node copy pair; copies of a node share
// a neighbourhood, so the restricted scan reaches every separation the full
// pair set could. Colors in the result are supply node ids; the witness cut
// lives in the expanded graph.
ColorCutResult min_supply_cut_exact(const DependencySystem& sys, const SolveOptions& opts = {});

// Reference oracle: enumerate color subsets in ascending cardinality and
// return the first one the feasibility oracle accepts. Refuses instances with
// more than `color_limit` inhabited colors.
ColorCutResult brute_force_min_cut(const ColoredGraph& cg, CutMode mode, int s = -1, int t = -1,
                                   int color_limit = 20);

// Mixed-integer formulations in LP file format, byte-stable for a given
// instance: potential/indicator variables per node, one binary per color.
// st mode fixes the endpoint potentials; global mode adds the branch
// selector z with big-M 2n.
void export_milp(const ColoredGraph& cg, CutMode mode, int s, int t, std::ostream& out);
void export_milp_file(const ColoredGraph& cg, CutMode mode, int s, int t,
                      const std::string& path);

}  // namespace interdep
