#include "exact.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <fstream>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>

#include "detail.hpp"
#include "error.hpp"

namespace interdep {

using detail::sort_unique;
using detail::st_cut_witness;
using detail::validate_cut_input;
using detail::validate_st_query;

const char* cut_mode_name(CutMode m) { return m == CutMode::global ? "global" : "st"; }

const char* cut_method_name(CutMethod m) {
  switch (m) {
    case CutMethod::exact: return "exact";
    case CutMethod::poly_exact: return "poly_exact";
    case CutMethod::q_approx: return "q_approx";
    case CutMethod::bound: return "bound";
  }
  return "unknown";
}

void HittingSystem::add(std::vector<int> constraint) {
  sort_unique(constraint);
  require(!constraint.empty(), Errc::invalid_argument, "empty hitting constraint");
  for (const auto& c : constraints)
    if (c == constraint) return;
  constraints.push_back(std::move(constraint));
}

int HittingSystem::greedy_disjoint_bound() const {
  std::vector<int> order(constraints.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (constraints[a].size() != constraints[b].size())
      return constraints[a].size() < constraints[b].size();
    return a < b;
  });
  std::vector<char> taken(universe, 0);
  int count = 0;
  for (int i : order) {
    bool disjoint = true;
    for (int c : constraints[i])
      if (taken[c]) {
        disjoint = false;
        break;
      }
    if (!disjoint) continue;
    for (int c : constraints[i]) taken[c] = 1;
    ++count;
  }
  return count;
}

namespace {

struct HittingBnb {
  const std::vector<std::vector<int>>& cons;
  int universe;
  int bound;  // only hitting sets strictly smaller than this are of interest
  std::vector<int> best;
  bool found = false;

  void search(std::vector<int> chosen, std::vector<char> chosen_colors, std::vector<char> excluded) {
    // Unit propagation: a constraint whose last available color would be
    // excluded forces that color in.
    std::vector<int> active;
    std::vector<std::vector<int>> avail;
    for (;;) {
      active.clear();
      avail.clear();
      int forced = -1;
      for (size_t i = 0; i < cons.size(); ++i) {
        bool hit = false;
        std::vector<int> a;
        for (int c : cons[i]) {
          if (chosen_colors[c]) {
            hit = true;
            break;
          }
          if (!excluded[c]) a.push_back(c);
        }
        if (hit) continue;
        if (a.empty()) return;  // dead branch
        if (a.size() == 1 && forced < 0) forced = a[0];
        active.push_back(static_cast<int>(i));
        avail.push_back(std::move(a));
      }
      if (forced < 0) break;
      if (static_cast<int>(chosen.size()) + 1 >= bound) return;
      chosen.push_back(forced);
      chosen_colors[forced] = 1;
    }

    if (active.empty()) {
      best = chosen;
      std::sort(best.begin(), best.end());
      found = true;
      bound = static_cast<int>(best.size());
      return;
    }

    // Greedy pairwise-disjoint family of the remaining constraints; each
    // needs its own color.
    {
      std::vector<int> order(active.size());
      for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (avail[a].size() != avail[b].size()) return avail[a].size() < avail[b].size();
        return active[a] < active[b];
      });
      std::vector<char> taken(universe, 0);
      int lb = 0;
      for (int i : order) {
        bool disjoint = true;
        for (int c : avail[i])
          if (taken[c]) {
            disjoint = false;
            break;
          }
        if (!disjoint) continue;
        for (int c : avail[i]) taken[c] = 1;
        ++lb;
      }
      if (static_cast<int>(chosen.size()) + lb >= bound) return;
    }

    // Branch on the color hitting the most open constraints.
    std::vector<int> occurrences(universe, 0);
    for (const auto& a : avail)
      for (int c : a) ++occurrences[c];
    int pick = -1;
    for (int c = 0; c < universe; ++c)
      if (occurrences[c] > 0 && (pick < 0 || occurrences[c] > occurrences[pick])) pick = c;

    {
      auto chosen2 = chosen;
      auto mask2 = chosen_colors;
      chosen2.push_back(pick);
      mask2[pick] = 1;
      if (static_cast<int>(chosen2.size()) < bound) search(std::move(chosen2), std::move(mask2), excluded);
    }
    {
      auto excluded2 = excluded;
      excluded2[pick] = 1;
      search(std::move(chosen), std::move(chosen_colors), std::move(excluded2));
    }
  }
};

}  // namespace

std::optional<std::vector<int>> HittingSystem::solve(int cutoff) const {
  if (cutoff <= 0) return std::nullopt;
  if (constraints.empty()) return std::vector<int>{};
  HittingBnb bnb{constraints, universe, cutoff, {}, false};
  bnb.search({}, std::vector<char>(universe, 0), std::vector<char>(universe, 0));
  if (!bnb.found) return std::nullopt;
  return bnb.best;
}

std::pair<std::vector<int>, int> trivializing_cover(const ColoredGraph& cg) {
  auto classes = cg.color_classes();
  std::vector<int> colors;
  int drop = -1;
  for (int c = 0; c < cg.color_count; ++c) {
    if (classes[c].empty()) continue;
    colors.push_back(c);
    if (drop < 0 && classes[c].size() == 1) drop = c;
  }
  if (drop >= 0) colors.erase(std::find(colors.begin(), colors.end(), drop));
  return {colors, static_cast<int>(colors.size())};
}

namespace {

struct CutContext {
  const ColoredGraph& cg;
  std::vector<std::vector<int>> classes;

  explicit CutContext(const ColoredGraph& g) : cg(g), classes(g.color_classes()) {}

  void blocked_mask(const std::vector<int>& colors, int s, int t, std::vector<char>& out) const {
    std::fill(out.begin(), out.end(), 0);
    for (int c : colors)
      for (int v : classes[c]) out[v] = 1;
    if (s >= 0) out[s] = 0;
    if (t >= 0) out[t] = 0;
  }

  std::vector<int> distinct_colors(const std::vector<int>& nodes) const {
    std::vector<int> out;
    out.reserve(nodes.size());
    for (int v : nodes) out.push_back(cg.color_of[v]);
    sort_unique(out);
    return out;
  }
};

std::vector<int> internal_colors(const CutContext& ctx, const std::vector<int>& path) {
  std::vector<int> out;
  for (size_t i = 1; i + 1 < path.size(); ++i) out.push_back(ctx.cg.color_of[path[i]]);
  sort_unique(out);
  return out;
}

using Deadline = std::chrono::steady_clock::time_point;

bool past(Deadline d) { return std::chrono::steady_clock::now() >= d; }

struct StOutcome {
  bool exact = false;
  std::vector<int> colors;  // best feasible cut found
  int lower_bound = 0;
  bool timed_out = false;
};

// Counterexample-guided search for the cheapest color set separating s and t,
// warm-started from one max-flow run: the disjoint paths seed the constraint
// pool and the minimum node cut's colors seed the upper bound. Only values
// strictly below `cap` are pursued to optimality.
StOutcome solve_st_cegar(const CutContext& ctx, int s, int t, int cap, Deadline deadline) {
  const Graph& g = ctx.cg.graph;
  auto flow = st_node_connectivity(g, s, t);

  StOutcome out;
  std::vector<int> best = ctx.distinct_colors(flow.cut.nodes);
  if (flow.value == 0) {
    out.exact = true;
    return out;
  }

  HittingSystem pool;
  pool.universe = ctx.cg.color_count;
  for (const auto& path : flow.disjoint_paths) pool.add(internal_colors(ctx, path));

  int lb = pool.greedy_disjoint_bound();
  std::vector<char> blocked(g.node_count(), 0);
  for (;;) {
    const int target = std::min(cap, static_cast<int>(best.size()));
    if (lb >= target) {
      out.exact = static_cast<int>(best.size()) <= cap;
      out.colors = std::move(best);
      out.lower_bound = out.exact ? static_cast<int>(out.colors.size()) : cap;
      return out;
    }
    if (past(deadline)) {
      out.timed_out = true;
      out.colors = std::move(best);
      out.lower_bound = std::max(lb, 1);
      return out;
    }
    auto candidate = pool.solve(target);
    if (!candidate) {
      lb = target;
      continue;
    }
    lb = std::max(lb, static_cast<int>(candidate->size()));
    ctx.blocked_mask(*candidate, s, t, blocked);
    auto parent = bfs_parents(g, s, blocked);
    if (parent[t] == -1) {
      out.exact = true;
      out.colors = *candidate;
      out.lower_bound = static_cast<int>(out.colors.size());
      return out;
    }
    std::vector<int> path;
    for (int v = t; v != s; v = parent[v]) path.push_back(v);
    path.push_back(s);
    std::reverse(path.begin(), path.end());
    pool.add(internal_colors(ctx, path));
  }
}

NodeCut global_cut_witness(const ColoredGraph& cg, const std::vector<int>& colors) {
  const int n = cg.graph.node_count();
  auto covered = cg.covered(colors);
  if (n - static_cast<int>(covered.size()) <= 1) {
    return {covered, CutKind::trivializing, std::nullopt};
  }
  auto comps = connected_components(cg.graph, covered);
  if (comps.size() >= 2) {
    return {covered, CutKind::separating, std::make_pair(comps[0][0], comps[1][0])};
  }
  std::vector<char> blocked(n, 0);
  for (int u : covered) {
    for (int v = 0; v < n; ++v) {
      if (v == u || cg.graph.has_edge(u, v)) continue;
      blocked.assign(n, 0);
      for (int w : covered) blocked[w] = 1;
      blocked[u] = blocked[v] = 0;
      auto parent = bfs_parents(cg.graph, u, blocked);
      if (parent[v] == -1) {
        NodeCut cut;
        for (int w : covered)
          if (w != u && w != v) cut.nodes.push_back(w);
        cut.kind = CutKind::separating;
        cut.witness_pair = {std::min(u, v), std::max(u, v)};
        return cut;
      }
    }
  }
  fail(Errc::invalid_argument, "color set is not a cut");
}

Deadline deadline_from(const SolveOptions& opts) {
  return std::chrono::steady_clock::now() +
         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
             std::chrono::duration<double>(opts.timeout_s));
}

}  // namespace

ColorCutResult min_color_st_cut_exact(const ColoredGraph& cg, int s, int t,
                                      const SolveOptions& opts) {
  validate_cut_input(cg);
  validate_st_query(cg, s, t);

  CutContext ctx(cg);
  auto out = solve_st_cegar(ctx, s, t, INT_MAX, deadline_from(opts));

  ColorCutResult result;
  result.mode = CutMode::st;
  result.colors = out.colors;
  result.value = static_cast<int>(result.colors.size());
  if (out.timed_out) {
    result.method = CutMethod::bound;
    result.lower_bound = std::min(out.lower_bound, result.value);
  } else {
    result.method = CutMethod::exact;
    result.lower_bound = result.value;
  }
  result.witness_cut = st_cut_witness(cg, result.colors, s, t);
  return result;
}

namespace {

ColorCutResult solve_global_over_pairs(const ColoredGraph& cg,
                                       const std::vector<std::pair<int, int>>& pairs,
                                       const SolveOptions& opts) {
  const Deadline deadline = deadline_from(opts);

  CutContext ctx(cg);
  auto [triv_colors, triv_value] = trivializing_cover(cg);

  struct Incumbent {
    std::vector<int> colors;
    int pair_u = -1, pair_v = -1;  // -1: trivializing
  };
  Incumbent best{triv_colors, -1, -1};
  std::atomic<int> incumbent_value{triv_value};
  std::mutex best_mu;

  std::atomic<size_t> cursor{0};
  std::atomic<bool> degraded{false};
  std::atomic<int> partial_lb{INT_MAX};

  auto run_pairs = [&]() {
    for (;;) {
      size_t i = cursor.fetch_add(1);
      if (i >= pairs.size()) return;
      if (incumbent_value.load() <= 1) return;
      if (past(deadline)) {
        degraded.store(true);
        int cur = partial_lb.load();
        while (cur > 1 && !partial_lb.compare_exchange_weak(cur, 1)) {
        }
        return;
      }
      auto [u, v] = pairs[i];
      auto out = solve_st_cegar(ctx, u, v, incumbent_value.load(), deadline);
      if (out.timed_out) {
        degraded.store(true);
        int lb = std::max(out.lower_bound, 1);
        int cur = partial_lb.load();
        while (lb < cur && !partial_lb.compare_exchange_weak(cur, lb)) {
        }
        continue;
      }
      if (!out.exact) continue;
      int value = static_cast<int>(out.colors.size());
      std::lock_guard<std::mutex> lock(best_mu);
      if (value < incumbent_value.load()) {
        incumbent_value.store(value);
        best = {out.colors, u, v};
      }
    }
  };

  if (opts.workers <= 1) {
    run_pairs();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < opts.workers; ++w) threads.emplace_back(run_pairs);
    for (auto& t : threads) t.join();
  }

  ColorCutResult result;
  result.mode = CutMode::global;
  result.colors = best.colors;
  result.value = incumbent_value.load();
  if (degraded.load()) {
    result.method = CutMethod::bound;
    result.lower_bound = std::min(result.value, std::max(partial_lb.load(), 1));
  } else {
    result.method = CutMethod::exact;
    result.lower_bound = result.value;
  }
  if (best.pair_u >= 0) {
    result.witness_cut = st_cut_witness(cg, result.colors, best.pair_u, best.pair_v);
  } else {
    result.witness_cut = {cg.covered(result.colors), CutKind::trivializing, std::nullopt};
  }
  return result;
}

}  // namespace

ColorCutResult min_color_cut_exact(const ColoredGraph& cg, const SolveOptions& opts) {
  validate_cut_input(cg);
  return solve_global_over_pairs(cg, detail::non_adjacent_pairs(cg.graph), opts);
}

ColorCutResult min_supply_cut_exact(const DependencySystem& sys, const SolveOptions& opts) {
  auto tr = transform(sys);
  validate_cut_input(tr.colored);

  const Graph& demand = sys.demand;
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < demand.node_count(); ++u) {
    if (tr.copy_map[u].size() >= 2) pairs.emplace_back(tr.copy_map[u][0], tr.copy_map[u][1]);
    for (int v = u + 1; v < demand.node_count(); ++v)
      if (!demand.has_edge(u, v)) pairs.emplace_back(tr.copy_map[u][0], tr.copy_map[v][0]);
  }
  const Graph& tg = tr.colored.graph;
  std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    int da = tg.degree(a.first) + tg.degree(a.second);
    int db = tg.degree(b.first) + tg.degree(b.second);
    if (da != db) return da < db;
    return a < b;
  });
  return solve_global_over_pairs(tr.colored, pairs, opts);
}

ColorCutResult brute_force_min_cut(const ColoredGraph& cg, CutMode mode, int s, int t,
                                   int color_limit) {
  validate_cut_input(cg);
  if (mode == CutMode::st) validate_st_query(cg, s, t);

  auto used = cg.used_colors();
  require(static_cast<int>(used.size()) <= color_limit, Errc::limit_exceeded,
          "instance has " + std::to_string(used.size()) + " inhabited colors, limit " +
              std::to_string(color_limit));

  auto feasible = [&](const std::vector<int>& colors) {
    return mode == CutMode::st ? is_color_st_cut(cg, colors, s, t) : is_color_cut(cg, colors);
  };

  const int m = static_cast<int>(used.size());
  for (int k = 0; k <= m; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      std::vector<int> colors(k);
      for (int i = 0; i < k; ++i) colors[i] = used[idx[i]];
      if (feasible(colors)) {
        ColorCutResult result;
        result.mode = mode;
        result.method = CutMethod::exact;
        result.colors = colors;
        result.value = k;
        result.lower_bound = k;
        result.witness_cut = mode == CutMode::st ? st_cut_witness(cg, colors, s, t)
                                                 : global_cut_witness(cg, colors);
        return result;
      }
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == m - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  fail(Errc::invalid_argument, "exhausted color subsets without finding a cut");
}

namespace {

// LP-format emission; term lists wrap every eight entries so long objective
// and sum rows stay within classic line limits.
void emit_terms(std::ostream& out, const std::string& head,
                const std::vector<std::string>& terms, const std::string& tail) {
  out << head;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i > 0 && i % 8 == 0) out << "\n      ";
    if (i > 0) out << " ";
    out << terms[i];
  }
  out << tail << "\n";
}

std::vector<std::string> signed_terms(const std::string& var, int n, bool negative, bool lead) {
  std::vector<std::string> terms;
  for (int v = 0; v < n; ++v) {
    std::string t = negative ? "- " : (v == 0 && lead ? "" : "+ ");
    terms.push_back(t + var + std::to_string(v));
  }
  return terms;
}

}  // namespace

void export_milp(const ColoredGraph& cg, CutMode mode, int s, int t, std::ostream& out) {
  cg.validate();
  const int n = cg.graph.node_count();
  const int nc = cg.color_count;
  require(n >= 1 && nc >= 1, Errc::too_small, "nothing to export");
  if (mode == CutMode::st) validate_st_query(cg, s, t);
  auto edges = cg.graph.edges();

  out << "\\ minimum color node cut (" << (mode == CutMode::st ? "st" : "global") << " form)\n";
  out << "\\ nodes " << n << " edges " << edges.size() << " colors " << nc;
  if (mode == CutMode::st) out << " source " << s << " target " << t;
  if (mode == CutMode::global) out << " bigm " << 2 * n;
  out << "\n";

  out << "Minimize\n";
  emit_terms(out, " obj: ", signed_terms("c", nc, false, true), "");

  out << "Subject To\n";
  for (size_t k = 0; k < edges.size(); ++k) {
    auto [i, j] = edges[k];
    out << " e" << k << "a: p" << i << " - p" << j << " + y" << i << " + y" << j << " >= 0\n";
    out << " e" << k << "b: p" << i << " - p" << j << " - y" << i << " - y" << j << " <= 0\n";
  }
  if (mode == CutMode::st) {
    out << " ps: p" << s << " = 0\n";
    out << " pt: p" << t << " = 1\n";
    out << " ys: y" << s << " = 0\n";
    out << " yt: y" << t << " = 0\n";
  } else {
    const int big_m = 2 * n;
    for (int v = 0; v < n; ++v) out << " d" << v << ": p" << v << " - y" << v << " >= 0\n";
    auto p_terms = signed_terms("p", n, false, true);
    auto y_neg = signed_terms("y", n, true, false);
    std::vector<std::string> g1 = p_terms;
    g1.insert(g1.end(), y_neg.begin(), y_neg.end());
    g1.push_back("+ " + std::to_string(big_m) + " z");
    emit_terms(out, " g1: ", g1, " >= 1");
    std::vector<std::string> g2 = p_terms;
    g2.push_back("- " + std::to_string(big_m) + " z");
    emit_terms(out, " g2: ", g2, " <= " + std::to_string(n - 1));
    std::vector<std::string> g3 = signed_terms("y", n, false, true);
    g3.push_back("- " + std::to_string(big_m) + " z");
    emit_terms(out, " g3: ", g3, " >= " + std::to_string(n - 1 - big_m));
  }
  for (int v = 0; v < n; ++v)
    out << " m" << v << ": y" << v << " - c" << cg.color_of[v] << " <= 0\n";

  out << "Binary\n";
  for (int r = 0; r < nc; ++r) out << " c" << r << "\n";
  if (mode == CutMode::global) {
    for (int v = 0; v < n; ++v) out << " p" << v << "\n";
    for (int v = 0; v < n; ++v) out << " y" << v << "\n";
    out << " z\n";
  }
  out << "End\n";
}

void export_milp_file(const ColoredGraph& cg, CutMode mode, int s, int t,
                      const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Errc::io, "cannot open " + path + " for writing");
  export_milp(cg, mode, s, t, out);
  require(out.good(), Errc::io, "failed writing " + path);
}

}  // namespace interdep
