#include "experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>

#include "assign.hpp"
#include "detail.hpp"
#include "error.hpp"
#include "rng.hpp"

namespace interdep {

Graph gen_erdos_renyi(int n, double p, std::uint64_t seed) {
  require(n >= 0, Errc::invalid_argument, "node count must be non-negative");
  require(p >= 0.0 && p <= 1.0, Errc::invalid_argument, "edge probability must be in [0, 1]");
  Rng rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_unit() < p) g.add_edge(u, v);
  return g;
}

ConnectedSample gen_erdos_renyi_connected(int n, double p, std::uint64_t seed,
                                          int max_attempts) {
  require(max_attempts >= 1, Errc::invalid_argument, "need at least one attempt");
  ConnectedSample out;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    out.graph = gen_erdos_renyi(n, p, Rng::derive(seed, static_cast<std::uint64_t>(attempt)));
    if (is_connected(out.graph)) {
      out.retries = attempt;
      return out;
    }
  }
  fail(Errc::give_up, "no connected sample in " + std::to_string(max_attempts) +
                          " draws (n=" + std::to_string(n) + ")");
}

ColoredGraph gen_vertex_cover_gadget(const Graph& instance) {
  auto edges = instance.edges();
  require(!edges.empty(), Errc::invalid_argument, "instance needs at least one edge");
  // pad to an even count by restating one constraint on fresh nodes
  if (edges.size() % 2 != 0) edges.push_back(edges.back());
  const int m = static_cast<int>(edges.size());
  const int half = m / 2;

  // cliques sit at offsets 0, m, 2m, 3m; within a clique, nodes 0..half-1
  // face the previous clique and half..m-1 face the next one
  Graph g(4 * m);
  for (int base = 0; base < 4 * m; base += m)
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) g.add_edge(base + i, base + j);
  for (int ring = 0; ring < 4; ++ring) {
    int from = ring * m, to = ((ring + 1) % 4) * m;
    for (int i = 0; i < half; ++i) g.add_edge(from + half + i, to + i);
  }

  // the matchings between cliques 1-2 and 3-4 carry the instance edges; the
  // other two matchings keep fresh colors so their nodes never help a cut
  ColoredGraph cg;
  cg.color_of.assign(4 * m, -1);
  for (int i = 0; i < half; ++i) {
    cg.color_of[half + i] = edges[i].first;
    cg.color_of[m + i] = edges[i].second;
    cg.color_of[2 * m + half + i] = edges[half + i].first;
    cg.color_of[3 * m + i] = edges[half + i].second;
  }
  int fresh = instance.node_count();
  for (auto& c : cg.color_of)
    if (c < 0) c = fresh++;
  cg.graph = std::move(g);
  cg.color_count = fresh;
  cg.validate();
  return cg;
}

HittingSetGadget gen_hitting_set_gadget(int universe,
                                        const std::vector<std::vector<int>>& sets) {
  require(universe >= 1, Errc::invalid_argument, "universe must have at least one element");
  require(!sets.empty(), Errc::empty_set, "need at least one set");

  std::vector<std::vector<int>> chains;
  int internal = 0;
  for (const auto& raw : sets) {
    auto set = raw;
    detail::sort_unique(set);
    require(!set.empty(), Errc::empty_set, "sets must be non-empty");
    require(set.front() >= 1 && set.back() <= universe, Errc::invalid_argument,
            "elements must lie in 1..universe");
    internal += static_cast<int>(set.size());
    chains.push_back(std::move(set));
  }

  HittingSetGadget out;
  Graph g(2 + internal);
  std::vector<int> colors(2 + internal, 0);  // terminals keep color 0
  int next = 2;
  for (const auto& chain : chains) {
    int prev = out.s;
    for (int element : chain) {
      colors[next] = element;
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, out.t);
  }
  out.colored.graph = std::move(g);
  out.colored.color_of = std::move(colors);
  out.colored.color_count = universe + 1;
  out.colored.validate();
  return out;
}

namespace {

CellValue to_cell(const ColorCutResult& res) {
  CellValue cell;
  cell.value = res.value;
  cell.lower_bound = res.lower_bound;
  cell.timed_out = res.method == CutMethod::bound;
  return cell;
}

InstanceRow run_instance(const ExperimentConfig& cfg, int index) {
  const std::uint64_t base = static_cast<std::uint64_t>(index) * 4;
  auto s1 = gen_erdos_renyi_connected(cfg.n1, cfg.p1, Rng::derive(cfg.seed, base));
  auto s2 = gen_erdos_renyi_connected(cfg.n2, cfg.p2, Rng::derive(cfg.seed, base + 1));

  InstanceRow row;
  row.index = index;
  row.retries1 = s1.retries;
  row.retries2 = s2.retries;
  row.k1 = node_connectivity(s1.graph).value;
  row.k2 = node_connectivity(s2.graph).value;
  row.cap1 = std::min(row.k1 * cfg.ns1, cfg.n2);
  row.cap2 = std::min(row.k2 * cfg.ns2, cfg.n1);

  SolveOptions opts;
  opts.timeout_s = cfg.solver_timeout_s;

  if (cfg.run_cds) {
    auto plans = assign_bidirectional_cds(s1.graph, s2.graph, cfg.ns1, cfg.ns2);
    auto sys = to_system(s1.graph, s2.graph, plans);
    row.cds1 = to_cell(min_supply_cut_exact(sys, opts));
    row.cds2 = to_cell(min_supply_cut_exact(reversed(sys), opts));
  }
  if (cfg.run_random) {
    auto plans = assign_bidirectional_random(s1.graph, s2.graph, cfg.ns1, cfg.ns2,
                                             Rng::derive(cfg.seed, base + 2));
    auto sys = to_system(s1.graph, s2.graph, plans);
    row.rand1 = to_cell(min_supply_cut_exact(sys, opts));
    row.rand2 = to_cell(min_supply_cut_exact(reversed(sys), opts));
  }
  return row;
}

std::string fixed2(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string cell_text(const CellValue& cell, bool enabled) {
  if (!enabled) return "-";
  if (!cell.timed_out) return std::to_string(cell.value);
  return std::to_string(cell.lower_bound) + ".." + std::to_string(cell.value);
}

void cell_csv(std::ostringstream& out, const CellValue& cell, bool enabled) {
  if (enabled)
    out << ',' << cell.value << ',' << cell.lower_bound << ',' << (cell.timed_out ? 1 : 0);
  else
    out << ",,,";
}

}  // namespace

ReportMeans ExperimentReport::means() const {
  ReportMeans m;
  if (rows.empty()) return m;
  for (const auto& row : rows) {
    m.k1 += row.k1;
    m.k2 += row.k2;
    m.cap1 += row.cap1;
    m.cap2 += row.cap2;
    m.cds1 += row.cds1.value;
    m.cds2 += row.cds2.value;
    m.rand1 += row.rand1.value;
    m.rand2 += row.rand2.value;
  }
  const double n = static_cast<double>(rows.size());
  for (double* field : {&m.k1, &m.cap1, &m.cds1, &m.rand1, &m.k2, &m.cap2, &m.cds2, &m.rand2})
    *field /= n;
  return m;
}

int ExperimentReport::timeout_cells() const {
  int count = 0;
  for (const auto& row : rows)
    for (const CellValue* cell : {&row.cds1, &row.cds2, &row.rand1, &row.rand2})
      count += cell->timed_out ? 1 : 0;
  return count;
}

int ExperimentReport::counted_cells() const {
  int per_row = (config.run_cds ? 2 : 0) + (config.run_random ? 2 : 0);
  return per_row * static_cast<int>(rows.size());
}

std::string ExperimentReport::to_text() const {
  std::ostringstream out;
  out << "config n1=" << config.n1 << " n2=" << config.n2 << " p1=" << fixed2(config.p1)
      << " p2=" << fixed2(config.p2) << " ns1=" << config.ns1 << " ns2=" << config.ns2
      << " instances=" << config.instances << " seed=" << config.seed << '\n';
  out << "inst k1 cap1 cds1 rand1 k2 cap2 cds2 rand2 retries\n";
  for (const auto& row : rows) {
    out << row.index << ' ' << row.k1 << ' ' << row.cap1 << ' '
        << cell_text(row.cds1, config.run_cds) << ' ' << cell_text(row.rand1, config.run_random)
        << ' ' << row.k2 << ' ' << row.cap2 << ' ' << cell_text(row.cds2, config.run_cds) << ' '
        << cell_text(row.rand2, config.run_random) << ' ' << row.retries1 << '+' << row.retries2
        << '\n';
  }
  auto m = means();
  out << "mean k1=" << fixed2(m.k1) << " cap1=" << fixed2(m.cap1)
      << " cds1=" << (config.run_cds ? fixed2(m.cds1) : "-")
      << " rand1=" << (config.run_random ? fixed2(m.rand1) : "-") << '\n';
  out << "mean k2=" << fixed2(m.k2) << " cap2=" << fixed2(m.cap2)
      << " cds2=" << (config.run_cds ? fixed2(m.cds2) : "-")
      << " rand2=" << (config.run_random ? fixed2(m.rand2) : "-") << '\n';
  out << "timeouts " << timeout_cells() << '/' << counted_cells() << '\n';
  return out.str();
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream out;
  out << "inst,k1,cap1,cds1,cds1_lb,cds1_to,rand1,rand1_lb,rand1_to"
         ",k2,cap2,cds2,cds2_lb,cds2_to,rand2,rand2_lb,rand2_to,retries1,retries2\n";
  for (const auto& row : rows) {
    out << row.index << ',' << row.k1 << ',' << row.cap1;
    cell_csv(out, row.cds1, config.run_cds);
    cell_csv(out, row.rand1, config.run_random);
    out << ',' << row.k2 << ',' << row.cap2;
    cell_csv(out, row.cds2, config.run_cds);
    cell_csv(out, row.rand2, config.run_random);
    out << ',' << row.retries1 << ',' << row.retries2 << '\n';
  }
  return out.str();
}

ExperimentReport run_table1(const ExperimentConfig& cfg) {
  require(cfg.n1 >= 2 && cfg.n2 >= 1, Errc::invalid_argument, "graphs are too small");
  require(cfg.ns1 >= 1 && cfg.ns2 >= 1, Errc::invalid_argument,
          "supply counts must be positive");
  require(cfg.instances >= 1, Errc::invalid_argument, "need at least one instance");
  require(static_cast<long long>(cfg.n1) * cfg.ns1 == static_cast<long long>(cfg.n2) * cfg.ns2,
          Errc::stub_mismatch, "bidirectional runs need n1*ns1 == n2*ns2");

  const auto started = std::chrono::steady_clock::now();
  ExperimentReport report;
  report.config = cfg;
  report.rows.resize(cfg.instances);

  std::atomic<int> cursor{0};
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      int i = cursor.fetch_add(1);
      if (i >= cfg.instances) return;
      try {
        report.rows[i] = run_instance(cfg, i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  const int workers = std::max(1, cfg.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  report.wall_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace interdep
