#include "interdep.h"

#include <exception>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "core/assign.hpp"
#include "core/colored.hpp"
#include "core/error.hpp"
#include "core/exact.hpp"
#include "core/experiments.hpp"
#include "core/graph.hpp"
#include "core/io.hpp"
#include "core/poly.hpp"

using namespace interdep;

struct itd_graph {
  Graph g;
};
struct itd_colored {
  ColoredGraph cg;
};
struct itd_system {
  DependencySystem sys;
};
struct itd_cut {
  ColorCutResult r;
};
struct itd_plan {
  AssignmentPlan p;
};
struct itd_report {
  ExperimentReport rep;
  std::string text;
  std::string csv;
};

namespace {

thread_local std::string t_last_error;

itd_status map_errc(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return ITD_EINVAL;
    case Errc::same_node: return ITD_ESAME_NODE;
    case Errc::adjacent_pair: return ITD_EADJACENT;
    case Errc::too_small: return ITD_ETOO_SMALL;
    case Errc::disconnected: return ITD_EDISCONNECTED;
    case Errc::classes_not_connected: return ITD_ECLASSES;
    case Errc::stub_mismatch: return ITD_ESTUBS;
    case Errc::empty_set: return ITD_EEMPTY_SET;
    case Errc::limit_exceeded: return ITD_ELIMIT;
    case Errc::parse: return ITD_EPARSE;
    case Errc::io: return ITD_EIO;
    case Errc::give_up: return ITD_EGIVE_UP;
  }
  return ITD_EUNKNOWN;
}

template <typename Fn>
itd_status guarded(Fn&& fn) noexcept {
  try {
    t_last_error.clear();
    fn();
    return ITD_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return ITD_ENOMEM;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return ITD_EUNKNOWN;
  }
}

itd_status bad_arg(const char* msg) {
  t_last_error = msg;
  return ITD_EINVAL;
}

SolveOptions to_options(const itd_solve_options* opts) {
  SolveOptions out;
  if (opts) {
    out.timeout_s = opts->timeout_s;
    out.workers = opts->workers;
  }
  return out;
}

bool valid_mode(int mode) { return mode == ITD_CUT_GLOBAL || mode == ITD_CUT_ST; }

template <typename Make>
itd_status bidir_common(const itd_graph* g1, const itd_graph* g2, itd_plan** plan1,
                        itd_plan** plan2, itd_system** sys, Make&& make) {
  if (!g1 || !g2) return bad_arg("null graph handle");
  return guarded([&] {
    BidirPlans plans = make();
    if (sys) *sys = new itd_system{to_system(g1->g, g2->g, plans)};
    if (plan1) *plan1 = new itd_plan{std::move(plans.plan1)};
    if (plan2) *plan2 = new itd_plan{std::move(plans.plan2)};
  });
}

}  // namespace

extern "C" {

const char* itd_last_error(void) { return t_last_error.c_str(); }

const char* itd_status_name(itd_status status) {
  switch (status) {
    case ITD_OK: return "ok";
    case ITD_EINVAL: return "invalid argument";
    case ITD_ESAME_NODE: return "same node";
    case ITD_EADJACENT: return "adjacent pair";
    case ITD_ETOO_SMALL: return "too small";
    case ITD_EDISCONNECTED: return "disconnected";
    case ITD_ECLASSES: return "color classes not connected";
    case ITD_ESTUBS: return "stub mismatch";
    case ITD_EEMPTY_SET: return "empty set";
    case ITD_ELIMIT: return "limit exceeded";
    case ITD_EPARSE: return "parse error";
    case ITD_EIO: return "io error";
    case ITD_EGIVE_UP: return "gave up";
    case ITD_ENOMEM: return "out of memory";
    case ITD_EUNKNOWN: return "unknown error";
  }
  return "unknown error";
}

const char* itd_version(void) { return "1.0.0"; }

/* ---- graphs ---------------------------------------------------------- */

itd_status itd_graph_create(int node_count, itd_graph** out) {
  if (!out) return bad_arg("null output handle");
  return guarded([&] {
    require(node_count >= 0, Errc::invalid_argument, "node count must be non-negative");
    *out = new itd_graph{Graph(node_count)};
  });
}

itd_status itd_graph_add_edge(itd_graph* g, int u, int v) {
  if (!g) return bad_arg("null graph handle");
  return guarded([&] { g->g.add_edge(u, v); });
}

int itd_graph_node_count(const itd_graph* g) { return g ? g->g.node_count() : -1; }

int itd_graph_edge_count(const itd_graph* g) { return g ? g->g.edge_count() : -1; }

int itd_graph_has_edge(const itd_graph* g, int u, int v) {
  if (!g || u < 0 || v < 0 || u >= g->g.node_count() || v >= g->g.node_count()) return 0;
  return g->g.has_edge(u, v) ? 1 : 0;
}

void itd_graph_destroy(itd_graph* g) { delete g; }

itd_status itd_gen_erdos_renyi(int n, double p, uint64_t seed, itd_graph** out) {
  if (!out) return bad_arg("null output handle");
  return guarded([&] { *out = new itd_graph{gen_erdos_renyi(n, p, seed)}; });
}

itd_status itd_gen_erdos_renyi_connected(int n, double p, uint64_t seed, int max_attempts,
                                         int* retries, itd_graph** out) {
  if (!out) return bad_arg("null output handle");
  return guarded([&] {
    auto sample = gen_erdos_renyi_connected(n, p, seed, max_attempts);
    if (retries) *retries = sample.retries;
    *out = new itd_graph{std::move(sample.graph)};
  });
}

itd_status itd_node_connectivity(const itd_graph* g, int* value) {
  if (!g || !value) return bad_arg("null argument");
  return guarded([&] { *value = node_connectivity(g->g).value; });
}

itd_status itd_st_node_connectivity(const itd_graph* g, int s, int t, int* value) {
  if (!g || !value) return bad_arg("null argument");
  return guarded([&] { *value = st_node_connectivity(g->g, s, t).value; });
}

/* ---- colored graphs --------------------------------------------------- */

itd_status itd_colored_create(const itd_graph* g, const int* colors, int color_count,
                              itd_colored** out) {
  if (!g || !out) return bad_arg("null argument");
  if (!colors && g->g.node_count() > 0) return bad_arg("null color array");
  return guarded([&] {
    ColoredGraph cg;
    cg.graph = g->g;
    cg.color_of.assign(colors, colors + g->g.node_count());
    cg.color_count = color_count;
    cg.validate();
    *out = new itd_colored{std::move(cg)};
  });
}

itd_status itd_colored_distinct(const itd_graph* g, itd_colored** out) {
  if (!g || !out) return bad_arg("null argument");
  return guarded([&] {
    ColoredGraph cg;
    cg.graph = g->g;
    cg.color_of.resize(g->g.node_count());
    for (int v = 0; v < g->g.node_count(); ++v) cg.color_of[v] = v;
    cg.color_count = g->g.node_count();
    cg.validate();
    *out = new itd_colored{std::move(cg)};
  });
}

int itd_colored_node_count(const itd_colored* cg) {
  return cg ? cg->cg.graph.node_count() : -1;
}

int itd_colored_color_count(const itd_colored* cg) { return cg ? cg->cg.color_count : -1; }

int itd_colored_color_of(const itd_colored* cg, int v) {
  if (!cg || v < 0 || v >= cg->cg.graph.node_count()) return -1;
  return cg->cg.color_of[v];
}

itd_status itd_colored_get_graph(const itd_colored* cg, itd_graph** out) {
  if (!cg || !out) return bad_arg("null argument");
  return guarded([&] { *out = new itd_graph{cg->cg.graph}; });
}

itd_status itd_colored_read_file(const char* path, itd_colored** out) {
  if (!path || !out) return bad_arg("null argument");
  return guarded([&] {
    auto model = read_model_file(path);
    auto* cg = std::get_if<ColoredGraph>(&model);
    require(cg != nullptr, Errc::parse, std::string(path) + " holds a dependency system");
    *out = new itd_colored{std::move(*cg)};
  });
}

itd_status itd_colored_write_file(const itd_colored* cg, const char* path) {
  if (!cg || !path) return bad_arg("null argument");
  return guarded([&] { write_colored_graph_file(cg->cg, path); });
}

void itd_colored_destroy(itd_colored* cg) { delete cg; }

/* ---- dependency systems ----------------------------------------------- */

itd_status itd_system_create(const itd_graph* demand, int supply_node_count, itd_system** out) {
  if (!demand || !out) return bad_arg("null argument");
  return guarded([&] {
    require(supply_node_count >= 1, Errc::invalid_argument,
            "need at least one supply node");
    DependencySystem sys;
    sys.demand = demand->g;
    sys.supply_node_count = supply_node_count;
    sys.supplies_of.resize(demand->g.node_count());
    *out = new itd_system{std::move(sys)};
  });
}

itd_status itd_system_add_supply(itd_system* sys, int demand_node, int supply_node) {
  if (!sys) return bad_arg("null system handle");
  return guarded([&] {
    require(demand_node >= 0 && demand_node < sys->sys.demand.node_count(),
            Errc::invalid_argument, "demand node out of range");
    require(supply_node >= 0 && supply_node < sys->sys.supply_node_count,
            Errc::invalid_argument, "supply node out of range");
    sys->sys.supplies_of[demand_node].push_back(supply_node);
    sys->sys.canonicalize();
  });
}

itd_status itd_system_set_supply_graph(itd_system* sys, const itd_graph* g) {
  if (!sys || !g) return bad_arg("null argument");
  return guarded([&] {
    require(g->g.node_count() == sys->sys.supply_node_count, Errc::invalid_argument,
            "supply graph size disagrees with supply node count");
    sys->sys.supply_graph = g->g;
    sys->sys.direction = Direction::bidirectional;
  });
}

itd_status itd_system_validate(const itd_system* sys) {
  if (!sys) return bad_arg("null system handle");
  return guarded([&] { sys->sys.validate(); });
}

int itd_system_demand_count(const itd_system* sys) {
  return sys ? sys->sys.demand.node_count() : -1;
}

int itd_system_supply_count(const itd_system* sys) {
  return sys ? sys->sys.supply_node_count : -1;
}

int itd_system_is_bidirectional(const itd_system* sys) {
  return sys && sys->sys.direction == Direction::bidirectional ? 1 : 0;
}

int itd_system_supply_list_size(const itd_system* sys, int demand_node) {
  if (!sys || demand_node < 0 ||
      demand_node >= static_cast<int>(sys->sys.supplies_of.size()))
    return -1;
  return static_cast<int>(sys->sys.supplies_of[demand_node].size());
}

int itd_system_supply_at(const itd_system* sys, int demand_node, int i) {
  int size = itd_system_supply_list_size(sys, demand_node);
  if (size < 0 || i < 0 || i >= size) return -1;
  return sys->sys.supplies_of[demand_node][i];
}

itd_status itd_system_reverse(const itd_system* sys, itd_system** out) {
  if (!sys || !out) return bad_arg("null argument");
  return guarded([&] { *out = new itd_system{reversed(sys->sys)}; });
}

itd_status itd_system_transform(const itd_system* sys, itd_colored** out) {
  if (!sys || !out) return bad_arg("null argument");
  return guarded([&] { *out = new itd_colored{transform(sys->sys).colored}; });
}

itd_status itd_system_read_file(const char* path, itd_system** out) {
  if (!path || !out) return bad_arg("null argument");
  return guarded([&] {
    auto model = read_model_file(path);
    auto* sys = std::get_if<DependencySystem>(&model);
    require(sys != nullptr, Errc::parse, std::string(path) + " holds a colored graph");
    *out = new itd_system{std::move(*sys)};
  });
}

itd_status itd_system_write_file(const itd_system* sys, const char* path) {
  if (!sys || !path) return bad_arg("null argument");
  return guarded([&] { write_system_file(sys->sys, path); });
}

void itd_system_destroy(itd_system* sys) { delete sys; }

itd_status itd_model_read_file(const char* path, itd_colored** cg_out, itd_system** sys_out) {
  if (!path) return bad_arg("null path");
  if (cg_out) *cg_out = nullptr;
  if (sys_out) *sys_out = nullptr;
  return guarded([&] {
    auto model = read_model_file(path);
    if (auto* cg = std::get_if<ColoredGraph>(&model)) {
      require(cg_out != nullptr, Errc::invalid_argument,
              std::string(path) + " holds a colored graph, which the caller rejects");
      *cg_out = new itd_colored{std::move(*cg)};
    } else {
      auto& sys = std::get<DependencySystem>(model);
      require(sys_out != nullptr, Errc::invalid_argument,
              std::string(path) + " holds a dependency system, which the caller rejects");
      *sys_out = new itd_system{std::move(sys)};
    }
  });
}

/* ---- minimum color cuts ------------------------------------------------ */

void itd_solve_options_init(itd_solve_options* opts) {
  if (!opts) return;
  SolveOptions defaults;
  opts->timeout_s = defaults.timeout_s;
  opts->workers = defaults.workers;
}

itd_status itd_min_color_st_cut(const itd_colored* cg, int s, int t,
                                const itd_solve_options* opts, itd_cut** out) {
  if (!cg || !out) return bad_arg("null argument");
  return guarded([&] {
    *out = new itd_cut{min_color_st_cut_exact(cg->cg, s, t, to_options(opts))};
  });
}

itd_status itd_min_color_cut(const itd_colored* cg, const itd_solve_options* opts,
                             itd_cut** out) {
  if (!cg || !out) return bad_arg("null argument");
  return guarded([&] { *out = new itd_cut{min_color_cut_exact(cg->cg, to_options(opts))}; });
}

itd_status itd_min_supply_cut(const itd_system* sys, const itd_solve_options* opts,
                              itd_cut** out) {
  if (!sys || !out) return bad_arg("null argument");
  return guarded([&] { *out = new itd_cut{min_supply_cut_exact(sys->sys, to_options(opts))}; });
}

itd_status itd_brute_min_cut(const itd_colored* cg, itd_cut_mode mode, int s, int t,
                             int color_limit, itd_cut** out) {
  if (!cg || !out) return bad_arg("null argument");
  if (!valid_mode(mode)) return bad_arg("mode must be ITD_CUT_GLOBAL or ITD_CUT_ST");
  return guarded([&] {
    int limit = color_limit > 0 ? color_limit : 20;
    auto cpp_mode = mode == ITD_CUT_ST ? CutMode::st : CutMode::global;
    *out = new itd_cut{brute_force_min_cut(cg->cg, cpp_mode, s, t, limit)};
  });
}

itd_status itd_min_color_cut_connected(const itd_colored* cg, itd_cut_mode mode, int s, int t,
                                       itd_cut** out) {
  if (!cg || !out) return bad_arg("null argument");
  if (!valid_mode(mode)) return bad_arg("mode must be ITD_CUT_GLOBAL or ITD_CUT_ST");
  return guarded([&] {
    *out = new itd_cut{mode == ITD_CUT_ST ? min_color_st_cut_connected(cg->cg, s, t)
                                          : min_color_cut_connected(cg->cg)};
  });
}

itd_status itd_min_color_cut_qapprox(const itd_colored* cg, itd_cut_mode mode, int s, int t,
                                     itd_cut** out) {
  if (!cg || !out) return bad_arg("null argument");
  if (!valid_mode(mode)) return bad_arg("mode must be ITD_CUT_GLOBAL or ITD_CUT_ST");
  return guarded([&] {
    auto cpp_mode = mode == ITD_CUT_ST ? CutMode::st : CutMode::global;
    *out = new itd_cut{min_color_cut_qapprox(cg->cg, cpp_mode, s, t)};
  });
}

int itd_cut_value(const itd_cut* cut) { return cut ? cut->r.value : -1; }

int itd_cut_lower_bound(const itd_cut* cut) { return cut ? cut->r.lower_bound : -1; }

int itd_cut_mode_of(const itd_cut* cut) { return cut ? static_cast<int>(cut->r.mode) : -1; }

int itd_cut_method_of(const itd_cut* cut) {
  return cut ? static_cast<int>(cut->r.method) : -1;
}

int itd_cut_q(const itd_cut* cut) { return cut ? cut->r.q : -1; }

int itd_cut_color_count(const itd_cut* cut) {
  return cut ? static_cast<int>(cut->r.colors.size()) : -1;
}

int itd_cut_color(const itd_cut* cut, int i) {
  if (!cut || i < 0 || i >= static_cast<int>(cut->r.colors.size())) return -1;
  return cut->r.colors[i];
}

int itd_cut_witness_size(const itd_cut* cut) {
  return cut ? static_cast<int>(cut->r.witness_cut.nodes.size()) : -1;
}

int itd_cut_witness_node(const itd_cut* cut, int i) {
  if (!cut || i < 0 || i >= static_cast<int>(cut->r.witness_cut.nodes.size())) return -1;
  return cut->r.witness_cut.nodes[i];
}

void itd_cut_destroy(itd_cut* cut) { delete cut; }

itd_status itd_export_milp(const itd_colored* cg, itd_cut_mode mode, int s, int t,
                           const char* path) {
  if (!cg || !path) return bad_arg("null argument");
  if (!valid_mode(mode)) return bad_arg("mode must be ITD_CUT_GLOBAL or ITD_CUT_ST");
  return guarded([&] {
    auto cpp_mode = mode == ITD_CUT_ST ? CutMode::st : CutMode::global;
    export_milp_file(cg->cg, cpp_mode, s, t, path);
  });
}

/* ---- interdependence assignments --------------------------------------- */

itd_status itd_assign_path_based(const itd_graph* g, int s, int t, int n_c, itd_plan** out) {
  if (!g || !out) return bad_arg("null argument");
  return guarded([&] { *out = new itd_plan{assign_path_based(g->g, s, t, n_c)}; });
}

itd_status itd_assign_cds_based(const itd_graph* g, int n_c, itd_plan** out) {
  if (!g || !out) return bad_arg("null argument");
  return guarded([&] { *out = new itd_plan{assign_cds_based(g->g, n_c)}; });
}

itd_status itd_assign_random(const itd_graph* g, int n_c, uint64_t seed, itd_plan** out) {
  if (!g || !out) return bad_arg("null argument");
  return guarded([&] { *out = new itd_plan{assign_random(g->g, n_c, seed)}; });
}

itd_status itd_assign_bidirectional_cds(const itd_graph* g1, const itd_graph* g2, int ns1,
                                        int ns2, itd_plan** plan1, itd_plan** plan2,
                                        itd_system** sys) {
  return bidir_common(g1, g2, plan1, plan2, sys, [&] {
    return assign_bidirectional_cds(g1->g, g2->g, ns1, ns2);
  });
}

itd_status itd_assign_bidirectional_random(const itd_graph* g1, const itd_graph* g2, int ns1,
                                           int ns2, uint64_t seed, itd_plan** plan1,
                                           itd_plan** plan2, itd_system** sys) {
  return bidir_common(g1, g2, plan1, plan2, sys, [&] {
    return assign_bidirectional_random(g1->g, g2->g, ns1, ns2, seed);
  });
}

int itd_plan_kind_of(const itd_plan* plan) {
  return plan ? static_cast<int>(plan->p.kind) : -1;
}

int itd_plan_guarantee(const itd_plan* plan) {
  return plan ? plan->p.guaranteed_lower_bound : -1;
}

int itd_plan_color_count(const itd_plan* plan) { return plan ? plan->p.color_count : -1; }

int itd_plan_node_count(const itd_plan* plan) {
  return plan ? static_cast<int>(plan->p.supplies_of.size()) : -1;
}

int itd_plan_supply_list_size(const itd_plan* plan, int v) {
  if (!plan || v < 0 || v >= static_cast<int>(plan->p.supplies_of.size())) return -1;
  return static_cast<int>(plan->p.supplies_of[v].size());
}

int itd_plan_supply_at(const itd_plan* plan, int v, int i) {
  int size = itd_plan_supply_list_size(plan, v);
  if (size < 0 || i < 0 || i >= size) return -1;
  return plan->p.supplies_of[v][i];
}

itd_status itd_plan_coloring(const itd_graph* g, const itd_plan* plan, itd_colored** out) {
  if (!g || !plan || !out) return bad_arg("null argument");
  return guarded([&] { *out = new itd_colored{plan_coloring(g->g, plan->p)}; });
}

void itd_plan_destroy(itd_plan* plan) { delete plan; }

/* ---- hardness gadgets --------------------------------------------------- */

itd_status itd_gen_vertex_cover_gadget(const itd_graph* instance, itd_colored** out) {
  if (!instance || !out) return bad_arg("null argument");
  return guarded([&] { *out = new itd_colored{gen_vertex_cover_gadget(instance->g)}; });
}

itd_status itd_gen_hitting_set_gadget(int universe, const int* elements, const int* offsets,
                                      int set_count, int* s, int* t, itd_colored** out) {
  if (!out) return bad_arg("null output handle");
  if (set_count < 0) return bad_arg("negative set count");
  if (set_count > 0 && !offsets) return bad_arg("null offsets");
  return guarded([&] {
    std::vector<std::vector<int>> sets(set_count);
    for (int i = 0; i < set_count; ++i) {
      require(offsets[i] >= 0 && offsets[i] <= offsets[i + 1], Errc::invalid_argument,
              "offsets must be non-decreasing and non-negative");
      require(offsets[i] == offsets[i + 1] || elements != nullptr, Errc::invalid_argument,
              "null elements with non-empty sets");
      sets[i].assign(elements + offsets[i], elements + offsets[i + 1]);
    }
    auto gadget = gen_hitting_set_gadget(universe, sets);
    if (s) *s = gadget.s;
    if (t) *t = gadget.t;
    *out = new itd_colored{std::move(gadget.colored)};
  });
}

/* ---- experiment harness ------------------------------------------------- */

void itd_table1_config_init(itd_table1_config* cfg) {
  if (!cfg) return;
  ExperimentConfig defaults;
  cfg->n1 = defaults.n1;
  cfg->n2 = defaults.n2;
  cfg->p1 = defaults.p1;
  cfg->p2 = defaults.p2;
  cfg->ns1 = defaults.ns1;
  cfg->ns2 = defaults.ns2;
  cfg->instances = defaults.instances;
  cfg->seed = defaults.seed;
  cfg->solver_timeout_s = defaults.solver_timeout_s;
  cfg->workers = defaults.workers;
  cfg->run_cds = defaults.run_cds ? 1 : 0;
  cfg->run_random = defaults.run_random ? 1 : 0;
}

itd_status itd_table1_run(const itd_table1_config* cfg, itd_report** out) {
  if (!cfg || !out) return bad_arg("null argument");
  return guarded([&] {
    ExperimentConfig c;
    c.n1 = cfg->n1;
    c.n2 = cfg->n2;
    c.p1 = cfg->p1;
    c.p2 = cfg->p2;
    c.ns1 = cfg->ns1;
    c.ns2 = cfg->ns2;
    c.instances = cfg->instances;
    c.seed = cfg->seed;
    c.solver_timeout_s = cfg->solver_timeout_s;
    c.workers = cfg->workers;
    c.run_cds = cfg->run_cds != 0;
    c.run_random = cfg->run_random != 0;
    auto report = new itd_report{run_table1(c), {}, {}};
    report->text = report->rep.to_text();
    report->csv = report->rep.to_csv();
    *out = report;
  });
}

const char* itd_report_text(const itd_report* report) {
  return report ? report->text.c_str() : "";
}

const char* itd_report_csv(const itd_report* report) {
  return report ? report->csv.c_str() : "";
}

int itd_report_timeout_cells(const itd_report* report) {
  return report ? report->rep.timeout_cells() : -1;
}

int itd_report_counted_cells(const itd_report* report) {
  return report ? report->rep.counted_cells() : -1;
}

double itd_report_wall_seconds(const itd_report* report) {
  return report ? report->rep.wall_s : -1.0;
}

void itd_report_destroy(itd_report* report) { delete report; }

}  // extern "C"
