// Command-line front end over the shared-library C interface. Every model
// touch goes through interdep.h; nothing here links the C++ core directly.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "interdep.h"

namespace {

int exit_code = 0;

void check(itd_status st) {
  if (st == ITD_OK) return;
  const char* detail = itd_last_error();
  std::cerr << "error: " << (*detail ? detail : itd_status_name(st)) << "\n";
  std::exit(1);
}

[[noreturn]] void die(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(1);
}

template <typename T, void (*Del)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() {
    if (ptr) Del(ptr);
  }
  T** slot() { return &ptr; }
  T* get() const { return ptr; }
  explicit operator bool() const { return ptr != nullptr; }
};

using GraphHandle = Handle<itd_graph, itd_graph_destroy>;
using ColoredHandle = Handle<itd_colored, itd_colored_destroy>;
using SystemHandle = Handle<itd_system, itd_system_destroy>;
using CutHandle = Handle<itd_cut, itd_cut_destroy>;
using PlanHandle = Handle<itd_plan, itd_plan_destroy>;
using ReportHandle = Handle<itd_report, itd_report_destroy>;

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) die("cannot open " + out_path + " for writing");
  out << content;
  if (!out.good()) die("failed writing " + out_path);
}

int env_workers(int fallback) {
  const char* raw = std::getenv("INTERDEP_WORKERS");
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 1) die("INTERDEP_WORKERS must be a positive integer");
  return static_cast<int>(value);
}

// Accepts either model schema; exactly one handle ends up non-null.
void read_model(const std::string& path, ColoredHandle& cg, SystemHandle& sys) {
  check(itd_model_read_file(path.c_str(), cg.slot(), sys.slot()));
}

void read_colored(const std::string& path, ColoredHandle& cg) {
  check(itd_colored_read_file(path.c_str(), cg.slot()));
}

const char* method_name(int method) {
  switch (method) {
    case ITD_METHOD_EXACT: return "exact";
    case ITD_METHOD_POLY_EXACT: return "poly_exact";
    case ITD_METHOD_Q_APPROX: return "q_approx";
    case ITD_METHOD_BOUND: return "bound";
  }
  return "unknown";
}

std::string joined(int count, int (*at)(const itd_cut*, int), const itd_cut* cut) {
  std::string out;
  for (int i = 0; i < count; ++i) {
    if (i) out += ' ';
    out += std::to_string(at(cut, i));
  }
  return out;
}

void print_cut(const itd_cut* cut, const std::string& format, const std::string& out_path) {
  const char* mode = itd_cut_mode_of(cut) == ITD_CUT_ST ? "st" : "global";
  const char* method = method_name(itd_cut_method_of(cut));
  std::string colors = joined(itd_cut_color_count(cut), itd_cut_color, cut);
  std::string witness = joined(itd_cut_witness_size(cut), itd_cut_witness_node, cut);

  std::ostringstream text;
  if (format == "csv") {
    text << "value,lower_bound,method,mode,q,colors,witness\n";
    text << itd_cut_value(cut) << ',' << itd_cut_lower_bound(cut) << ',' << method << ','
         << mode << ',' << itd_cut_q(cut) << ',' << colors << ',' << witness << '\n';
  } else {
    text << "value " << itd_cut_value(cut) << '\n';
    text << "lower_bound " << itd_cut_lower_bound(cut) << '\n';
    text << "method " << method << '\n';
    text << "mode " << mode << '\n';
    if (itd_cut_q(cut) > 1) text << "q " << itd_cut_q(cut) << '\n';
    text << "colors " << colors << '\n';
    text << "witness " << witness << '\n';
  }
  emit(text.str(), out_path);
  if (itd_cut_method_of(cut) == ITD_METHOD_BOUND) exit_code = 2;
}

std::vector<int> parse_int_list(const std::string& raw) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(raw);
  while (std::getline(in, item, ',')) {
    try {
      size_t pos = 0;
      int value = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      die("not an integer list: '" + raw + "'");
    }
  }
  if (out.empty()) die("empty integer list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("interdependent-network toolkit ") + itd_version()};
  app.require_subcommand(1);

  // gen ------------------------------------------------------------------
  int gen_n = 0;
  double gen_p = 0.0;
  std::uint64_t gen_seed = 1;
  bool gen_connected = false;
  int gen_attempts = 200;
  int gen_nc = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "sample an Erdos-Renyi graph as a colored-graph file");
  gen->add_option("-n,--nodes", gen_n, "node count")->required();
  gen->add_option("-p,--prob", gen_p, "edge probability")->required();
  gen->add_option("--seed", gen_seed, "random seed (also used for --nc coloring)");
  gen->add_flag("--connected", gen_connected, "redraw until the sample is connected");
  gen->add_option("--max-attempts", gen_attempts, "redraw budget for --connected");
  gen->add_option("--nc", gen_nc,
                  "color uniformly with this many colors (default: one color per node)");
  gen->add_option("-o,--out", gen_out, "output path")->required();
  gen->callback([&] {
    GraphHandle g;
    int retries = 0;
    if (gen_connected) {
      check(itd_gen_erdos_renyi_connected(gen_n, gen_p, gen_seed, gen_attempts, &retries,
                                          g.slot()));
    } else {
      check(itd_gen_erdos_renyi(gen_n, gen_p, gen_seed, g.slot()));
    }
    ColoredHandle cg;
    if (gen_nc > 0) {
      PlanHandle plan;
      check(itd_assign_random(g.get(), gen_nc, gen_seed, plan.slot()));
      check(itd_plan_coloring(g.get(), plan.get(), cg.slot()));
    } else {
      check(itd_colored_distinct(g.get(), cg.slot()));
    }
    check(itd_colored_write_file(cg.get(), gen_out.c_str()));
    std::cout << "wrote " << gen_out << ": n=" << itd_graph_node_count(g.get())
              << " m=" << itd_graph_edge_count(g.get())
              << " colors=" << itd_colored_color_count(cg.get());
    if (gen_connected) std::cout << " retries=" << retries;
    std::cout << "\n";
  });

  // transform --------------------------------------------------------------
  std::string tr_in, tr_out;
  auto* tr = app.add_subcommand("transform", "expand a dependency system into a colored graph");
  tr->add_option("input", tr_in, "system file")->required();
  tr->add_option("-o,--out", tr_out, "output path")->required();
  tr->callback([&] {
    SystemHandle sys;
    check(itd_system_read_file(tr_in.c_str(), sys.slot()));
    ColoredHandle cg;
    check(itd_system_transform(sys.get(), cg.slot()));
    check(itd_colored_write_file(cg.get(), tr_out.c_str()));
    std::cout << "wrote " << tr_out << ": n=" << itd_colored_node_count(cg.get())
              << " colors=" << itd_colored_color_count(cg.get()) << "\n";
  });

  // cut ---------------------------------------------------------------------
  std::string cut_in, cut_mode = "global", cut_algo = "exact", cut_format = "text", cut_out;
  int cut_s = -1, cut_t = -1, cut_workers = 1, cut_color_limit = 0;
  double cut_timeout = 60.0;
  auto* cut = app.add_subcommand("cut", "minimum color or supply node cut");
  cut->add_option("input", cut_in, "colored graph or system file")->required();
  cut->add_option("--mode", cut_mode, "global or st")
      ->check(CLI::IsMember({"global", "st"}));
  cut->add_option("--source", cut_s, "source node (st mode)");
  cut->add_option("--target", cut_t, "target node (st mode)");
  cut->add_option("--algo", cut_algo, "exact, poly, qapprox, or brute")
      ->check(CLI::IsMember({"exact", "poly", "qapprox", "brute"}));
  cut->add_option("--timeout-s", cut_timeout, "wall-clock budget for exact solves");
  cut->add_option("--workers", cut_workers, "parallel subproblems (INTERDEP_WORKERS overrides)");
  cut->add_option("--color-limit", cut_color_limit, "inhabited-color cap for --algo brute");
  cut->add_option("--format", cut_format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));
  cut->add_option("-o,--out", cut_out, "output path (default stdout)");
  cut->callback([&] {
    ColoredHandle cg;
    SystemHandle sys;
    read_model(cut_in, cg, sys);

    itd_solve_options opts;
    itd_solve_options_init(&opts);
    opts.timeout_s = cut_timeout;
    opts.workers = env_workers(cut_workers);

    itd_cut_mode mode = cut_mode == "st" ? ITD_CUT_ST : ITD_CUT_GLOBAL;
    if (mode == ITD_CUT_ST && (cut_s < 0 || cut_t < 0))
      die("st mode needs --source and --target");

    CutHandle result;
    if (sys && cut_algo == "exact" && mode == ITD_CUT_GLOBAL) {
      // the supply solver skips redundant copy pairs; other paths expand first
      check(itd_min_supply_cut(sys.get(), &opts, result.slot()));
    } else {
      if (sys) check(itd_system_transform(sys.get(), cg.slot()));
      if (cut_algo == "exact") {
        if (mode == ITD_CUT_ST) {
          check(itd_min_color_st_cut(cg.get(), cut_s, cut_t, &opts, result.slot()));
        } else {
          check(itd_min_color_cut(cg.get(), &opts, result.slot()));
        }
      } else if (cut_algo == "poly") {
        check(itd_min_color_cut_connected(cg.get(), mode, cut_s, cut_t, result.slot()));
      } else if (cut_algo == "qapprox") {
        check(itd_min_color_cut_qapprox(cg.get(), mode, cut_s, cut_t, result.slot()));
      } else {
        check(itd_brute_min_cut(cg.get(), mode, cut_s, cut_t, cut_color_limit, result.slot()));
      }
    }
    print_cut(result.get(), cut_format, cut_out);
  });

  // assign --------------------------------------------------------------------
  std::string as_kind, as_in, as_in2, as_out;
  int as_s = 0, as_t = 0, as_nc = 0, as_ns1 = 1, as_ns2 = 1;
  std::uint64_t as_seed = 1;
  auto* as = app.add_subcommand("assign", "design an interdependence assignment");
  as->add_option("--kind", as_kind, "path, cds, random, bidir-cds, or bidir-random")
      ->required()
      ->check(CLI::IsMember({"path", "cds", "random", "bidir-cds", "bidir-random"}));
  as->add_option("input", as_in, "demand-side colored graph (colors ignored)")->required();
  as->add_option("input2", as_in2, "supply-side colored graph (bidir kinds)");
  as->add_option("--source", as_s, "source node for --kind path");
  as->add_option("--target", as_t, "target node for --kind path");
  as->add_option("--nc", as_nc, "supply node count for one-way kinds");
  as->add_option("--ns1", as_ns1, "supplies per demand node (bidir kinds)");
  as->add_option("--ns2", as_ns2, "supplies per supply-side node (bidir kinds)");
  as->add_option("--seed", as_seed, "seed for random kinds");
  as->add_option("-o,--out", as_out, "output path")->required();
  as->callback([&] {
    ColoredHandle in1;
    read_colored(as_in, in1);
    GraphHandle g1;
    check(itd_colored_get_graph(in1.get(), g1.slot()));

    bool bidir = as_kind.rfind("bidir-", 0) == 0;
    if (bidir) {
      if (as_in2.empty()) die("bidirectional kinds need a second input graph");
      ColoredHandle in2;
      read_colored(as_in2, in2);
      GraphHandle g2;
      check(itd_colored_get_graph(in2.get(), g2.slot()));

      PlanHandle plan1, plan2;
      SystemHandle sys;
      if (as_kind == "bidir-cds") {
        check(itd_assign_bidirectional_cds(g1.get(), g2.get(), as_ns1, as_ns2, plan1.slot(),
                                           plan2.slot(), sys.slot()));
      } else {
        check(itd_assign_bidirectional_random(g1.get(), g2.get(), as_ns1, as_ns2, as_seed,
                                              plan1.slot(), plan2.slot(), sys.slot()));
      }
      check(itd_system_write_file(sys.get(), as_out.c_str()));
      std::cout << "wrote " << as_out << ": guarantee1=" << itd_plan_guarantee(plan1.get())
                << " guarantee2=" << itd_plan_guarantee(plan2.get()) << "\n";
      return;
    }

    if (as_nc < 1) die("one-way kinds need --nc >= 1");
    PlanHandle plan;
    if (as_kind == "path") {
      check(itd_assign_path_based(g1.get(), as_s, as_t, as_nc, plan.slot()));
    } else if (as_kind == "cds") {
      check(itd_assign_cds_based(g1.get(), as_nc, plan.slot()));
    } else {
      check(itd_assign_random(g1.get(), as_nc, as_seed, plan.slot()));
    }
    ColoredHandle coloring;
    check(itd_plan_coloring(g1.get(), plan.get(), coloring.slot()));
    check(itd_colored_write_file(coloring.get(), as_out.c_str()));
    std::cout << "wrote " << as_out << ": guarantee=" << itd_plan_guarantee(plan.get())
              << "\n";
  });

  // gadget ----------------------------------------------------------------------
  auto* gadget = app.add_subcommand("gadget", "hardness-reduction gadgets");
  gadget->require_subcommand(1);

  std::string vc_in, vc_out;
  auto* vc = gadget->add_subcommand("vc", "vertex-cover instance to global color cut");
  vc->add_option("input", vc_in, "instance graph (colored file, colors ignored)")->required();
  vc->add_option("-o,--out", vc_out, "output path")->required();
  vc->callback([&] {
    ColoredHandle in;
    read_colored(vc_in, in);
    GraphHandle g;
    check(itd_colored_get_graph(in.get(), g.slot()));
    ColoredHandle out;
    check(itd_gen_vertex_cover_gadget(g.get(), out.slot()));
    check(itd_colored_write_file(out.get(), vc_out.c_str()));
    std::cout << "wrote " << vc_out << ": n=" << itd_colored_node_count(out.get())
              << " colors=" << itd_colored_color_count(out.get()) << "\n";
  });

  int hs_universe = 0;
  std::vector<std::string> hs_sets;
  std::string hs_out;
  auto* hs = gadget->add_subcommand("hs", "hitting-set instance to color st cut");
  hs->add_option("--universe", hs_universe, "element count; elements are 1..universe")
      ->required();
  hs->add_option("--set", hs_sets, "comma-separated set, e.g. --set 1,2,5 (repeatable)")
      ->required();
  hs->add_option("-o,--out", hs_out, "output path")->required();
  hs->callback([&] {
    std::vector<int> elements;
    std::vector<int> offsets{0};
    for (const auto& raw : hs_sets) {
      auto set = parse_int_list(raw);
      elements.insert(elements.end(), set.begin(), set.end());
      offsets.push_back(static_cast<int>(elements.size()));
    }
    int s = -1, t = -1;
    ColoredHandle out;
    check(itd_gen_hitting_set_gadget(hs_universe, elements.data(), offsets.data(),
                                     static_cast<int>(hs_sets.size()), &s, &t, out.slot()));
    check(itd_colored_write_file(out.get(), hs_out.c_str()));
    std::cout << "wrote " << hs_out << ": n=" << itd_colored_node_count(out.get())
              << " source=" << s << " target=" << t << "\n";
  });

  // table1 --------------------------------------------------------------------
  itd_table1_config tcfg;
  itd_table1_config_init(&tcfg);
  bool t_no_cds = false, t_no_random = false;
  std::string t_format = "text", t_out;
  auto* tab = app.add_subcommand("table1", "random-graph experiment grid");
  tab->add_option("--n1", tcfg.n1, "demand-side node count");
  tab->add_option("--n2", tcfg.n2, "supply-side node count");
  tab->add_option("--p1", tcfg.p1, "demand-side edge probability");
  tab->add_option("--p2", tcfg.p2, "supply-side edge probability");
  tab->add_option("--ns1", tcfg.ns1, "supplies per demand node");
  tab->add_option("--ns2", tcfg.ns2, "supplies per supply-side node");
  tab->add_option("--instances", tcfg.instances, "instance count");
  tab->add_option("--seed", tcfg.seed, "base seed");
  tab->add_option("--timeout-s", tcfg.solver_timeout_s, "per-query solver budget");
  tab->add_option("--workers", tcfg.workers, "parallel instances (INTERDEP_WORKERS overrides)");
  tab->add_flag("--no-cds", t_no_cds, "skip the CDS assignment columns");
  tab->add_flag("--no-random", t_no_random, "skip the random assignment columns");
  tab->add_option("--format", t_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  tab->add_option("-o,--out", t_out, "output path (default stdout)");
  tab->callback([&] {
    tcfg.run_cds = t_no_cds ? 0 : 1;
    tcfg.run_random = t_no_random ? 0 : 1;
    tcfg.workers = env_workers(tcfg.workers);
    ReportHandle report;
    check(itd_table1_run(&tcfg, report.slot()));
    emit(t_format == "csv" ? itd_report_csv(report.get()) : itd_report_text(report.get()),
         t_out);
    if (itd_report_timeout_cells(report.get()) > 0) exit_code = 2;
  });

  // export-milp -----------------------------------------------------------------
  std::string mi_in, mi_mode = "global", mi_out;
  int mi_s = -1, mi_t = -1;
  auto* milp = app.add_subcommand("export-milp", "write the cut problem as LP-format text");
  milp->add_option("input", mi_in, "colored graph or system file")->required();
  milp->add_option("--mode", mi_mode, "global or st")->check(CLI::IsMember({"global", "st"}));
  milp->add_option("--source", mi_s, "source node (st mode)");
  milp->add_option("--target", mi_t, "target node (st mode)");
  milp->add_option("-o,--out", mi_out, "output path")->required();
  milp->callback([&] {
    ColoredHandle cg;
    SystemHandle sys;
    read_model(mi_in, cg, sys);
    if (sys) check(itd_system_transform(sys.get(), cg.slot()));
    itd_cut_mode mode = mi_mode == "st" ? ITD_CUT_ST : ITD_CUT_GLOBAL;
    if (mode == ITD_CUT_ST && (mi_s < 0 || mi_t < 0))
      die("st mode needs --source and --target");
    check(itd_export_milp(cg.get(), mode, mi_s, mi_t, mi_out.c_str()));
    std::cout << "wrote " << mi_out << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return exit_code;
}
