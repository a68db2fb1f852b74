/* C interface to the interdependent-network toolkit.
 *
 * Every object lives behind an opaque handle created by an itd_*_create /
 * itd_gen_* / itd_*_read_file call and released with the matching
 * itd_*_destroy. Fallible calls return an itd_status; on failure the output
 * handle is untouched and itd_last_error() describes what went wrong for the
 * calling thread. Plain accessors never fail: out-of-range queries return -1
 * (or 0 where noted) so they can be chained safely.
 *
 * Handles are not synchronized. Sharing one handle across threads needs
 * external locking; distinct handles are independent.
 */

#ifndef INTERDEP_H
#define INTERDEP_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum itd_status {
  ITD_OK = 0,
  ITD_EINVAL = 1,        /* argument outside its domain */
  ITD_ESAME_NODE = 2,    /* s-t query with s == t */
  ITD_EADJACENT = 3,     /* s-t query on an adjacent pair */
  ITD_ETOO_SMALL = 4,    /* instance below the operation's minimum size */
  ITD_EDISCONNECTED = 5, /* operation needs a connected graph */
  ITD_ECLASSES = 6,      /* a color class is not connected */
  ITD_ESTUBS = 7,        /* n1*ns1 != n2*ns2 in a bidirectional design */
  ITD_EEMPTY_SET = 8,    /* hitting-set input with no usable set */
  ITD_ELIMIT = 9,        /* configured enumeration limit exceeded */
  ITD_EPARSE = 10,       /* malformed model file */
  ITD_EIO = 11,          /* file could not be opened or written */
  ITD_EGIVE_UP = 12,     /* sampling budget exhausted */
  ITD_ENOMEM = 13,
  ITD_EUNKNOWN = 14,
} itd_status;

/* Message for the most recent failing call on this thread; empty after a
 * success. The pointer stays valid until the thread's next itd_ call. */
const char* itd_last_error(void);
const char* itd_status_name(itd_status status);
const char* itd_version(void);

typedef struct itd_graph itd_graph;
typedef struct itd_colored itd_colored;
typedef struct itd_system itd_system;
typedef struct itd_cut itd_cut;
typedef struct itd_plan itd_plan;
typedef struct itd_report itd_report;

/* ---- graphs ---------------------------------------------------------- */

itd_status itd_graph_create(int node_count, itd_graph** out);
itd_status itd_graph_add_edge(itd_graph* g, int u, int v);
int itd_graph_node_count(const itd_graph* g);
int itd_graph_edge_count(const itd_graph* g);
int itd_graph_has_edge(const itd_graph* g, int u, int v); /* 0 or 1 */
void itd_graph_destroy(itd_graph* g);

itd_status itd_gen_erdos_renyi(int n, double p, uint64_t seed, itd_graph** out);
/* Redraws with a per-attempt stream until the sample is connected; fails
 * with ITD_EGIVE_UP after max_attempts draws. retries may be NULL. */
itd_status itd_gen_erdos_renyi_connected(int n, double p, uint64_t seed, int max_attempts,
                                         int* retries, itd_graph** out);

itd_status itd_node_connectivity(const itd_graph* g, int* value);
itd_status itd_st_node_connectivity(const itd_graph* g, int s, int t, int* value);

/* ---- colored graphs --------------------------------------------------- */

/* colors holds one entry per node, each in [0, color_count). */
itd_status itd_colored_create(const itd_graph* g, const int* colors, int color_count,
                              itd_colored** out);
/* Convenience coloring where node v gets color v. */
itd_status itd_colored_distinct(const itd_graph* g, itd_colored** out);
int itd_colored_node_count(const itd_colored* cg);
int itd_colored_color_count(const itd_colored* cg);
int itd_colored_color_of(const itd_colored* cg, int v);
/* Fresh copy of the underlying graph; caller owns it. */
itd_status itd_colored_get_graph(const itd_colored* cg, itd_graph** out);
itd_status itd_colored_read_file(const char* path, itd_colored** out);
itd_status itd_colored_write_file(const itd_colored* cg, const char* path);
void itd_colored_destroy(itd_colored* cg);

/* ---- dependency systems ----------------------------------------------- */

/* Starts one-way with empty supply lists; add at least one supply per demand
 * node before validating or solving. */
itd_status itd_system_create(const itd_graph* demand, int supply_node_count, itd_system** out);
itd_status itd_system_add_supply(itd_system* sys, int demand_node, int supply_node);
/* Attaches the supply-side topology and switches the system to bidirectional. */
itd_status itd_system_set_supply_graph(itd_system* sys, const itd_graph* g);
itd_status itd_system_validate(const itd_system* sys);
int itd_system_demand_count(const itd_system* sys);
int itd_system_supply_count(const itd_system* sys);
int itd_system_is_bidirectional(const itd_system* sys);
int itd_system_supply_list_size(const itd_system* sys, int demand_node);
int itd_system_supply_at(const itd_system* sys, int demand_node, int i);
/* Swaps the two sides; needs a bidirectional system with a supply graph. */
itd_status itd_system_reverse(const itd_system* sys, itd_system** out);
/* Expanded colored graph: one copy per distinct supply of each demand node,
 * colored by supply id. */
itd_status itd_system_transform(const itd_system* sys, itd_colored** out);
itd_status itd_system_read_file(const char* path, itd_system** out);
itd_status itd_system_write_file(const itd_system* sys, const char* path);
void itd_system_destroy(itd_system* sys);

/* Reads either model schema, detected from the first line. Exactly one of
 * *cg_out / *sys_out is set on success; either pointer may be NULL if that
 * kind is unacceptable, in which case a file of that kind fails EINVAL. */
itd_status itd_model_read_file(const char* path, itd_colored** cg_out, itd_system** sys_out);

/* ---- minimum color cuts ------------------------------------------------ */

typedef enum itd_cut_mode { ITD_CUT_GLOBAL = 0, ITD_CUT_ST = 1 } itd_cut_mode;
typedef enum itd_cut_method {
  ITD_METHOD_EXACT = 0,
  ITD_METHOD_POLY_EXACT = 1,
  ITD_METHOD_Q_APPROX = 2,
  ITD_METHOD_BOUND = 3, /* timed out; value is an upper bound, see lower_bound */
} itd_cut_method;

typedef struct itd_solve_options {
  double timeout_s; /* wall-clock budget per query */
  int workers;      /* parallel s-t subproblems; 1 keeps results deterministic */
} itd_solve_options;
void itd_solve_options_init(itd_solve_options* opts);

/* options may be NULL for defaults. s and t are ignored in global mode. */
itd_status itd_min_color_st_cut(const itd_colored* cg, int s, int t,
                                const itd_solve_options* opts, itd_cut** out);
itd_status itd_min_color_cut(const itd_colored* cg, const itd_solve_options* opts,
                             itd_cut** out);
/* Minimum supply node cut of a system, solved on the transformed graph.
 * Colors in the result are supply node ids. */
itd_status itd_min_supply_cut(const itd_system* sys, const itd_solve_options* opts,
                              itd_cut** out);
/* Exhaustive reference solver; refuses instances with more than color_limit
 * inhabited colors (pass 0 for the default limit of 20). */
itd_status itd_brute_min_cut(const itd_colored* cg, itd_cut_mode mode, int s, int t,
                             int color_limit, itd_cut** out);
/* Polynomial solver for instances whose color classes induce connected
 * subgraphs; ITD_ECLASSES otherwise. */
itd_status itd_min_color_cut_connected(const itd_colored* cg, itd_cut_mode mode, int s, int t,
                                       itd_cut** out);
/* Factor-q approximation for arbitrary classes; see itd_cut_q. */
itd_status itd_min_color_cut_qapprox(const itd_colored* cg, itd_cut_mode mode, int s, int t,
                                     itd_cut** out);

int itd_cut_value(const itd_cut* cut);
int itd_cut_lower_bound(const itd_cut* cut);
int itd_cut_mode_of(const itd_cut* cut);   /* itd_cut_mode */
int itd_cut_method_of(const itd_cut* cut); /* itd_cut_method */
int itd_cut_q(const itd_cut* cut);
int itd_cut_color_count(const itd_cut* cut);
int itd_cut_color(const itd_cut* cut, int i);
int itd_cut_witness_size(const itd_cut* cut);
int itd_cut_witness_node(const itd_cut* cut, int i);
void itd_cut_destroy(itd_cut* cut);

/* Writes the cut problem as CPLEX-style LP text with a fixed variable order,
 * so equal instances produce identical files. */
itd_status itd_export_milp(const itd_colored* cg, itd_cut_mode mode, int s, int t,
                           const char* path);

/* ---- interdependence assignments --------------------------------------- */

typedef enum itd_plan_kind {
  ITD_PLAN_PATH_BASED = 0,
  ITD_PLAN_CDS_BASED = 1,
  ITD_PLAN_RANDOM = 2,
  ITD_PLAN_BIDIR_CDS = 3,
  ITD_PLAN_BIDIR_RANDOM = 4,
} itd_plan_kind;

itd_status itd_assign_path_based(const itd_graph* g, int s, int t, int n_c, itd_plan** out);
itd_status itd_assign_cds_based(const itd_graph* g, int n_c, itd_plan** out);
itd_status itd_assign_random(const itd_graph* g, int n_c, uint64_t seed, itd_plan** out);
/* Bidirectional designs produce one plan per side plus the combined system;
 * any of the three outputs may be NULL to skip it. */
itd_status itd_assign_bidirectional_cds(const itd_graph* g1, const itd_graph* g2, int ns1,
                                        int ns2, itd_plan** plan1, itd_plan** plan2,
                                        itd_system** sys);
itd_status itd_assign_bidirectional_random(const itd_graph* g1, const itd_graph* g2, int ns1,
                                           int ns2, uint64_t seed, itd_plan** plan1,
                                           itd_plan** plan2, itd_system** sys);

int itd_plan_kind_of(const itd_plan* plan); /* itd_plan_kind */
int itd_plan_guarantee(const itd_plan* plan);
int itd_plan_color_count(const itd_plan* plan);
int itd_plan_node_count(const itd_plan* plan);
int itd_plan_supply_list_size(const itd_plan* plan, int v);
int itd_plan_supply_at(const itd_plan* plan, int v, int i);
/* View of a one-supply-per-node plan as a coloring of g. */
itd_status itd_plan_coloring(const itd_graph* g, const itd_plan* plan, itd_colored** out);
void itd_plan_destroy(itd_plan* plan);

/* ---- hardness gadgets --------------------------------------------------- */

/* Colored graph whose global minimum color cut value equals the minimum
 * vertex cover of the instance. */
itd_status itd_gen_vertex_cover_gadget(const itd_graph* instance, itd_colored** out);
/* Colored graph whose minimum color s-t cut equals the minimum hitting set.
 * Sets are flattened: set i is elements[offsets[i] .. offsets[i+1]), with
 * offsets holding set_count + 1 entries; elements are 1-based color ids.
 * s and t receive the terminal node ids and may be NULL. */
itd_status itd_gen_hitting_set_gadget(int universe, const int* elements, const int* offsets,
                                      int set_count, int* s, int* t, itd_colored** out);

/* ---- experiment harness ------------------------------------------------- */

typedef struct itd_table1_config {
  int n1, n2;
  double p1, p2;
  int ns1, ns2;
  int instances;
  uint64_t seed;
  double solver_timeout_s;
  int workers;
  int run_cds;    /* 0 disables the CDS columns */
  int run_random; /* 0 disables the random columns */
} itd_table1_config;
void itd_table1_config_init(itd_table1_config* cfg);

itd_status itd_table1_run(const itd_table1_config* cfg, itd_report** out);
/* Rendered strings stay owned by the report and valid until destroy. */
const char* itd_report_text(const itd_report* report);
const char* itd_report_csv(const itd_report* report);
int itd_report_timeout_cells(const itd_report* report);
int itd_report_counted_cells(const itd_report* report);
double itd_report_wall_seconds(const itd_report* report);
void itd_report_destroy(itd_report* report);

#ifdef __cplusplus
}
#endif

#endif /* INTERDEP_H */
