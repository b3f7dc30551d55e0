/* C interface to the intersection-graph toolkit.
 *
 * All objects are opaque handles created and released by the library.
 * Functions return IGX_OK (0) on success; on failure they return a code and
 * leave outputs untouched. igx_last_error() describes the most recent
 * failure on the calling thread. Strings returned through char** outputs are
 * heap-allocated and must be released with igx_string_free().
 */

#ifndef IGX_H
#define IGX_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum igx_status {
  IGX_OK = 0,
  IGX_ERR_INVALID_PARAMETERS = 1,
  IGX_ERR_ORDER_BUDGET = 2,
  IGX_ERR_MALFORMED_EXPRESSION = 3,
  IGX_ERR_AMBIENT_MISMATCH = 4,
  IGX_ERR_NOT_A_DIVISOR = 5,
  IGX_ERR_INVALID_SCHEME = 6,
  IGX_ERR_SEARCH_BUDGET = 7,
  IGX_ERR_UNSUPPORTED_FORMAT = 8,
  IGX_ERR_OUT_OF_RANGE = 9,
  IGX_ERR_PARSE = 10,
  IGX_ERR_UNKNOWN = 11
} igx_status;

typedef struct igx_group igx_group;
typedef struct igx_lattice igx_lattice;
typedef struct igx_graph igx_graph;
typedef struct igx_report igx_report;

const char* igx_last_error(void);
void igx_string_free(char* s);

/* --- groups ------------------------------------------------------------ */

/* Build a group from its family spec text, e.g. "cyclic:64", "dihedral:18",
 * "modular:3,3", "sd:q=3,p=2,a=2,t=1", "mat:p=5,m=6",
 * "perm:deg=4,gens=(123);(12)(34)", "prod:cyclic:3|dihedral:6". */
igx_status igx_group_build(const char* spec, int order_budget, igx_group** out);
void igx_group_free(igx_group* g);

int igx_group_order(const igx_group* g);
int igx_group_mul(const igx_group* g, int a, int b);
int igx_group_element_order(const igx_group* g, int a);
int igx_group_is_abelian(const igx_group* g);
igx_status igx_group_name(const igx_group* g, char** out);
igx_status igx_group_spec_text(const igx_group* g, char** out);
/* 1 if all axioms verify, 0 otherwise. */
int igx_group_verify_axioms(const igx_group* g);

/* --- subgroup lattices --------------------------------------------------- */

igx_status igx_lattice_enumerate(const igx_group* g, igx_lattice** out);
void igx_lattice_free(igx_lattice* lat);

int igx_lattice_subgroup_count(const igx_lattice* lat);
int igx_lattice_proper_nontrivial_count(const igx_lattice* lat);
int igx_lattice_subgroup_order(const igx_lattice* lat, int index);
int igx_lattice_prime_order_count(const igx_lattice* lat);
igx_status igx_lattice_sylow_count(const igx_lattice* lat, int p, int* out);
igx_status igx_lattice_csv(const igx_lattice* lat, char** out);

/* --- graphs --------------------------------------------------------------- */

igx_status igx_intersection_graph(const igx_lattice* lat, igx_graph** out);
igx_status igx_graph_from_adjacency(const char* text, igx_graph** out);
void igx_graph_free(igx_graph* g);

int igx_graph_vertex_count(const igx_graph* g);
int igx_graph_edge_count(const igx_graph* g);
/* format: "adjacency" or "dot" */
igx_status igx_graph_export(const igx_graph* g, const char* format, char** out);

int igx_graph_is_planar(const igx_graph* g);
/* 0 when the graph is acyclic (infinite girth). */
int igx_graph_girth(const igx_graph* g);
igx_status igx_graph_independence_number(const igx_graph* g, long long node_budget, int* out);
igx_status igx_graph_clique_cover_number(const igx_graph* g, long long node_budget, int* out);

/* Exact orientable genus / nonorientable genus (crosscap number).
 * exact=1 means lower==upper is the answer; otherwise only bounds are known
 * within the node budget. */
igx_status igx_graph_genus(const igx_graph* g, long long node_budget, int* lower, int* upper, int* exact);
igx_status igx_graph_crosscap(const igx_graph* g, long long node_budget, int* lower, int* upper, int* exact);

/* --- classification -------------------------------------------------------- */

igx_status igx_classify(const igx_group* g, long long genus_budget, long long search_budget, igx_report** out);
void igx_report_free(igx_report* rep);
igx_status igx_report_render(const igx_report* rep, char** out);
/* Selected fields; returns IGX_ERR_OUT_OF_RANGE for unknown keys. Keys:
 * order, vertices, edges, planar, toroidal, projective_planar, girth
 * (0 = infinite), alpha, theta, prime_order_subgroups. */
igx_status igx_report_get_int(const igx_report* rep, const char* key, long long* out);

/* Run a verification suite; returns its CSV (one row per instance) plus the
 * pass/fail/flagged/budget counts. Suites: formulas, planar-catalog,
 * toroidal, projective-planar, k5-free, bipartite-acyclic, corollary-5.1,
 * clique-cover, uniqueness-5.2. */
igx_status igx_verify_suite(const char* suite, int max_order, long long genus_budget, long long search_budget,
                            char** csv, int* passes, int* fails, int* flagged, int* budgets);

#ifdef __cplusplus
}
#endif

#endif /* IGX_H */
