#include "igx.h"

#include <cstring>
#include <string>

#include "igx/classify.hpp"
#include "igx/error.hpp"

namespace {

thread_local std::string g_last_error;

igx_status status_of(const igx::Error& e) {
  g_last_error = e.what();
  switch (e.code()) {
    case igx::ErrorCode::InvalidParameters: return IGX_ERR_INVALID_PARAMETERS;
    case igx::ErrorCode::OrderBudgetExceeded: return IGX_ERR_ORDER_BUDGET;
    case igx::ErrorCode::MalformedExpression: return IGX_ERR_MALFORMED_EXPRESSION;
    case igx::ErrorCode::AmbientMismatch: return IGX_ERR_AMBIENT_MISMATCH;
    case igx::ErrorCode::NotADivisor: return IGX_ERR_NOT_A_DIVISOR;
    case igx::ErrorCode::InvalidScheme: return IGX_ERR_INVALID_SCHEME;
    case igx::ErrorCode::SearchBudgetExceeded: return IGX_ERR_SEARCH_BUDGET;
    case igx::ErrorCode::UnsupportedFormat: return IGX_ERR_UNSUPPORTED_FORMAT;
    case igx::ErrorCode::OutOfRange: return IGX_ERR_OUT_OF_RANGE;
    case igx::ErrorCode::ParseError: return IGX_ERR_PARSE;
  }
  return IGX_ERR_UNKNOWN;
}

template <typename F>
igx_status guarded(F&& f) {
  try {
    f();
    return IGX_OK;
  } catch (const igx::Error& e) {
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return IGX_ERR_UNKNOWN;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct igx_group {
  igx::Group value;
};
struct igx_lattice {
  igx::Lattice value;
};
struct igx_graph {
  igx::Graph value;
};
struct igx_report {
  igx::Classification value;
};

extern "C" {

const char* igx_last_error(void) { return g_last_error.c_str(); }
void igx_string_free(char* s) { delete[] s; }

igx_status igx_group_build(const char* spec, int order_budget, igx_group** out) {
  if (!spec || !out) return IGX_ERR_INVALID_PARAMETERS;
  return guarded([&] {
    igx::Group g = igx::build_family(std::string(spec), order_budget > 0 ? order_budget : igx::kDefaultOrderBudget);
    *out = new igx_group{std::move(g)};
  });
}

void igx_group_free(igx_group* g) { delete g; }

int igx_group_order(const igx_group* g) { return g ? g->value.order() : 0; }

int igx_group_mul(const igx_group* g, int a, int b) {
  if (!g || a < 0 || b < 0 || a >= g->value.order() || b >= g->value.order()) return -1;
  return g->value.mul(igx::Elem(a), igx::Elem(b));
}

int igx_group_element_order(const igx_group* g, int a) {
  if (!g || a < 0 || a >= g->value.order()) return -1;
  return g->value.element_order(igx::Elem(a));
}

int igx_group_is_abelian(const igx_group* g) { return g && g->value.abelian() ? 1 : 0; }

igx_status igx_group_name(const igx_group* g, char** out) {
  if (!g || !out) return IGX_ERR_INVALID_PARAMETERS;
  *out = dup_string(g->value.name());
  return IGX_OK;
}

igx_status igx_group_spec_text(const igx_group* g, char** out) {
  if (!g || !out) return IGX_ERR_INVALID_PARAMETERS;
  *out = dup_string(g->value.spec_text());
  return IGX_OK;
}

int igx_group_verify_axioms(const igx_group* g) { return g && igx::verify_group_axioms(g->value).ok() ? 1 : 0; }

igx_status igx_lattice_enumerate(const igx_group* g, igx_lattice** out) {
  if (!g || !out) return IGX_ERR_INVALID_PARAMETERS;
  return guarded([&] { *out = new igx_lattice{igx::Lattice::enumerate(g->value)}; });
}

void igx_lattice_free(igx_lattice* lat) { delete lat; }

int igx_lattice_subgroup_count(const igx_lattice* lat) { return lat ? int(lat->value.all().size()) : 0; }

int igx_lattice_proper_nontrivial_count(const igx_lattice* lat) {
  return lat ? int(lat->value.proper_nontrivial().size()) : 0;
}

int igx_lattice_subgroup_order(const igx_lattice* lat, int index) {
  if (!lat || index < 0 || index >= int(lat->value.all().size())) return -1;
  return lat->value.all()[index].order;
}

int igx_lattice_prime_order_count(const igx_lattice* lat) { return lat ? lat->value.prime_order_count() : 0; }

igx_status igx_lattice_sylow_count(const igx_lattice* lat, int p, int* out) {
  if (!lat || !out) return IGX_ERR_INVALID_PARAMETERS;
  return guarded([&] { *out = lat->value.sylow_count(p); });
}

igx_status igx_lattice_csv(const igx_lattice* lat, char** out) {
  if (!lat || !out) return IGX_ERR_INVALID_PARAMETERS;
  *out = dup_string(lat->value.to_csv());
  return IGX_OK;
}

igx_status igx_intersection_graph(const igx_lattice* lat, igx_graph** out) {
  if (!lat || !out) return IGX_ERR_INVALID_PARAMETERS;
  return guarded([&] { *out = new igx_graph{igx::intersection_graph(lat->value)}; });
}

igx_status igx_graph_from_adjacency(const char* text, igx_graph** out) {
  if (!text || !out) return IGX_ERR_INVALID_PARAMETERS;
  return guarded([&] { *out = new igx_graph{igx::Graph::from_adjacency_text(text)}; });
}

void igx_graph_free(igx_graph* g) { delete g; }

int igx_graph_vertex_count(const igx_graph* g) { return g ? g->value.vertex_count() : 0; }
int igx_graph_edge_count(const igx_graph* g) { return g ? g->value.edge_count() : 0; }

igx_status igx_graph_export(const igx_graph* g, const char* format, char** out) {
  if (!g || !format || !out) return IGX_ERR_INVALID_PARAMETERS;
  std::string f = format;
  if (f == "adjacency") {
    *out = dup_string(g->value.to_adjacency_text());
    return IGX_OK;
  }
  if (f == "dot") {
    *out = dup_string(g->value.to_dot());
    return IGX_OK;
  }
  g_last_error = "unsupported graph format '" + f + "'";
  return IGX_ERR_UNSUPPORTED_FORMAT;
}

int igx_graph_is_planar(const igx_graph* g) { return g && igx::is_planar(g->value).planar ? 1 : 0; }

int igx_graph_girth(const igx_graph* g) {
  if (!g) return -1;
  int gi = igx::girth(g->value);
  return gi == igx::kInfiniteGirth ? 0 : gi;
}

igx_status igx_graph_independence_number(const igx_graph* g, long long node_budget, int* out) {
  if (!g || !out) return IGX_ERR_INVALID_PARAMETERS;
  return guarded([&] {
    igx::SearchBudget b{node_budget > 0 ? node_budget : 10'000'000, 0};
    *out = igx::independence_number(g->value, b);
  });
}

igx_status igx_graph_clique_cover_number(const igx_graph* g, long long node_budget, int* out) {
  if (!g || !out) return IGX_ERR_INVALID_PARAMETERS;
  return guarded([&] {
    igx::SearchBudget b{node_budget > 0 ? node_budget : 10'000'000, 0};
    *out = igx::clique_cover_number(g->value, b);
  });
}

igx_status igx_graph_genus(const igx_graph* g, long long node_budget, int* lower, int* upper, int* exact) {
  if (!g || !lower || !upper || !exact) return IGX_ERR_INVALID_PARAMETERS;
  return guarded([&] {
    igx::GenusBudget b{node_budget > 0 ? node_budget : 100'000'000, 0};
    igx::GenusResult r = igx::orientable_genus(g->value, b);
    *lower = r.lower;
    *upper = r.upper == igx::kGenusUnknown ? -1 : r.upper;
    *exact = r.exact ? 1 : 0;
  });
}

igx_status igx_graph_crosscap(const igx_graph* g, long long node_budget, int* lower, int* upper, int* exact) {
  if (!g || !lower || !upper || !exact) return IGX_ERR_INVALID_PARAMETERS;
  return guarded([&] {
    igx::GenusBudget b{node_budget > 0 ? node_budget : 100'000'000, 0};
    igx::GenusResult r = igx::nonorientable_genus(g->value, b);
    *lower = r.lower;
    *upper = r.upper == igx::kGenusUnknown ? -1 : r.upper;
    *exact = r.exact ? 1 : 0;
  });
}

igx_status igx_classify(const igx_group* g, long long genus_budget, long long search_budget, igx_report** out) {
  if (!g || !out) return IGX_ERR_INVALID_PARAMETERS;
  return guarded([&] {
    igx::Budgets budgets;
    if (genus_budget > 0) budgets.genus_nodes = genus_budget;
    if (search_budget > 0) budgets.search_nodes = search_budget;
    *out = new igx_report{igx::classify(g->value, budgets)};
  });
}

void igx_report_free(igx_report* rep) { delete rep; }

igx_status igx_report_render(const igx_report* rep, char** out) {
  if (!rep || !out) return IGX_ERR_INVALID_PARAMETERS;
  *out = dup_string(rep->value.render_text());
  return IGX_OK;
}

igx_status igx_report_get_int(const igx_report* rep, const char* key, long long* out) {
  if (!rep || !key || !out) return IGX_ERR_INVALID_PARAMETERS;
  const igx::Classification& c = rep->value;
  std::string k = key;
  if (k == "order") *out = c.order;
  else if (k == "vertices") *out = c.vertices;
  else if (k == "edges") *out = c.edges;
  else if (k == "planar") *out = c.planar ? 1 : 0;
  else if (k == "toroidal") *out = c.toroidal ? 1 : 0;
  else if (k == "projective_planar") *out = c.projective_planar ? 1 : 0;
  else if (k == "girth") *out = c.girth_value == igx::kInfiniteGirth ? 0 : c.girth_value;
  else if (k == "alpha") *out = c.alpha;
  else if (k == "theta") *out = c.theta;
  else if (k == "prime_order_subgroups") *out = c.prime_order_subgroups;
  else {
    g_last_error = "unknown report key '" + k + "'";
    return IGX_ERR_OUT_OF_RANGE;
  }
  return IGX_OK;
}

igx_status igx_verify_suite(const char* suite, int max_order, long long genus_budget, long long search_budget,
                            char** csv, int* passes, int* fails, int* flagged, int* budgets) {
  if (!suite || !csv) return IGX_ERR_INVALID_PARAMETERS;
  return guarded([&] {
    igx::Budgets b;
    if (genus_budget > 0) b.genus_nodes = genus_budget;
    if (search_budget > 0) b.search_nodes = search_budget;
    igx::SuiteReport rep = igx::verify_claims(suite, max_order, b);
    *csv = dup_string(rep.to_csv());
    if (passes) *passes = rep.passes;
    if (fails) *fails = rep.fails;
    if (flagged) *flagged = rep.flagged;
    if (budgets) *budgets = rep.budgets;
  });
}

}  // extern "C"
