// Command-line front end. Talks to the library exclusively through the C
// API in igx.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "igx.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;

struct StringOut {
  char* ptr = nullptr;
  ~StringOut() { igx_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

int fail(igx_status st, const std::string& what) {
  std::cerr << "igx: " << what << ": " << igx_last_error() << "\n";
  return st == IGX_ERR_SEARCH_BUDGET || st == IGX_ERR_ORDER_BUDGET ? kExitBudget : kExitUsage;
}

std::string slug_of(const std::string& spec) {
  std::string out;
  for (char c : spec) out += (std::isalnum((unsigned char)c) || c == '-' || c == '.') ? c : '_';
  return out;
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  f << content;
  return bool(f);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

struct GroupHandle {
  igx_group* g = nullptr;
  ~GroupHandle() { igx_group_free(g); }
};
struct LatticeHandle {
  igx_lattice* lat = nullptr;
  ~LatticeHandle() { igx_lattice_free(lat); }
};
struct GraphHandle {
  igx_graph* g = nullptr;
  ~GraphHandle() { igx_graph_free(g); }
};

int build_group(const std::string& spec, int max_order, GroupHandle& out) {
  igx_status st = igx_group_build(spec.c_str(), max_order, &out.g);
  if (st != IGX_OK) return fail(st, "cannot build '" + spec + "'");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"intersection graphs of subgroups: construction, classification, verification"};
  app.require_subcommand(1);

  int max_order = 512;
  long long genus_budget = 100'000'000;
  long long search_budget = 10'000'000;
  app.add_option("--max-order", max_order, "largest group order to construct")->capture_default_str();
  app.add_option("--budget", genus_budget, "genus search node budget")->capture_default_str();
  app.add_option("--search-budget", search_budget, "alpha/theta search node budget")->capture_default_str();

  // group show <spec>
  auto* group_cmd = app.add_subcommand("group", "group-level operations");
  auto* show_cmd = group_cmd->add_subcommand("show", "print order, axioms and element orders");
  std::string show_spec;
  show_cmd->add_option("spec", show_spec, "family spec, e.g. cyclic:64")->required();

  // lattice <spec>
  auto* lattice_cmd = app.add_subcommand("lattice", "export the subgroup lattice as CSV");
  std::string lattice_spec, lattice_out;
  lattice_cmd->add_option("spec", lattice_spec)->required();
  lattice_cmd->add_option("--output", lattice_out, "write to file instead of stdout");

  // igraph <spec> [--export fmt]
  auto* igraph_cmd = app.add_subcommand("igraph", "emit the intersection graph");
  std::string igraph_spec, igraph_fmt = "adjacency", igraph_out;
  igraph_cmd->add_option("spec", igraph_spec)->required();
  igraph_cmd->add_option("--export", igraph_fmt, "dot or adjacency")->capture_default_str();
  igraph_cmd->add_option("--output", igraph_out, "write to file instead of stdout");

  // classify <spec>
  auto* classify_cmd = app.add_subcommand("classify", "full classification report for one group");
  std::string classify_spec, classify_dir;
  classify_cmd->add_option("spec", classify_spec)->required();
  classify_cmd->add_option("--output-dir", classify_dir, "also write report and graph files under DIR/<spec>");

  // verify <suite>
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string verify_suite, verify_dir;
  int verify_max_order = 100;
  verify_cmd->add_option("suite", verify_suite,
                         "formulas | planar-catalog | toroidal | projective-planar | k5-free | "
                         "bipartite-acyclic | corollary-5.1 | clique-cover | uniqueness-5.2")
      ->required();
  verify_cmd->add_option("--max-order", verify_max_order, "catalog order cap")->capture_default_str();
  verify_cmd->add_option("--output-dir", verify_dir, "write the per-instance CSV under DIR");

  // genus / crosscap <graph-file>
  auto* genus_cmd = app.add_subcommand("genus", "orientable genus of a graph file (adjacency format)");
  std::string genus_file;
  genus_cmd->add_option("file", genus_file)->required();
  auto* crosscap_cmd = app.add_subcommand("crosscap", "nonorientable genus of a graph file");
  std::string crosscap_file;
  crosscap_cmd->add_option("file", crosscap_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return kExitOk;  // --help
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  if (show_cmd->parsed()) {
    GroupHandle g;
    if (int rc = build_group(show_spec, max_order, g)) return rc;
    StringOut name, text;
    igx_group_name(g.g, &name.ptr);
    igx_group_spec_text(g.g, &text.ptr);
    int order = igx_group_order(g.g);
    std::cout << "name: " << name.str() << "\n";
    std::cout << "spec: " << text.str() << "\n";
    std::cout << "order: " << order << "\n";
    std::cout << "abelian: " << (igx_group_is_abelian(g.g) ? "yes" : "no") << "\n";
    std::cout << "axioms: " << (igx_group_verify_axioms(g.g) ? "pass" : "FAIL") << "\n";
    std::cout << "element orders:";
    for (int x = 0; x < order; ++x) std::cout << ' ' << igx_group_element_order(g.g, x);
    std::cout << "\n";
    return kExitOk;
  }

  if (lattice_cmd->parsed()) {
    GroupHandle g;
    if (int rc = build_group(lattice_spec, max_order, g)) return rc;
    LatticeHandle lat;
    if (igx_status st = igx_lattice_enumerate(g.g, &lat.lat); st != IGX_OK) return fail(st, "lattice");
    StringOut csv;
    igx_lattice_csv(lat.lat, &csv.ptr);
    if (lattice_out.empty())
      std::cout << csv.str();
    else if (!write_file(lattice_out, csv.str()))
      return fail(IGX_ERR_UNKNOWN, "cannot write " + lattice_out);
    return kExitOk;
  }

  if (igraph_cmd->parsed()) {
    GroupHandle g;
    if (int rc = build_group(igraph_spec, max_order, g)) return rc;
    LatticeHandle lat;
    if (igx_status st = igx_lattice_enumerate(g.g, &lat.lat); st != IGX_OK) return fail(st, "lattice");
    GraphHandle graph;
    if (igx_status st = igx_intersection_graph(lat.lat, &graph.g); st != IGX_OK) return fail(st, "graph");
    StringOut text;
    if (igx_status st = igx_graph_export(graph.g, igraph_fmt.c_str(), &text.ptr); st != IGX_OK)
      return fail(st, "export");
    if (igraph_out.empty())
      std::cout << text.str();
    else if (!write_file(igraph_out, text.str()))
      return fail(IGX_ERR_UNKNOWN, "cannot write " + igraph_out);
    return kExitOk;
  }

  if (classify_cmd->parsed()) {
    GroupHandle g;
    if (int rc = build_group(classify_spec, max_order, g)) return rc;
    igx_report* rep = nullptr;
    if (igx_status st = igx_classify(g.g, genus_budget, search_budget, &rep); st != IGX_OK)
      return fail(st, "classify");
    StringOut text;
    igx_report_render(rep, &text.ptr);
    std::cout << text.str();
    int rc = kExitOk;
    if (!classify_dir.empty()) {
      StringOut spec_text;
      igx_group_spec_text(g.g, &spec_text.ptr);
      std::string dir = classify_dir + "/" + slug_of(spec_text.str());
      std::string mk = "mkdir -p '" + dir + "'";
      if (std::system(mk.c_str()) != 0) rc = kExitUsage;
      LatticeHandle lat;
      GraphHandle graph;
      if (rc == kExitOk && igx_lattice_enumerate(g.g, &lat.lat) == IGX_OK &&
          igx_intersection_graph(lat.lat, &graph.g) == IGX_OK) {
        StringOut adj, dot, csv;
        igx_graph_export(graph.g, "adjacency", &adj.ptr);
        igx_graph_export(graph.g, "dot", &dot.ptr);
        igx_lattice_csv(lat.lat, &csv.ptr);
        write_file(dir + "/report.txt", text.str());
        write_file(dir + "/graph.adj", adj.str());
        write_file(dir + "/graph.dot", dot.str());
        write_file(dir + "/lattice.csv", csv.str());
      }
    }
    igx_report_free(rep);
    return rc;
  }

  if (verify_cmd->parsed()) {
    StringOut csv;
    int passes = 0, fails = 0, flagged = 0, budgets = 0;
    igx_status st = igx_verify_suite(verify_suite.c_str(), verify_max_order, genus_budget, search_budget, &csv.ptr,
                                     &passes, &fails, &flagged, &budgets);
    if (st != IGX_OK) return fail(st, "verify " + verify_suite);
    if (!verify_dir.empty()) {
      std::string mk = "mkdir -p '" + verify_dir + "'";
      if (std::system(mk.c_str()) != 0) return kExitUsage;
      write_file(verify_dir + "/" + verify_suite + ".csv", csv.str());
    } else {
      std::cout << csv.str();
    }
    std::cerr << verify_suite << ": " << passes << " pass, " << fails << " fail, " << flagged << " flagged, "
              << budgets << " budget\n";
    if (fails > 0) return kExitPropertyFailure;
    if (budgets > 0) return kExitBudget;
    return kExitOk;
  }

  auto run_genus = [&](const std::string& file, bool orientable) {
    std::string text = read_file(file);
    if (text.empty()) {
      std::cerr << "igx: cannot read " << file << "\n";
      return kExitUsage;
    }
    GraphHandle graph;
    if (igx_status st = igx_graph_from_adjacency(text.c_str(), &graph.g); st != IGX_OK) return fail(st, file);
    int lower = 0, upper = 0, exact = 0;
    igx_status st = orientable ? igx_graph_genus(graph.g, genus_budget, &lower, &upper, &exact)
                               : igx_graph_crosscap(graph.g, genus_budget, &lower, &upper, &exact);
    if (st != IGX_OK) return fail(st, "search");
    if (exact) {
      std::cout << lower << "\n";
      return kExitOk;
    }
    std::cout << "bounds [" << lower << ", " << (upper < 0 ? std::string("?") : std::to_string(upper)) << "]\n";
    return kExitBudget;
  };
  if (genus_cmd->parsed()) return run_genus(genus_file, true);
  if (crosscap_cmd->parsed()) return run_genus(crosscap_file, false);

  return kExitUsage;
}
