#ifndef IGX_CLASSIFY_HPP
#define IGX_CLASSIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "igx/embed.hpp"
#include "igx/graph.hpp"
#include "igx/group.hpp"
#include "igx/lattice.hpp"

namespace igx {

// One vertex per proper nontrivial subgroup, in canonical lattice order;
// edges join subgroups meeting beyond the identity.
Graph intersection_graph(const Lattice& lat);

// The published model for a family's intersection graph, when one exists and
// its side conditions hold. `note` carries corrections where the source
// contradicts itself.
struct ExpectedModel {
  std::string equation;  // e.g. "2.6"
  GraphExpr expr;
  std::string note;      // nonempty when the printed formula needed fixing
};
std::optional<ExpectedModel> expected_model_for(const FamilySpec& spec);

struct Budgets {
  int max_order = kDefaultOrderBudget;
  long long genus_nodes = 100'000'000;
  long long search_nodes = 10'000'000;
};

struct Classification {
  std::string name;
  std::string spec_text;
  int order = 0;
  int vertices = 0, edges = 0;
  bool planar = false;
  bool toroidal = false;
  bool projective_planar = false;
  GenusResult orientable;
  GenusResult nonorientable;
  int girth_value = kInfiniteGirth;
  StructuralFlags flags;
  std::map<std::string, bool> x_free_flags;  // K5 K4 C4 C5 P2 P3 P4 K13 K14 K23
  int alpha = -1;
  int theta = -1;
  int prime_order_subgroups = -1;
  std::vector<std::string> witnesses;
  bool budget_exceeded = false;

  std::string render_text() const;
};

Classification classify(const Group& g, const Budgets& budgets = {});

struct SuiteRow {
  std::string suite;
  std::string family;
  std::string params;  // canonical spec text
  int order = 0;
  std::string property;
  std::string computed;
  std::string expected;
  std::string status;  // pass | fail | flagged | budget
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteRow> rows;
  int passes = 0, fails = 0, flagged = 0, budgets = 0;

  void add(SuiteRow row);
  bool ok() const { return fails == 0; }
  std::string to_csv() const;
  std::string summary() const;
};

const std::vector<std::string>& suite_names();
SuiteReport verify_claims(const std::string& suite, int max_order, const Budgets& budgets = {});

// Deterministic family sweep: every constructible catalog member with group
// order <= max_order.
std::vector<FamilySpec> default_catalog(int max_order);

struct UniquenessReport {
  std::string target;
  std::vector<std::string> matches;      // catalog members with isomorphic graphs, isomorphic groups
  std::vector<std::string> violations;   // isomorphic graphs from non-isomorphic groups
  bool ok() const { return violations.empty(); }
};

UniquenessReport uniqueness_check(const FamilySpec& target, const std::vector<FamilySpec>& catalog, int max_order);

}  // namespace igx

#endif
