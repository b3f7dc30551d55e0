// Acceptance harness: one check per numbered criterion, one PASS/FAIL line
// each. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "igx/classify.hpp"
#include "igx/error.hpp"

using namespace igx;

namespace {

int g_failures = 0;

struct Criterion {
  std::string label;
  std::vector<std::string> problems;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Criterion(std::string l) : label(std::move(l)) {}
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  void finish() {
    auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (problems.empty()) {
      std::printf("[PASS] %s (%lld ms)\n", label.c_str(), (long long)ms);
    } else {
      ++g_failures;
      std::printf("[FAIL] %s (%lld ms)\n", label.c_str(), (long long)ms);
      for (const auto& p : problems) std::printf("       - %s\n", p.c_str());
    }
    std::fflush(stdout);
  }
};

Graph igraph_of(const std::string& spec) { return intersection_graph(Lattice::enumerate(build_family(spec))); }

std::string fixture_dir() {
  std::filesystem::create_directories("acceptance_fixtures");
  return "acceptance_fixtures";
}

// ---------------------------------------------------------------- criterion 1

void criterion_closed_forms() {
  Criterion c("criterion 1: genus and crosscap closed forms on K_n and K_{m,n}");
  const std::vector<std::pair<int, int>> kn_genus = {{3, 0}, {4, 0}, {5, 1}, {6, 1}, {7, 1}, {8, 2}};
  for (auto [n, want] : kn_genus) {
    GenusBudget b;
    GenusResult r = orientable_genus(GraphExpr::K(n).eval(), b);
    c.expect(r.exact && r.lower == want && want == closed_form_genus(ClosedForm::KnGenus, n),
             "genus K" + std::to_string(n));
  }
  const std::vector<std::tuple<int, int, int>> kmn_genus = {{3, 3, 1}, {4, 4, 1}, {3, 5, 1}, {3, 6, 1}};
  for (auto [m, n, want] : kmn_genus) {
    GenusBudget b;
    GenusResult r = orientable_genus(GraphExpr::Kmn(m, n).eval(), b);
    c.expect(r.exact && r.lower == want && want == closed_form_genus(ClosedForm::KmnGenus, m, n),
             "genus K" + std::to_string(m) + "," + std::to_string(n));
  }
  const std::vector<std::pair<int, int>> kn_cross = {{3, 0}, {4, 0}, {5, 1}, {6, 1}, {7, 3}};
  for (auto [n, want] : kn_cross) {
    GenusBudget b;
    GenusResult r = nonorientable_genus(GraphExpr::K(n).eval(), b);
    c.expect(r.exact && r.lower == want && want == closed_form_genus(ClosedForm::KnCrosscap, n),
             "crosscap K" + std::to_string(n));
  }
  const std::vector<std::tuple<int, int, int>> kmn_cross = {{3, 3, 1}, {4, 4, 2}, {3, 5, 2}};
  for (auto [m, n, want] : kmn_cross) {
    GenusBudget b;
    GenusResult r = nonorientable_genus(GraphExpr::Kmn(m, n).eval(), b);
    c.expect(r.exact && r.lower == want && want == closed_form_genus(ClosedForm::KmnCrosscap, m, n),
             "crosscap K" + std::to_string(m) + "," + std::to_string(n));
  }
  c.finish();
}

// ---------------------------------------------------------------- criterion 2

void criterion_formulas() {
  Criterion c("criterion 2: formula isomorphism suite (order <= 256, >= 40 instances)");
  SuiteReport rep = verify_claims("formulas", 256);
  c.expect(rep.fails == 0, "suite reported " + std::to_string(rep.fails) + " failures");
  c.expect(rep.passes >= 40, "only " + std::to_string(rep.passes) + " clean passes");
  for (const auto& row : rep.rows)
    if (row.status == "flagged")
      c.expect(!row.witness.empty(), "flagged row without a correction note: " + row.params);
  c.finish();
}

// ---------------------------------------------------------------- criterion 3

void criterion_planar_catalog() {
  Criterion c("criterion 3: planar catalog, both directions (order <= 256)");
  SuiteReport rep = verify_claims("planar-catalog", 256);
  for (const auto& row : rep.rows)
    if (row.status == "fail") c.expect(false, row.params + ": " + row.computed + " vs " + row.expected);
  c.expect(rep.rows.size() >= 300, "catalog unexpectedly small");
  c.finish();
}

// ---------------------------------------------------------------- criterion 4

void criterion_toroidal() {
  Criterion c("criterion 4: toroidal suite instances with re-verified schemes");
  const std::vector<std::string> listed = {
      "cyclic:64",  "cyclic:128", "cyclic:256", "cyclic:24", "cyclic:48", "cyclic:36",
      "abelian:6x3", "abelian:15x3", "abelian:9x3", "abelian:25x5",
      "modular:3,3", "modular:5,3", "modular:2,4",
      "sd:q=3,p=2,a=2,t=1", "sd:q=5,p=2,a=2,t=1", "dihedral:18", "dihedral:50",
      "mat:p=5,m=6"};
  for (const auto& spec : listed) {
    Graph g = igraph_of(spec);
    GenusBudget b;
    GenusResult r = orientable_genus(g, b, 1);
    if (!(r.exact && r.lower == 1) || !r.scheme) {
      std::string detail = r.exact ? "genus " + std::to_string(r.lower) : "genus >= " + std::to_string(r.lower);
      auto cert = nontoroidality_certificate(g);
      if (cert) detail += " (certificate " + cert->kind + ")";
      c.expect(false, spec + ": expected genus 1, computed " + detail);
      continue;
    }
    FaceTrace t = trace_faces(g, *r.scheme);
    c.expect(t.euler_genus == 2 && t.orientable, spec + ": stored scheme fails re-verification");
    std::ofstream out(fixture_dir() + "/torus-" + spec.substr(0, spec.find(':')) + "-" +
                      std::to_string(build_family(spec).order()) + ".scheme");
    out << r.scheme->to_text();
  }
  // The Z_{p^2 q r} entry: flagged with computed genus 2, Euler certified.
  {
    Graph z60 = igraph_of("cyclic:60");
    auto cert = nontoroidality_certificate(z60);
    c.expect(cert.has_value() && cert->kind == "euler-bound-core", "cyclic:60 lacks the Euler certificate");
    GenusBudget b;
    GenusResult r = orientable_genus(z60, b);
    c.expect(r.exact && r.lower == 2, "cyclic:60 computed genus is not 2");
  }
  c.finish();
}

// ---------------------------------------------------------------- criterion 5

void criterion_projective() {
  Criterion c("criterion 5: projective-planar suite");
  const std::vector<std::string> listed = {"cyclic:64",   "cyclic:128",  "cyclic:24",
                                           "abelian:9x3", "abelian:6x3", "abelian:15x3",
                                           "modular:3,3", "sd:q=3,p=2,a=2,t=1", "dihedral:18"};
  for (const auto& spec : listed) {
    Graph g = igraph_of(spec);
    GenusBudget b;
    GenusResult r = nonorientable_genus(g, b, 1);
    if (!(r.exact && r.lower == 1) || !r.scheme) {
      c.expect(false, spec + ": expected crosscap 1");
      continue;
    }
    FaceTrace t = trace_faces(g, *r.scheme);
    c.expect(t.euler_genus == 1 && !t.orientable, spec + ": scheme fails re-verification");
  }
  const std::vector<std::string> excluded = {"cyclic:48",  "cyclic:36",  "cyclic:72", "modular:2,4",
                                             "abelian:25x5", "sd:q=5,p=2,a=2,t=1", "dihedral:50"};
  for (const auto& spec : excluded) {
    Graph g = igraph_of(spec);
    if (auto cert = nonprojectivity_certificate(g)) {
      if (spec == "cyclic:48")
        c.expect(cert->kind == "K7-subgraph", "cyclic:48 certificate is " + cert->kind + ", wanted K7");
      if (spec == "cyclic:72")  // the named route exists even when K7 is found first
        c.expect(find_subgraph(g, GraphExpr::Kmn(3, 5).eval()).has_value(), "cyclic:72 lacks a K3,5 subgraph");
      continue;
    }
    GenusBudget b;
    GenusResult r = nonorientable_genus(g, b, 1);
    c.expect(!(r.exact && r.lower == 1), spec + ": expected crosscap != 1");
  }
  c.finish();
}

// ---------------------------------------------------------------- criterion 6

void criterion_k5() {
  Criterion c("criterion 6: K5-free families and K5 witnesses");
  Graph k5 = GraphExpr::K(5).eval();
  const std::vector<std::string> free_instances = {
      "abelian:2x2", "abelian:4x2", "abelian:6x2", "genq:8", "modular:2,3",
      "sd:q=3,p=2,a=1,t=1", "sd:q=5,p=2,a=2,t=2",
      "perm:deg=4,gens=(123);(12)(34)", "mat:p=5,m=3", "g3:p=7,q=2,r=3"};
  for (const auto& spec : free_instances)
    c.expect(!find_subgraph(igraph_of(spec), k5).has_value(), spec + " should be K5-free");
  const std::vector<std::string> witnesses = {"cyclic:24",  "modular:3,3", "mat:p=3,m=3",
                                              "perm:deg=4,gens=(1234);(12)", "perm:deg=5,gens=(12345);(123)",
                                              "dihedral:12"};
  for (const auto& spec : witnesses) {
    Graph g = igraph_of(spec);
    auto w = find_subgraph(g, k5);
    c.expect(w.has_value(), spec + " should contain K5");
    if (w)
      for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
          c.expect(g.adjacent((*w)[a], (*w)[b]), spec + ": K5 witness is not a clique");
  }
  SuiteReport rep = verify_claims("k5-free", 128);
  c.expect(rep.fails == 0, "k5-free suite: " + std::to_string(rep.fails) + " failures");
  c.finish();
}

// ---------------------------------------------------------------- criterion 7

void criterion_corollary51() {
  Criterion c("criterion 7: corollary items (1)-(15) over the catalog (order <= 200)");
  SuiteReport rep = verify_claims("corollary-5.1", 200);
  int shown = 0;
  for (const auto& row : rep.rows)
    if (row.status == "fail" && shown++ < 10)
      c.expect(false, row.params + " " + row.property + ": " + row.computed + " vs " + row.expected);
  c.expect(rep.fails == 0, std::to_string(rep.fails) + " failing rows in total");
  c.finish();
}

// ---------------------------------------------------------------- criterion 8

void criterion_clique_cover() {
  Criterion c("criterion 8: theta = alpha = prime-order subgroup count (order <= 100)");
  SuiteReport rep = verify_claims("clique-cover", 100);
  for (const auto& row : rep.rows)
    if (row.status != "pass") c.expect(false, row.params + ": " + row.computed + " (" + row.status + ")");
  c.expect(int(rep.rows.size()) >= 60, "only " + std::to_string(rep.rows.size()) + " catalog groups covered");
  c.finish();
}

// ---------------------------------------------------------------- criterion 9

void criterion_lattice_invariants() {
  Criterion c("criterion 9: p-group subgroup counts mod p and Sylow congruences (order <= 256)");
  int pgroups = 0;
  for (const auto& spec : default_catalog(256)) {
    Group g = build_family(spec);
    Lattice lat = Lattice::enumerate(g);
    // Sylow congruence for every prime divisor.
    for (int p = 2; p <= g.order(); ++p) {
      if (!is_prime(p) || g.order() % p) continue;
      c.expect(lat.sylow_count(p) % p == 1, spec.text() + ": Sylow count for p=" + std::to_string(p));
    }
    // p-group layer counts: 1 mod p at every order p^s.
    int n = g.order();
    int p = 0;
    for (int q = 2; q <= n; ++q)
      if (is_prime(q) && n % q == 0) {
        p = q;
        break;
      }
    bool is_p_group = true;
    for (int m = n; m > 1; m /= p)
      if (m % p) {
        is_p_group = false;
        break;
      }
    if (!is_p_group) continue;
    ++pgroups;
    for (long long ps = p; ps < n; ps *= p)
      c.expect(lat.count_of_order(int(ps)) % p == 1,
               spec.text() + ": subgroup count at order " + std::to_string(ps));
  }
  c.expect(pgroups >= 25, "too few p-groups exercised");
  c.finish();
}

// ---------------------------------------------------------------- criterion 10

void criterion_oracles() {
  Criterion c("criterion 10: oracle cross-checks");
  // (a) refinement isomorphism vs permutation brute force on all pairs of
  // catalog graphs with <= 7 vertices.
  std::vector<Graph> small;
  for (const auto& spec : default_catalog(128)) {
    Graph g = igraph_of(spec.text());
    if (g.vertex_count() <= 7 && g.vertex_count() > 0) small.push_back(g);
  }
  int checked = 0;
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i; j < small.size(); ++j) {
      if (small[i].vertex_count() != small[j].vertex_count() ||
          small[i].edge_count() != small[j].edge_count())
        continue;
      ++checked;
      bool fast = find_isomorphism(small[i], small[j]).has_value();
      bool brute = find_isomorphism_bruteforce(small[i], small[j]).has_value();
      c.expect(fast == brute, "iso disagreement on catalog pair");
    }
  c.expect(checked >= 50, "too few comparable small pairs");

  // (b) genus additivity over random disjoint unions.
  std::vector<GraphExpr> pool = {GraphExpr::K(5), GraphExpr::Kmn(3, 3), GraphExpr::K(4),
                                 GraphExpr::C(5), GraphExpr::K(6),      GraphExpr::Kmn(3, 4)};
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 10; ++trial) {
    const GraphExpr& a = pool[rng() % pool.size()];
    const GraphExpr& b = pool[rng() % pool.size()];
    GenusBudget b1, b2, b3;
    int ga = orientable_genus(a.eval(), b1).lower;
    int gb = orientable_genus(b.eval(), b2).lower;
    GenusResult ru = orientable_genus(GraphExpr::disjoint(a, b).eval(), b3);
    c.expect(ru.exact && ru.lower == ga + gb, "additivity failed on a union");
    if (ru.scheme) {
      FaceTrace t = trace_faces(GraphExpr::disjoint(a, b).eval(), *ru.scheme);
      c.expect(t.euler_genus == 2 * ru.lower, "union scheme retrace mismatch");
    }
  }

  // (c) every returned scheme re-traces to its claimed genus.
  for (const char* spec : {"cyclic:64", "abelian:9x3", "dihedral:18", "modular:2,4", "sd:q=3,p=2,a=2,t=1"}) {
    Graph g = igraph_of(spec);
    GenusBudget bo, bn;
    GenusResult r = orientable_genus(g, bo);
    c.expect(r.exact && r.scheme.has_value(), std::string(spec) + ": no scheme");
    if (r.scheme) {
      FaceTrace t = trace_faces(g, *r.scheme);
      c.expect(t.orientable && t.euler_genus == 2 * r.lower, std::string(spec) + ": orientable retrace");
    }
    GenusResult rc = nonorientable_genus(g, bn);
    if (rc.exact && rc.scheme && rc.lower > 0) {
      FaceTrace t = trace_faces(g, *rc.scheme);
      c.expect(!t.orientable && t.euler_genus == rc.lower, std::string(spec) + ": nonorientable retrace");
    }
  }
  c.finish();
}

// ---------------------------------------------------------------- criterion 11

void criterion_projective_implies_toroidal() {
  Criterion c("criterion 11: projective-planar implies toroidal across the catalog");
  int projective_count = 0;
  for (const auto& spec : default_catalog(150)) {
    Graph g = igraph_of(spec.text());
    if (is_planar(g).planar) continue;
    GenusBudget bn;
    GenusResult rc = nonorientable_genus(g, bn, 1);
    if (!(rc.exact && rc.lower == 1)) continue;
    ++projective_count;
    GenusBudget bo;
    GenusResult r = orientable_genus(g, bo, 1);
    c.expect(r.exact && r.lower == 1, spec.text() + ": projective-planar but not toroidal");
  }
  c.expect(projective_count >= 8, "too few projective-planar instances seen");
  c.finish();
}

}  // namespace

int main() {
  std::printf("acceptance checks\n=================\n");
  criterion_closed_forms();
  criterion_formulas();
  criterion_planar_catalog();
  criterion_toroidal();
  criterion_projective();
  criterion_k5();
  criterion_corollary51();
  criterion_clique_cover();
  criterion_lattice_invariants();
  criterion_oracles();
  criterion_projective_implies_toroidal();
  if (g_failures) {
    std::printf("=================\n%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("=================\nall criteria passed\n");
  return 0;
}
