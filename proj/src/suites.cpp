// Executable verification suites: each replays one published classification
// over the constructible catalog, checking both directions of the stated
// equivalences and certifying every negative decision.

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "igx/classify.hpp"
#include "igx/error.hpp"

namespace igx {

void SuiteReport::add(SuiteRow row) {
  if (row.status == "pass") ++passes;
  else if (row.status == "fail") ++fails;
  else if (row.status == "flagged") ++flagged;
  else ++budgets;
  rows.push_back(std::move(row));
}

std::string SuiteReport::to_csv() const {
  std::ostringstream o;
  o << "suite,family,params,order,property,computed,expected,status,witness\n";
  for (const auto& r : rows) {
    auto esc = [](const std::string& s) {
      std::string t = s;
      for (auto& c : t)
        if (c == ',') c = ';';
      return t;
    };
    o << r.suite << ',' << esc(r.family) << ',' << esc(r.params) << ',' << r.order << ',' << esc(r.property) << ','
      << esc(r.computed) << ',' << esc(r.expected) << ',' << r.status << ',' << esc(r.witness) << '\n';
  }
  return o.str();
}

std::string SuiteReport::summary() const {
  std::ostringstream o;
  o << suite << ": " << passes << " pass, " << fails << " fail, " << flagged << " flagged, " << budgets
    << " budget (" << rows.size() << " rows)";
  return o.str();
}

namespace {

std::vector<std::pair<int, int>> factor(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; (long long)p * p <= n; ++p) {
    if (n % p) continue;
    int a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.emplace_back(p, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::string family_name(const FamilySpec& spec) {
  struct V {
    std::string operator()(const CyclicSpec&) const { return "cyclic"; }
    std::string operator()(const AbelianSpec&) const { return "abelian"; }
    std::string operator()(const DihedralSpec&) const { return "dihedral"; }
    std::string operator()(const QuaternionSpec&) const { return "genq"; }
    std::string operator()(const ModularSpec&) const { return "modular"; }
    std::string operator()(const SemidirectCyclicSpec&) const { return "sd"; }
    std::string operator()(const MatrixActionSpec&) const { return "mat"; }
    std::string operator()(const G3Spec&) const { return "g3"; }
    std::string operator()(const PermutationSpec&) const { return "perm"; }
    std::string operator()(const DirectProductSpec&) const { return "prod"; }
  };
  return std::visit(V{}, spec.value);
}

// --- family shape predicates ---------------------------------------------------

// Exponent profile of a cyclic order: {alpha_i} sorted descending.
std::vector<int> cyclic_profile(int n) {
  std::vector<int> out;
  for (auto [p, a] : factor(n)) out.push_back(a);
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

bool is_cyclic(const FamilySpec& s, int& n) {
  if (auto* c = std::get_if<CyclicSpec>(&s.value)) {
    n = c->n;
    return true;
  }
  return false;
}

// Abelian profile as sorted factor orders, e.g. Z9 x Z3 -> {9, 3}.
bool abelian_profile(const FamilySpec& s, std::vector<int>& orders) {
  if (auto* a = std::get_if<AbelianSpec>(&s.value)) {
    orders = a->orders;
    std::sort(orders.begin(), orders.end(), std::greater<int>());
    return true;
  }
  return false;
}

bool is_zq_rtimes_zp(const FamilySpec& s) {  // nonabelian of order pq
  if (auto* sd = std::get_if<SemidirectCyclicSpec>(&s.value))
    return is_prime(sd->q) && sd->alpha == 1 && sd->t == 1;
  if (auto* d = std::get_if<DihedralSpec>(&s.value)) return is_prime(d->order / 2) && d->order / 2 > 2;
  return false;
}

bool is_zq_rtimes2_zp2(const FamilySpec& s) {
  if (auto* sd = std::get_if<SemidirectCyclicSpec>(&s.value))
    return is_prime(sd->q) && sd->alpha == 2 && sd->t == 2;
  return false;
}

bool is_zq_rtimes_zp2(const FamilySpec& s) {  // order qp^2, action of order p
  if (auto* sd = std::get_if<SemidirectCyclicSpec>(&s.value))
    return is_prime(sd->q) && sd->alpha == 2 && sd->t == 1;
  return false;
}

// Matrix-action groups where no proper acting power is scalar (these are the
// groups whose published models exist; see classify.cpp).
bool mat_no_scalar_powers(const MatrixActionSpec& m) {
  // Rebuild the matrix deterministically and walk its powers.
  try {
    Group g = build_family(FamilySpec{MatrixActionSpec{m.p, m.m, m.matrix}}, 1 << 20);
    (void)g;
  } catch (const Error&) {
    return false;
  }
  // Scalar power of the action <=> some c^k with 0 < k < m is central in
  // the subgroup it generates with a, b... simpler: test on exponents.
  // Use the same linear algebra as the builder.
  int p = m.p;
  std::array<int, 4> M{0, p - 1, 1, 0};
  if (m.matrix) {
    M = *m.matrix;
    for (auto& x : M) x = ((x % p) + p) % p;
  } else {
    bool found = false;
    for (int l = 0; l < p && !found; ++l) {
      std::array<int, 4> cand{0, p - 1, 1, l};
      std::array<int, 4> acc = cand;
      int order = 0;
      for (int k = 1; k <= m.m; ++k) {
        if (acc[0] == 1 && acc[1] == 0 && acc[2] == 0 && acc[3] == 1) {
          order = k;
          break;
        }
        std::array<int, 4> nx{int(((long long)acc[0] * cand[0] + (long long)acc[1] * cand[2]) % p),
                              int(((long long)acc[0] * cand[1] + (long long)acc[1] * cand[3]) % p),
                              int(((long long)acc[2] * cand[0] + (long long)acc[3] * cand[2]) % p),
                              int(((long long)acc[2] * cand[1] + (long long)acc[3] * cand[3]) % p)};
        acc = nx;
      }
      if (order == m.m) {
        M = cand;
        found = true;
      }
    }
    if (!found) return false;
  }
  std::array<int, 4> acc = M;
  for (int k = 1; k < m.m; ++k) {
    if (acc[1] == 0 && acc[2] == 0 && acc[0] == acc[3]) return false;
    std::array<int, 4> nx{int(((long long)acc[0] * M[0] + (long long)acc[1] * M[2]) % p),
                          int(((long long)acc[0] * M[1] + (long long)acc[1] * M[3]) % p),
                          int(((long long)acc[2] * M[0] + (long long)acc[3] * M[2]) % p),
                          int(((long long)acc[2] * M[1] + (long long)acc[3] * M[3]) % p)};
    acc = nx;
  }
  return true;
}

bool is_g1_family(const FamilySpec& s) {  // (Zp x Zp) x| Zq, q prime dividing p+1, fixed-point-free powers
  if (auto* m = std::get_if<MatrixActionSpec>(&s.value)) {
    auto f = factor(m->m);
    return f.size() == 1 && f[0].second == 1 && (m->p + 1) % m->m == 0 && mat_no_scalar_powers(*m);
  }
  return false;
}

bool is_g2_family(const FamilySpec& s) {  // (Zp x Zp) x| Z_{q^2}
  if (auto* m = std::get_if<MatrixActionSpec>(&s.value)) {
    auto f = factor(m->m);
    return f.size() == 1 && f[0].second == 2 && (m->p + 1) % m->m == 0 && mat_no_scalar_powers(*m);
  }
  return false;
}

bool is_qr_family(const FamilySpec& s) {  // (Zp x Zp) x| Z_{qr}, q < r odd primes
  if (auto* m = std::get_if<MatrixActionSpec>(&s.value)) {
    auto f = factor(m->m);
    return f.size() == 2 && f[0].second == 1 && f[1].second == 1 && f[0].first != 2 &&
           (m->p + 1) % m->m == 0 && mat_no_scalar_powers(*m);
  }
  return false;
}

bool is_g3_family(const FamilySpec& s) { return std::holds_alternative<G3Spec>(s.value); }

bool is_a4(const FamilySpec& s) {
  if (auto* pm = std::get_if<PermutationSpec>(&s.value)) return pm->degree == 4 && s.text().find("(1,2,3)") != std::string::npos;
  if (auto* m = std::get_if<MatrixActionSpec>(&s.value)) return m->p == 2 && m->m == 3;
  return false;
}

bool is_m8(const FamilySpec& s) {
  if (auto* m = std::get_if<ModularSpec>(&s.value)) return m->p == 2 && m->alpha == 3;
  if (auto* d = std::get_if<DihedralSpec>(&s.value)) return d->order == 8;
  return false;
}

bool is_q8(const FamilySpec& s) {
  if (auto* q = std::get_if<QuaternionSpec>(&s.value)) return q->order == 8;
  return false;
}

bool abelian_is(const FamilySpec& s, std::vector<int> want) {
  std::vector<int> profile;
  if (!abelian_profile(s, profile)) return false;
  std::sort(want.begin(), want.end(), std::greater<int>());
  return profile == want;
}

bool is_zp_zp(const FamilySpec& s) {
  std::vector<int> profile;
  if (!abelian_profile(s, profile)) return false;
  return profile.size() == 2 && profile[0] == profile[1] && is_prime(profile[0]);
}

bool is_zp2_zp(const FamilySpec& s, int& p) {
  std::vector<int> profile;
  if (!abelian_profile(s, profile)) return false;
  if (profile.size() != 2) return false;
  auto f = factor(profile[0]);
  if (f.size() == 1 && f[0].second == 2 && profile[1] == f[0].first) {
    p = f[0].first;
    return true;
  }
  return false;
}

bool is_z3q_z3(const FamilySpec& s) {  // Z_{3q} x Z_3, q prime != 3
  std::vector<int> profile;
  if (!abelian_profile(s, profile)) return false;
  if (profile.size() != 2 || profile[1] != 3) return false;
  return profile[0] % 3 == 0 && is_prime(profile[0] / 3) && profile[0] / 3 != 3;
}

bool is_z2q_z2(const FamilySpec& s) {  // Z_{2q} x Z2, q odd prime
  std::vector<int> profile;
  if (!abelian_profile(s, profile)) return false;
  if (profile.size() != 2 || profile[1] != 2) return false;
  return profile[0] % 2 == 0 && is_prime(profile[0] / 2) && profile[0] / 2 != 2;
}

bool cyclic_profile_is(int n, std::vector<int> want) {
  auto prof = cyclic_profile(n);
  std::sort(want.begin(), want.end(), std::greater<int>());
  return prof == want;
}

// Theorem 2.5 membership (planar catalog).
bool thm25_planar_member(const FamilySpec& s) {
  int n;
  if (is_cyclic(s, n)) {
    auto prof = cyclic_profile(n);
    if (prof.size() == 1) return prof[0] >= 2 && prof[0] <= 5;
    if (prof.size() == 2) return prof[0] <= 2 && prof[1] == 1;
    if (prof.size() == 3) return prof[0] == 1 && prof[1] == 1 && prof[2] == 1;
    return false;
  }
  if (is_zp_zp(s) || abelian_is(s, {4, 2}) || is_z2q_z2(s)) return true;
  if (is_q8(s) || is_m8(s)) return true;
  if (is_zq_rtimes_zp(s) || is_zq_rtimes2_zp2(s)) return true;
  if (is_a4(s) || is_g1_family(s) || is_g2_family(s) || is_g3_family(s)) return true;
  return false;
}

// Theorem 5.2(1): K5-free (non-cyclic part); cyclic handled by Thm 2.4(2).
bool thm52_k5free_member(const FamilySpec& s) {
  int n;
  if (is_cyclic(s, n)) return thm25_planar_member(s);
  if (is_zp_zp(s) || abelian_is(s, {4, 2}) || is_z2q_z2(s)) return true;
  if (is_q8(s) || is_m8(s)) return true;
  if (is_zq_rtimes_zp(s) || is_zq_rtimes2_zp2(s)) return true;
  if (is_a4(s) || is_g1_family(s) || is_g2_family(s) || is_g3_family(s) || is_qr_family(s)) return true;
  return false;
}

// Theorem 5.1(1): toroidal list.
bool thm51_toroidal_member(const FamilySpec& s, bool& flagged_entry) {
  flagged_entry = false;
  int n;
  if (is_cyclic(s, n)) {
    auto prof = cyclic_profile(n);
    if (prof.size() == 1) return prof[0] >= 6 && prof[0] <= 8;
    if (prof.size() == 2 && prof[1] == 1) return prof[0] == 3 || prof[0] == 4;
    if (prof.size() == 2 && prof[0] == 2 && prof[1] == 2) return true;
    if (prof.size() == 3 && prof[0] == 2 && prof[1] == 1 && prof[2] == 1) {
      // Z_{p^2 q r}: listed as toroidal but refuted by the Euler count on
      // its own instance generator; reported flagged, not toroidal.
      flagged_entry = true;
      return false;
    }
    return false;
  }
  int p;
  if (is_zp2_zp(s, p)) return p == 3 || p == 5;
  if (is_z3q_z3(s)) return true;
  if (auto* m = std::get_if<ModularSpec>(&s.value))
    return (m->alpha == 3 && (m->p == 3 || m->p == 5)) || (m->p == 2 && m->alpha == 4);
  if (auto* sd = std::get_if<SemidirectCyclicSpec>(&s.value)) {
    if (sd->t != 1) return false;
    if (sd->alpha == 2 && sd->p == 2 && (sd->q == 3 || sd->q == 5)) return true;   // Z3:Z4, Z5:Z4
    if (sd->alpha == 1 && sd->p == 2 && (sd->q == 9 || sd->q == 25)) return true;  // Z9:Z2, Z25:Z2
    return false;
  }
  if (auto* d = std::get_if<DihedralSpec>(&s.value)) return d->order == 18 || d->order == 50;
  if (is_qr_family(s)) {
    if (auto* m = std::get_if<MatrixActionSpec>(&s.value)) return m->p == 5;
  }
  return false;
}

// Theorem 5.1(2): projective-planar list.
bool thm51_projective_member(const FamilySpec& s) {
  int n;
  if (is_cyclic(s, n)) {
    auto prof = cyclic_profile(n);
    if (prof.size() == 1) return prof[0] == 6 || prof[0] == 7;
    if (prof.size() == 2 && prof[1] == 1) return prof[0] == 3;
    return false;
  }
  int p;
  if (is_zp2_zp(s, p)) return p == 3;
  if (is_z3q_z3(s)) return true;
  if (auto* m = std::get_if<ModularSpec>(&s.value)) return m->alpha == 3 && m->p == 3;
  if (auto* sd = std::get_if<SemidirectCyclicSpec>(&s.value)) {
    if (sd->t != 1) return false;
    if (sd->alpha == 2 && sd->p == 2 && sd->q == 3) return true;  // Z3:Z4
    if (sd->alpha == 1 && sd->p == 2 && sd->q == 9) return true;  // Z9:Z2
    return false;
  }
  if (auto* d = std::get_if<DihedralSpec>(&s.value)) return d->order == 18;
  return false;
}

// Theorem 5.2(2) list (non-cyclic): C3-free = acyclic = bipartite.
bool thm52_acyclic_member(const FamilySpec& s) {
  return is_zp_zp(s) || is_zq_rtimes_zp(s) || is_a4(s) || is_g1_family(s);
}

struct Instance {
  FamilySpec spec;
  Group group;
  Lattice lat;
  Graph graph;
};

Instance make_instance(const FamilySpec& spec, int max_order) {
  Group g = build_family(spec, max_order);
  Lattice lat = Lattice::enumerate(g);
  Graph ig = intersection_graph(lat);
  return Instance{spec, std::move(g), std::move(lat), std::move(ig)};
}

SuiteRow row_for(const std::string& suite, const Instance& inst, const std::string& property,
                 const std::string& computed, const std::string& expected, const std::string& status,
                 const std::string& witness = "") {
  return SuiteRow{suite,    family_name(inst.spec), inst.spec.text(), inst.group.order(), property, computed,
                  expected, status,                 witness};
}

// --- suite: formulas --------------------------------------------------------------

void run_formulas(SuiteReport& rep, int max_order, const Budgets&) {
  for (const auto& spec : default_catalog(max_order)) {
    auto model = expected_model_for(spec);
    if (!model) continue;
    Instance inst = make_instance(spec, max_order);
    Graph expect = model->expr.eval();
    bool iso = find_isomorphism(inst.graph, expect).has_value();
    std::string status = iso ? (model->note.empty() ? "pass" : "flagged") : "fail";
    rep.add(row_for(rep.suite, inst, "isomorphic-to-eq-" + model->equation,
                    iso ? "isomorphic" : "not-isomorphic", model->expr.text(), status, model->note));
  }
}

// --- suite: planar-catalog ---------------------------------------------------------

void run_planar_catalog(SuiteReport& rep, int max_order, const Budgets&) {
  for (const auto& spec : default_catalog(max_order)) {
    Instance inst = make_instance(spec, max_order);
    bool expected = thm25_planar_member(spec);
    auto res = is_planar(inst.graph);
    std::string witness = res.planar ? "embedding" : "kuratowski:" + res.kuratowski_kind;
    rep.add(row_for(rep.suite, inst, "planar", res.planar ? "planar" : "nonplanar",
                    expected ? "planar" : "nonplanar", res.planar == expected ? "pass" : "fail", witness));
  }
}

// --- suites: toroidal / projective-planar ------------------------------------------

void run_toroidal(SuiteReport& rep, int max_order, const Budgets& budgets) {
  for (const auto& spec : default_catalog(max_order)) {
    Instance inst = make_instance(spec, max_order);
    bool flagged_entry = false;
    bool member = thm51_toroidal_member(spec, flagged_entry);
    auto planarity = is_planar(inst.graph);
    if (member) {
      if (planarity.planar) {
        rep.add(row_for(rep.suite, inst, "toroidal", "planar", "genus-1", "fail"));
        continue;
      }
      GenusBudget gb{budgets.genus_nodes, 0};
      GenusResult r = orientable_genus(inst.graph, gb, 1);
      if (r.exact && r.lower == 1 && r.scheme) {
        FaceTrace t = trace_faces(inst.graph, *r.scheme);
        bool verified = t.euler_genus == 2 && t.orientable;
        rep.add(row_for(rep.suite, inst, "toroidal", verified ? "genus-1-verified" : "scheme-retrace-mismatch",
                        "genus-1", verified ? "pass" : "fail", "embedding-scheme"));
      } else {
        rep.add(row_for(rep.suite, inst, "toroidal", "genus>=" + std::to_string(r.lower), "genus-1", "fail"));
      }
    } else {
      // Exclusion: planar, certificate, or exhaustive refutation of genus 1.
      std::string how, computed;
      bool ok = false;
      bool witnessed_member = false;  // genus-1 scheme found and re-verified
      if (planarity.planar) {
        ok = true;
        how = "planar";
        computed = "genus-0";
      } else if (auto cert = nontoroidality_certificate(inst.graph)) {
        ok = true;
        how = cert->kind;
        computed = "genus>=2";
      } else {
        GenusBudget gb{budgets.genus_nodes, 0};
        GenusResult r = orientable_genus(inst.graph, gb, 1);
        ok = !(r.exact && r.lower == 1);
        computed = r.exact ? "genus-" + std::to_string(r.lower) : "genus>=" + std::to_string(r.lower);
        how = "exhaustive-search";
        if (!ok && r.scheme) {
          FaceTrace t = trace_faces(inst.graph, *r.scheme);
          witnessed_member = t.euler_genus == 2 && t.orientable;
        }
      }
      std::string status;
      std::string note;
      if (ok) {
        status = flagged_entry ? "flagged" : "pass";
        note = flagged_entry ? "listed-toroidal-but-refuted;" + how : how;
      } else if (witnessed_member) {
        // The published list omits this group, but a genus-1 embedding
        // exists and re-traces; computed truth recorded, row flagged.
        status = "flagged";
        note = "unlisted-but-genus-1-scheme-verified";
        computed = "genus-1-verified";
      } else {
        status = "fail";
        note = how;
      }
      rep.add(row_for(rep.suite, inst, "non-toroidal", computed, "genus!=1", status, note));
    }
  }
}

void run_projective(SuiteReport& rep, int max_order, const Budgets& budgets) {
  for (const auto& spec : default_catalog(max_order)) {
    Instance inst = make_instance(spec, max_order);
    bool member = thm51_projective_member(spec);
    auto planarity = is_planar(inst.graph);
    if (member) {
      if (planarity.planar) {
        rep.add(row_for(rep.suite, inst, "projective-planar", "planar", "crosscap-1", "fail"));
        continue;
      }
      GenusBudget gb{budgets.genus_nodes, 0};
      GenusResult r = nonorientable_genus(inst.graph, gb, 1);
      if (r.exact && r.lower == 1 && r.scheme) {
        FaceTrace t = trace_faces(inst.graph, *r.scheme);
        bool verified = t.euler_genus == 1 && !t.orientable;
        rep.add(row_for(rep.suite, inst, "projective-planar",
                        verified ? "crosscap-1-verified" : "scheme-retrace-mismatch", "crosscap-1",
                        verified ? "pass" : "fail", "embedding-scheme"));
      } else {
        rep.add(row_for(rep.suite, inst, "projective-planar", "crosscap>=" + std::to_string(r.lower), "crosscap-1",
                        "fail"));
      }
    } else {
      std::string how, computed;
      bool ok = false;
      bool witnessed_member = false;
      if (planarity.planar) {
        ok = true;
        how = "planar";
        computed = "crosscap-0";
      } else if (auto cert = nonprojectivity_certificate(inst.graph)) {
        ok = true;
        how = cert->kind;
        computed = "crosscap>=2";
      } else {
        GenusBudget gb{budgets.genus_nodes, 0};
        GenusResult r = nonorientable_genus(inst.graph, gb, 1);
        ok = !(r.exact && r.lower == 1);
        computed = r.exact ? "crosscap-" + std::to_string(r.lower) : "crosscap>=" + std::to_string(r.lower);
        how = "exhaustive-search";
        if (!ok && r.scheme) {
          FaceTrace t = trace_faces(inst.graph, *r.scheme);
          witnessed_member = t.euler_genus == 1 && !t.orientable;
        }
      }
      std::string status;
      std::string note = how;
      if (ok) {
        status = "pass";
      } else if (witnessed_member) {
        status = "flagged";
        note = "unlisted-but-crosscap-1-scheme-verified";
        computed = "crosscap-1-verified";
      } else {
        status = "fail";
      }
      rep.add(row_for(rep.suite, inst, "non-projective-planar", computed, "crosscap!=1", status, note));
    }
  }
}

// --- suite: k5-free -----------------------------------------------------------------

void run_k5free(SuiteReport& rep, int max_order, const Budgets&) {
  Graph k5 = GraphExpr::K(5).eval();
  for (const auto& spec : default_catalog(max_order)) {
    Instance inst = make_instance(spec, max_order);
    bool expected_free = thm52_k5free_member(spec);
    auto witness = find_subgraph(inst.graph, k5);
    bool free = !witness.has_value();
    std::string wtext;
    if (witness) {
      std::ostringstream o;
      for (int v : *witness) o << v << ' ';
      wtext = o.str();
    }
    rep.add(row_for(rep.suite, inst, "K5-free", free ? "K5-free" : "contains-K5",
                    expected_free ? "K5-free" : "contains-K5", free == expected_free ? "pass" : "fail", wtext));
  }
}

// --- suite: bipartite-acyclic --------------------------------------------------------

void run_bipartite_acyclic(SuiteReport& rep, int max_order, const Budgets&) {
  Graph c3 = GraphExpr::C(3).eval();
  for (const auto& spec : default_catalog(max_order)) {
    Instance inst = make_instance(spec, max_order);
    StructuralFlags f = structural_predicates(inst.graph);
    bool c3free = !find_subgraph(inst.graph, c3).has_value();
    // The three properties coincide on every intersection graph here.
    bool equiv = (c3free == f.acyclic) && (f.acyclic == f.bipartite);
    rep.add(row_for(rep.suite, inst, "C3free=acyclic=bipartite",
                    equiv ? "equivalent" : "not-equivalent", "equivalent", equiv ? "pass" : "fail"));
    int n;
    if (is_cyclic(spec, n)) {
      bool expect_c3free = cyclic_profile_is(n, {2}) || cyclic_profile_is(n, {3}) || cyclic_profile_is(n, {1, 1});
      rep.add(row_for(rep.suite, inst, "C3-free", c3free ? "C3-free" : "has-C3",
                      expect_c3free ? "C3-free" : "has-C3", c3free == expect_c3free ? "pass" : "fail"));
      bool expect_bip = cyclic_profile_is(n, {3}) || cyclic_profile_is(n, {1, 1});
      std::string status = f.bipartite == expect_bip ? "pass" : "flagged";
      std::string note = status == "flagged" ? "single-vertex or empty graphs are 2-colorable" : "";
      rep.add(row_for(rep.suite, inst, "bipartite-list", f.bipartite ? "bipartite" : "not-bipartite",
                      expect_bip ? "bipartite" : "not-bipartite", status, note));
    } else {
      bool member = thm52_acyclic_member(spec);
      rep.add(row_for(rep.suite, inst, "acyclic-list", f.acyclic ? "acyclic" : "has-cycle",
                      member ? "acyclic" : "has-cycle", f.acyclic == member ? "pass" : "fail"));
    }
  }
}

// --- suite: corollary-5.1 -------------------------------------------------------------

void run_corollary51(SuiteReport& rep, int max_order, const Budgets&) {
  struct Pattern {
    std::string name;
    GraphExpr expr;
  };
  const std::vector<Pattern> xs = {{"C5", GraphExpr::C(5)},      {"C4", GraphExpr::C(4)},
                                   {"P4", GraphExpr::P(4)},      {"P3", GraphExpr::P(3)},
                                   {"P2", GraphExpr::P(2)},      {"K23", GraphExpr::Kmn(2, 3)},
                                   {"K4", GraphExpr::K(4)},      {"K14", GraphExpr::Kmn(1, 4)},
                                   {"K13", GraphExpr::Kmn(1, 3)}};

  for (const auto& spec : default_catalog(max_order)) {
    Instance inst = make_instance(spec, max_order);
    StructuralFlags f = structural_predicates(inst.graph);
    int n = 0;
    bool cyc = is_cyclic(spec, n);
    auto prof = cyc ? cyclic_profile(n) : std::vector<int>{};

    auto book = [&](const std::string& property, bool computed, bool expected, const std::string& note = "") {
      std::string status = computed == expected ? (note.empty() ? "pass" : "flagged") : "fail";
      rep.add(row_for(rep.suite, inst, property, computed ? "yes" : "no", expected ? "yes" : "no", status, note));
    };

    // (1) unicyclic, (2) cycle, (3) path, (14) tree/star/complete-bipartite.
    book("unicyclic", f.unicyclic, cyc && (prof == std::vector<int>{4} || prof == std::vector<int>{2, 1}));
    book("cycle", f.cycle, cyc && prof == std::vector<int>{4});
    book("path", f.path, cyc && prof == std::vector<int>{3});
    bool expect_tree = cyc && (prof == std::vector<int>{2} || prof == std::vector<int>{3});
    book("tree", f.tree, expect_tree);
    book("star", f.star, expect_tree);
    book("complete-bipartite", f.complete_bipartite, expect_tree);

    // (9) totally disconnected.
    bool expect_td = (cyc && (prof == std::vector<int>{2} || prof == std::vector<int>{1, 1})) || is_zp_zp(spec) ||
                     is_zq_rtimes_zp(spec);
    book("totally-disconnected", f.totally_disconnected, expect_td);

    // (15) girth is 3 or infinity; infinity exactly on the acyclic list.
    int gi = girth(inst.graph);
    bool girth_ok = (gi == 3 || gi == kInfiniteGirth);
    rep.add(row_for(rep.suite, inst, "girth-in-{3,inf}", gi == kInfiniteGirth ? "inf" : std::to_string(gi),
                    "3-or-inf", girth_ok ? "pass" : "fail"));
    bool expect_inf = (cyc && (prof == std::vector<int>{2} || prof == std::vector<int>{3} ||
                               prof == std::vector<int>{1, 1})) ||
                      is_zp_zp(spec) || is_zq_rtimes_zp(spec) || is_a4(spec) || is_g1_family(spec);
    book("girth-infinite", gi == kInfiniteGirth, expect_inf);

    // X-free items (4)-(8), (10)-(13).
    auto cyc_in = [&](std::vector<std::vector<int>> profiles) {
      if (!cyc) return false;
      for (auto& want : profiles) {
        std::sort(want.begin(), want.end(), std::greater<int>());
        if (prof == want) return true;
      }
      return false;
    };
    std::map<std::string, bool> expected_free;
    expected_free["C5"] = cyc_in({{2}, {3}, {4}, {5}, {1, 1}, {2, 1}}) || is_zp_zp(spec) ||
                          abelian_is(spec, {4, 2}) || is_q8(spec) || is_zq_rtimes_zp(spec) ||
                          is_zq_rtimes2_zp2(spec) || is_a4(spec) || is_g1_family(spec) || is_g2_family(spec);
    expected_free["C4"] = cyc_in({{2}, {3}, {4}, {1, 1}, {2, 1}}) || is_zp_zp(spec) || is_zq_rtimes_zp(spec) ||
                          is_zq_rtimes2_zp2(spec) || is_a4(spec) || is_g1_family(spec);
    expected_free["P4"] = cyc_in({{2}, {3}, {4}, {5}, {1, 1}, {2, 1}}) || is_q8(spec) || is_zp_zp(spec) ||
                          is_zq_rtimes_zp(spec) || is_g1_family(spec) || is_a4(spec);
    expected_free["P3"] = cyc_in({{2}, {3}, {4}, {1, 1}}) || is_zp_zp(spec) || is_zq_rtimes_zp(spec) ||
                          is_a4(spec) || is_g1_family(spec);
    expected_free["P2"] = cyc_in({{2}, {3}, {1, 1}}) || is_zp_zp(spec) || is_zq_rtimes_zp(spec);
    expected_free["K23"] = cyc_in({{2}, {3}, {4}, {5}, {1, 1}, {2, 1}, {1, 1, 1}}) || is_zp_zp(spec) ||
                           abelian_is(spec, {4, 2}) || is_q8(spec) || is_zq_rtimes_zp(spec) ||
                           is_zq_rtimes2_zp2(spec) || is_a4(spec) || is_g1_family(spec);
    expected_free["K4"] = cyc_in({{2}, {3}, {4}, {1, 1}, {2, 1}, {1, 1, 1}}) || is_zp_zp(spec) ||
                          is_zq_rtimes_zp(spec) || is_zq_rtimes2_zp2(spec) || is_a4(spec) || is_g1_family(spec);
    expected_free["K14"] = cyc_in({{2}, {3}, {4}, {5}, {1, 1}, {2, 1}}) || is_zp_zp(spec) || is_q8(spec) ||
                           is_zq_rtimes_zp(spec) || is_a4(spec);
    expected_free["K13"] = cyc_in({{2}, {3}, {4}, {1, 1}}) || is_zp_zp(spec) || is_zq_rtimes_zp(spec);

    std::map<std::string, std::string> notes;
    if (is_m8(spec)) {
      // K4 plus four pendants is C5- and K2,3-free; the printed lists
      // omit the order-8 dihedral entry.
      expected_free["C5"] = true;
      expected_free["K23"] = true;
      notes["C5"] = notes["K23"] = "printed list omits the order-8 dihedral group";
    }
    if (is_g3_family(spec)) {
      // Triangles are the largest cliques in this family's graph.
      expected_free["K4"] = true;
      notes["K4"] = "printed list omits the order-pqr two-action family";
    }
    for (const auto& pat : xs) {
      bool computed = x_free(inst.graph, pat.expr);
      book(pat.name + "-free", computed, expected_free[pat.name], notes.count(pat.name) ? notes[pat.name] : "");
    }
  }
}

// --- suite: clique-cover ---------------------------------------------------------------

void run_clique_cover(SuiteReport& rep, int max_order, const Budgets& budgets) {
  for (const auto& spec : default_catalog(max_order)) {
    Instance inst = make_instance(spec, max_order);
    int m = inst.lat.prime_order_count();
    SearchBudget sb{budgets.search_nodes, 0};
    try {
      int alpha = independence_number(inst.graph, sb);
      int theta = clique_cover_number(inst.graph, sb);
      bool ok = alpha == m && theta == m;
      rep.add(row_for(rep.suite, inst, "alpha=theta=prime-count",
                      "alpha=" + std::to_string(alpha) + ";theta=" + std::to_string(theta),
                      "both=" + std::to_string(m), ok ? "pass" : "fail"));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SearchBudgetExceeded) throw;
      rep.add(row_for(rep.suite, inst, "alpha=theta=prime-count", "budget-exceeded", "both=" + std::to_string(m),
                      "budget"));
    }
  }
}

// --- suite: uniqueness-5.2 ---------------------------------------------------------------

UniquenessReport uniqueness_impl(const FamilySpec& target, const std::vector<FamilySpec>& catalog, int max_order) {
  UniquenessReport rep;
  rep.target = target.text();
  Instance t = make_instance(target, std::max(max_order, kDefaultOrderBudget));
  for (const auto& spec : catalog) {
    Group g = build_family(spec, max_order);
    if (g.order() > max_order) continue;
    Lattice lat = Lattice::enumerate(g);
    Graph ig = intersection_graph(lat);
    if (ig.vertex_count() != t.graph.vertex_count() || ig.edge_count() != t.graph.edge_count()) continue;
    if (!find_isomorphism(ig, t.graph)) continue;
    if (tables_isomorphic(g, t.group))
      rep.matches.push_back(spec.text());
    else
      rep.violations.push_back(spec.text());
  }
  return rep;
}

void run_uniqueness(SuiteReport& rep, int max_order, const Budgets&) {
  std::vector<FamilySpec> catalog = default_catalog(max_order);
  std::vector<FamilySpec> targets;
  targets.push_back(FamilySpec::modular(2, 3));                        // M8
  targets.push_back(FamilySpec::semidirect(5, 2, 2, 2));               // Zq x|_2 Z_{p^2}
  targets.push_back(FamilySpec::matrix_action(5, 3));                  // G1-family
  targets.push_back(FamilySpec::alternating(4));                       // A4
  targets.push_back(FamilySpec::g3(7, 2, 3));                          // G3-family
  for (const auto& target : targets) {
    Group g = build_family(target);
    if (g.order() > max_order) continue;
    UniquenessReport u = uniqueness_impl(target, catalog, max_order);
    std::ostringstream matches;
    for (const auto& m : u.matches) matches << m << ' ';
    rep.add(SuiteRow{rep.suite, family_name(target), target.text(), g.order(), "graph-determines-group",
                     u.ok() ? "unique" : "violated", "unique", u.ok() ? "pass" : "fail", matches.str()});
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"formulas",  "planar-catalog",   "toroidal",
                                                 "projective-planar", "k5-free", "bipartite-acyclic",
                                                 "corollary-5.1",     "clique-cover", "uniqueness-5.2"};
  return names;
}

SuiteReport verify_claims(const std::string& suite, int max_order, const Budgets& budgets) {
  SuiteReport rep;
  rep.suite = suite;
  if (suite == "formulas") run_formulas(rep, max_order, budgets);
  else if (suite == "planar-catalog") run_planar_catalog(rep, max_order, budgets);
  else if (suite == "toroidal") run_toroidal(rep, max_order, budgets);
  else if (suite == "projective-planar") run_projective(rep, max_order, budgets);
  else if (suite == "k5-free") run_k5free(rep, max_order, budgets);
  else if (suite == "bipartite-acyclic") run_bipartite_acyclic(rep, max_order, budgets);
  else if (suite == "corollary-5.1") run_corollary51(rep, max_order, budgets);
  else if (suite == "clique-cover") run_clique_cover(rep, max_order, budgets);
  else if (suite == "uniqueness-5.2") run_uniqueness(rep, max_order, budgets);
  else throw Error(ErrorCode::InvalidParameters, "unknown suite '" + suite + "'");
  return rep;
}

UniquenessReport uniqueness_check(const FamilySpec& target, const std::vector<FamilySpec>& catalog, int max_order) {
  return uniqueness_impl(target, catalog, max_order);
}

}  // namespace igx
