#include "igx/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "igx/error.hpp"

namespace igx {

Graph intersection_graph(const Lattice& lat) {
  const auto& idx = lat.proper_nontrivial();
  Graph g(int(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      Subgroup meet = intersect_subgroups(lat.all()[idx[i]], lat.all()[idx[j]]);
      if (meet.order > 1) g.add_edge(int(i), int(j));
    }
  }
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const Subgroup& h = lat.all()[idx[i]];
    std::ostringstream label;
    label << "o" << h.order << "<";
    // Greedy small generating set for the label.
    ElemSet closed(lat.group().order());
    closed.add(0);
    bool first = true;
    for (Elem e : h.elements) {
      if (closed.contains(e)) continue;
      label << (first ? "" : ",") << int(e);
      first = false;
      Subgroup part = generated_subgroup(lat.group(), [&] {
        std::vector<Elem> seed = closed.elements();
        seed.push_back(e);
        return seed;
      }());
      closed = part.set;
      if (part.order == h.order) break;
    }
    label << ">";
    g.set_label(int(i), label.str());
  }
  return g;
}

// --- prime helpers --------------------------------------------------------------

namespace {

std::vector<std::pair<int, int>> factorize(int n) {
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

struct Mat2 {
  int a, b, c, d;
};
Mat2 mat_mul(const Mat2& x, const Mat2& y, int p) {
  return {int(((long long)x.a * y.a + (long long)x.b * y.c) % p), int(((long long)x.a * y.b + (long long)x.b * y.d) % p),
          int(((long long)x.c * y.a + (long long)x.d * y.c) % p), int(((long long)x.c * y.b + (long long)x.d * y.d) % p)};
}

// The published matrix-action models assume no acting power is scalar
// (equivalently: the group has no subgroup of order p*d, 1 < d <= m).
bool matrix_action_has_scalar_power(const MatrixActionSpec& s) {
  Mat2 M{0, s.p - 1, 1, 0};
  if (s.matrix) M = {(*s.matrix)[0] % s.p, (*s.matrix)[1] % s.p, (*s.matrix)[2] % s.p, (*s.matrix)[3] % s.p};
  else {
    bool found = false;
    for (int l = 0; l < s.p && !found; ++l) {
      Mat2 cand{0, s.p - 1, 1, l};
      Mat2 acc = cand;
      int order = 0;
      for (int k = 1; k <= s.m; ++k) {
        if (acc.a == 1 && acc.b == 0 && acc.c == 0 && acc.d == 1) {
          order = k;
          break;
        }
        acc = mat_mul(acc, cand, s.p);
      }
      if (order == s.m) {
        M = cand;
        found = true;
      }
    }
    if (!found) return true;  // treated as "no clean model"
  }
  Mat2 acc = M;
  for (int k = 1; k < s.m; ++k) {
    if (acc.b == 0 && acc.c == 0 && acc.a == acc.d) return true;
    acc = mat_mul(acc, M, s.p);
  }
  return false;
}

}  // namespace

std::optional<ExpectedModel> expected_model_for(const FamilySpec& spec) {
  using GE = GraphExpr;
  if (auto* c = std::get_if<CyclicSpec>(&spec.value)) {
    auto f = factorize(c->n);
    if (f.size() == 1 && f[0].second >= 2) return ExpectedModel{"2.1", GE::K(f[0].second - 1), ""};
    if (f.size() == 2) {
      int a = f[0].second, b = f[1].second;
      if (a > b) std::swap(a, b);
      if (a == 1 && b == 1) return ExpectedModel{"2.2", GE::Kbar(2), ""};
      if (a == 1 && b == 2) return ExpectedModel{"2.3", GE::join(GE::K(1), GE::disjoint(GE::K(2), GE::K(1))), ""};
      if (a == 1 && b == 3) return ExpectedModel{"3.2", GE::join(GE::K(2), GE::disjoint(GE::K(3), GE::K(1))), ""};
      if (a == 1 && b == 4) return ExpectedModel{"3.3", GE::join(GE::K(3), GE::disjoint(GE::K(4), GE::K(1))), ""};
      if (a == 2 && b == 2) return ExpectedModel{"3.4", GE::join(GE::K(3), GE::copies(2, GE::K(2))), ""};
    }
    return std::nullopt;
  }
  if (auto* a = std::get_if<AbelianSpec>(&spec.value)) {
    std::vector<int> orders = a->orders;
    std::sort(orders.begin(), orders.end(), std::greater<int>());
    if (orders.size() == 2) {
      auto f0 = factorize(orders[0]);
      auto f1 = factorize(orders[1]);
      if (f1.size() == 1 && f1[0].second == 1) {
        int p = f1[0].first;
        if (orders[0] == p) return ExpectedModel{"2.4", GE::Kbar(p + 1), ""};
        if (orders[0] == p * p) {
          // For p = 2 the source prints K4 in its (2.5), but its own
          // K5-free classification forces K_{p+1}.
          std::string note = p == 2 ? "printed form K1+(K4 u ~K2) is inconsistent; using K{p+1} with p=2" : "";
          return ExpectedModel{p == 2 ? "2.5" : "3.5",
                               GE::join(GE::K(1), GE::disjoint(GE::K(p + 1), GE::Kbar(p))), note};
        }
      }
    }
    return std::nullopt;
  }
  if (auto* q = std::get_if<QuaternionSpec>(&spec.value)) {
    if (q->order == 8) return ExpectedModel{"2.6", GE::K(4), ""};
    return std::nullopt;
  }
  if (auto* m = std::get_if<ModularSpec>(&spec.value)) {
    if (m->alpha == 3 && m->p >= 3)
      return ExpectedModel{"4.1", GE::join(GE::K(1), GE::disjoint(GE::K(m->p + 1), GE::Kbar(m->p))), ""};
    if (m->p == 2 && m->alpha == 4)
      // The printed K1+(K6 u ~K2) misses that <a^2,b> also contains both
      // pendant involutions; the enumerated lattice gives K2+(K5 u ~K2).
      return ExpectedModel{"4.2", GE::join(GE::K(2), GE::disjoint(GE::K(5), GE::Kbar(2))),
                           "printed form K1+(K6 u ~K2) undercounts two edges"};
    return std::nullopt;
  }
  if (auto* s = std::get_if<SemidirectCyclicSpec>(&spec.value)) {
    if (!is_prime(s->q)) return std::nullopt;
    if (s->alpha == 1 && s->t == 1) return ExpectedModel{"2.7", GE::Kbar(s->q + 1), ""};
    if (s->alpha == 2 && s->t == 2)
      return ExpectedModel{"2.8", GE::join(GE::K(1), GE::disjoint(GE::K(1), GE::copies(s->q, GE::K(2)))), ""};
    if (s->alpha == 2 && s->t == 1)
      return ExpectedModel{"4.3", GE::join(GE::K(1), GE::disjoint(GE::K(1), GE::K(s->q + 1))), ""};
    return std::nullopt;
  }
  if (auto* m = std::get_if<MatrixActionSpec>(&spec.value)) {
    if (matrix_action_has_scalar_power(*m)) return std::nullopt;
    int p = m->p;
    auto f = factorize(m->m);
    if (f.size() == 1 && f[0].second == 1 && (p + 1) % m->m == 0)
      return ExpectedModel{"2.9", GE::disjoint(GE::Kmn(1, p + 1), GE::Kbar(p * p)), ""};
    if (f.size() == 1 && f[0].second == 2 && (p + 1) % m->m == 0)
      return ExpectedModel{
          "2.11", GE::join(GE::K(1), GE::disjoint(GE::Kmn(1, p + 1), GE::copies(p * p, GE::K(2)))), ""};
    return std::nullopt;
  }
  if (auto* pm = std::get_if<PermutationSpec>(&spec.value)) {
    // A4 by its stock generators: one 3-cycle and one double transposition.
    if (pm->degree == 4 && pm->generators.size() == 2 && pm->generators[0].size() == 1 &&
        pm->generators[0][0].size() == 3 && pm->generators[1].size() == 2)
      return ExpectedModel{"2.10", GE::disjoint(GE::Kmn(1, 3), GE::Kbar(4)), ""};
    return std::nullopt;
  }
  return std::nullopt;
}

// --- classification ---------------------------------------------------------------

namespace {

const std::vector<std::pair<std::string, GraphExpr>>& x_free_patterns() {
  static const std::vector<std::pair<std::string, GraphExpr>> patterns = {
      {"K5", GraphExpr::K(5)},      {"K4", GraphExpr::K(4)},      {"C4", GraphExpr::C(4)},
      {"C5", GraphExpr::C(5)},      {"P2", GraphExpr::P(2)},      {"P3", GraphExpr::P(3)},
      {"P4", GraphExpr::P(4)},      {"K13", GraphExpr::Kmn(1, 3)}, {"K14", GraphExpr::Kmn(1, 4)},
      {"K23", GraphExpr::Kmn(2, 3)}};
  return patterns;
}

}  // namespace

Classification classify(const Group& g, const Budgets& budgets) {
  Classification out;
  out.name = g.name();
  out.spec_text = g.spec_text();
  out.order = g.order();

  Lattice lat = Lattice::enumerate(g);
  out.prime_order_subgroups = lat.prime_order_count();
  Graph ig = intersection_graph(lat);
  out.vertices = ig.vertex_count();
  out.edges = ig.edge_count();

  auto planarity = is_planar(ig);
  out.planar = planarity.planar;
  if (planarity.planar) {
    out.witnesses.push_back("planar-embedding");
  } else {
    out.witnesses.push_back("kuratowski:" + planarity.kuratowski_kind);
  }

  out.girth_value = girth(ig);
  out.flags = structural_predicates(ig);
  for (const auto& [name, expr] : x_free_patterns()) out.x_free_flags[name] = x_free(ig, expr);

  SearchBudget sb{budgets.search_nodes, 0};
  try {
    out.alpha = independence_number(ig, sb);
    out.theta = clique_cover_number(ig, sb);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SearchBudgetExceeded) throw;
    out.budget_exceeded = true;
  }

  if (out.planar) {
    out.orientable.exact = true;
    out.orientable.lower = out.orientable.upper = 0;
    out.orientable.scheme = planarity.embedding;
    out.nonorientable.exact = true;  // crosscap 0 for planar graphs by convention
    out.nonorientable.lower = out.nonorientable.upper = 0;
    out.nonorientable.scheme = planarity.embedding;
    return out;
  }

  GenusBudget gb{budgets.genus_nodes, 0};
  try {
    if (auto cert = nontoroidality_certificate(ig)) {
      out.witnesses.push_back("nontoroidal:" + cert->kind);
      out.orientable = orientable_genus(ig, gb, 2);
      out.orientable.lower = std::max(out.orientable.lower, 2);
      if (out.orientable.upper < out.orientable.lower) out.orientable.exact = false;
    } else {
      out.orientable = orientable_genus(ig, gb, 2);
    }
    out.toroidal = out.orientable.exact && out.orientable.lower == 1;
    if (out.toroidal) out.witnesses.push_back("torus-embedding-scheme");

    gb.nodes = 0;
    if (auto cert = nonprojectivity_certificate(ig)) {
      out.witnesses.push_back("nonprojective:" + cert->kind);
      out.nonorientable.exact = false;
      out.nonorientable.lower = 2;
    } else {
      out.nonorientable = nonorientable_genus(ig, gb, 2);
    }
    out.projective_planar = out.nonorientable.exact && out.nonorientable.lower == 1;
    if (out.projective_planar) out.witnesses.push_back("projective-embedding-scheme");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SearchBudgetExceeded) throw;
    out.budget_exceeded = true;
  }
  return out;
}

std::string Classification::render_text() const {
  std::ostringstream o;
  o << "group: " << name << " (" << spec_text << "), order " << order << "\n";
  o << "intersection graph: " << vertices << " vertices, " << edges << " edges\n";
  o << "planar: " << (planar ? "yes" : "no") << "\n";
  auto genus_str = [](const GenusResult& r) {
    std::ostringstream s;
    if (r.exact)
      s << r.lower;
    else if (r.upper == kGenusUnknown)
      s << ">=" << r.lower;
    else
      s << "[" << r.lower << "," << r.upper << "]";
    return s.str();
  };
  o << "orientable genus: " << genus_str(orientable) << (toroidal ? " (toroidal)" : "") << "\n";
  o << "nonorientable genus: " << genus_str(nonorientable) << (projective_planar ? " (projective-planar)" : "")
    << "\n";
  o << "girth: ";
  if (girth_value == kInfiniteGirth)
    o << "infinity";
  else
    o << girth_value;
  o << "\n";
  o << "flags:";
  if (flags.bipartite) o << " bipartite";
  if (flags.complete_bipartite) o << " complete-bipartite";
  if (flags.tree) o << " tree";
  if (flags.star) o << " star";
  if (flags.acyclic) o << " acyclic";
  if (flags.unicyclic) o << " unicyclic";
  if (flags.path) o << " path";
  if (flags.cycle) o << " cycle";
  if (flags.totally_disconnected) o << " totally-disconnected";
  o << "\n";
  o << "x-free:";
  for (const auto& [k, v] : x_free_flags)
    if (v) o << " " << k;
  o << "\n";
  o << "alpha: " << alpha << ", theta: " << theta << ", prime-order subgroups: " << prime_order_subgroups << "\n";
  o << "witnesses:";
  for (const auto& w : witnesses) o << " " << w;
  o << "\n";
  if (budget_exceeded) o << "warning: search budget exceeded; some fields are bounds\n";
  return o.str();
}

// --- catalog -----------------------------------------------------------------------

std::vector<FamilySpec> default_catalog(int max_order) {
  std::vector<FamilySpec> out;
  std::vector<int> primes;
  for (int p = 2; p <= max_order; ++p)
    if (is_prime(p)) primes.push_back(p);

  // Cyclic groups with at least one proper nontrivial subgroup.
  for (int n = 4; n <= max_order; ++n)
    if (!is_prime(n)) out.push_back(FamilySpec::cyclic(n));

  // Abelian patterns from the instance generators.
  for (int p : primes) {
    long long p2 = (long long)p * p;
    if (p2 <= max_order) out.push_back(FamilySpec::abelian({p, p}));
    if (p2 * p <= max_order) {
      out.push_back(FamilySpec::abelian({p * p, p}));
      out.push_back(FamilySpec::abelian({p, p, p}));
    }
    if (p2 * p2 <= max_order) {
      out.push_back(FamilySpec::abelian({p * p, p * p}));
      out.push_back(FamilySpec::abelian({p * p * p, p}));
      out.push_back(FamilySpec::abelian({p, p, p, p}));
    }
    for (int q : primes) {
      if (q == p) continue;
      if (p2 * q <= max_order) out.push_back(FamilySpec::abelian({p * q, p}));
      if (p2 * p * q <= max_order) out.push_back(FamilySpec::abelian({p * p * q, p}));
    }
  }

  for (int n = 3; 2 * n <= max_order; ++n) out.push_back(FamilySpec::dihedral(2 * n));
  for (int n = 8; n <= max_order; n *= 2) out.push_back(FamilySpec::quaternion(n));
  for (int p : primes)
    for (int alpha = 3;; ++alpha) {
      long long order = 1;
      for (int i = 0; i < alpha; ++i) order *= p;
      if (order > max_order) break;
      out.push_back(FamilySpec::modular(p, alpha));
    }

  // Semidirect Zq x| Z_{p^a}: q an odd prime power coprime to p.
  std::vector<int> qvals;
  for (int q : primes) qvals.push_back(q);
  for (int q : {9, 25, 49, 121, 169}) qvals.push_back(q);
  std::sort(qvals.begin(), qvals.end());
  for (int q : qvals) {
    for (int p : primes) {
      if (q % p == 0) continue;
      long long pa = p;
      for (int alpha = 1; alpha <= 3; ++alpha, pa *= p) {
        if ((long long)q * pa > max_order) break;
        for (int t = 1; t <= std::min(alpha, 2); ++t) {
          long long pt = 1;
          for (int i = 0; i < t; ++i) pt *= p;
          bool exists = false;
          for (int i = 2; i < q && !exists; ++i)
            if (multiplicative_order(i, q) == pt) exists = true;
          if (exists) out.push_back(FamilySpec::semidirect(q, p, alpha, t));
        }
      }
    }
  }

  // Matrix actions (Zp x Zp) x| Zm with a companion-shape matrix of order m.
  for (int p : primes) {
    long long p2 = (long long)p * p;
    if (p2 * 2 > max_order) continue;
    for (int m = 2; p2 * m <= max_order; ++m) {
      if (p == 2 && m == 2) continue;  // same group as dihedral:8
      MatrixActionSpec s{p, m, std::nullopt};
      try {
        build_family(FamilySpec{s}, max_order);
        out.push_back(FamilySpec{s});
      } catch (const Error&) {
      }
    }
  }

  // Zp x| (Zq x Zr) with q, r | p-1.
  for (int p : primes)
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = i + 1; j < primes.size(); ++j) {
        int q = primes[i], r = primes[j];
        if (q == p || r == p) continue;
        if ((long long)p * q * r > max_order) continue;
        if ((p - 1) % q || (p - 1) % r) continue;
        out.push_back(FamilySpec::g3(p, q, r));
      }

  if (max_order >= 12) out.push_back(FamilySpec::alternating(4));
  if (max_order >= 24) out.push_back(FamilySpec::symmetric(4));
  if (max_order >= 60) out.push_back(FamilySpec::alternating(5));
  if (max_order >= 36) {
    out.push_back(FamilySpec::parse("perm:deg=13,gens=(5,6,7,8,9,10,11,12,13)(2,3,4);(1,2)(3,4);(1,3)(2,4)"));
    out.push_back(FamilySpec::product(FamilySpec::cyclic(3), FamilySpec::alternating(4)));
    out.push_back(FamilySpec::product(FamilySpec::dihedral(6), FamilySpec::dihedral(6)));
    out.push_back(FamilySpec::product(FamilySpec::cyclic(6), FamilySpec::dihedral(6)));
    out.push_back(FamilySpec::product(FamilySpec::cyclic(3), FamilySpec::semidirect(3, 2, 2, 1)));
    out.push_back(FamilySpec::product(FamilySpec::cyclic(2), FamilySpec::matrix_action(3, 2, {{2, 0, 0, 2}})));
  }

  // Drop anything that fails to build or exceeds the order cap, and dedupe
  // by canonical text.
  std::vector<FamilySpec> kept;
  std::vector<std::string> seen;
  for (const auto& spec : out) {
    std::string text = spec.text();
    if (std::find(seen.begin(), seen.end(), text) != seen.end()) continue;
    try {
      Group g = build_family(spec, max_order);
      if (g.order() > max_order) continue;
      seen.push_back(text);
      kept.push_back(spec);
    } catch (const Error&) {
    }
  }
  return kept;
}

}  // namespace igx
