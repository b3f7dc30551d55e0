// Lower-bound certificates for "genus > 1" and "crosscap > 1": named
// complete / complete-bipartite subgraphs, two disjoint nonplanar pieces,
// and Euler counting on the reduced core.

#include <algorithm>
#include <numeric>

#include "topo_internal.hpp"

namespace igx {

namespace {

std::vector<int> range_vec(const std::vector<int>& witness) { return witness; }

// All 5-cliques, capped; used for the disjoint-pair rules.
void enumerate_5cliques(const Graph& g, std::vector<std::vector<int>>& out, std::size_t cap) {
  const int n = g.vertex_count();
  std::vector<int> clique;
  std::vector<int> cand(n);
  std::iota(cand.begin(), cand.end(), 0);
  // Recursive expansion over ordered candidates.
  struct Rec {
    const Graph& g;
    std::vector<std::vector<int>>& out;
    std::size_t cap;
    std::vector<int> clique;
    void run(const std::vector<int>& cand) {
      if (out.size() >= cap) return;
      if (clique.size() == 5) {
        out.push_back(clique);
        return;
      }
      for (std::size_t i = 0; i < cand.size(); ++i) {
        int v = cand[i];
        if ((int)clique.size() + int(cand.size() - i) < 5) return;
        std::vector<int> next;
        for (std::size_t j = i + 1; j < cand.size(); ++j)
          if (g.adjacent(v, cand[j])) next.push_back(cand[j]);
        clique.push_back(v);
        run(next);
        clique.pop_back();
        if (out.size() >= cap) return;
      }
    }
  } rec{g, out, cap, {}};
  rec.run(cand);
}

std::optional<std::vector<int>> find_two_disjoint_k5(const Graph& g) {
  if (g.vertex_count() < 10) return std::nullopt;
  std::vector<std::vector<int>> cliques;
  enumerate_5cliques(g, cliques, 3000);
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = i + 1; j < cliques.size(); ++j) {
      bool disjoint = true;
      for (int a : cliques[i])
        for (int b : cliques[j])
          if (a == b) disjoint = false;
      if (disjoint) {
        std::vector<int> both = cliques[i];
        both.insert(both.end(), cliques[j].begin(), cliques[j].end());
        return both;
      }
    }
  return std::nullopt;
}

// A K5 or K3,3 inside the induced subgraph on `allowed`.
std::optional<std::vector<int>> nonplanar_piece(const Graph& g, const std::vector<int>& allowed) {
  Graph sub = g.induced(allowed);
  if (auto w = find_subgraph(sub, GraphExpr::K(5).eval())) {
    std::vector<int> out;
    for (int v : *w) out.push_back(allowed[v]);
    return out;
  }
  if (auto w = find_subgraph(sub, GraphExpr::Kmn(3, 3).eval())) {
    std::vector<int> out;
    for (int v : *w) out.push_back(allowed[v]);
    return out;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_two_disjoint_nonplanar(const Graph& g) {
  if (g.vertex_count() < 11) return std::nullopt;
  std::vector<int> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  auto first = nonplanar_piece(g, all);
  if (!first) return std::nullopt;
  std::vector<int> rest;
  for (int v : all)
    if (std::find(first->begin(), first->end(), v) == first->end()) rest.push_back(v);
  auto second = nonplanar_piece(g, rest);
  if (!second) return std::nullopt;
  std::vector<int> both = *first;
  both.insert(both.end(), second->begin(), second->end());
  return both;
}

}  // namespace

std::optional<CertificateWitness> nontoroidality_certificate(const Graph& g) {
  if (auto w = find_subgraph(g, GraphExpr::K(8).eval())) return CertificateWitness{"K8-subgraph", *w};
  if (auto w = find_subgraph(g, GraphExpr::Kmn(4, 5).eval())) return CertificateWitness{"K45-subgraph", *w};
  if (auto w = find_subgraph(g, GraphExpr::Kmn(3, 7).eval())) return CertificateWitness{"K37-subgraph", *w};
  if (auto w = find_two_disjoint_k5(g)) return CertificateWitness{"two-disjoint-K5", *w};
  // Euler count on the reduced core: E <= 3V on the torus.
  topo::Reduced red = topo::reduce_for_genus(g);
  if (red.core.edge_count() > 3 * red.core.vertex_count())
    return CertificateWitness{"euler-bound-core", range_vec(red.core_to_orig)};
  return std::nullopt;
}

std::optional<CertificateWitness> nonprojectivity_certificate(const Graph& g) {
  if (auto w = find_subgraph(g, GraphExpr::K(7).eval())) return CertificateWitness{"K7-subgraph", *w};
  if (auto w = find_subgraph(g, GraphExpr::Kmn(3, 5).eval())) return CertificateWitness{"K35-subgraph", *w};
  if (auto w = find_subgraph(g, GraphExpr::Kmn(4, 4).eval())) return CertificateWitness{"K44-subgraph", *w};
  if (auto w = find_two_disjoint_nonplanar(g)) return CertificateWitness{"two-disjoint-nonplanar", *w};
  topo::Reduced red = topo::reduce_for_genus(g);
  if (red.core.edge_count() > 3 * red.core.vertex_count() - 3)
    return CertificateWitness{"euler-bound-core", range_vec(red.core_to_orig)};
  return std::nullopt;
}

}  // namespace igx
