#include <random>

#include "doctest.h"
#include "igx/classify.hpp"
#include "igx/error.hpp"
#include "igx/graph.hpp"

using namespace igx;

namespace {

// Oracle: maximum independent set by subset enumeration, n <= 20.
int alpha_bruteforce(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u, v)) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace

TEST_CASE("independence number basics") {
  SearchBudget b;
  CHECK(independence_number(GraphExpr::Kbar(9).eval(), b) == 9);
  CHECK(independence_number(GraphExpr::K(9).eval(), b) == 1);
  CHECK(independence_number(GraphExpr::C(5).eval(), b) == 2);
  CHECK(independence_number(GraphExpr::C(7).eval(), b) == 3);
  Graph a4 = intersection_graph(Lattice::enumerate(build_family("perm:deg=4,gens=(123);(12)(34)")));
  CHECK(independence_number(a4, b) == 7);
}

TEST_CASE("independence number agrees with brute force on random graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + int(rng() % 12);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    SearchBudget b;
    CHECK(independence_number(g, b) == alpha_bruteforce(g));
  }
}

TEST_CASE("clique cover number") {
  SearchBudget b;
  CHECK(clique_cover_number(GraphExpr::K(4).eval(), b) == 1);
  CHECK(clique_cover_number(GraphExpr::Kbar(4).eval(), b) == 4);
  CHECK(clique_cover_number(GraphExpr::C(5).eval(), b) == 3);
  CHECK(clique_cover_number(GraphExpr::C(6).eval(), b) == 3);
  // Petersen: perfect matching covers all 10 vertices
  Graph pet(10);
  for (int i = 0; i < 5; ++i) {
    pet.add_edge(i, (i + 1) % 5);
    pet.add_edge(5 + i, 5 + (i + 2) % 5);
    pet.add_edge(i, 5 + i);
  }
  CHECK(clique_cover_number(pet, b) == 5);
  SearchBudget b2;
  CHECK(independence_number(pet, b2) == 4);

  Graph z93 = intersection_graph(Lattice::enumerate(build_family("abelian:9x3")));
  SearchBudget b3;
  CHECK(clique_cover_number(z93, b3) == 4);
}

TEST_CASE("alpha <= theta always, equality on intersection graphs") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + int(rng() % 10);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v);
    SearchBudget b;
    CHECK(independence_number(g, b) <= clique_cover_number(g, b));
  }
  for (const char* spec : {"cyclic:48", "dihedral:24", "genq:16", "modular:3,3", "mat:p=3,m=3"}) {
    Graph g = intersection_graph(Lattice::enumerate(build_family(spec)));
    SearchBudget b;
    int alpha = independence_number(g, b);
    int theta = clique_cover_number(g, b);
    CHECK(alpha == theta);
  }
}

TEST_CASE("search budget is honored") {
  Graph g(40);
  std::mt19937 rng(5);
  for (int u = 0; u < 40; ++u)
    for (int v = u + 1; v < 40; ++v)
      if (rng() % 2) g.add_edge(u, v);
  SearchBudget tiny{3, 0};
  CHECK_THROWS_AS(independence_number(g, tiny), Error);
}
