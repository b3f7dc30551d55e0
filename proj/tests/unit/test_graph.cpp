#include <random>

#include "doctest.h"
#include "igx/classify.hpp"
#include "igx/graph.hpp"

using namespace igx;

TEST_CASE("expression evaluation") {
  Graph k4 = GraphExpr::K(4).eval();
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);

  Graph j = GraphExpr::join(GraphExpr::K(1), GraphExpr::disjoint(GraphExpr::K(4), GraphExpr::Kbar(2))).eval();
  CHECK(j.vertex_count() == 7);
  CHECK(j.edge_count() == 12);

  Graph m = GraphExpr::join(GraphExpr::K(3), GraphExpr::copies(2, GraphExpr::K(2))).eval();
  CHECK(m.vertex_count() == 7);
  CHECK(m.edge_count() == 17);

  Graph pend = GraphExpr::pendants(GraphExpr::K(4), 1, 3).eval();
  CHECK(pend.vertex_count() == 7);
  CHECK(pend.edge_count() == 9);
  CHECK(pend.degree(1) == 6);
}

TEST_CASE("expression invariants") {
  auto e = GraphExpr::join(GraphExpr::C(5), GraphExpr::Kbar(2));
  CHECK(find_isomorphism(GraphExpr::complement(GraphExpr::complement(e)).eval(), e.eval()));
  CHECK(find_isomorphism(GraphExpr::join(GraphExpr::Kbar(3), GraphExpr::Kbar(4)).eval(),
                         GraphExpr::Kmn(3, 4).eval()));
}

TEST_CASE("isomorphism") {
  CHECK(find_isomorphism(GraphExpr::Kmn(2, 2).eval(), GraphExpr::C(4).eval()));
  CHECK_FALSE(find_isomorphism(GraphExpr::K(4).eval(), GraphExpr::C(4).eval()));
  // witness is a real mapping
  Graph a = GraphExpr::disjoint(GraphExpr::C(5), GraphExpr::K(3)).eval();
  Graph b = GraphExpr::disjoint(GraphExpr::K(3), GraphExpr::C(5)).eval();
  auto map = find_isomorphism(a, b);
  REQUIRE(map);
  for (auto [u, v] : a.edges()) CHECK(b.adjacent((*map)[u], (*map)[v]));
}

TEST_CASE("isomorphism agrees with brute force on random small graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + int(rng() % 7);
    Graph a(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) a.add_edge(u, v);
    // permuted copy or a perturbed graph
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph b(n);
    for (auto [u, v] : a.edges()) b.add_edge(perm[u], perm[v]);
    if (trial % 2 == 0 && b.edge_count() > 0) {
      // flip one edge to (usually) break isomorphism
      auto [u, v] = b.edges()[rng() % b.edges().size()];
      Graph c(n);
      for (auto [x, y] : b.edges())
        if (!(x == u && y == v)) c.add_edge(x, y);
      int uu = int(rng() % n), vv = int(rng() % n);
      if (uu != vv && !c.adjacent(uu, vv)) c.add_edge(uu, vv);
      b = c;
    }
    CHECK(find_isomorphism(a, b).has_value() == find_isomorphism_bruteforce(a, b).has_value());
  }
}

TEST_CASE("subgraph containment") {
  CHECK(find_subgraph(GraphExpr::K(6).eval(), GraphExpr::K(5).eval()));
  CHECK_FALSE(find_subgraph(GraphExpr::K(5).eval(), GraphExpr::Kmn(3, 3).eval()));
  // K3,5 inside the intersection graph of Z72
  Graph z72 = intersection_graph(Lattice::enumerate(build_family("cyclic:72")));
  auto w = find_subgraph(z72, GraphExpr::Kmn(3, 5).eval());
  REQUIRE(w);
  Graph pat = GraphExpr::Kmn(3, 5).eval();
  for (auto [u, v] : pat.edges()) CHECK(z72.adjacent((*w)[u], (*w)[v]));

  // reflexive and monotone under host edge addition
  Graph host = GraphExpr::C(6).eval();
  CHECK(find_subgraph(host, host));
  Graph host2 = host;
  host2.add_edge(0, 3);
  CHECK(find_subgraph(host2, host));
}

TEST_CASE("girth") {
  CHECK(girth(GraphExpr::K(3).eval()) == 3);
  CHECK(girth(GraphExpr::Kmn(1, 3).eval()) == kInfiniteGirth);
  CHECK(girth(GraphExpr::C(7).eval()) == 7);
  CHECK(girth(GraphExpr::Kmn(3, 3).eval()) == 4);
  CHECK(girth(GraphExpr::P(5).eval()) == kInfiniteGirth);
  Graph z16 = intersection_graph(Lattice::enumerate(build_family("cyclic:16")));  // K3
  CHECK(girth(z16) == 3);
}

TEST_CASE("structural predicates") {
  StructuralFlags f = structural_predicates(GraphExpr::Kbar(4).eval());
  CHECK(f.totally_disconnected);
  CHECK(f.acyclic);
  CHECK(f.bipartite);
  CHECK_FALSE(f.tree);

  // I(Z_{p^2 q}) is unicyclic
  Graph g = intersection_graph(Lattice::enumerate(build_family("cyclic:12")));
  CHECK(structural_predicates(g).unicyclic);

  // I(Z_{p^3}) = K2 is a path and a tree
  Graph k2 = intersection_graph(Lattice::enumerate(build_family("cyclic:8")));
  StructuralFlags f2 = structural_predicates(k2);
  CHECK(f2.path);
  CHECK(f2.tree);
  CHECK(f2.star);
  CHECK(f2.complete_bipartite);

  // single vertex: tree, star, complete-bipartite (K_{1,0}), not a path
  StructuralFlags f1 = structural_predicates(GraphExpr::K(1).eval());
  CHECK(f1.tree);
  CHECK(f1.star);
  CHECK(f1.complete_bipartite);
  CHECK_FALSE(f1.path);
  CHECK_FALSE(f1.cycle);

  StructuralFlags fc = structural_predicates(GraphExpr::C(3).eval());
  CHECK(fc.cycle);
  CHECK(fc.unicyclic);
  CHECK_FALSE(fc.acyclic);

  // unicyclic allows acyclic components on the side
  Graph mixed = GraphExpr::disjoint(GraphExpr::C(4), GraphExpr::P(2)).eval();
  CHECK(structural_predicates(mixed).unicyclic);
}

TEST_CASE("x-free") {
  CHECK(x_free(GraphExpr::K(4).eval(), GraphExpr::K(5)));
  Graph q8 = intersection_graph(Lattice::enumerate(build_family("genq:8")));
  CHECK(x_free(q8, GraphExpr::K(5)));
  Graph z4z2 = intersection_graph(Lattice::enumerate(build_family("abelian:4x2")));
  CHECK(x_free(z4z2, GraphExpr::C(5)));
  // subgraph reading: K4 is not claw-free
  CHECK_FALSE(x_free(GraphExpr::K(4).eval(), GraphExpr::Kmn(1, 3)));
}

TEST_CASE("adjacency text round trip") {
  Graph k3 = GraphExpr::K(3).eval();
  CHECK(k3.to_adjacency_text() == "3 3\n0 1\n0 2\n1 2\n");
  CHECK(GraphExpr::Kbar(2).eval().to_adjacency_text() == "2 0\n");
  Graph g = intersection_graph(Lattice::enumerate(build_family("dihedral:18")));
  Graph back = Graph::from_adjacency_text(g.to_adjacency_text());
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edges() == g.edges());
}
