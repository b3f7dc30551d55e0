#include "doctest.h"
#include "igx/classify.hpp"

using namespace igx;

TEST_CASE("intersection graph construction") {
  Graph q8 = intersection_graph(Lattice::enumerate(build_family("genq:8")));
  CHECK(find_isomorphism(q8, GraphExpr::K(4).eval()));

  Graph z12 = intersection_graph(Lattice::enumerate(build_family("cyclic:12")));
  CHECK(find_isomorphism(z12, GraphExpr::join(GraphExpr::K(1),
                                              GraphExpr::disjoint(GraphExpr::K(2), GraphExpr::K(1))).eval()));

  Graph a4 = intersection_graph(Lattice::enumerate(build_family("perm:deg=4,gens=(123);(12)(34)")));
  CHECK(find_isomorphism(a4, GraphExpr::disjoint(GraphExpr::Kmn(1, 3), GraphExpr::Kbar(4)).eval()));

  // labels carry order and generators
  CHECK_FALSE(q8.labels().empty());
  CHECK(q8.labels()[0].substr(0, 2) == "o2");
}

TEST_CASE("expected models") {
  auto m = expected_model_for(FamilySpec::parse("cyclic:243"));  // 3^5
  REQUIRE(m);
  CHECK(m->equation == "2.1");
  CHECK(find_isomorphism(m->expr.eval(), GraphExpr::K(4).eval()));

  auto m2 = expected_model_for(FamilySpec::parse("sd:q=5,p=2,a=1,t=1"));
  REQUIRE(m2);
  CHECK(m2->equation == "2.7");
  CHECK(find_isomorphism(m2->expr.eval(), GraphExpr::Kbar(6).eval()));

  auto m3 = expected_model_for(FamilySpec::parse("modular:3,3"));
  REQUIRE(m3);
  CHECK(m3->equation == "4.1");

  CHECK_FALSE(expected_model_for(FamilySpec::parse("cyclic:30")));   // pqr: no printed formula
  CHECK_FALSE(expected_model_for(FamilySpec::parse("mat:p=5,m=6")));  // scalar power breaks the model
}

TEST_CASE("classify key instances") {
  Classification c = classify(build_family("cyclic:64"));
  CHECK(c.toroidal);
  CHECK(c.projective_planar);
  CHECK(c.alpha == c.theta);
  CHECK(c.theta == c.prime_order_subgroups);

  Classification m27 = classify(build_family("modular:3,3"));
  CHECK(m27.projective_planar);

  Classification z48 = classify(build_family("cyclic:48"));
  CHECK(z48.toroidal);
  CHECK_FALSE(z48.projective_planar);

  Classification z60 = classify(build_family("cyclic:60"));
  CHECK_FALSE(z60.toroidal);
  CHECK(z60.orientable.exact);
  CHECK(z60.orientable.lower == 2);

  Classification a4 = classify(build_family("perm:deg=4,gens=(123);(12)(34)"));
  CHECK(a4.planar);
  CHECK(a4.girth_value == kInfiniteGirth);
  CHECK(a4.alpha == 7);
}

TEST_CASE("girth is 3 or infinite on catalog graphs") {
  for (const auto& spec : default_catalog(64)) {
    Graph g = intersection_graph(Lattice::enumerate(build_family(spec)));
    int gi = girth(g);
    CHECK((gi == 3 || gi == kInfiniteGirth));
  }
}

TEST_CASE("uniqueness checks") {
  auto catalog = default_catalog(64);
  UniquenessReport m8 = uniqueness_check(FamilySpec::parse("modular:2,3"), catalog, 64);
  CHECK(m8.ok());
  CHECK(m8.matches.size() >= 2);  // modular:2,3 and dihedral:8 are the same group

  UniquenessReport a4 = uniqueness_check(FamilySpec::alternating(4), catalog, 64);
  CHECK(a4.ok());

  // K1 graphs are shared across Z_{p^2}: correctly not unique, but they are
  // never claimed to be.
  UniquenessReport z9 = uniqueness_check(FamilySpec::parse("cyclic:9"), catalog, 64);
  CHECK_FALSE(z9.violations.empty());
}

TEST_CASE("suite reports are well formed") {
  Budgets b;
  SuiteReport rep = verify_claims("clique-cover", 32, b);
  CHECK(rep.rows.size() > 10);
  CHECK(rep.fails == 0);
  CHECK(rep.to_csv().find("clique-cover") != std::string::npos);
  CHECK_THROWS(verify_claims("no-such-suite", 10, b));
}
