#include <set>

#include "doctest.h"
#include "igx/error.hpp"
#include "igx/group.hpp"

using namespace igx;

namespace {

// Brute-force center, used as the oracle for the dihedral example.
int center_order(const Group& g) {
  int c = 0;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y)
      if (g.mul(Elem(x), Elem(y)) != g.mul(Elem(y), Elem(x))) central = false;
    if (central) ++c;
  }
  return c;
}

}  // namespace

TEST_CASE("cyclic groups") {
  Group z6 = build_family("cyclic:6");
  CHECK(z6.order() == 6);
  CHECK(z6.element_order(1) == 6);
  CHECK(z6.abelian());
  CHECK(verify_group_axioms(z6).ok());

  Group z12 = build_family("cyclic:12");
  CHECK(z12.element_order(0) == 1);
  CHECK(z12.element_order(8) == 3);  // 12 / gcd(8,12)
}

TEST_CASE("quaternion group has a unique involution") {
  Group q8 = build_family("genq:8");
  CHECK(verify_group_axioms(q8).ok());
  int involutions = 0;
  for (int x = 1; x < q8.order(); ++x)
    if (q8.element_order(Elem(x)) == 2) ++involutions;
  CHECK(involutions == 1);

  Group q16 = build_family("genq:16");
  involutions = 0;
  for (int x = 1; x < q16.order(); ++x)
    if (q16.element_order(Elem(x)) == 2) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("dihedral groups") {
  Group d12 = build_family("dihedral:12");
  CHECK(verify_group_axioms(d12).ok());
  CHECK_FALSE(d12.abelian());
  CHECK(center_order(d12) == 2);  // n even: center {1, a^{n/2}}

  Group s3 = build_family("dihedral:6");
  CHECK_FALSE(s3.abelian());
  CHECK(center_order(s3) == 1);
}

TEST_CASE("modular group presentation") {
  Group m16 = build_family("modular:2,4");
  CHECK(m16.order() == 16);
  CHECK_FALSE(m16.abelian());
  // b is the element a^0 b^1 at index 1
  CHECK(m16.element_order(1) == 2);
  // M8 coincides with the order-8 dihedral group
  Group m8 = build_family("modular:2,3");
  Group d8 = build_family("dihedral:8");
  CHECK(tables_isomorphic(m8, d8));
}

TEST_CASE("semidirect products") {
  Group g = build_family("sd:q=3,p=2,a=2,t=1");
  CHECK(g.order() == 12);
  CHECK_FALSE(g.abelian());

  // t = 0 gives the cyclic group, up to relabeling.
  Group triv = build_family("sd:q=5,p=3,a=1,t=0");
  CHECK(tables_isomorphic(triv, build_family("cyclic:15")));

  // Z9 x| Z2 with inversion is the dihedral group of order 18.
  Group d18 = build_family("sd:q=9,p=2,a=1,t=1");
  CHECK(tables_isomorphic(d18, build_family("dihedral:18")));

  CHECK_THROWS_AS(build_family("sd:q=7,p=5,a=1,t=1"), Error);  // no unit of order 5 mod 7
}

TEST_CASE("matrix action groups") {
  Group g150 = build_family("mat:p=5,m=6");
  CHECK(g150.order() == 150);
  CHECK(verify_group_axioms(g150).ok());

  // The two commuting order-p generators span an elementary abelian p^2.
  // Elements (x, y, 0) are encoded as (x*p + y)*m.
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) {
      Elem e = Elem((x * 5 + y) * 6);
      if (e) CHECK(g150.element_order(e) == 5);
    }

  CHECK(tables_isomorphic(build_family("mat:p=2,m=3"),
                          build_family("perm:deg=4,gens=(123);(12)(34)")));

  CHECK_THROWS_AS(build_family("mat:p=3,m=5"), Error);  // no order-5 companion in GL2(3)
  CHECK_THROWS_AS(build_family("mat:p=3,m=4,M=1,0,0,1"), Error);  // wrong order
}

TEST_CASE("g3 groups") {
  Group g = build_family("g3:p=7,q=3,r=2");
  CHECK(g.order() == 42);
  CHECK_FALSE(g.abelian());
  CHECK(verify_group_axioms(g).ok());
  CHECK_THROWS_AS(build_family("g3:p=7,q=3,r=5"), Error);  // 5 does not divide 6
}

TEST_CASE("permutation groups") {
  Group a4 = build_family("perm:deg=4,gens=(123);(12)(34)");
  CHECK(a4.order() == 12);
  CHECK(a4.name() == "A4");
  Group s4 = build_family("perm:deg=4,gens=(1234);(12)");
  CHECK(s4.order() == 24);
  Group a5 = build_family("perm:deg=5,gens=(12345);(123)");
  CHECK(a5.order() == 60);
}

TEST_CASE("direct products") {
  Group v4 = build_family("prod:cyclic:2|cyclic:2");
  for (int x = 1; x < 4; ++x) CHECK(v4.element_order(Elem(x)) == 2);

  Group g = build_family("abelian:9x3");
  CHECK(g.order() == 27);
  CHECK(g.exponent() == 9);

  Group z3a4 = build_family("prod:cyclic:3|perm:deg=4,gens=(123);(12)(34)");
  CHECK(z3a4.order() == 36);

  CHECK_THROWS_AS(build_family("prod:cyclic:64|cyclic:16"), Error);  // order budget
}

TEST_CASE("axiom verification catches corrupted tables") {
  Group z4 = build_family("cyclic:4");
  std::vector<Elem> table(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) table[a * 4 + b] = z4.mul(Elem(a), Elem(b));
  table[2 * 4 + 3] = 2;  // corrupt one entry away from the group law
  // Construction may fail outright (inverses) or axioms must flag it.
  try {
    Group bad("bad", "bad", 4, table);
    AxiomReport rep = verify_group_axioms(bad);
    CHECK_FALSE(rep.ok());
    if (!rep.associative) {
      auto [a, b, c] = rep.associativity_witness;
      CHECK(bad.mul(bad.mul(a, b), c) != bad.mul(a, bad.mul(b, c)));
    }
  } catch (const Error&) {
    CHECK(true);  // rejected at construction
  }
}

TEST_CASE("spec text round-trips") {
  for (const char* text : {"cyclic:64", "abelian:9x3", "dihedral:18", "genq:16", "modular:3,3",
                           "sd:q=3,p=2,a=2,t=1", "mat:p=5,m=6", "g3:p=7,q=2,r=3",
                           "perm:deg=4,gens=(1,2,3);(1,2)(3,4)", "prod:cyclic:3|dihedral:6"}) {
    FamilySpec spec = FamilySpec::parse(text);
    CHECK(FamilySpec::parse(spec.text()).text() == spec.text());
  }
  CHECK_THROWS_AS(FamilySpec::parse("nonsense:1"), Error);
  CHECK_THROWS_AS(FamilySpec::parse("cyclic:x"), Error);
}

TEST_CASE("nonabelian iff expected across families") {
  CHECK(build_family("dihedral:6").abelian() == false);
  CHECK(build_family("dihedral:12").abelian() == false);
  CHECK(build_family("cyclic:8").abelian());
  CHECK(build_family("abelian:2x2x2").abelian());
  CHECK(build_family("genq:32").abelian() == false);
  CHECK(build_family("modular:5,3").abelian() == false);
}
