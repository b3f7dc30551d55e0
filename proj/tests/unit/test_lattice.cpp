#include <algorithm>
#include <set>

#include "doctest.h"
#include "igx/error.hpp"
#include "igx/lattice.hpp"

using namespace igx;

namespace {

// Oracle: subgroups as closures of all generating sets of size <= 3.
// Independent of the production enumeration (no augmentation loop); complete
// for the small groups used here, whose subgroups are all 3-generated.
std::set<std::vector<Elem>> oracle_subgroups(const Group& g) {
  std::set<std::vector<Elem>> out;
  const int n = g.order();
  out.insert(generated_subgroup(g, {}).elements);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = b; c < n; ++c) out.insert(generated_subgroup(g, {Elem(a), Elem(b), Elem(c)}).elements);
  return out;
}

}  // namespace

TEST_CASE("generated subgroups") {
  Group z12 = build_family("cyclic:12");
  CHECK(generated_subgroup(z12, {}).order == 1);
  CHECK(generated_subgroup(z12, {0}).order == 1);
  // <4, 6> = <gcd(4,6)> = <2>, index 2
  CHECK(generated_subgroup(z12, {4, 6}).order == 6);

  Group q8 = build_family("genq:8");
  // a = element 2 (a^1 b^0), so a^2 = element 4
  Elem a2 = q8.mul(2, 2);
  CHECK(generated_subgroup(q8, {a2}).order == 2);
}

TEST_CASE("lattice enumeration matches the 3-generator oracle") {
  for (const char* spec : {"cyclic:24", "dihedral:12", "genq:16", "perm:deg=4,gens=(123);(12)(34)",
                           "abelian:4x2", "modular:3,3", "sd:q=3,p=2,a=2,t=1"}) {
    Group g = build_family(spec);
    Lattice lat = Lattice::enumerate(g);
    std::set<std::vector<Elem>> got;
    for (const auto& h : lat.all()) got.insert(h.elements);
    CHECK(got == oracle_subgroups(g));
    CHECK(got.size() == lat.all().size());  // no duplicates
  }
}

TEST_CASE("proper nontrivial counts from the catalog") {
  auto count = [](const char* spec) {
    return int(Lattice::enumerate(build_family(spec)).proper_nontrivial().size());
  };
  CHECK(count("cyclic:9") == 1);
  CHECK(count("genq:8") == 4);
  CHECK(count("dihedral:6") == 4);
  CHECK(count("abelian:2x2") == 3);
  CHECK(count("abelian:3x3") == 4);
}

TEST_CASE("lagrange and canonical order") {
  for (const char* spec : {"dihedral:20", "cyclic:60", "genq:32", "perm:deg=4,gens=(1234);(12)"}) {
    Group g = build_family(spec);
    Lattice lat = Lattice::enumerate(g);
    int prev_order = 0;
    std::vector<Elem> prev_elems;
    for (const auto& h : lat.all()) {
      CHECK(g.order() % h.order == 0);
      CHECK(h.set.contains(0));
      // canonical: sorted by (order, elements)
      if (h.order == prev_order) CHECK(prev_elems < h.elements);
      CHECK(h.order >= prev_order);
      prev_order = h.order;
      prev_elems = h.elements;
    }
  }
}

TEST_CASE("intersections") {
  Group z60 = build_family("cyclic:60");
  Lattice lat = Lattice::enumerate(z60);
  const Subgroup* h4 = nullptr;
  const Subgroup* h6 = nullptr;
  for (const auto& h : lat.all()) {
    if (h.order == 4) h4 = &h;
    if (h.order == 6) h6 = &h;
  }
  REQUIRE(h4);
  REQUIRE(h6);
  CHECK(intersect_subgroups(*h4, *h6).order == 2);
  CHECK(intersect_subgroups(*h4, *h4).elements == h4->elements);

  Group a4 = build_family("perm:deg=4,gens=(123);(12)(34)");
  Lattice alat = Lattice::enumerate(a4);
  std::vector<const Subgroup*> threes;
  for (const auto& h : alat.all())
    if (h.order == 3) threes.push_back(&h);
  REQUIRE(threes.size() == 4);
  CHECK(intersect_subgroups(*threes[0], *threes[1]).order == 1);

  Group z4 = build_family("cyclic:4");
  Lattice other = Lattice::enumerate(z4);
  CHECK_THROWS_AS(intersect_subgroups(lat.all()[1], other.all()[1]), Error);
}

TEST_CASE("prime order counts") {
  auto primes = [](const char* spec) {
    return Lattice::enumerate(build_family(spec)).prime_order_count();
  };
  CHECK(primes("genq:8") == 1);
  CHECK(primes("abelian:3x3") == 4);
  CHECK(primes("perm:deg=4,gens=(123);(12)(34)") == 7);  // 3 + 4
}

TEST_CASE("sylow counts") {
  Group s3 = build_family("dihedral:6");
  Lattice lat = Lattice::enumerate(s3);
  CHECK(lat.sylow_count(3) == 1);
  CHECK(lat.sylow_count(2) == 3);
  CHECK_THROWS_AS(lat.sylow_count(5), Error);

  Group a4 = build_family("perm:deg=4,gens=(123);(12)(34)");
  CHECK(Lattice::enumerate(a4).sylow_count(3) == 4);
}

TEST_CASE("sylow congruence across a sample") {
  for (const char* spec : {"dihedral:24", "genq:16", "perm:deg=4,gens=(1234);(12)", "cyclic:90",
                           "mat:p=3,m=4", "sd:q=5,p=2,a=2,t=2"}) {
    Group g = build_family(spec);
    Lattice lat = Lattice::enumerate(g);
    for (int p = 2; p <= g.order(); ++p) {
      if (!is_prime(p) || g.order() % p != 0) continue;
      CHECK(lat.sylow_count(p) % p == 1);
    }
  }
}

TEST_CASE("csv export is stable") {
  Group g = build_family("dihedral:6");
  Lattice lat = Lattice::enumerate(g);
  std::string a = lat.to_csv();
  std::string b = Lattice::enumerate(build_family("dihedral:6")).to_csv();
  CHECK(a == b);
  CHECK(a.find("0,1,1,0") == 0);  // trivial subgroup row: index 0, order 1, normal
}
