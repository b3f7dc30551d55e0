#ifndef IGX_GROUP_HPP
#define IGX_GROUP_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace igx {

using Elem = std::uint16_t;

constexpr int kDefaultOrderBudget = 512;

// Finite group as a full multiplication table over 0..order-1.
// Element 0 is always the identity; values are immutable after construction.
class Group {
 public:
  Group(std::string name, std::string spec_text, int order, std::vector<Elem> table);

  int order() const { return order_; }
  Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * order_ + b]; }
  Elem inverse(Elem a) const { return inverse_[a]; }
  Elem power(Elem a, long long k) const;
  int element_order(Elem a) const;
  bool abelian() const;
  int exponent() const;

  const std::string& name() const { return name_; }
  const std::string& spec_text() const { return spec_text_; }

 private:
  std::string name_;
  std::string spec_text_;
  int order_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
};

struct AxiomReport {
  bool closed = false;
  bool associative = false;
  bool has_identity = false;
  bool has_inverses = false;
  // First failing triple for associativity, if any.
  std::array<Elem, 3> associativity_witness{0, 0, 0};
  bool ok() const { return closed && associative && has_identity && has_inverses; }
};

AxiomReport verify_group_axioms(const Group& g);

Group direct_product(const Group& g, const Group& h, int order_budget = kDefaultOrderBudget);

// Backtracking isomorphism test on multiplication tables. Intended for the
// small coincidences the harness must recognize (table relabelings), not as a
// general classification service.
bool tables_isomorphic(const Group& a, const Group& b);

// ---------------------------------------------------------------------------
// Family specifications.
//
// Canonical text syntax, e.g.
//   cyclic:64   abelian:9x3   dihedral:18   genq:16   modular:3,3
//   sd:q=3,p=2,a=2,t=1   mat:p=5,m=6   mat:p=3,m=2,M=2,0,0,2
//   g3:p=7,q=3,r=2   perm:deg=4,gens=(123);(12)(34)   prod:<spec>|<spec>

struct CyclicSpec {
  int n;
};
struct AbelianSpec {
  std::vector<int> orders;  // cyclic factor orders, as written
};
struct DihedralSpec {
  int order;  // 2n, n >= 1
};
struct QuaternionSpec {
  int order;  // 2^n, n >= 3
};
struct ModularSpec {
  int p;
  int alpha;  // order p^alpha, alpha >= 3
};
struct SemidirectCyclicSpec {
  int q;      // normal cyclic factor (prime power in practice)
  int p;      // prime
  int alpha;  // acting factor Z_{p^alpha}
  int t;      // action has order p^t
};
struct MatrixActionSpec {
  int p;  // (Z_p x Z_p) normal part
  int m;  // order of the acting cyclic factor and of the matrix
  std::optional<std::array<int, 4>> matrix;  // row-major [[a,b],[c,d]]; searched when absent
};
struct G3Spec {
  int p, q, r;  // q, r | p-1
  std::optional<int> mu, v;
};
struct PermutationSpec {
  int degree;
  std::vector<std::vector<std::vector<int>>> generators;  // each generator: list of cycles (1-based points)
};
struct FamilySpec;
struct DirectProductSpec {
  std::shared_ptr<FamilySpec> left, right;
};

struct FamilySpec {
  std::variant<CyclicSpec, AbelianSpec, DihedralSpec, QuaternionSpec, ModularSpec, SemidirectCyclicSpec,
               MatrixActionSpec, G3Spec, PermutationSpec, DirectProductSpec>
      value;

  static FamilySpec parse(const std::string& text);
  std::string text() const;

  static FamilySpec cyclic(int n) { return {CyclicSpec{n}}; }
  static FamilySpec abelian(std::vector<int> orders) { return {AbelianSpec{std::move(orders)}}; }
  static FamilySpec dihedral(int order) { return {DihedralSpec{order}}; }
  static FamilySpec quaternion(int order) { return {QuaternionSpec{order}}; }
  static FamilySpec modular(int p, int alpha) { return {ModularSpec{p, alpha}}; }
  static FamilySpec semidirect(int q, int p, int alpha, int t) { return {SemidirectCyclicSpec{q, p, alpha, t}}; }
  static FamilySpec matrix_action(int p, int m, std::optional<std::array<int, 4>> mat = std::nullopt) {
    return {MatrixActionSpec{p, m, mat}};
  }
  static FamilySpec g3(int p, int q, int r) { return {G3Spec{p, q, r, std::nullopt, std::nullopt}}; }
  static FamilySpec product(FamilySpec a, FamilySpec b) {
    return {DirectProductSpec{std::make_shared<FamilySpec>(std::move(a)), std::make_shared<FamilySpec>(std::move(b))}};
  }
  static FamilySpec alternating(int degree);
  static FamilySpec symmetric(int degree);
};

Group build_family(const FamilySpec& spec, int order_budget = kDefaultOrderBudget);

// Convenience for tests and sweeps.
inline Group build_family(const std::string& text, int order_budget = kDefaultOrderBudget) {
  return build_family(FamilySpec::parse(text), order_budget);
}

// Number-theory helpers shared by families and sweeps.
bool is_prime(int n);
long long power_mod(long long base, long long exp, long long mod);
int multiplicative_order(int a, int mod);  // 0 when gcd(a, mod) != 1

}  // namespace igx

#endif
