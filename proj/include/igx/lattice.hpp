#ifndef IGX_LATTICE_HPP
#define IGX_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "igx/group.hpp"

namespace igx {

// Small bitset over group elements.
class ElemSet {
 public:
  ElemSet() : bits_(0), words_() {}
  explicit ElemSet(int universe) : bits_(universe), words_((universe + 63) / 64, 0) {}

  void add(int x) { words_[x >> 6] |= 1ull << (x & 63); }
  bool contains(int x) const { return (words_[x >> 6] >> (x & 63)) & 1; }
  int universe() const { return bits_; }
  int count() const;
  bool subset_of(const ElemSet& other) const;
  ElemSet intersect(const ElemSet& other) const;
  bool operator==(const ElemSet& other) const { return words_ == other.words_; }
  bool operator<(const ElemSet& other) const;  // orders sets of equal universe
  std::uint64_t hash() const;
  std::vector<Elem> elements() const;

 private:
  int bits_;
  std::vector<std::uint64_t> words_;
};

struct Subgroup {
  ElemSet set;
  std::vector<Elem> elements;  // sorted
  int order = 0;
};

Subgroup generated_subgroup(const Group& g, const std::vector<Elem>& seed);
Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b);

// Complete subgroup lattice of a finite group, in canonical order:
// sorted by (order, lexicographic element list). Immutable once built.
class Lattice {
 public:
  static Lattice enumerate(const Group& g);

  const Group& group() const { return *group_; }
  const std::vector<Subgroup>& all() const { return all_; }
  const std::vector<int>& proper_nontrivial() const { return proper_; }

  bool is_normal(int index) const;
  int prime_order_count() const;
  // Number of Sylow p-subgroups; p must divide the group order.
  int sylow_count(int p) const;
  // Number of subgroups of the given order.
  int count_of_order(int order) const;

  std::string to_csv() const;

 private:
  const Group* group_ = nullptr;
  std::vector<Subgroup> all_;
  std::vector<int> proper_;
};

}  // namespace igx

#endif
