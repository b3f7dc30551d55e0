#include "igx/lattice.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

#include "igx/error.hpp"

namespace igx {

int ElemSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool ElemSet::subset_of(const ElemSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElemSet ElemSet::intersect(const ElemSet& other) const {
  ElemSet out(bits_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
  return out;
}

bool ElemSet::operator<(const ElemSet& other) const {
  // Lexicographic on ascending element lists == reversed comparison on words
  // is fiddly; just compare materialized lists (sets here are small).
  return elements() < other.elements();
}

std::uint64_t ElemSet::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<Elem> ElemSet::elements() const {
  std::vector<Elem> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(Elem(wi * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

Subgroup generated_subgroup(const Group& g, const std::vector<Elem>& seed) {
  const int n = g.order();
  Subgroup h;
  h.set = ElemSet(n);
  std::vector<Elem> members{0};
  h.set.add(0);
  std::vector<Elem> frontier;
  for (Elem s : seed) {
    if (s >= n) throw Error(ErrorCode::InvalidParameters, "seed element out of range");
    if (!h.set.contains(s)) {
      h.set.add(s);
      members.push_back(s);
      frontier.push_back(s);
    }
  }
  while (!frontier.empty()) {
    Elem f = frontier.back();
    frontier.pop_back();
    std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (Elem p : {g.mul(members[i], f), g.mul(f, members[i])}) {
        if (!h.set.contains(p)) {
          h.set.add(p);
          members.push_back(p);
          frontier.push_back(p);
        }
      }
    }
  }
  h.elements = h.set.elements();
  h.order = int(h.elements.size());
  return h;
}

Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b) {
  if (a.set.universe() != b.set.universe())
    throw Error(ErrorCode::AmbientMismatch, "subgroups of different ambient groups");
  Subgroup out;
  out.set = a.set.intersect(b.set);
  out.elements = out.set.elements();
  out.order = int(out.elements.size());
  return out;
}

namespace {

// Closure of closed_members (already a subgroup) with one new generator.
Subgroup join_with(const Group& g, const std::vector<Elem>& closed_members, const ElemSet& closed_set, Elem x) {
  Subgroup h;
  h.set = closed_set;
  std::vector<Elem> members = closed_members;
  std::vector<Elem> frontier;
  if (!h.set.contains(x)) {
    h.set.add(x);
    members.push_back(x);
    frontier.push_back(x);
  }
  while (!frontier.empty()) {
    Elem f = frontier.back();
    frontier.pop_back();
    std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (Elem p : {g.mul(members[i], f), g.mul(f, members[i])}) {
        if (!h.set.contains(p)) {
          h.set.add(p);
          members.push_back(p);
          frontier.push_back(p);
        }
      }
    }
  }
  h.elements = h.set.elements();
  h.order = int(h.elements.size());
  return h;
}

}  // namespace

Lattice Lattice::enumerate(const Group& g) {
  const int n = g.order();
  Lattice lat;
  lat.group_ = &g;

  std::vector<Subgroup> found;
  std::unordered_set<std::uint64_t> seen_hashes;
  auto try_add = [&](Subgroup&& h) -> bool {
    std::uint64_t hh = h.set.hash();
    if (seen_hashes.count(hh)) {
      // Hash collision check against actual sets.
      for (const auto& other : found)
        if (other.order == h.order && other.set == h.set) return false;
    }
    seen_hashes.insert(hh);
    found.push_back(std::move(h));
    return true;
  };

  // Trivial subgroup, then all cyclic subgroups. Joining with x only depends
  // on <x>, so one generator per cyclic subgroup suffices.
  try_add(generated_subgroup(g, {}));
  std::vector<Elem> cyclic_reps;
  {
    std::vector<char> covered(n, 0);
    for (int x = 1; x < n; ++x) {
      if (covered[x]) continue;
      Subgroup c = generated_subgroup(g, {Elem(x)});
      for (Elem y : c.elements)
        if (g.element_order(y) == c.order) covered[y] = 1;
      cyclic_reps.push_back(Elem(x));
      try_add(std::move(c));
    }
  }

  // Augment each known subgroup by one outside generator until fixpoint.
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (found[i].order == n) continue;
    // Copy: found may reallocate during the loop.
    std::vector<Elem> base = found[i].elements;
    ElemSet base_set = found[i].set;
    for (Elem x : cyclic_reps) {
      if (base_set.contains(x)) continue;
      try_add(join_with(g, base, base_set, x));
    }
  }

  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.elements < b.elements;
  });
  found.erase(std::unique(found.begin(), found.end(),
                          [](const Subgroup& a, const Subgroup& b) { return a.set == b.set; }),
              found.end());

  lat.all_ = std::move(found);
  for (int i = 0; i < (int)lat.all_.size(); ++i)
    if (lat.all_[i].order > 1 && lat.all_[i].order < n) lat.proper_.push_back(i);
  return lat;
}

bool Lattice::is_normal(int index) const {
  const Group& g = *group_;
  const Subgroup& h = all_[index];
  for (int x = 0; x < g.order(); ++x) {
    Elem xi = g.inverse(Elem(x));
    for (Elem m : h.elements)
      if (!h.set.contains(g.mul(g.mul(Elem(x), m), xi))) return false;
  }
  return true;
}

int Lattice::prime_order_count() const {
  int c = 0;
  for (const auto& h : all_)
    if (is_prime(h.order)) ++c;
  return c;
}

int Lattice::sylow_count(int p) const {
  const int n = group_->order();
  if (!is_prime(p) || n % p != 0) throw Error(ErrorCode::NotADivisor, "p must be a prime divisor of the group order");
  int pk = 1;
  while (n % (long long)(pk * p) == 0) pk *= p;
  return count_of_order(pk);
}

int Lattice::count_of_order(int order) const {
  int c = 0;
  for (const auto& h : all_)
    if (h.order == order) ++c;
  return c;
}

std::string Lattice::to_csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < all_.size(); ++i) {
    out << i << ',' << all_[i].order << ',' << (is_normal(int(i)) ? 1 : 0);
    for (Elem e : all_[i].elements) out << ',' << e;
    out << '\n';
  }
  return out.str();
}

}  // namespace igx
