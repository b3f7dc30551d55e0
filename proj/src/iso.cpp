#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "igx/graph.hpp"

namespace igx {

namespace {

// Iterated neighborhood color refinement (1-WL) run jointly so the two
// graphs share color identifiers.
std::pair<std::vector<int>, std::vector<int>> joint_refinement(const Graph& a, const Graph& b) {
  const int na = a.vertex_count(), nb = b.vertex_count();
  std::vector<int> ca(na, 0), cb(nb, 0);
  int colors = 1;
  for (int round = 0; round < na + nb; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> next_id;
    auto signature = [](const Graph& g, const std::vector<int>& c, int v) {
      std::vector<int> sig;
      for (int w : g.neighbors(v)) sig.push_back(c[w]);
      std::sort(sig.begin(), sig.end());
      return sig;
    };
    std::vector<int> ra(na), rb(nb);
    for (int v = 0; v < na; ++v) {
      auto key = std::make_pair(ca[v], signature(a, ca, v));
      auto it = next_id.emplace(key, int(next_id.size()));
      ra[v] = it.first->second;
    }
    for (int v = 0; v < nb; ++v) {
      auto key = std::make_pair(cb[v], signature(b, cb, v));
      auto it = next_id.emplace(key, int(next_id.size()));
      rb[v] = it.first->second;
    }
    int new_colors = int(next_id.size());
    if (new_colors == colors) break;
    colors = new_colors;
    ca.swap(ra);
    cb.swap(rb);
  }
  return {ca, cb};
}

bool extend_mapping(const Graph& a, const Graph& b, const std::vector<int>& order, std::size_t idx,
                    std::vector<int>& map, std::vector<char>& used, const std::vector<int>& ca,
                    const std::vector<int>& cb) {
  if (idx == order.size()) return true;
  int u = order[idx];
  for (int v = 0; v < b.vertex_count(); ++v) {
    if (used[v] || cb[v] != ca[u]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < idx && ok; ++j) {
      int w = order[j];
      if (a.adjacent(u, w) != b.adjacent(v, map[w])) ok = false;
    }
    if (!ok) continue;
    map[u] = v;
    used[v] = 1;
    if (extend_mapping(a, b, order, idx + 1, map, used, ca, cb)) return true;
    used[v] = 0;
    map[u] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  const int n = a.vertex_count();
  if (n == 0) return std::vector<int>{};
  auto [ca, cb] = joint_refinement(a, b);
  {
    auto ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return std::nullopt;
  }
  // Map rare colors first, high degree breaking ties.
  std::vector<int> class_size(n + (int)ca.size() + 1, 0);
  for (int c : ca) ++class_size[c];
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (class_size[ca[x]] != class_size[ca[y]]) return class_size[ca[x]] < class_size[ca[y]];
    if (a.degree(x) != a.degree(y)) return a.degree(x) > a.degree(y);
    return x < y;
  });
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  if (extend_mapping(a, b, order, 0, map, used, ca, cb)) return map;
  return std::nullopt;
}

std::optional<std::vector<int>> find_isomorphism_bruteforce(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  const int n = a.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!b.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// --- subgraph containment ----------------------------------------------------

namespace {

// Pattern vertex order: greedily maximize the number of already-placed
// neighbors, then degree. Keeps the candidate sets tight.
std::vector<int> pattern_order(const Graph& p) {
  const int n = p.vertex_count();
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int w : p.neighbors(v))
        if (placed[w]) ++links;
      int deg = p.degree(v);
      if (links > best_links || (links == best_links && deg > best_deg)) {
        best = v;
        best_links = links;
        best_deg = deg;
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }
  return order;
}

bool extend_embedding(const Graph& host, const Graph& pat, const std::vector<int>& order, std::size_t idx,
                      std::vector<int>& map, std::vector<char>& used) {
  if (idx == order.size()) return true;
  int u = order[idx];
  int udeg = pat.degree(u);
  for (int v = 0; v < host.vertex_count(); ++v) {
    if (used[v] || host.degree(v) < udeg) continue;
    bool ok = true;
    for (int w : pat.neighbors(u)) {
      if (map[w] != -1 && !host.adjacent(v, map[w])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[u] = v;
    used[v] = 1;
    if (extend_embedding(host, pat, order, idx + 1, map, used)) return true;
    used[v] = 0;
    map[u] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_subgraph(const Graph& host, const Graph& pattern) {
  if (pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count()) return std::nullopt;
  if (pattern.vertex_count() == 0) return std::vector<int>{};
  auto order = pattern_order(pattern);
  std::vector<int> map(pattern.vertex_count(), -1);
  std::vector<char> used(host.vertex_count(), 0);
  if (extend_embedding(host, pattern, order, 0, map, used)) return map;
  return std::nullopt;
}

}  // namespace igx
