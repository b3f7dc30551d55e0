// Exact solvers for independence number and clique cover number.
// alpha(G) is a maximum clique search on the complement (Tomita-style greedy
// coloring bound); theta(G) is an exact coloring of the complement (DSATUR
// branch and bound seeded with the alpha(G)-clique).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "igx/error.hpp"
#include "igx/graph.hpp"

namespace igx {

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitOps {
  int words;
  Bits full(int n) const {
    Bits b(words, 0);
    for (int i = 0; i < n; ++i) b[i >> 6] |= 1ull << (i & 63);
    return b;
  }
  static bool test(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1; }
  static void clear(Bits& b, int i) { b[i >> 6] &= ~(1ull << (i & 63)); }
  static void set(Bits& b, int i) { b[i >> 6] |= 1ull << (i & 63); }
  static int count(const Bits& b) {
    int c = 0;
    for (auto w : b) c += std::popcount(w);
    return c;
  }
  static bool empty(const Bits& b) {
    for (auto w : b)
      if (w) return false;
    return true;
  }
};

struct CliqueSolver {
  int n;
  int words;
  std::vector<Bits> adj;
  SearchBudget* budget;
  std::vector<int> best_clique;

  explicit CliqueSolver(const Graph& g, SearchBudget* b) : n(g.vertex_count()), words((n + 63) / 64), adj(n), budget(b) {
    for (int v = 0; v < n; ++v) {
      adj[v].assign(words, 0);
      for (int w : g.neighbors(v)) BitOps::set(adj[v], w);
    }
  }

  void tick() {
    if (++budget->nodes > budget->node_limit)
      throw Error(ErrorCode::SearchBudgetExceeded, "clique search exceeded node budget");
  }

  // Greedy coloring of the candidate set; vertices come back ordered by
  // color class so the caller can cut off low-bound suffixes.
  void color_sort(const Bits& cand, std::vector<int>& out_vertices, std::vector<int>& out_bounds) {
    out_vertices.clear();
    out_bounds.clear();
    Bits left = cand;
    int color = 0;
    while (!BitOps::empty(left)) {
      ++color;
      Bits cls = left;
      while (!BitOps::empty(cls)) {
        int v = -1;
        for (int wi = 0; wi < words && v < 0; ++wi)
          if (cls[wi]) v = wi * 64 + std::countr_zero(cls[wi]);
        BitOps::clear(cls, v);
        BitOps::clear(left, v);
        for (int wi = 0; wi < words; ++wi) cls[wi] &= ~adj[v][wi];
        out_vertices.push_back(v);
        out_bounds.push_back(color);
      }
    }
  }

  void expand(Bits cand, std::vector<int>& current) {
    tick();
    std::vector<int> verts, bounds;
    color_sort(cand, verts, bounds);
    for (int i = int(verts.size()) - 1; i >= 0; --i) {
      if (current.size() + bounds[i] <= best_clique.size()) return;
      int v = verts[i];
      current.push_back(v);
      Bits next(words);
      for (int wi = 0; wi < words; ++wi) next[wi] = cand[wi] & adj[v][wi];
      if (BitOps::empty(next)) {
        if (current.size() > best_clique.size()) best_clique = current;
      } else {
        expand(next, current);
      }
      current.pop_back();
      BitOps::clear(cand, v);
    }
  }

  std::vector<int> solve() {
    Bits all = BitOps{words}.full(n);
    std::vector<int> current;
    if (n > 0) expand(all, current);
    return best_clique;
  }
};

std::vector<int> max_independent_set(const Graph& g, SearchBudget& budget) {
  CliqueSolver solver(g.complement(), &budget);
  return solver.solve();
}

// Exact chromatic number of h via DSATUR branch and bound. The clique
// argument is pre-colored to fix symmetry and provide the lower bound.
struct ColoringSolver {
  const Graph& h;
  int n;
  SearchBudget* budget;
  std::vector<int> color;
  std::vector<int> best_assignment;
  int best = 0;              // current upper bound (a valid coloring with this many colors exists)
  int lower = 1;

  ColoringSolver(const Graph& hh, SearchBudget* b) : h(hh), n(hh.vertex_count()), budget(b), color(n, -1) {}

  void tick() {
    if (++budget->nodes > budget->node_limit)
      throw Error(ErrorCode::SearchBudgetExceeded, "coloring search exceeded node budget");
  }

  bool feasible(int v, int c) const {
    for (int w : h.neighbors(v))
      if (color[w] == c) return false;
    return true;
  }

  // Number of colors used so far is tracked by the caller.
  void dive(int colored, int used) {
    tick();
    if (used >= best) return;
    if (colored == n) {
      best = used;
      best_assignment = color;
      return;
    }
    // DSATUR vertex choice: most distinct neighbor colors, then degree.
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] != -1) continue;
      std::uint64_t mask[8] = {0};
      int sat = 0;
      for (int w : h.neighbors(v))
        if (color[w] >= 0) {
          auto& m = mask[color[w] >> 6];
          std::uint64_t bit = 1ull << (color[w] & 63);
          if (!(m & bit)) {
            m |= bit;
            ++sat;
          }
        }
      int deg = h.degree(v);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    for (int c = 0; c < std::min(used + 1, best - 1); ++c) {
      if (!feasible(pick, c)) continue;
      color[pick] = c;
      dive(colored + 1, std::max(used, c + 1));
      color[pick] = -1;
      if (best <= lower) return;
    }
  }

  int solve(const std::vector<int>& clique, int upper_hint, const std::vector<int>& hint_assignment) {
    lower = std::max<int>(1, int(clique.size()));
    best = upper_hint;
    best_assignment = hint_assignment;
    if (lower >= best) return best;
    int colored = 0;
    for (std::size_t i = 0; i < clique.size(); ++i) {
      color[clique[i]] = int(i);
      ++colored;
    }
    dive(colored, int(clique.size()));
    return best;
  }
};

// Greedy clique cover of g anchored at an independent set: every vertex
// outside the set joins a clique seeded by one of its independent
// neighbors when this keeps the class a clique.
int anchored_cover_size(const Graph& g, const std::vector<int>& indep) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> classes;
  std::vector<char> assigned(n, 0);
  for (int v : indep) {
    classes.push_back({v});
    assigned[v] = 1;
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (!assigned[v]) rest.push_back(v);
  // Fewest options first.
  std::sort(rest.begin(), rest.end(), [&](int x, int y) { return g.degree(x) < g.degree(y); });
  int extra = 0;
  for (int v : rest) {
    bool done = false;
    for (auto& cls : classes) {
      bool ok = true;
      for (int w : cls)
        if (!g.adjacent(v, w)) {
          ok = false;
          break;
        }
      if (ok) {
        cls.push_back(v);
        done = true;
        break;
      }
    }
    if (!done) {
      classes.push_back({v});
      ++extra;
    }
  }
  return int(classes.size());
}

int greedy_coloring(const Graph& h, std::vector<int>& assignment) {
  const int n = h.vertex_count();
  // Largest-degree-first sequential coloring.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return h.degree(x) > h.degree(y); });
  assignment.assign(n, -1);
  int used = 0;
  for (int v : order) {
    std::vector<char> taken(used + 1, 0);
    for (int w : h.neighbors(v))
      if (assignment[w] >= 0) taken[assignment[w]] = 1;
    int c = 0;
    while (c < used && taken[c]) ++c;
    assignment[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

}  // namespace

int independence_number(const Graph& g, SearchBudget& budget) {
  if (g.vertex_count() == 0) return 0;
  return int(max_independent_set(g, budget).size());
}

int clique_cover_number(const Graph& g, SearchBudget& budget) {
  if (g.vertex_count() == 0) return 0;
  int total = 0;
  for (const auto& comp_vertices : g.components()) {
    Graph comp = g.induced(comp_vertices);
    std::vector<int> indep = max_independent_set(comp, budget);
    int lb = int(indep.size());
    int ub_anchor = anchored_cover_size(comp, indep);
    if (ub_anchor == lb) {
      total += lb;
      continue;
    }
    Graph h = comp.complement();
    std::vector<int> greedy_assign;
    int ub_greedy = greedy_coloring(h, greedy_assign);
    if (std::min(ub_anchor, ub_greedy) == lb) {
      total += lb;
      continue;
    }
    ColoringSolver solver(h, &budget);
    total += solver.solve(indep, std::min(ub_anchor, ub_greedy) + 1, {});
  }
  return total;
}

}  // namespace igx
