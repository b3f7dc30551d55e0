// Exact orientable and nonorientable genus by branch-and-bound over
// embedding schemes, built face by face: the search fixes, one face walk at
// a time, the rotation successor constraints and edge signs the walk needs,
// pruning on the maximum number of faces still reachable.

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

#include "igx/error.hpp"
#include "topo_internal.hpp"

namespace igx::topo {

// --- reductions ---------------------------------------------------------------

Reduced reduce_for_genus(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> alive(n, 1);
  Reduced red;

  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      if (adj[v].empty()) {
        red.steps.push_back({ReductionStep::Kind::Isolated, v, -1, -1});
        alive[v] = 0;
        changed = true;
      } else if (adj[v].size() == 1) {
        int x = *adj[v].begin();
        red.steps.push_back({ReductionStep::Kind::Pendant, v, x, -1});
        adj[x].erase(v);
        adj[v].clear();
        alive[v] = 0;
        changed = true;
      } else if (adj[v].size() == 2) {
        auto it = adj[v].begin();
        int x = *it++;
        int y = *it;
        adj[x].erase(v);
        adj[y].erase(v);
        adj[v].clear();
        alive[v] = 0;
        if (adj[x].count(y)) {
          red.steps.push_back({ReductionStep::Kind::Ear, v, x, y});
        } else {
          red.steps.push_back({ReductionStep::Kind::Suppress, v, x, y});
          adj[x].insert(y);
          adj[y].insert(x);
        }
        changed = true;
      }
    }
  }

  std::vector<int> local(n, -1);
  for (int v = 0; v < n; ++v)
    if (alive[v]) {
      local[v] = int(red.core_to_orig.size());
      red.core_to_orig.push_back(v);
    }
  Graph core(int(red.core_to_orig.size()));
  for (int v = 0; v < n; ++v)
    if (alive[v])
      for (int w : adj[v])
        if (v < w) core.add_edge(local[v], local[w]);
  red.core = std::move(core);
  return red;
}

namespace {

int euler_of(const VScheme& vs) {
  // Trace on the graph spanned by the rotation map, compacting vertex ids.
  std::vector<int> ids;
  for (const auto& [v, ring] : vs.rot) ids.push_back(v);
  std::map<int, int> local;
  for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = int(i);
  Graph g(int(ids.size()));
  VScheme compact;
  for (const auto& [v, ring] : vs.rot) {
    auto& r = compact.rot[local[v]];
    for (int w : ring) {
      r.push_back(local[w]);
      if (v < w) g.add_edge(local[v], local[w]);
    }
  }
  for (const auto& [key, s] : vs.sign) {
    auto iu = local.find(key.first);
    auto iv = local.find(key.second);
    if (iu != local.end() && iv != local.end() && g.edge_index(iu->second, iv->second) >= 0)
      compact.set_sign(iu->second, iv->second, s);
  }
  return trace_faces(g, vscheme_to_scheme(compact, g)).euler_genus;
}

void insert_after(std::vector<int>& ring, int anchor, int value) {
  auto it = std::find(ring.begin(), ring.end(), anchor);
  ring.insert(it + 1, value);
}
void insert_before(std::vector<int>& ring, int anchor, int value) {
  auto it = std::find(ring.begin(), ring.end(), anchor);
  ring.insert(it, value);
}

}  // namespace

VScheme lift_through_reductions(const Graph& original, const Reduced& red, const VScheme& core_scheme) {
  // Rewrite the core scheme in original vertex ids.
  VScheme vs;
  for (const auto& [lv, ring] : core_scheme.rot) {
    auto& r = vs.rot[red.core_to_orig[lv]];
    for (int lw : ring) r.push_back(red.core_to_orig[lw]);
  }
  for (const auto& [key, s] : core_scheme.sign)
    vs.set_sign(red.core_to_orig[key.first], red.core_to_orig[key.second], s);

  for (auto it = red.steps.rbegin(); it != red.steps.rend(); ++it) {
    const ReductionStep& st = *it;
    switch (st.kind) {
      case ReductionStep::Kind::Isolated:
        vs.rot[st.v] = {};
        break;
      case ReductionStep::Kind::Pendant: {
        vs.rot[st.x].push_back(st.v);
        vs.rot[st.v] = {st.x};
        vs.set_sign(st.v, st.x, 1);
        break;
      }
      case ReductionStep::Kind::Suppress: {
        // Subdivide the edge (x, y) back into x - v - y.
        auto& rx = vs.rot[st.x];
        *std::find(rx.begin(), rx.end(), st.y) = st.v;
        auto& ry = vs.rot[st.y];
        *std::find(ry.begin(), ry.end(), st.x) = st.v;
        vs.rot[st.v] = {st.x, st.y};
        int s = vs.get_sign(st.x, st.y);
        vs.sign.erase({std::min(st.x, st.y), std::max(st.x, st.y)});
        vs.set_sign(st.x, st.v, s);
        vs.set_sign(st.v, st.y, 1);
        break;
      }
      case ReductionStep::Kind::Ear: {
        // Re-attach v across the surviving edge (x, y), inside one of the
        // faces bordering it: try corner placements until the Euler genus
        // is unchanged.
        int before = euler_of(vs);
        int s = vs.get_sign(st.x, st.y);
        bool placed = false;
        for (int cx = 0; cx < 2 && !placed; ++cx) {
          for (int cy = 0; cy < 2 && !placed; ++cy) {
            VScheme trial = vs;
            if (cx)
              insert_after(trial.rot[st.x], st.y, st.v);
            else
              insert_before(trial.rot[st.x], st.y, st.v);
            if (cy)
              insert_after(trial.rot[st.y], st.x, st.v);
            else
              insert_before(trial.rot[st.y], st.x, st.v);
            trial.rot[st.v] = {st.x, st.y};
            trial.set_sign(st.x, st.v, s);
            trial.set_sign(st.v, st.y, 1);
            if (euler_of(trial) == before) {
              vs = std::move(trial);
              placed = true;
            }
          }
        }
        if (!placed) throw Error(ErrorCode::InvalidScheme, "ear re-attachment failed");
        break;
      }
    }
  }
  (void)original;
  return vs;
}

// --- face-tracing search --------------------------------------------------------

namespace {

struct FaceSearch {
  const Graph& g;
  int V, E;
  std::vector<int> head;               // per dart; dart 2e: u->v (u<v), 2e+1: v->u
  std::vector<std::vector<int>> out;   // out-darts per vertex
  std::vector<int> deg;

  std::vector<int> nxt, prv;           // rotation successor chain per dart (-1 unset)
  std::vector<int> links;              // links made per vertex
  std::vector<int> sign;               // per edge: 0 undecided
  std::vector<char> is_tree;
  int undecided = 0, negatives = 0;

  std::vector<char> used;              // per state: 2*dart + (sign<0)
  int faces_done = 0, entered = 0;
  int target = 0, min_face = 3;
  bool orientable_mode = true;
  GenusBudget* budget;
  bool found = false;
  VScheme result;

  FaceSearch(const Graph& graph, GenusBudget* b) : g(graph), budget(b) {
    V = g.vertex_count();
    E = g.edge_count();
    head.resize(2 * E);
    for (int e = 0; e < E; ++e) {
      auto [u, v] = g.edges()[e];
      head[2 * e] = v;
      head[2 * e + 1] = u;
    }
    out.assign(V, {});
    deg.assign(V, 0);
    for (int e = 0; e < E; ++e) {
      auto [u, v] = g.edges()[e];
      out[u].push_back(2 * e);
      out[v].push_back(2 * e + 1);
      ++deg[u];
      ++deg[v];
    }
    nxt.assign(2 * E, -1);
    prv.assign(2 * E, -1);
    links.assign(V, 0);
    sign.assign(E, 0);
    is_tree.assign(E, 0);
    used.assign(4 * E, 0);
    // Spanning tree by BFS; tree edges are pinned positive (switching
    // normal form), so nonorientable schemes need a negative non-tree edge.
    std::vector<char> seen(V, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int free_edges = E;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          int e = g.edge_index(v, w);
          is_tree[e] = 1;
          sign[e] = 1;
          --free_edges;
          queue.push_back(w);
        }
      }
    }
    undecided = free_edges;
  }

  void pin_all_positive() {
    for (int e = 0; e < E; ++e) sign[e] = 1;
    undecided = 0;
    orientable_mode = true;
  }

  int tailv(int d) const { return head[d ^ 1]; }
  static int state_of(int dart, int sgn) { return 2 * dart + (sgn < 0); }
  int mirror_state(int dart, int sgn) const { return state_of(dart ^ 1, -sgn * sign[dart >> 1]); }

  // Linking nxt[a] = b inside vertex v; premature cycles are forbidden.
  bool chain_safe(int a, int b, int v) const {
    if (a == b) return deg[v] == 1;
    if (links[v] + 1 == deg[v]) return true;  // completes the full rotation
    // Walk forward from b; if the chain ends at a, linking would close early.
    int x = b;
    while (nxt[x] != -1) x = nxt[x];
    return x != a;
  }

  void link(int a, int b, int v) {
    nxt[a] = b;
    prv[b] = a;
    ++links[v];
  }
  void unlink(int a, int b, int v) {
    nxt[a] = -1;
    prv[b] = -1;
    --links[v];
  }

  bool bound_ok(bool open, int open_len) const {
    int capacity = (4 * E - 2 * entered) / 2;  // states still enterable
    int need_close = open ? std::max(0, min_face - open_len) : 0;
    if (capacity < need_close) return false;
    int possible = faces_done + (open ? 1 : 0) + (capacity - need_close) / min_face;
    return possible >= target;
  }

  bool tick() {
    if (++budget->nodes > budget->node_limit)
      throw Error(ErrorCode::SearchBudgetExceeded, "genus search exceeded node budget");
    return true;
  }

  bool search_no_open() {
    if (entered == 2 * E) {
      if (faces_done < target) return false;
      if (!orientable_mode && negatives == 0) return false;
      extract();
      return true;
    }
    // Start a new face at the least unused state.
    int st = 0;
    while (used[st]) ++st;
    int d0 = st >> 1;
    int s0 = (st & 1) ? -1 : 1;
    int e0 = d0 >> 1;
    if (sign[e0] != 0) return start_face(d0, s0);
    for (int sg : {1, -1}) {
      sign[e0] = sg;
      --undecided;
      if (sg < 0) ++negatives;
      bool ok = !(sg < 0 && orientable_mode) && start_face(d0, s0);
      if (sg < 0) --negatives;
      ++undecided;
      sign[e0] = 0;
      if (ok) return true;
    }
    return false;
  }

  bool start_face(int d0, int s0) {
    if (!orientable_mode && undecided == 0 && negatives == 0) return false;
    int st = state_of(d0, s0);
    int mst = mirror_state(d0, s0);
    used[st] = used[mst] = 1;
    ++entered;
    bool ok = extend(d0, s0, d0, s0, 1);
    used[st] = used[mst] = 0;
    --entered;
    return ok;
  }

  bool face_closed() {
    ++faces_done;
    bool ok = bound_ok(false, 0) && search_no_open();
    --faces_done;
    return ok;
  }

  // Current walk sits on (d, s); the face started at (d0, s0).
  bool extend(int d0, int s0, int d, int s, int len) {
    tick();
    if (!bound_ok(true, len)) return false;
    if (!orientable_mode && undecided == 0 && negatives == 0) return false;
    const int v = head[d];
    const int r = d ^ 1;
    for (int cand : out[v]) {
      // The walk continues with dart `cand`; the rotation constraint is
      // nxt[r] = cand for positive s, nxt[cand] = r for negative s.
      int a = s > 0 ? r : cand;
      int b = s > 0 ? cand : r;
      if (nxt[a] != -1 || prv[b] != -1) continue;
      if (!chain_safe(a, b, v)) continue;
      int e2 = cand >> 1;
      if (sign[e2] != 0) {
        if (try_move(d0, s0, cand, s * sign[e2], len, a, b, v)) return true;
      } else {
        for (int sg : {1, -1}) {
          if (sg < 0 && orientable_mode) continue;
          sign[e2] = sg;
          --undecided;
          if (sg < 0) ++negatives;
          bool ok = try_move(d0, s0, cand, s * sg, len, a, b, v);
          if (sg < 0) --negatives;
          ++undecided;
          sign[e2] = 0;
          if (ok) return true;
        }
      }
    }
    return false;
  }

  bool try_move(int d0, int s0, int d2, int s2, int len, int a, int b, int v) {
    if (d2 == d0 && s2 == s0) {
      if (len < min_face) return false;
      link(a, b, v);
      bool ok = face_closed();
      unlink(a, b, v);
      return ok;
    }
    int st = state_of(d2, s2);
    int mst = mirror_state(d2, s2);
    if (used[st] || used[mst]) return false;
    link(a, b, v);
    used[st] = used[mst] = 1;
    ++entered;
    bool ok = extend(d0, s0, d2, s2, len + 1);
    --entered;
    used[st] = used[mst] = 0;
    unlink(a, b, v);
    return ok;
  }

  void extract() {
    found = true;
    result = VScheme{};
    for (int v = 0; v < V; ++v) {
      std::vector<int>& ring = result.rot[v];
      if (out[v].empty()) continue;
      int d = out[v][0];
      do {
        ring.push_back(head[d]);
        d = nxt[d];
      } while (d != out[v][0]);
    }
    for (int e = 0; e < E; ++e) {
      auto [u, v] = g.edges()[e];
      result.set_sign(u, v, sign[e] == 0 ? 1 : sign[e]);
    }
  }

  // Decide whether some admissible scheme has at least `target_faces` faces.
  std::optional<VScheme> decide(int target_faces, bool orientable) {
    target = target_faces;
    orientable_mode = orientable;
    if (orientable) pin_all_positive();
    min_face = std::max(3, girth(g));
    faces_done = 0;
    entered = 0;
    found = false;
    if (!bound_ok(false, 0)) return std::nullopt;
    if (search_no_open()) return result;
    return std::nullopt;
  }
};

}  // namespace

}  // namespace igx::topo

// --- public drivers -------------------------------------------------------------

namespace igx {

namespace {

using topo::Reduced;
using topo::VScheme;

struct BlockResult {
  bool planar = false;
  bool budget_exhausted = false;
  bool exact_or = false, exact_non = false;
  int genus_lb = 0, genus_ub = kGenusUnknown;       // orientable genus
  int cross_lb = 0, cross_ub = kGenusUnknown;       // min Euler genus over nonorientable schemes
  std::optional<VScheme> or_scheme, non_scheme;
};

struct CoreAnalysis {
  Graph core;                            // reduced core on the input graph
  Reduced red;
  std::vector<Graph> block_graphs;       // re-indexed blocks of the core
  std::vector<std::vector<int>> block_verts;  // block vertex -> core vertex
};

CoreAnalysis analyze(const Graph& g) {
  CoreAnalysis a;
  a.red = topo::reduce_for_genus(g);
  a.core = a.red.core;
  for (const auto& block_edges : topo::blocks(a.core)) {
    std::vector<int> verts;
    for (auto [u, v] : block_edges) {
      verts.push_back(u);
      verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> local(a.core.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = int(i);
    Graph block(int(verts.size()));
    for (auto [u, v] : block_edges) block.add_edge(local[u], local[v]);
    a.block_graphs.push_back(std::move(block));
    a.block_verts.push_back(std::move(verts));
  }
  return a;
}

int euler_lower_bound(const Graph& block) {
  // F <= 2E / girth gives euler genus >= 2 - V + E - 2E/girth.
  int gi = std::max(3, girth(block));
  int fmax = 2 * block.edge_count() / gi;
  return std::max(0, 2 - block.vertex_count() + block.edge_count() - fmax);
}

// Orientable genus of one block with a level cap. Exact when the returned
// lb == ub; otherwise bounds.
BlockResult solve_block_orientable(const Graph& block, GenusBudget& budget, int cap) {
  BlockResult r;
  auto planar = topo::planar_embed_block(block);
  if (planar) {
    r.planar = true;
    r.exact_or = true;
    r.genus_lb = r.genus_ub = 0;
    r.or_scheme = *planar;
    return r;
  }
  int lb = std::max(1, (euler_lower_bound(block) + 1) / 2);
  for (int g = lb;; ++g) {
    if (g > cap) {
      r.genus_lb = g;
      return r;
    }
    int target = block.edge_count() - block.vertex_count() + 2 - 2 * g;
    topo::FaceSearch fs(block, &budget);
    try {
      auto scheme = fs.decide(target, /*orientable=*/true);
      if (scheme) {
        r.exact_or = true;
        r.genus_lb = r.genus_ub = g;
        r.or_scheme = *scheme;
        return r;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SearchBudgetExceeded) throw;
      // Levels below g are refuted, so g stands as a lower bound.
      r.genus_lb = g;
      r.budget_exhausted = true;
      return r;
    }
  }
}

// Minimum Euler genus over nonorientable schemes of one block, with cap.
void solve_block_nonorientable(const Graph& block, GenusBudget& budget, int cap, BlockResult& r) {
  if (r.planar) {
    // A planar block embeds in the projective plane and no closed
    // nonorientable surface has Euler genus 0.
    r.cross_lb = r.cross_ub = 1;
    r.exact_non = true;
    return;
  }
  int lb = std::max(1, euler_lower_bound(block));
  for (int k = lb;; ++k) {
    if (k > cap) {
      r.cross_lb = k;
      return;
    }
    int target = block.edge_count() - block.vertex_count() + 2 - k;
    topo::FaceSearch fs(block, &budget);
    try {
      auto scheme = fs.decide(target, /*orientable=*/false);
      if (scheme) {
        r.exact_non = true;
        r.cross_lb = r.cross_ub = k;
        r.non_scheme = *scheme;
        return;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SearchBudgetExceeded) throw;
      r.cross_lb = k;
      r.budget_exhausted = true;
      return;
    }
  }
}

VScheme assemble_blocks(const CoreAnalysis& a, const std::vector<std::optional<VScheme>>& schemes) {
  VScheme out;
  for (int v = 0; v < a.core.vertex_count(); ++v) out.rot[v] = {};
  for (std::size_t b = 0; b < a.block_graphs.size(); ++b) {
    const auto& vs = *schemes[b];
    const auto& verts = a.block_verts[b];
    for (const auto& [lv, ring] : vs.rot) {
      auto& r = out.rot[verts[lv]];
      for (int lw : ring) r.push_back(verts[lw]);
    }
    for (const auto& [key, s] : vs.sign) out.set_sign(verts[key.first], verts[key.second], s);
  }
  return out;
}

Scheme finalize_scheme(const Graph& g, const CoreAnalysis& a, const VScheme& core_scheme) {
  VScheme lifted = topo::lift_through_reductions(g, a.red, core_scheme);
  return topo::vscheme_to_scheme(lifted, g);
}

}  // namespace

GenusResult orientable_genus(const Graph& g, GenusBudget budget, int level_cap) {
  GenusResult out;
  CoreAnalysis a = analyze(g);
  std::vector<std::optional<VScheme>> schemes(a.block_graphs.size());
  int total_lb = 0, total_ub = 0;
  bool all_exact = true;
  for (std::size_t b = 0; b < a.block_graphs.size(); ++b) {
    int cap = level_cap == kGenusUnknown ? kGenusUnknown : std::max(0, level_cap - total_lb);
    BlockResult r = solve_block_orientable(a.block_graphs[b], budget, cap);
    total_lb += r.genus_lb;
    if (r.exact_or) {
      total_ub += r.genus_ub;
      schemes[b] = r.or_scheme;
    } else {
      all_exact = false;
    }
    if (r.budget_exhausted) {
      all_exact = false;
      break;
    }
  }
  out.nodes_explored = budget.nodes;
  out.lower = total_lb;
  if (all_exact) {
    out.exact = true;
    out.upper = total_ub;
    out.scheme = finalize_scheme(g, a, assemble_blocks(a, schemes));
  }
  return out;
}

GenusResult nonorientable_genus(const Graph& g, GenusBudget budget, int level_cap) {
  GenusResult out;
  CoreAnalysis a = analyze(g);
  const std::size_t nb = a.block_graphs.size();
  std::vector<BlockResult> results(nb);
  bool all_exact = true;
  bool any_nonplanar = false;
  {
    int known_lb = 0;
    for (std::size_t b = 0; b < nb; ++b) {
      int cap_or = level_cap == kGenusUnknown ? kGenusUnknown : std::max(0, (level_cap - known_lb + 1) / 2);
      int cap_non = level_cap == kGenusUnknown ? kGenusUnknown : std::max(0, level_cap - known_lb);
      results[b] = solve_block_orientable(a.block_graphs[b], budget, cap_or);
      if (!results[b].budget_exhausted) solve_block_nonorientable(a.block_graphs[b], budget, cap_non, results[b]);
      if (!results[b].planar) any_nonplanar = true;
      if (!results[b].exact_or || !results[b].exact_non) all_exact = false;
      known_lb += std::min(2 * results[b].genus_lb, results[b].cross_lb);
      if (results[b].budget_exhausted) {
        all_exact = false;
        break;
      }
    }
  }
  out.nodes_explored = budget.nodes;

  if (!any_nonplanar && all_exact) {
    // Planar graph: crosscap number 0 by convention; witness is planar.
    out.exact = true;
    out.lower = out.upper = 0;
    auto pl = is_planar(g);
    out.scheme = pl.embedding;
    return out;
  }

  // Every block contributes min(2*genus, crosscap); at least one block must
  // actually be embedded nonorientably.
  int sum_lower = 0;
  for (const auto& r : results) sum_lower += std::min(2 * r.genus_lb, r.cross_lb);
  out.lower = std::max(1, sum_lower);
  if (!all_exact) return out;

  int sum_or = 0;
  for (const auto& r : results) sum_or += 2 * r.genus_ub;
  int negative_delta = 0;
  int best_penalty = kGenusUnknown;
  int best_penalty_block = -1;
  std::vector<char> carrier(nb, 0);
  for (std::size_t b = 0; b < nb; ++b) {
    int delta = results[b].cross_ub - 2 * results[b].genus_ub;
    if (delta < 0) {
      negative_delta += delta;
      carrier[b] = 1;
    } else if (!results[b].planar && delta < best_penalty) {
      best_penalty = delta;
      best_penalty_block = int(b);
    }
  }
  int value;
  if (negative_delta < 0) {
    value = sum_or + negative_delta;
  } else {
    value = sum_or + best_penalty;
    carrier[best_penalty_block] = 1;
  }
  out.exact = true;
  out.lower = out.upper = value;

  std::vector<std::optional<VScheme>> schemes(nb);
  for (std::size_t b = 0; b < nb; ++b) schemes[b] = carrier[b] ? results[b].non_scheme : results[b].or_scheme;
  out.scheme = finalize_scheme(g, a, assemble_blocks(a, schemes));
  return out;
}

GenusResult orientable_genus(const Graph& g, GenusBudget budget) {
  return orientable_genus(g, budget, kGenusUnknown);
}

GenusResult nonorientable_genus(const Graph& g, GenusBudget budget) {
  return nonorientable_genus(g, budget, kGenusUnknown);
}

}  // namespace igx
