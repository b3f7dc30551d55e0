// Planarity testing: Demoucron-Malgrange-Pertuiset face extension per block,
// with rotation extraction, plus Kuratowski-subdivision witnesses obtained by
// edge minimalization.

#include <algorithm>
#include <deque>
#include <set>

#include "igx/error.hpp"
#include "topo_internal.hpp"

namespace igx::topo {

Scheme vscheme_to_scheme(const VScheme& vs, const Graph& g) {
  Scheme s;
  s.rotation.assign(g.vertex_count(), {});
  s.signs.assign(g.edge_count(), 1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto it = vs.rot.find(v);
    if (it == vs.rot.end()) continue;
    for (int w : it->second) {
      int e = g.edge_index(v, w);
      if (e < 0) throw Error(ErrorCode::InvalidScheme, "rotation references a missing edge");
      s.rotation[v].push_back(e);
    }
  }
  for (const auto& [key, sg] : vs.sign) {
    int e = g.edge_index(key.first, key.second);
    if (e >= 0) s.signs[e] = std::int8_t(sg);
  }
  return s;
}

Graph vscheme_graph(const VScheme& vs, int n) {
  Graph g(n);
  for (const auto& [v, ring] : vs.rot)
    for (int w : ring)
      if (v < w) g.add_edge(v, w);
  return g;
}

std::vector<std::vector<std::pair<int, int>>> blocks(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> num(n, -1), low(n, 0);
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> stack;
  int timer = 0;

  // Iterative DFS to keep deep graphs safe.
  struct Frame {
    int v, parent;
    std::vector<int> nbrs;
    std::size_t idx = 0;
  };
  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    std::vector<Frame> dfs;
    dfs.push_back({root, -1, g.neighbors(root)});
    num[root] = low[root] = timer++;
    while (!dfs.empty()) {
      Frame& f = dfs.back();
      if (f.idx < f.nbrs.size()) {
        int w = f.nbrs[f.idx++];
        if (w == f.parent) continue;
        if (num[w] == -1) {
          stack.emplace_back(f.v, w);
          num[w] = low[w] = timer++;
          dfs.push_back({w, f.v, g.neighbors(w)});
        } else if (num[w] < num[f.v]) {
          stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        int v = f.v, parent = f.parent;
        dfs.pop_back();
        if (parent != -1) {
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] >= num[parent]) {
            // Pop the block rooted at edge (parent, v).
            std::vector<std::pair<int, int>> block;
            while (true) {
              auto e = stack.back();
              stack.pop_back();
              block.push_back(e);
              if (e == std::make_pair(parent, v)) break;
            }
            out.push_back(std::move(block));
          }
        }
      }
    }
  }
  return out;
}

// --- Demoucron ---------------------------------------------------------------

namespace {

// Dart encoding local to a block: edge ids from the block graph.
struct FaceWalks {
  const Graph& g;
  std::vector<std::vector<int>> faces;  // dart lists

  int dart(int u, int v) const {
    int e = g.edge_index(u, v);
    return 2 * e + (g.edges()[e].first == u ? 0 : 1);
  }
  int head(int d) const {
    auto [a, b] = g.edges()[d >> 1];
    return (d & 1) ? a : b;
  }
  int tail(int d) const {
    auto [a, b] = g.edges()[d >> 1];
    return (d & 1) ? b : a;
  }
};

std::vector<int> find_cycle(const Graph& g) {
  // DFS until a back edge closes a cycle; returns the vertex cycle.
  const int n = g.vertex_count();
  std::vector<int> parent(n, -2);
  std::vector<int> order;
  for (int root = 0; root < n; ++root) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (parent[w] == -2) {
          parent[w] = v;
          stack.push_back(w);
        } else if (w != parent[v]) {
          // Close the cycle through the tree paths of v and w.
          std::vector<int> pv{v}, pw{w};
          for (int x = v; parent[x] != -1; x = parent[x]) pv.push_back(parent[x]);
          for (int x = w; parent[x] != -1; x = parent[x]) pw.push_back(parent[x]);
          // Find lowest common ancestor by set membership.
          std::set<int> anc(pv.begin(), pv.end());
          int lca = -1;
          for (int x : pw)
            if (anc.count(x)) {
              lca = x;
              break;
            }
          std::vector<int> cycle;
          for (int x : pv) {
            cycle.push_back(x);
            if (x == lca) break;
          }
          std::vector<int> tailpart;
          for (int x : pw) {
            if (x == lca) break;
            tailpart.push_back(x);
          }
          std::reverse(tailpart.begin(), tailpart.end());
          cycle.insert(cycle.end(), tailpart.begin(), tailpart.end());
          return cycle;
        }
      }
    }
  }
  return {};
}

}  // namespace

std::optional<VScheme> planar_embed_block(const Graph& block) {
  const int n = block.vertex_count();
  const int m = block.edge_count();
  VScheme vs;
  if (n == 0) return vs;
  if (m == 0) {
    for (int v = 0; v < n; ++v) vs.rot[v] = {};
    return vs;
  }
  if (m == 1) {
    auto [u, v] = block.edges()[0];
    vs.rot[u] = {v};
    vs.rot[v] = {u};
    vs.set_sign(u, v, 1);
    return vs;
  }
  if (m > 3 * n - 6 && n >= 3) return std::nullopt;

  std::vector<int> cycle = find_cycle(block);
  if (cycle.empty()) return std::nullopt;  // biconnected with m >= 2 always has one

  FaceWalks fw{block, {}};
  std::vector<char> v_emb(n, 0), e_emb(m, 0);
  {
    std::vector<int> fwd, bwd;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
      fwd.push_back(fw.dart(u, v));
      v_emb[u] = 1;
      e_emb[block.edge_index(u, v)] = 1;
    }
    for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) bwd.push_back(*it ^ 1);
    fw.faces.push_back(fwd);
    fw.faces.push_back(bwd);
  }
  int embedded_edges = int(cycle.size());

  auto face_vertices = [&](const std::vector<int>& face) {
    std::set<int> vs_;
    for (int d : face) vs_.insert(fw.head(d));
    return vs_;
  };

  while (embedded_edges < m) {
    // Fragments: lone chords, and components of the unembedded part.
    struct Fragment {
      std::vector<int> attachments;      // embedded vertices, sorted
      std::vector<int> interior;         // unembedded vertices
      bool chord = false;
      int cu = -1, cv = -1;
    };
    std::vector<Fragment> fragments;
    for (int e = 0; e < m; ++e) {
      if (e_emb[e]) continue;
      auto [u, v] = block.edges()[e];
      if (v_emb[u] && v_emb[v]) {
        Fragment f;
        f.chord = true;
        f.cu = u;
        f.cv = v;
        f.attachments = {std::min(u, v), std::max(u, v)};
        fragments.push_back(std::move(f));
      }
    }
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
      if (v_emb[s] || seen[s]) continue;
      Fragment f;
      std::set<int> att;
      std::deque<int> queue{s};
      seen[s] = 1;
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        f.interior.push_back(v);
        for (int w : block.neighbors(v)) {
          if (v_emb[w]) {
            att.insert(w);
          } else if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
        }
      }
      f.attachments.assign(att.begin(), att.end());
      fragments.push_back(std::move(f));
    }

    // Admissible faces per fragment.
    int pick = -1, pick_count = -1;
    std::vector<int> pick_faces;
    for (std::size_t fi = 0; fi < fragments.size(); ++fi) {
      std::vector<int> adm;
      for (std::size_t k = 0; k < fw.faces.size(); ++k) {
        auto fv = face_vertices(fw.faces[k]);
        bool ok = true;
        for (int a : fragments[fi].attachments)
          if (!fv.count(a)) {
            ok = false;
            break;
          }
        if (ok) adm.push_back(int(k));
      }
      if (adm.empty()) return std::nullopt;
      if (pick == -1 || int(adm.size()) < pick_count) {
        pick = int(fi);
        pick_count = int(adm.size());
        pick_faces = adm;
        if (pick_count == 1) break;
      }
    }

    const Fragment& frag = fragments[pick];
    // Path between two attachments through the fragment.
    std::vector<int> path;
    if (frag.chord) {
      path = {frag.cu, frag.cv};
    } else {
      int a1 = frag.attachments[0], a2 = frag.attachments[1];
      std::vector<int> prev(n, -2);
      std::deque<int> queue;
      for (int v : frag.interior) prev[v] = -3;  // allowed interior
      // Start from a1 through fragment edges only.
      std::deque<int> q2;
      for (int w : block.neighbors(a1))
        if (prev[w] == -3) {
          prev[w] = a1;
          q2.push_back(w);
        }
      int hit = -1;
      while (!q2.empty() && hit == -1) {
        int v = q2.front();
        q2.pop_front();
        for (int w : block.neighbors(v)) {
          if (w == a2) {
            hit = v;
            break;
          }
          if (prev[w] == -3) {
            prev[w] = v;
            q2.push_back(w);
          }
        }
      }
      if (hit == -1) throw Error(ErrorCode::InvalidScheme, "fragment path search failed");
      path = {a2};
      for (int x = hit; x != a1; x = prev[x]) path.push_back(x);
      path.push_back(a1);
      std::reverse(path.begin(), path.end());  // a1 ... a2
    }

    // Split the chosen face along the path.
    auto& face = fw.faces[pick_faces[0]];
    int a1 = path.front(), a2 = path.back();
    int i = -1, j = -1;
    for (std::size_t k = 0; k < face.size(); ++k) {
      if (fw.head(face[k]) == a1 && i == -1) i = int(k);
      if (fw.head(face[k]) == a2 && j == -1) j = int(k);
    }
    if (i == -1 || j == -1) throw Error(ErrorCode::InvalidScheme, "attachment not on admissible face");

    auto cyc_slice = [&](int from, int to) {  // darts after position `from` up to and including `to`
      std::vector<int> out;
      int k = from;
      do {
        k = (k + 1) % int(face.size());
        out.push_back(face[k]);
      } while (k != to);
      return out;
    };
    std::vector<int> path_fwd, path_bwd;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) path_fwd.push_back(fw.dart(path[k], path[k + 1]));
    for (auto it = path_fwd.rbegin(); it != path_fwd.rend(); ++it) path_bwd.push_back(*it ^ 1);

    std::vector<int> face_a = cyc_slice(i, j);  // ends at a2
    face_a.insert(face_a.end(), path_bwd.begin(), path_bwd.end());
    std::vector<int> face_b = cyc_slice(j, i);  // ends at a1
    face_b.insert(face_b.end(), path_fwd.begin(), path_fwd.end());
    fw.faces[pick_faces[0]] = std::move(face_a);
    fw.faces.push_back(std::move(face_b));

    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      e_emb[block.edge_index(path[k], path[k + 1])] = 1;
      ++embedded_edges;
    }
    for (int v : path) v_emb[v] = 1;
  }

  // Extract rotations: consecutive face darts (d, d2) mean that at
  // v = head(d), d2 follows reversal(d) in the rotation.
  std::vector<int> succ(2 * m, -1);
  for (const auto& face : fw.faces) {
    for (std::size_t k = 0; k < face.size(); ++k) {
      int d = face[k], d2 = face[(k + 1) % face.size()];
      int r = d ^ 1;
      if (succ[r] != -1) throw Error(ErrorCode::InvalidScheme, "face walks are inconsistent");
      succ[r] = d2;
    }
  }
  for (int v = 0; v < n; ++v) {
    std::vector<int> ring;
    int first = -1;
    for (int w : block.neighbors(v)) {
      first = fw.dart(v, w);
      break;
    }
    if (first == -1) {
      vs.rot[v] = {};
      continue;
    }
    int d = first;
    do {
      ring.push_back(fw.head(d));
      d = succ[d];
      if (d == -1 || (int)ring.size() > block.degree(v)) throw Error(ErrorCode::InvalidScheme, "rotation not cyclic");
    } while (d != first);
    if ((int)ring.size() != block.degree(v)) throw Error(ErrorCode::InvalidScheme, "rotation misses edges");
    vs.rot[v] = ring;
  }
  for (auto [u, v] : block.edges()) vs.set_sign(u, v, 1);
  return vs;
}

}  // namespace igx::topo

// --- public is_planar ---------------------------------------------------------

namespace igx {

namespace {

using topo::VScheme;

// Decision-only planarity: every block embeds.
bool planar_decide(const Graph& g) {
  for (const auto& block_edges : topo::blocks(g)) {
    std::vector<int> verts;
    for (auto [u, v] : block_edges) {
      verts.push_back(u);
      verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = int(i);
    Graph block(int(verts.size()));
    for (auto [u, v] : block_edges) block.add_edge(local[u], local[v]);
    if (!topo::planar_embed_block(block)) return false;
  }
  return true;
}

// Minimal nonplanar subgraph by greedy edge deletion; the result is a
// subdivision of K5 or K3,3.
std::vector<std::pair<int, int>> minimize_nonplanar(const Graph& g) {
  std::vector<std::pair<int, int>> edges = g.edges();
  int n = g.vertex_count();
  std::size_t i = 0;
  while (i < edges.size()) {
    std::vector<std::pair<int, int>> trial = edges;
    trial.erase(trial.begin() + i);
    if (!planar_decide(Graph::from_edges(n, trial))) {
      edges = std::move(trial);
    } else {
      ++i;
    }
  }
  return edges;
}

std::string classify_kuratowski(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  int deg3 = 0, deg4 = 0;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 3) ++deg3;
    if (deg[v] == 4) ++deg4;
  }
  return deg4 == 5 ? "K5" : "K3,3";
}

}  // namespace

PlanarityResult is_planar(const Graph& g) {
  PlanarityResult out;
  VScheme assembled;
  for (int v = 0; v < g.vertex_count(); ++v) assembled.rot[v] = {};

  for (const auto& block_edges : topo::blocks(g)) {
    // Re-index the block.
    std::vector<int> verts;
    for (auto [u, v] : block_edges) {
      verts.push_back(u);
      verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = int(i);
    Graph block(int(verts.size()));
    for (auto [u, v] : block_edges) block.add_edge(local[u], local[v]);

    auto vs = topo::planar_embed_block(block);
    if (!vs) {
      out.planar = false;
      // Witness: a direct K5/K3,3 first, else shrink to a minimal
      // nonplanar subgraph of this block.
      std::vector<std::pair<int, int>> min_edges;
      std::string kind;
      if (auto w5 = find_subgraph(block, GraphExpr::K(5).eval())) {
        for (int a = 0; a < 5; ++a)
          for (int b = a + 1; b < 5; ++b) min_edges.emplace_back((*w5)[a], (*w5)[b]);
        kind = "K5";
      } else if (auto w33 = find_subgraph(block, GraphExpr::Kmn(3, 3).eval())) {
        for (int a = 0; a < 3; ++a)
          for (int b = 3; b < 6; ++b) min_edges.emplace_back((*w33)[a], (*w33)[b]);
        kind = "K3,3";
      } else {
        min_edges = minimize_nonplanar(block);
      }
      std::vector<std::pair<int, int>> witness;
      for (auto [u, v] : min_edges) witness.emplace_back(verts[u], verts[v]);
      out.kuratowski = std::move(witness);
      out.kuratowski_kind = kind.empty() ? classify_kuratowski(g.vertex_count(), out.kuratowski) : kind;
      return out;
    }
    // Splice into the assembly: concatenate rotations at shared vertices.
    for (const auto& [lv, ring] : vs->rot) {
      int v = verts[lv];
      for (int lw : ring) assembled.rot[v].push_back(verts[lw]);
    }
  }
  out.planar = true;
  for (auto [u, v] : g.edges()) assembled.set_sign(u, v, 1);
  out.embedding = topo::vscheme_to_scheme(assembled, g);
  return out;
}

}  // namespace igx
