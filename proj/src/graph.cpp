#include "igx/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

#include "igx/error.hpp"

namespace igx {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
    throw Error(ErrorCode::InvalidParameters, "bad edge endpoints");
  if (adjacent(u, v)) return;
  adj_[u][v >> 6] |= 1ull << (v & 63);
  adj_[v][u >> 6] |= 1ull << (u & 63);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  edges_sorted_ = false;
}

const std::vector<std::pair<int, int>>& Graph::edges() const {
  if (!edges_sorted_) {
    std::sort(edges_.begin(), edges_.end());
    edges_sorted_ = true;
  }
  return edges_;
}

int Graph::degree(int v) const {
  int d = 0;
  for (auto w : adj_[v]) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (std::size_t wi = 0; wi < adj_[v].size(); ++wi) {
    std::uint64_t w = adj_[v][wi];
    while (w) {
      out.push_back(int(wi * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const auto& es = edges();
  auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(u, v));
  if (it == es.end() || *it != std::make_pair(u, v)) return -1;
  return int(it - es.begin());
}

void Graph::set_label(int v, std::string label) {
  if (labels_.empty()) labels_.resize(n_);
  labels_[v] = std::move(label);
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) g.add_edge(u, v);
  return g;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  Graph g(int(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) g.add_edge(int(i), int(j));
  return g;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] != -1) continue;
    int id = int(out.size());
    out.emplace_back();
    std::deque<int> queue{s};
    comp[s] = id;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      out[id].push_back(v);
      for (int w : neighbors(v))
        if (comp[w] == -1) {
          comp[w] = id;
          queue.push_back(w);
        }
    }
  }
  return out;
}

std::string Graph::to_adjacency_text() const {
  std::ostringstream out;
  out << n_ << ' ' << edges_.size() << '\n';
  for (auto [u, v] : edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph Graph::from_adjacency_text(const std::string& text) {
  std::istringstream in(text);
  int n = -1;
  std::size_t m = 0;
  if (!(in >> n >> m) || n < 0) throw Error(ErrorCode::ParseError, "adjacency text: bad header");
  Graph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw Error(ErrorCode::ParseError, "adjacency text: truncated edge list");
    g.add_edge(u, v);
  }
  return g;
}

std::string Graph::to_dot() const {
  std::ostringstream out;
  out << "graph g {\n";
  for (int v = 0; v < n_; ++v) {
    out << "  v" << v;
    if (!labels_.empty() && !labels_[v].empty()) out << " [label=\"" << labels_[v] << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

// --- girth ------------------------------------------------------------------

int girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = kInfiniteGirth;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (2 * dist[v] + 1 >= best) break;
      for (int w : g.neighbors(v)) {
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (w != parent[v] && parent[w] != v) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

// --- structural predicates ---------------------------------------------------

namespace {

bool two_colorable(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = color[v] ^ 1;
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_complete_bipartite_whole(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 1) return true;  // K_{1,0}
  if (g.edge_count() == 0) return false;
  // Sides must be the two color classes of the (connected) graph.
  std::vector<int> color(n, -1);
  std::deque<int> queue{0};
  color[0] = 0;
  int seen = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (color[w] == -1) {
        color[w] = color[v] ^ 1;
        ++seen;
        queue.push_back(w);
      } else if (color[w] == color[v]) {
        return false;
      }
    }
  }
  if (seen != n) return false;  // disconnected
  long long a = std::count(color.begin(), color.end(), 0);
  long long b = n - a;
  return g.edge_count() == a * b;
}

}  // namespace

StructuralFlags structural_predicates(const Graph& g) {
  StructuralFlags f;
  const int n = g.vertex_count();
  const int m = g.edge_count();
  auto comps = g.components();
  const int c = int(comps.size());

  f.totally_disconnected = (m == 0);
  f.acyclic = (m == n - c);
  f.unicyclic = (m == n - c + 1);
  f.bipartite = two_colorable(g);
  f.tree = (c == 1) && f.acyclic;
  f.complete_bipartite = is_complete_bipartite_whole(g);

  if (f.tree && n >= 2) {
    int leaves = 0, centers = 0;
    for (int v = 0; v < n; ++v) {
      int d = g.degree(v);
      if (d == 1) ++leaves;
      if (d == n - 1) ++centers;
    }
    f.star = (centers >= 1 && leaves >= n - 1);  // K2 counts: both vertices qualify
  } else if (n == 1) {
    f.star = true;
  }

  if (c == 1 && f.acyclic && n >= 2) {
    int deg1 = 0;
    bool ok = true;
    for (int v = 0; v < n; ++v) {
      int d = g.degree(v);
      if (d == 1)
        ++deg1;
      else if (d != 2)
        ok = false;
    }
    f.path = ok && deg1 == 2;
  }

  if (c == 1 && n >= 3 && m == n) {
    bool all2 = true;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) != 2) all2 = false;
    f.cycle = all2;
  }
  return f;
}

bool x_free(const Graph& g, const GraphExpr& x) { return !find_subgraph(g, x.eval()).has_value(); }

// --- expressions --------------------------------------------------------------

struct GraphExpr::Node {
  enum class Kind { K, Kbar, Kmn, C, P, Union, Join, Complement, Copies, Pendants } kind;
  int a = 0, b = 0;
  std::shared_ptr<const Node> left, right;
};

namespace {

using Node = GraphExpr::Node;

Graph eval_node(const Node& node);

Graph disjoint_union(const Graph& l, const Graph& r) {
  Graph g(l.vertex_count() + r.vertex_count());
  for (auto [u, v] : l.edges()) g.add_edge(u, v);
  int off = l.vertex_count();
  for (auto [u, v] : r.edges()) g.add_edge(u + off, v + off);
  return g;
}

}  // namespace

GraphExpr GraphExpr::K(int n) {
  if (n < 1) throw Error(ErrorCode::MalformedExpression, "K(n) needs n >= 1");
  GraphExpr e;
  e.node_ = std::make_shared<Node>(Node{Node::Kind::K, n, 0, nullptr, nullptr});
  return e;
}
GraphExpr GraphExpr::Kbar(int n) {
  if (n < 1) throw Error(ErrorCode::MalformedExpression, "Kbar(n) needs n >= 1");
  GraphExpr e;
  e.node_ = std::make_shared<Node>(Node{Node::Kind::Kbar, n, 0, nullptr, nullptr});
  return e;
}
GraphExpr GraphExpr::Kmn(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::MalformedExpression, "Kmn(m,n) needs m,n >= 1");
  GraphExpr e;
  e.node_ = std::make_shared<Node>(Node{Node::Kind::Kmn, m, n, nullptr, nullptr});
  return e;
}
GraphExpr GraphExpr::C(int n) {
  if (n < 3) throw Error(ErrorCode::MalformedExpression, "C(n) needs n >= 3");
  GraphExpr e;
  e.node_ = std::make_shared<Node>(Node{Node::Kind::C, n, 0, nullptr, nullptr});
  return e;
}
GraphExpr GraphExpr::P(int edges) {
  if (edges < 1) throw Error(ErrorCode::MalformedExpression, "P(n) counts edges, n >= 1");
  GraphExpr e;
  e.node_ = std::make_shared<Node>(Node{Node::Kind::P, edges, 0, nullptr, nullptr});
  return e;
}
GraphExpr GraphExpr::disjoint(GraphExpr a, GraphExpr b) {
  GraphExpr e;
  e.node_ = std::make_shared<Node>(Node{Node::Kind::Union, 0, 0, a.node_, b.node_});
  return e;
}
GraphExpr GraphExpr::join(GraphExpr a, GraphExpr b) {
  GraphExpr e;
  e.node_ = std::make_shared<Node>(Node{Node::Kind::Join, 0, 0, a.node_, b.node_});
  return e;
}
GraphExpr GraphExpr::complement(GraphExpr x) {
  GraphExpr e;
  e.node_ = std::make_shared<Node>(Node{Node::Kind::Complement, 0, 0, x.node_, nullptr});
  return e;
}
GraphExpr GraphExpr::copies(int k, GraphExpr x) {
  if (k < 1) throw Error(ErrorCode::MalformedExpression, "copies(k, e) needs k >= 1");
  GraphExpr e;
  e.node_ = std::make_shared<Node>(Node{Node::Kind::Copies, k, 0, x.node_, nullptr});
  return e;
}
GraphExpr GraphExpr::pendants(GraphExpr x, int vertex, int k) {
  if (k < 0 || vertex < 0) throw Error(ErrorCode::MalformedExpression, "pendants(e, v, k) needs v, k >= 0");
  GraphExpr e;
  e.node_ = std::make_shared<Node>(Node{Node::Kind::Pendants, vertex, k, x.node_, nullptr});
  return e;
}

namespace {

Graph eval_node(const Node& node) {
  using Kind = Node::Kind;
  switch (node.kind) {
    case Kind::K: {
      Graph g(node.a);
      for (int u = 0; u < node.a; ++u)
        for (int v = u + 1; v < node.a; ++v) g.add_edge(u, v);
      return g;
    }
    case Kind::Kbar:
      return Graph(node.a);
    case Kind::Kmn: {
      Graph g(node.a + node.b);
      for (int u = 0; u < node.a; ++u)
        for (int v = 0; v < node.b; ++v) g.add_edge(u, node.a + v);
      return g;
    }
    case Kind::C: {
      Graph g(node.a);
      for (int v = 0; v < node.a; ++v) g.add_edge(v, (v + 1) % node.a);
      return g;
    }
    case Kind::P: {
      Graph g(node.a + 1);
      for (int v = 0; v < node.a; ++v) g.add_edge(v, v + 1);
      return g;
    }
    case Kind::Union:
      return disjoint_union(eval_node(*node.left), eval_node(*node.right));
    case Kind::Join: {
      Graph l = eval_node(*node.left), r = eval_node(*node.right);
      Graph g = disjoint_union(l, r);
      for (int u = 0; u < l.vertex_count(); ++u)
        for (int v = 0; v < r.vertex_count(); ++v) g.add_edge(u, l.vertex_count() + v);
      return g;
    }
    case Kind::Complement:
      return eval_node(*node.left).complement();
    case Kind::Copies: {
      Graph g = eval_node(*node.left);
      Graph out(0);
      for (int i = 0; i < node.a; ++i) out = disjoint_union(out, g);
      return out;
    }
    case Kind::Pendants: {
      Graph base = eval_node(*node.left);
      if (node.a >= base.vertex_count()) throw Error(ErrorCode::MalformedExpression, "pendant vertex out of range");
      Graph g(base.vertex_count() + node.b);
      for (auto [u, v] : base.edges()) g.add_edge(u, v);
      for (int i = 0; i < node.b; ++i) g.add_edge(node.a, base.vertex_count() + i);
      return g;
    }
  }
  throw Error(ErrorCode::MalformedExpression, "unreachable expression kind");
}

std::string node_text(const Node& node) {
  using Kind = Node::Kind;
  switch (node.kind) {
    case Kind::K: return "K" + std::to_string(node.a);
    case Kind::Kbar: return "~K" + std::to_string(node.a);
    case Kind::Kmn: return "K{" + std::to_string(node.a) + "," + std::to_string(node.b) + "}";
    case Kind::C: return "C" + std::to_string(node.a);
    case Kind::P: return "P" + std::to_string(node.a);
    case Kind::Union: return "(" + node_text(*node.left) + " u " + node_text(*node.right) + ")";
    case Kind::Join: return "(" + node_text(*node.left) + " + " + node_text(*node.right) + ")";
    case Kind::Complement: return "~" + node_text(*node.left);
    case Kind::Copies: return std::to_string(node.a) + node_text(*node.left);
    case Kind::Pendants:
      return "pend(" + node_text(*node.left) + "@" + std::to_string(node.a) + "," + std::to_string(node.b) + ")";
  }
  return "?";
}

}  // namespace

Graph GraphExpr::eval() const {
  if (!node_) throw Error(ErrorCode::MalformedExpression, "empty expression");
  return eval_node(*node_);
}

std::string GraphExpr::text() const { return node_ ? node_text(*node_) : "?"; }

}  // namespace igx
