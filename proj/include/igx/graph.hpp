#ifndef IGX_GRAPH_HPP
#define IGX_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace igx {

// Undirected simple graph with optional vertex labels. Immutable by
// convention: operations return new graphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, Row((n + 63) / 64, 0)) {}

  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return int(edges_.size()); }
  bool adjacent(int u, int v) const { return (adj_[u][v >> 6] >> (v & 63)) & 1; }
  int degree(int v) const;
  void add_edge(int u, int v);
  std::vector<int> neighbors(int v) const;

  // Edges sorted with u < v, lexicographic.
  const std::vector<std::pair<int, int>>& edges() const;
  int edge_index(int u, int v) const;  // -1 when absent

  const std::vector<std::string>& labels() const { return labels_; }
  void set_label(int v, std::string label);

  Graph complement() const;
  Graph induced(const std::vector<int>& vertices) const;
  std::vector<std::vector<int>> components() const;

  // Plain adjacency text: "n m" then one "u v" line per edge, u < v, sorted.
  std::string to_adjacency_text() const;
  static Graph from_adjacency_text(const std::string& text);
  std::string to_dot() const;

 private:
  using Row = std::vector<std::uint64_t>;

  int n_ = 0;
  mutable std::vector<std::pair<int, int>> edges_;
  mutable bool edges_sorted_ = true;
  std::vector<Row> adj_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Graph-building expressions mirroring the usual model notation: complete,
// empty, complete bipartite, cycles, paths, disjoint union, join, complement,
// disjoint copies and pendant attachment.
class GraphExpr {
 public:
  static GraphExpr K(int n);
  static GraphExpr Kbar(int n);
  static GraphExpr Kmn(int m, int n);
  static GraphExpr C(int n);
  static GraphExpr P(int edges);  // path with the given number of edges
  static GraphExpr disjoint(GraphExpr a, GraphExpr b);
  static GraphExpr join(GraphExpr a, GraphExpr b);
  static GraphExpr complement(GraphExpr e);
  static GraphExpr copies(int k, GraphExpr e);
  static GraphExpr pendants(GraphExpr e, int vertex, int k);

  Graph eval() const;
  std::string text() const;

  struct Node;  // implementation detail

 private:
  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------

constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

// Edge-preserving bijection, if one exists (exact).
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);
// Brute-force oracle over all vertex permutations; |V| <= 9 or so.
std::optional<std::vector<int>> find_isomorphism_bruteforce(const Graph& a, const Graph& b);

// Injective map of pattern vertices into host carrying every pattern edge to
// a host edge (ordinary subgraph containment, not induced).
std::optional<std::vector<int>> find_subgraph(const Graph& host, const Graph& pattern);

int girth(const Graph& g);  // kInfiniteGirth when acyclic

struct StructuralFlags {
  bool bipartite = false;
  bool complete_bipartite = false;
  bool tree = false;
  bool star = false;
  bool acyclic = false;
  bool unicyclic = false;
  bool path = false;
  bool cycle = false;
  bool totally_disconnected = false;
};

StructuralFlags structural_predicates(const Graph& g);

bool x_free(const Graph& g, const GraphExpr& x);

struct SearchBudget {
  long long node_limit = 10'000'000;
  long long nodes = 0;
};

int independence_number(const Graph& g, SearchBudget& budget);
int clique_cover_number(const Graph& g, SearchBudget& budget);

}  // namespace igx

#endif
