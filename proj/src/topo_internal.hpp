// Shared internals for the planarity and genus machinery.

#ifndef IGX_TOPO_INTERNAL_HPP
#define IGX_TOPO_INTERNAL_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "igx/embed.hpp"
#include "igx/graph.hpp"

namespace igx::topo {

// Rotation-by-neighbor representation. Survives vertex/edge renumbering, so
// reduction undo and block splicing operate on it; converted to an edge-id
// Scheme against a concrete graph at the end.
struct VScheme {
  std::map<int, std::vector<int>> rot;             // vertex -> neighbor cycle
  std::map<std::pair<int, int>, int> sign;         // (min,max) -> +1/-1

  void set_sign(int u, int v, int s) { sign[{std::min(u, v), std::max(u, v)}] = s; }
  int get_sign(int u, int v) const { return sign.at({std::min(u, v), std::max(u, v)}); }
};

Scheme vscheme_to_scheme(const VScheme& vs, const Graph& g);
Graph vscheme_graph(const VScheme& vs, int n);  // graph spanned by the rotations, on vertices 0..n-1

// Biconnected components. Each block is an edge list on original vertex ids;
// bridges appear as two-vertex blocks.
std::vector<std::vector<std::pair<int, int>>> blocks(const Graph& g);

// Planar embedding of a biconnected graph (>= 1 vertex), or nullopt.
std::optional<VScheme> planar_embed_block(const Graph& block);

// Degree-based reductions that preserve orientable and nonorientable genus.
struct ReductionStep {
  enum class Kind { Isolated, Pendant, Ear, Suppress } kind;
  int v = -1, x = -1, y = -1;
};

struct Reduced {
  Graph core;                       // reduced graph, re-indexed
  std::vector<int> core_to_orig;    // core vertex -> input vertex
  std::vector<ReductionStep> steps; // in application order, input vertex ids
};

Reduced reduce_for_genus(const Graph& g);

// Rebuild a scheme for the input graph from a scheme on the reduced core by
// undoing the reduction steps. Euler genus and orientability are preserved;
// the result is verified by face tracing.
VScheme lift_through_reductions(const Graph& original, const Reduced& red, const VScheme& core_scheme);

}  // namespace igx::topo

#endif
