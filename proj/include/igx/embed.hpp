#ifndef IGX_EMBED_HPP
#define IGX_EMBED_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "igx/graph.hpp"

namespace igx {

// Embedding scheme: a cyclic order of incident edges at every vertex plus a
// sign per edge. All-positive signatures describe orientable embeddings.
struct Scheme {
  std::vector<std::vector<int>> rotation;  // per vertex: incident edge ids in cyclic order
  std::vector<std::int8_t> signs;          // per edge: +1 / -1

  std::string to_text() const;
  static Scheme from_text(const std::string& text, const Graph& g);
};

struct FaceTrace {
  int faces = 0;
  int euler_genus = 0;  // 2 - V + E - F summed per component
  bool orientable = true;
};

// Face tracing by the next-edge rule on signed darts. Works per component;
// isolated vertices contribute one face each.
FaceTrace trace_faces(const Graph& g, const Scheme& s);

struct PlanarityResult {
  bool planar = false;
  std::optional<Scheme> embedding;                 // when planar
  std::vector<std::pair<int, int>> kuratowski;     // edges of a K5/K3,3 subdivision when not
  std::string kuratowski_kind;                     // "K5" or "K3,3"
};

PlanarityResult is_planar(const Graph& g);

struct GenusBudget {
  long long node_limit = 100'000'000;
  long long nodes = 0;
};

constexpr int kGenusUnknown = std::numeric_limits<int>::max();

struct GenusResult {
  bool exact = false;
  int lower = 0;
  int upper = kGenusUnknown;
  std::optional<Scheme> scheme;  // witness for upper, on the input graph
  long long nodes_explored = 0;

  int value() const { return lower; }  // meaningful when exact
};

// Exact minimum genus over rotation systems (orientable) or signed schemes
// with a nonorientable signature. Preprocessing: components, blocks, pendant
// and reducible degree-2 vertices. On budget exhaustion returns Bounds.
GenusResult orientable_genus(const Graph& g, GenusBudget budget = {});
GenusResult nonorientable_genus(const Graph& g, GenusBudget budget = {});

// Capped variants: levels above `level_cap` are not searched, so the result
// may be Bounds with lower = cap + 1. Decision use ("is it toroidal?").
GenusResult orientable_genus(const Graph& g, GenusBudget budget, int level_cap);
GenusResult nonorientable_genus(const Graph& g, GenusBudget budget, int level_cap);

enum class ClosedForm { KnGenus, KmnGenus, KnCrosscap, KmnCrosscap };

// Ceiling-arithmetic closed forms for complete and complete bipartite graphs.
int closed_form_genus(ClosedForm kind, int m, int n = 0);

struct CertificateWitness {
  std::string kind;           // e.g. "K8-subgraph", "euler-bound", "two-disjoint-K5"
  std::vector<int> vertices;  // host vertices involved (possibly empty for counting bounds)
};

// A returned witness proves orientable genus > 1 (resp. nonorientable > 1).
// Absence proves nothing.
std::optional<CertificateWitness> nontoroidality_certificate(const Graph& g);
std::optional<CertificateWitness> nonprojectivity_certificate(const Graph& g);

}  // namespace igx

#endif
