// Face tracing for embedding schemes and the scheme fixture format.

#include <algorithm>
#include <deque>
#include <sstream>

#include "igx/embed.hpp"
#include "igx/error.hpp"

namespace igx {

namespace {

// Darts: edge e gives darts 2e (u -> v with u < v) and 2e+1 (v -> u).
struct Darts {
  std::vector<int> head, tail;
  std::vector<std::vector<int>> out;  // per vertex, out-darts in rotation order

  Darts(const Graph& g, const Scheme& s) {
    const auto& edges = g.edges();
    head.resize(2 * edges.size());
    tail.resize(2 * edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      tail[2 * e] = edges[e].first;
      head[2 * e] = edges[e].second;
      tail[2 * e + 1] = edges[e].second;
      head[2 * e + 1] = edges[e].first;
    }
    out.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
      for (int e : s.rotation[v]) {
        auto [a, b] = edges[e];
        out[v].push_back(a == v ? int(2 * e) : int(2 * e + 1));
      }
    }
  }
};

void validate_scheme(const Graph& g, const Scheme& s) {
  if ((int)s.rotation.size() != g.vertex_count() || (int)s.signs.size() != g.edge_count())
    throw Error(ErrorCode::InvalidScheme, "scheme shape does not match graph");
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> expect;
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [a, b] = g.edges()[e];
      if (a == v || b == v) expect.push_back(e);
    }
    std::vector<int> got = s.rotation[v];
    std::sort(got.begin(), got.end());
    if (got != expect) throw Error(ErrorCode::InvalidScheme, "rotation is not a permutation of incident edges");
  }
  for (auto sg : s.signs)
    if (sg != 1 && sg != -1) throw Error(ErrorCode::InvalidScheme, "edge signs must be +1 or -1");
}

}  // namespace

FaceTrace trace_faces(const Graph& g, const Scheme& s) {
  validate_scheme(g, s);
  FaceTrace out;
  const int m = g.edge_count();
  Darts darts(g, s);

  // Position of each out-dart inside its vertex rotation.
  std::vector<int> pos(2 * m, -1);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (std::size_t i = 0; i < darts.out[v].size(); ++i) pos[darts.out[v][i]] = int(i);

  auto next_state = [&](int dart, int sgn) -> std::pair<int, int> {
    int v = darts.head[dart];
    int r = dart ^ 1;
    const auto& ring = darts.out[v];
    int i = pos[r];
    int j = sgn > 0 ? (i + 1) % int(ring.size()) : (i + int(ring.size()) - 1) % int(ring.size());
    int d2 = ring[j];
    int s2 = sgn * s.signs[d2 >> 1];
    return {d2, s2};
  };

  // States: 2*dart + (sign < 0). Faces = orbit pairs under reversal.
  std::vector<char> used(4 * m, 0);
  int faces = 0;
  for (int st = 0; st < 4 * m; ++st) {
    if (used[st]) continue;
    ++faces;
    int dart = st >> 1;
    int sgn = (st & 1) ? -1 : 1;
    int d = dart, sg = sgn;
    while (true) {
      used[2 * d + (sg < 0)] = 1;
      // Mirror state of (d, sg) is (theta d, -sg * sign(d's edge)).
      int msg = -sg * s.signs[d >> 1];
      used[2 * (d ^ 1) + (msg < 0)] = 1;
      auto [d2, sg2] = next_state(d, sg);
      d = d2;
      sg = sg2;
      if (2 * d + (sg < 0) == st) break;
    }
  }

  // Isolated vertices each bound one face on their own sphere.
  int isolated = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) ++isolated;
  out.faces = faces + isolated;

  // Euler genus per component: 2 - V + E - F, faces assigned to components.
  auto comps = g.components();
  out.euler_genus = 2 * int(comps.size()) - g.vertex_count() + g.edge_count() - out.faces;

  // Orientable iff the signature is switching-equivalent to all-positive:
  // assign vertex flips along a spanning forest, then check non-tree edges.
  std::vector<int> flip(g.vertex_count(), 0);
  std::vector<char> visited(g.vertex_count(), 0);
  out.orientable = true;
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (visited[root]) continue;
    visited[root] = 1;
    flip[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        int sgn = s.signs[g.edge_index(v, w)];
        if (!visited[w]) {
          visited[w] = 1;
          flip[w] = flip[v] * sgn;
          queue.push_back(w);
        } else if (flip[w] != flip[v] * sgn) {
          out.orientable = false;
        }
      }
    }
  }
  return out;
}

std::string Scheme::to_text() const {
  std::ostringstream out;
  for (std::size_t v = 0; v < rotation.size(); ++v) {
    out << v << ':';
    for (int e : rotation[v]) out << ' ' << e;
    out << '\n';
  }
  for (std::size_t e = 0; e < signs.size(); ++e) out << e << ": " << (signs[e] > 0 ? "+1" : "-1") << '\n';
  return out.str();
}

Scheme Scheme::from_text(const std::string& text, const Graph& g) {
  Scheme s;
  s.rotation.assign(g.vertex_count(), {});
  s.signs.assign(g.edge_count(), 1);
  std::istringstream in(text);
  std::string line;
  int vertex_lines = 0, edge_lines = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "scheme line lacks ':'");
    int id = std::stoi(line.substr(0, colon));
    std::istringstream rest(line.substr(colon + 1));
    if (vertex_lines < g.vertex_count()) {
      if (id != vertex_lines) throw Error(ErrorCode::ParseError, "scheme vertex lines out of order");
      int e;
      while (rest >> e) s.rotation[id].push_back(e);
      ++vertex_lines;
    } else {
      if (id != edge_lines) throw Error(ErrorCode::ParseError, "scheme edge lines out of order");
      int sg;
      if (!(rest >> sg) || (sg != 1 && sg != -1)) throw Error(ErrorCode::ParseError, "bad edge sign");
      s.signs[id] = std::int8_t(sg);
      ++edge_lines;
    }
  }
  if (vertex_lines != g.vertex_count() || edge_lines != g.edge_count())
    throw Error(ErrorCode::ParseError, "scheme line counts do not match graph");
  return s;
}

int closed_form_genus(ClosedForm kind, int m, int n) {
  auto ceil_div = [](long long a, long long b) { return int((a + b - 1) / b); };
  switch (kind) {
    case ClosedForm::KnGenus:
      if (m < 3) throw Error(ErrorCode::OutOfRange, "Kn genus formula needs n >= 3");
      return ceil_div((long long)(m - 3) * (m - 4), 12);
    case ClosedForm::KnCrosscap:
      if (m < 3) throw Error(ErrorCode::OutOfRange, "Kn crosscap formula needs n >= 3");
      if (m == 7) return 3;
      return ceil_div((long long)(m - 3) * (m - 4), 6);
    case ClosedForm::KmnGenus:
      if (m < 2 || n < 2) throw Error(ErrorCode::OutOfRange, "Kmn genus formula needs m, n >= 2");
      return ceil_div((long long)(m - 2) * (n - 2), 4);
    case ClosedForm::KmnCrosscap:
      if (m < 2 || n < 2) throw Error(ErrorCode::OutOfRange, "Kmn crosscap formula needs m, n >= 2");
      return ceil_div((long long)(m - 2) * (n - 2), 2);
  }
  throw Error(ErrorCode::OutOfRange, "unknown closed form");
}

}  // namespace igx
