#pragma once

#include <cstddef>
#include <vector>

#include "apexrandic/graph.hpp"

namespace apexrandic::named {

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph(n, std::move(e));
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw UsageError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Graph(n, std::move(e));
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  }
  return Graph(n, std::move(e));
}

/// K_{1,leaves}; the centre is vertex 0.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Graph(leaves + 1, std::move(e));
}

/// K_{a,b} with parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) e.push_back({u, static_cast<Vertex>(a + v)});
  }
  return Graph(a + b, std::move(e));
}

/// Replaces edge uv by a path u-x1-...-x_times-v; new vertices get labels n, n+1, ...
/// in order from u towards v.
inline Graph subdivide_edge(const Graph& g, Vertex u, Vertex v, std::size_t times) {
  if (!g.has_edge(u, v)) throw UsageError("subdivide_edge: not an edge");
  std::vector<Edge> e;
  for (const auto& x : g.edges()) {
    if (!(x == Edge{std::min(u, v), std::max(u, v)})) e.push_back(x);
  }
  auto n = static_cast<Vertex>(g.order());
  Vertex prev = u;
  for (std::size_t i = 0; i < times; ++i) {
    e.push_back({prev, static_cast<Vertex>(n + i)});
    prev = static_cast<Vertex>(n + i);
  }
  e.push_back({prev, v});
  return Graph(g.order() + times, std::move(e));
}

/// Generalized Petersen graph GP(p, j): outer cycle 0..p-1, spokes i-(p+i),
/// inner edges (p+i)-(p+(i+j) mod p).
inline Graph generalized_petersen(std::size_t p, std::size_t j) {
  if (p < 3 || j == 0 || 2 * j >= p) {
    throw UsageError("generalized_petersen: need p >= 3 and 1 <= j < p/2");
  }
  std::vector<Edge> e;
  for (Vertex i = 0; i < p; ++i) {
    e.push_back({i, static_cast<Vertex>((i + 1) % p)});
    e.push_back({i, static_cast<Vertex>(p + i)});
    e.push_back({static_cast<Vertex>(p + i), static_cast<Vertex>(p + (i + j) % p)});
  }
  return Graph(2 * p, std::move(e));
}

inline Graph petersen() { return generalized_petersen(5, 2); }

/// Cycle 0..n-1 plus antipodal chords; cubic for even n >= 6.
inline Graph moebius_ladder(std::size_t n) {
  if (n < 6 || n % 2 != 0) throw UsageError("moebius_ladder: need even n >= 6");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({i, static_cast<Vertex>((i + 1) % n)});
  for (Vertex i = 0; i < n / 2; ++i) e.push_back({i, static_cast<Vertex>(i + n / 2)});
  return Graph(n, std::move(e));
}

/// Heawood graph: 14-cycle with chords i-(i+5) for even i.
inline Graph heawood() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 14; ++i) e.push_back({i, (i + 1) % 14});
  for (Vertex i = 0; i < 14; i += 2) e.push_back({i, (i + 5) % 14});
  return Graph(14, std::move(e));
}

/// Image of g under v -> perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> e;
  for (const auto& x : g.edges()) e.push_back({perm[x.u], perm[x.v]});
  return Graph(g.order(), std::move(e));
}

}  // namespace apexrandic::named
