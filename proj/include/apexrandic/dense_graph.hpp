#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "apexrandic/graph.hpp"

namespace apexrandic {

using Mask = std::uint64_t;

inline constexpr int kMaxDenseOrder = 64;

constexpr Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
constexpr Mask bit(int v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

/// Bit-row adjacency for graphs with at most 64 vertices; the working
/// representation of every exponential search in the library.
struct DenseGraph {
  int n = 0;
  std::array<Mask, kMaxDenseOrder> adj{};

  DenseGraph() = default;
  explicit DenseGraph(int order) : n(order) {
    if (order < 0 || order > kMaxDenseOrder) {
      throw UsageError("dense graphs support at most 64 vertices, got " + std::to_string(order));
    }
  }

  explicit DenseGraph(const Graph& g) : DenseGraph(static_cast<int>(g.order())) {
    for (const auto& e : g.edges()) add_edge(static_cast<int>(e.u), static_cast<int>(e.v));
  }

  void add_edge(int u, int v) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  void remove_edge(int u, int v) {
    adj[u] &= ~bit(v);
    adj[v] &= ~bit(u);
  }
  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1U; }
  int degree(int v) const { return popcount(adj[v]); }

  int edge_count() const {
    int t = 0;
    for (int v = 0; v < n; ++v) t += popcount(adj[v]);
    return t / 2;
  }

  /// Edges of the subgraph induced by `within`.
  int edge_count(Mask within) const {
    int t = 0;
    for (Mask r = within; r; r &= r - 1) t += popcount(adj[lowest(r)] & within);
    return t / 2;
  }

  /// Vertices reachable from `start` inside `within`.
  Mask reach(int start, Mask within) const {
    Mask seen = bit(start);
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[lowest(f)];
      next &= within & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  bool connected(Mask within) const {
    return within == 0 || reach(lowest(within), within) == within;
  }

  bool connected() const { return connected(low_mask(n)); }

  bool induces_tree(Mask within) const {
    return within != 0 && edge_count(within) + 1 == popcount(within) && connected(within);
  }

  Graph to_graph() const {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (Mask r = adj[u] & ~low_mask(u + 1); r; r &= r - 1) {
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(lowest(r))});
      }
    }
    return Graph(static_cast<std::size_t>(n), std::move(edges));
  }

  bool operator==(const DenseGraph& o) const {
    if (n != o.n) return false;
    for (int v = 0; v < n; ++v) {
      if (adj[v] != o.adj[v]) return false;
    }
    return true;
  }
};

}  // namespace apexrandic
