#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apexrandic/errors.hpp"

namespace apexrandic {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws UsageError on self-loops, parallel edges or out-of-range endpoints.
  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& e : edges_) {
      if (e.u == e.v) {
        throw UsageError("self-loop at vertex " + std::to_string(e.u));
      }
      if (e.u >= n_ || e.v >= n_) {
        throw UsageError("edge endpoint out of range for n=" + std::to_string(n_));
      }
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw UsageError("parallel edge");
    }
    build_adjacency();
  }

  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs)
      : Graph(n, to_edges(pairs)) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  std::size_t degree(Vertex v) const {
    check_vertex(v);
    return offsets_[v + 1] - offsets_[v];
  }

  bool has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    auto nb = neighbors(u);
    check_vertex(v);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(n_);
    for (std::size_t v = 0; v < n_; ++v) d[v] = offsets_[v + 1] - offsets_[v];
    return d;
  }

  /// Labeled equality (same n, same edge set).
  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  static std::vector<Edge> to_edges(std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> out;
    out.reserve(pairs.size());
    for (auto [u, v] : pairs) out.push_back({u, v});
    return out;
  }

  void check_vertex(Vertex v) const {
    if (v >= n_) {
      throw UsageError("vertex " + std::to_string(v) + " out of range for n=" +
                       std::to_string(n_));
    }
  }

  void build_adjacency() {
    offsets_.assign(n_ + 1, 0);
    for (const auto& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
      adjacency_[fill[e.u]++] = e.v;
      adjacency_[fill[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
    }
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

inline std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

/// Induced subgraph on V(g) \ removed, survivors relabeled by ascending original label.
inline Graph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> gone(g.order(), false);
  for (Vertex v : removed) {
    if (v >= g.order()) throw UsageError("deleted vertex out of range");
    gone[v] = true;
  }
  std::vector<Vertex> relabel(g.order(), 0);
  Vertex next = 0;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (!gone[v]) relabel[v] = next++;
  }
  if (next == 0) throw UsageError("deleting every vertex leaves the empty graph");
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (!gone[e.u] && !gone[e.v]) kept.push_back({relabel[e.u], relabel[e.v]});
  }
  return Graph(next, std::move(kept));
}

inline Graph delete_vertices(const Graph& g, std::initializer_list<Vertex> removed) {
  return delete_vertices(g, std::span<const Vertex>(removed.begin(), removed.size()));
}

inline std::size_t component_count(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack;
  std::size_t comps = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

/// Common degree if g is regular.
inline std::optional<std::size_t> is_regular(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  std::size_t d0 = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d0) return std::nullopt;
  }
  return d0;
}

enum class EdgeKind { Symmetric, Asymmetric };

struct EdgeClass {
  EdgeKind kind = EdgeKind::Symmetric;
  std::size_t gap = 0;  // |d(u) - d(v)|
  bool operator==(const EdgeClass&) const = default;
};

/// Edge counts keyed by unordered endpoint-degree pair (a <= b).
class DegreePairSpectrum {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  void add(std::size_t a, std::size_t b, std::size_t count = 1) {
    if (a > b) std::swap(a, b);
    counts_[{a, b}] += count;
  }

  std::size_t count(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    auto it = counts_.find({a, b});
    return it == counts_.end() ? 0 : it->second;
  }

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [_, c] : counts_) t += c;
    return t;
  }

  std::size_t asymmetric() const {
    std::size_t t = 0;
    for (const auto& [p, c] : counts_) {
      if (p.first != p.second) t += c;
    }
    return t;
  }

  /// Largest |a - b| over present pairs (0 for an edgeless graph).
  std::size_t max_gap() const {
    std::size_t g = 0;
    for (const auto& [p, _] : counts_) g = std::max(g, p.second - p.first);
    return g;
  }

  const std::map<Pair, std::size_t>& counts() const noexcept { return counts_; }

  auto operator<=>(const DegreePairSpectrum&) const = default;

 private:
  std::map<Pair, std::size_t> counts_;
};

struct EdgeClassification {
  DegreePairSpectrum spectrum;
  std::vector<std::pair<Edge, EdgeClass>> edges;
};

inline DegreePairSpectrum degree_pair_spectrum(const Graph& g) {
  DegreePairSpectrum s;
  for (const auto& e : g.edges()) s.add(g.degree(e.u), g.degree(e.v));
  return s;
}

inline EdgeClassification classify_edges(const Graph& g) {
  EdgeClassification out;
  out.edges.reserve(g.size());
  for (const auto& e : g.edges()) {
    std::size_t a = g.degree(e.u);
    std::size_t b = g.degree(e.v);
    std::size_t gap = a > b ? a - b : b - a;
    out.spectrum.add(a, b);
    out.edges.push_back({e, {gap == 0 ? EdgeKind::Symmetric : EdgeKind::Asymmetric, gap}});
  }
  return out;
}

}  // namespace apexrandic
