#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "apexrandic/canonical.hpp"
#include "apexrandic/graph.hpp"

namespace apexrandic::testing {

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) e.push_back({u, v});
    }
  }
  return Graph(n, std::move(e));
}

/// Random spanning tree plus independent extra edges.
inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    e.push_back({pick(rng), v});
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng) && std::find(e.begin(), e.end(), Edge{u, v}) == e.end()) e.push_back({u, v});
    }
  }
  return Graph(n, std::move(e));
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Labeled graph whose upper-triangle bits (graph6 order) are `mask`.
inline DenseGraph labeled_graph(int n, std::uint64_t mask) {
  DenseGraph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((mask >> k) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

/// Brute-force canonical key: smallest relabeled adjacency over all n! bijections.
inline std::uint64_t bruteforce_key(const DenseGraph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t key = 0;
    int k = 0;
    for (int j = 1; j < g.n; ++j) {
      for (int i = 0; i < j; ++i, ++k) {
        if (g.has_edge(perm[i], perm[j])) key |= std::uint64_t{1} << k;
      }
    }
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace apexrandic::testing
