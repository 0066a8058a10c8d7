#pragma once

#include <cstddef>
#include <vector>

#include "apexrandic/graph.hpp"

namespace apexrandic {

namespace detail {

/// Canonical level sequences (root at level 0, subtrees in non-increasing
/// order) of every rooted tree on n vertices, in decreasing lexicographic
/// order (Beyer-Hedetniemi successor rule).
inline std::vector<std::vector<int>> rooted_level_sequences(std::size_t n) {
  std::vector<std::vector<int>> out;
  if (n == 0) return out;
  std::vector<int> level(n);
  for (std::size_t i = 0; i < n; ++i) level[i] = static_cast<int>(i);
  while (true) {
    out.push_back(level);
    std::size_t p = n;
    for (std::size_t i = n; i-- > 1;) {
      if (level[i] > 1) {
        p = i;
        break;
      }
    }
    if (p == n) break;
    std::size_t q = p;
    while (level[q] != level[p] - 1) --q;
    for (std::size_t i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
  return out;
}

inline std::vector<int> level_to_parent(const std::vector<int>& level) {
  std::vector<int> parent(level.size(), -1);
  std::vector<int> last_at(level.size() + 1, -1);
  for (std::size_t i = 0; i < level.size(); ++i) {
    if (level[i] > 0) parent[i] = last_at[level[i] - 1];
    last_at[level[i]] = static_cast<int>(i);
  }
  return parent;
}

inline bool root_branches_below(const std::vector<int>& level, std::size_t limit) {
  std::size_t branch = 0;
  for (std::size_t i = 1; i < level.size(); ++i) {
    if (level[i] == 1) branch = 0;
    if (++branch > limit) return false;
  }
  return true;
}

}  // namespace detail

/// One parent array per free tree on n vertices (parent[0] = -1).
/// Unicentroidal trees are rooted at the centroid; bicentroidal trees are two
/// rooted halves A >= B joined at their roots, B's root becoming the child of 0.
inline std::vector<std::vector<int>> free_tree_parent_arrays(std::size_t n) {
  std::vector<std::vector<int>> out;
  if (n == 0) return out;
  std::size_t limit = (n - 1) / 2;
  for (const auto& level : detail::rooted_level_sequences(n)) {
    if (detail::root_branches_below(level, limit)) out.push_back(detail::level_to_parent(level));
  }
  if (n % 2 == 0) {
    auto halves = detail::rooted_level_sequences(n / 2);
    for (std::size_t a = 0; a < halves.size(); ++a) {
      for (std::size_t b = a; b < halves.size(); ++b) {
        auto pa = detail::level_to_parent(halves[a]);
        auto pb = detail::level_to_parent(halves[b]);
        int offset = static_cast<int>(n / 2);
        for (auto& p : pb) p = p < 0 ? 0 : p + offset;
        pa.insert(pa.end(), pb.begin(), pb.end());
        out.push_back(std::move(pa));
      }
    }
  }
  return out;
}

inline Graph tree_from_parents(const std::vector<int>& parent) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < parent.size(); ++v) {
    edges.push_back({static_cast<Vertex>(parent[v]), static_cast<Vertex>(v)});
  }
  return Graph(parent.size(), std::move(edges));
}

inline std::vector<Graph> free_trees(std::size_t n) {
  std::vector<Graph> out;
  for (const auto& p : free_tree_parent_arrays(n)) out.push_back(tree_from_parents(p));
  return out;
}

}  // namespace apexrandic
