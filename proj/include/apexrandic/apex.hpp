#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <vector>

#include "apexrandic/dense_graph.hpp"
#include "apexrandic/graph.hpp"

namespace apexrandic {

/// Proof that g is a k-apex tree: |witness| = k, g - witness is a tree and no
/// smaller deletion set leaves a tree.
struct ApexCertificate {
  std::size_t k = 0;
  std::vector<Vertex> witness;  // sorted; lexicographically smallest minimum set
  Graph residual;
};

namespace detail {

/// Decides whether deleting at most `budget` vertices of `allowed` from the
/// subgraph induced by `alive` leaves a tree.
class TreeDeletionSearch {
 public:
  explicit TreeDeletionSearch(const DenseGraph& g) : g_(g) {}

  bool feasible(Mask alive, Mask allowed, int budget) {
    allowed &= alive;
    if (alive == 0 || budget < 0) return false;

    // Components, with per-component cyclomatic lower bounds.
    std::array<Mask, kMaxDenseOrder> comp{};
    int ncomp = 0;
    for (Mask rest = alive; rest;) {
      Mask c = g_.reach(lowest(rest), alive);
      comp[ncomp++] = c;
      rest &= ~c;
    }
    int total = popcount(alive);
    int best_lb = -1;
    int locked = 0;  // components holding an undeletable vertex
    for (int i = 0; i < ncomp; ++i) {
      if (comp[i] & ~allowed) ++locked;
    }
    if (locked > 1) return false;
    bool forest = g_.edge_count(alive) == total - ncomp;
    for (int i = 0; i < ncomp; ++i) {
      bool can_drop_others = true;
      for (int j = 0; j < ncomp && can_drop_others; ++j) {
        if (j != i && (comp[j] & ~allowed)) can_drop_others = false;
      }
      if (!can_drop_others) continue;
      int cyc = cycle_lower_bound(comp[i], allowed);
      if (cyc < 0) continue;
      int lb = total - popcount(comp[i]) + cyc;
      if (best_lb < 0 || lb < best_lb) best_lb = lb;
    }
    if (best_lb < 0 || best_lb > budget) return false;
    if (forest) return true;  // keep one component, delete the rest (lb <= budget)

    // Some component still has a cycle. Every solution either drops that whole
    // component or deletes a vertex of a given cycle in it; both delete a
    // cycle vertex, so branching over the cycle's deletable vertices is complete.
    auto cyc = short_cycle(alive);
    Mask options = cyc & allowed;
    Mask tried = 0;
    for (Mask o = options; o; o &= o - 1) {
      int v = lowest(o);
      if (feasible(alive & ~bit(v), allowed & ~tried & ~bit(v), budget - 1)) return true;
      tried |= bit(v);
    }
    return false;
  }

 private:
  // Fewest deletions of allowed vertices that could reduce the cyclomatic
  // number of `comp` to zero while keeping part of it (each deletion of a
  // degree-d vertex lowers it by at most d-1). -1 when impossible.
  int cycle_lower_bound(Mask comp, Mask allowed) const {
    int mu = g_.edge_count(comp) - popcount(comp) + 1;
    if (mu <= 0) return 0;
    std::array<int, kMaxDenseOrder> gains{};
    int count = 0;
    for (Mask r = comp & allowed; r; r &= r - 1) {
      gains[count++] = popcount(g_.adj[lowest(r)] & comp) - 1;
    }
    std::sort(gains.begin(), gains.begin() + count, std::greater<>());
    int need = 0;
    for (int i = 0; i < count && mu > 0; ++i) {
      if (gains[i] <= 0) break;
      mu -= gains[i];
      ++need;
    }
    return mu > 0 ? -1 : need;
  }

  // Vertex set containing a shortest cycle through some vertex of the 2-core.
  Mask short_cycle(Mask alive) const {
    Mask core = alive;
    for (bool changed = true; changed;) {
      changed = false;
      for (Mask r = core; r; r &= r - 1) {
        int v = lowest(r);
        if (popcount(g_.adj[v] & core) < 2) {
          core &= ~bit(v);
          changed = true;
        }
      }
    }
    Mask best = core;
    int best_size = popcount(core) + 1;
    std::array<int, kMaxDenseOrder> parent{};
    std::array<int, kMaxDenseOrder> depth{};
    for (Mask roots = core; roots; roots &= roots - 1) {
      int root = lowest(roots);
      parent[root] = -1;
      depth[root] = 0;
      Mask seen = bit(root);
      std::array<int, kMaxDenseOrder> queue{};
      int head = 0;
      int tail = 0;
      queue[tail++] = root;
      bool found = false;
      while (head < tail && !found) {
        int u = queue[head++];
        if (2 * depth[u] + 1 >= best_size) break;
        for (Mask nb = g_.adj[u] & core; nb; nb &= nb - 1) {
          int w = lowest(nb);
          if (w == parent[u]) continue;
          if (seen & bit(w)) {
            Mask cyc = 0;
            for (int x = u; x != -1; x = parent[x]) cyc |= bit(x);
            for (int x = w; x != -1; x = parent[x]) cyc |= bit(x);
            if (popcount(cyc) < best_size) {
              best = cyc;
              best_size = popcount(cyc);
            }
            found = true;
            break;
          }
          seen |= bit(w);
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    return best;
  }

  const DenseGraph& g_;
};

inline void require_connected(const DenseGraph& g) {
  if (g.n < 1) throw DomainError("apex number of the empty graph is undefined");
  if (!g.connected()) throw DomainError("apex number requires a connected graph");
}

}  // namespace detail

/// Minimum number of vertex deletions leaving a tree (0 for trees).
inline std::size_t apex_k(const DenseGraph& g) {
  detail::require_connected(g);
  detail::TreeDeletionSearch search(g);
  Mask all = low_mask(g.n);
  int k = g.edge_count() + 1 > g.n ? 1 : 0;
  while (!search.feasible(all, all, k)) ++k;
  return static_cast<std::size_t>(k);
}

inline std::size_t apex_k(const Graph& g) { return apex_k(DenseGraph(g)); }

namespace detail {

inline ApexCertificate make_certificate(const Graph& g, std::vector<Vertex> witness) {
  ApexCertificate cert;
  cert.k = witness.size();
  cert.residual = delete_vertices(g, witness);
  cert.witness = std::move(witness);
  return cert;
}

}  // namespace detail

/// Branch-and-bound apex number with the lexicographically smallest minimum
/// witness, extracted slot by slot with the feasibility oracle.
inline ApexCertificate apex_number(const Graph& g) {
  DenseGraph d(g);
  std::size_t k = apex_k(d);
  detail::TreeDeletionSearch search(d);
  std::vector<Vertex> chosen;
  Mask alive = low_mask(d.n);
  int last = -1;
  for (std::size_t slot = 0; slot < k; ++slot) {
    int remaining = static_cast<int>(k - slot - 1);
    bool placed = false;
    for (int v = last + 1; v < d.n && !placed; ++v) {
      Mask later = low_mask(d.n) & ~low_mask(v + 1);
      if (search.feasible(alive & ~bit(v), later, remaining)) {
        chosen.push_back(static_cast<Vertex>(v));
        alive &= ~bit(v);
        last = v;
        placed = true;
      }
    }
    if (!placed) throw ConsistencyError("apex witness extraction failed");
  }
  if (!d.induces_tree(alive)) throw ConsistencyError("apex witness does not leave a tree");
  return detail::make_certificate(g, std::move(chosen));
}

/// Independent oracle: subsets by increasing size, lexicographic within a size.
inline ApexCertificate apex_number_bruteforce(const Graph& g) {
  if (g.order() > 16) throw GuardError("apex_number_bruteforce is limited to n <= 16");
  DenseGraph d(g);
  detail::require_connected(d);
  int n = d.n;
  for (int size = 0; size < n; ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      Mask removed = 0;
      for (int v : idx) removed |= bit(v);
      if (d.induces_tree(low_mask(n) & ~removed)) {
        return detail::make_certificate(g, std::vector<Vertex>(idx.begin(), idx.end()));
      }
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw ConsistencyError("no deletion set leaves a tree");
}

inline bool is_k_apex_tree(const Graph& g, std::size_t k) {
  return is_connected(g) && g.order() >= 1 && apex_k(g) == k;
}

/// Edges between V(g) - X and X.
inline std::size_t cross_edge_count(const Graph& g, std::span<const Vertex> x) {
  std::vector<bool> in(g.order(), false);
  for (Vertex v : x) in[v] = true;
  std::size_t l = 0;
  for (const auto& e : g.edges()) l += in[e.u] != in[e.v] ? 1 : 0;
  return l;
}

}  // namespace apexrandic
