#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "apexrandic/apex.hpp"
#include "apexrandic/canonical.hpp"
#include "apexrandic/dense_graph.hpp"
#include "apexrandic/parallel.hpp"
#include "apexrandic/trees.hpp"

namespace apexrandic {

/// Canonical form of a graph on at most 11 vertices packed into one word
/// (the first CodeWords word). For a fixed order, numeric order equals the
/// byte order of the corresponding CanonicalCode.
using PackedCode = std::uint64_t;

inline constexpr int kMaxEnumerationOrder = 11;
inline constexpr int kDefaultEnumerationLimit = 10;

/// Isomorphism classes of connected graphs on n vertices, n = 0..11.
inline constexpr std::array<std::uint64_t, 12> kConnectedGraphCounts = {
    0, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571, 1006700565};

struct EnumerationOptions {
  unsigned jobs = 1;
  bool allow_large = false;
};

inline DenseGraph unpack(int n, PackedCode code) { return canon::decode(n, CodeWords{code}); }
inline Graph unpack_graph(int n, PackedCode code) { return unpack(n, code).to_graph(); }
inline std::string packed_graph6(int n, PackedCode code) {
  return canon::code_to_graph6(n, CodeWords{code});
}
inline PackedCode pack(const canon::Result& r) { return r.code.front(); }

inline void check_enumeration_guard(int n, const EnumerationOptions& opt) {
  if (n < 1) throw UsageError("enumeration order must be at least 1");
  if (n > kMaxEnumerationOrder) {
    throw GuardError("enumeration is limited to n <= 11 (packed 64-bit codes); requested n=" +
                     std::to_string(n));
  }
  if (n > kDefaultEnumerationLimit && !opt.allow_large) {
    throw GuardError("n=" + std::to_string(n) + " yields " +
                     std::to_string(kConnectedGraphCounts[static_cast<std::size_t>(n)]) +
                     " connected classes; pass --allow-large to proceed");
  }
}

namespace detail {

/// Canonical augmentation by one vertex. A child G+v is accepted iff v lies in
/// the Aut-orbit of the canonically chosen non-cut vertex of maximum
/// (degree, neighbour-degree-sum); accepted children of one parent are
/// deduplicated by code when the parent has non-trivial automorphisms.
class ConnectedGenerator {
 public:
  explicit ConnectedGenerator(int target) : target_(target) {}

  /// Nodes at `level` reachable from K1, each with its canonical result.
  std::vector<std::pair<DenseGraph, bool>> frontier(int level) const {
    std::vector<std::pair<DenseGraph, bool>> nodes{{DenseGraph(1), false}};
    for (int l = 1; l < level; ++l) {
      std::vector<std::pair<DenseGraph, bool>> next;
      for (auto& [g, nontrivial] : nodes) {
        children(g, nontrivial, [&](const DenseGraph& c, const canon::Result& r) {
          next.emplace_back(c, !r.generators.empty());
        });
      }
      nodes = std::move(next);
    }
    return nodes;
  }

  /// Appends packed codes of every order-`target_` descendant of g.
  void descend(DenseGraph& g, bool parent_nontrivial, std::vector<PackedCode>& out) const {
    if (g.n == target_) {
      out.push_back(pack(canon::canonize(g)));
      return;
    }
    children(g, parent_nontrivial, [&](DenseGraph& c, const canon::Result& r) {
      if (c.n == target_) {
        out.push_back(pack(r));
      } else {
        descend(c, !r.generators.empty(), out);
      }
    });
  }

 private:
  static int invariant(const DenseGraph& g, int u) {
    int sum = 0;
    for (Mask nb = g.adj[u]; nb; nb &= nb - 1) sum += g.degree(lowest(nb));
    return g.degree(u) * 4096 + sum;
  }

  template <class Emit>
  void children(const DenseGraph& parent, bool parent_nontrivial, Emit&& emit) const {
    int n0 = parent.n;
    int v = n0;
    DenseGraph child = parent;
    child.n = n0 + 1;
    Mask all = low_mask(n0 + 1);
    std::unordered_set<std::string> seen;
    for (Mask s = 1; s < bit(n0); ++s) {
      for (int u = 0; u < n0; ++u) child.adj[u] = parent.adj[u] | (((s >> u) & 1U) ? bit(v) : 0);
      child.adj[v] = s;

      int vinv = invariant(child, v);
      bool reject = false;
      int ties = 0;
      std::array<int, kMaxDenseOrder> tied{};
      for (int u = 0; u < n0 && !reject; ++u) {
        int inv = invariant(child, u);
        if (inv < vinv) continue;
        if (!child.connected(all & ~bit(u))) continue;  // cut vertex
        if (inv > vinv) {
          reject = true;
        } else {
          tied[ties++] = u;
        }
      }
      if (reject) continue;

      canon::Result r = canon::canonize(child);
      if (ties > 0) {
        int chosen = v;
        int best_pos = r.position(v);
        for (int t = 0; t < ties; ++t) {
          int pos = r.position(tied[t]);
          if (pos > best_pos) {
            best_pos = pos;
            chosen = tied[t];
          }
        }
        if (r.orbit[chosen] != r.orbit[v]) continue;
      }
      if (parent_nontrivial) {
        std::string key(reinterpret_cast<const char*>(r.code.data()), r.code.size() * sizeof(std::uint64_t));
        if (!seen.insert(std::move(key)).second) continue;
      }
      emit(child, r);
    }
  }

  int target_;
};

inline void check_sorted_unique(std::vector<PackedCode>& codes) {
  std::sort(codes.begin(), codes.end());
  if (std::adjacent_find(codes.begin(), codes.end()) != codes.end()) {
    throw ConsistencyError("enumeration emitted a duplicate isomorphism class");
  }
}

}  // namespace detail

/// Packed canonical codes of all connected graphs on n vertices, ascending.
/// The augmentation tree is split at depth n-2; each subtree is one task.
inline std::vector<PackedCode> connected_graph_codes(int n, const EnumerationOptions& opt = {}) {
  check_enumeration_guard(n, opt);
  detail::ConnectedGenerator gen(n);
  int split = std::max(1, n - 2);
  auto roots = gen.frontier(split);
  std::vector<std::vector<PackedCode>> parts(roots.size());
  parallel_for(roots.size(), opt.jobs, [&](std::size_t i) {
    DenseGraph g = roots[i].first;
    gen.descend(g, roots[i].second, parts[i]);
  });
  std::vector<PackedCode> codes;
  for (auto& p : parts) codes.insert(codes.end(), p.begin(), p.end());
  detail::check_sorted_unique(codes);
  return codes;
}

/// Visits one canonical representative per class, in ascending code order.
template <class F>
void for_each_connected(int n, F&& f, const EnumerationOptions& opt = {}) {
  for (PackedCode c : connected_graph_codes(n, opt)) f(unpack_graph(n, c));
}

inline std::vector<Graph> enumerate_connected(int n, const EnumerationOptions& opt = {}) {
  std::vector<Graph> out;
  for_each_connected(n, [&](const Graph& g) { out.push_back(g); }, opt);
  return out;
}

enum class ApexStrategy { FilterConnected, AttachToTrees };

inline const char* strategy_name(ApexStrategy s) {
  return s == ApexStrategy::FilterConnected ? "A:filter-connected" : "B:attach-to-trees";
}

/// Strategy B candidate count: trees(n-k) * 2^(k(n-k) + k(k-1)/2).
inline double attach_strategy_cost(int k, int n) {
  double trees = static_cast<double>(free_tree_parent_arrays(static_cast<std::size_t>(n - k)).size());
  int bits = k * (n - k) + k * (k - 1) / 2;
  return trees * static_cast<double>(std::uint64_t{1} << std::min(bits, 62));
}

inline constexpr double kAttachStrategyBudget = 5e7;

namespace detail {

inline std::vector<PackedCode> k_apex_filter(int k, int n, const EnumerationOptions& opt) {
  auto codes = connected_graph_codes(n, opt);
  std::vector<char> keep(codes.size(), 0);
  parallel_for(codes.size(), opt.jobs, [&](std::size_t i) {
    keep[i] = apex_k(unpack(n, codes[i])) == static_cast<std::size_t>(k);
  });
  std::vector<PackedCode> out;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (keep[i]) out.push_back(codes[i]);
  }
  return out;
}

inline std::vector<PackedCode> k_apex_attach(int k, int n, const EnumerationOptions& opt) {
  double cost = attach_strategy_cost(k, n);
  if (cost > kAttachStrategyBudget && !opt.allow_large) {
    throw GuardError("tree-attachment strategy needs " + std::to_string(static_cast<long long>(cost)) +
                     " candidates for k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                     "; pass --allow-large to proceed");
  }
  int t = n - k;
  auto trees = free_tree_parent_arrays(static_cast<std::size_t>(t));
  int nb_bits = k * t;
  int inner_pairs = k * (k - 1) / 2;
  std::uint64_t per_tree = std::uint64_t{1} << (nb_bits + inner_pairs);
  std::vector<std::vector<PackedCode>> parts(trees.size());
  parallel_for(trees.size(), opt.jobs, [&](std::size_t ti) {
    DenseGraph base(n);
    for (int v = 1; v < t; ++v) base.add_edge(trees[ti][v], v);
    auto& out = parts[ti];
    for (std::uint64_t choice = 0; choice < per_tree; ++choice) {
      DenseGraph g = base;
      for (int a = 0; a < k; ++a) {
        Mask nb = (choice >> (a * t)) & low_mask(t);
        for (Mask r = nb; r; r &= r - 1) g.add_edge(t + a, lowest(r));
      }
      int pair = 0;
      for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b, ++pair) {
          if ((choice >> (nb_bits + pair)) & 1U) g.add_edge(t + a, t + b);
        }
      }
      if (!g.connected()) continue;
      if (apex_k(g) != static_cast<std::size_t>(k)) continue;
      out.push_back(pack(canon::canonize(g)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  });
  std::vector<PackedCode> codes;
  for (auto& p : parts) codes.insert(codes.end(), p.begin(), p.end());
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

}  // namespace detail

/// Packed codes of every graph on n vertices with apex number exactly k, ascending.
inline std::vector<PackedCode> k_apex_tree_codes(int k, int n, ApexStrategy strategy,
                                                 const EnumerationOptions& opt = {}) {
  if (k < 1) throw UsageError("k-apex tree enumeration needs k >= 1");
  if (n <= k) throw UsageError("k-apex tree enumeration needs n > k");
  check_enumeration_guard(n, opt);
  return strategy == ApexStrategy::FilterConnected ? detail::k_apex_filter(k, n, opt)
                                                   : detail::k_apex_attach(k, n, opt);
}

inline std::vector<Graph> enumerate_k_apex_trees(int k, int n,
                                                 ApexStrategy strategy = ApexStrategy::FilterConnected,
                                                 const EnumerationOptions& opt = {}) {
  std::vector<Graph> out;
  for (PackedCode c : k_apex_tree_codes(k, n, strategy, opt)) out.push_back(unpack_graph(n, c));
  return out;
}

struct EnumerationSummary {
  int n = 0;
  std::string filter;    // "connected" or "apex=k"
  std::size_t count = 0;
  double wall_ms = 0;
  std::string strategy;
};

/// Runs both k-apex strategies and requires identical code sets.
inline EnumerationSummary count_cross_check(int k, int n, const EnumerationOptions& opt = {}) {
  auto start = std::chrono::steady_clock::now();
  auto a = k_apex_tree_codes(k, n, ApexStrategy::FilterConnected, opt);
  auto b = k_apex_tree_codes(k, n, ApexStrategy::AttachToTrees, opt);
  if (a != b) {
    throw ConsistencyError("k-apex strategies disagree for k=" + std::to_string(k) + ", n=" +
                           std::to_string(n) + ": " + std::to_string(a.size()) + " vs " +
                           std::to_string(b.size()));
  }
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {n, "apex=" + std::to_string(k), a.size(), ms, "A+B"};
}

}  // namespace apexrandic
