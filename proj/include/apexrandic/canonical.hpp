#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "apexrandic/dense_graph.hpp"
#include "apexrandic/graph.hpp"
#include "apexrandic/graph_io.hpp"

namespace apexrandic {

/// Vertex permutation on at most 64 points: perm[v] is the image of v.
using Permutation = std::array<std::uint8_t, kMaxDenseOrder>;

/// Upper-triangle adjacency bits in graph6 order (x(0,1), x(0,2), x(1,2), ...),
/// packed MSB-first into 64-bit words.
using CodeWords = std::vector<std::uint64_t>;

namespace canon {

inline std::size_t code_word_count(int n) {
  std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  return std::max<std::size_t>(1, (bits + 63) / 64);
}

/// Code of g relabeled so that canonical position p holds vertex order[p].
inline void code_under_order(const DenseGraph& g, const std::uint8_t* order, CodeWords& out) {
  out.assign(code_word_count(g.n), 0);
  std::size_t k = 0;
  for (int j = 1; j < g.n; ++j) {
    Mask row = g.adj[order[j]];
    for (int i = 0; i < j; ++i, ++k) {
      if ((row >> order[i]) & 1U) out[k >> 6] |= Mask{1} << (63 - (k & 63));
    }
  }
}

inline DenseGraph decode(int n, const CodeWords& words) {
  DenseGraph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((words[k >> 6] >> (63 - (k & 63))) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

inline std::string code_to_graph6(int n, const CodeWords& words) {
  std::string out;
  detail::append_graph6_order(out, static_cast<std::size_t>(n));
  detail::Graph6BitWriter writer(out);
  std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  for (std::size_t k = 0; k < bits; ++k) writer.push((words[k >> 6] >> (63 - (k & 63))) & 1U);
  writer.finish();
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;  // smaller label becomes the representative
  }

 private:
  std::vector<int> parent_;
};

struct Result {
  int n = 0;
  std::array<std::uint8_t, kMaxDenseOrder> order{};  // canonical position -> vertex
  CodeWords code;
  std::vector<Permutation> generators;               // generate Aut(g)
  std::array<std::uint8_t, kMaxDenseOrder> orbit{};  // smallest vertex of each Aut(g)-orbit

  /// Canonical position of vertex v.
  int position(int v) const {
    for (int p = 0; p < n; ++p) {
      if (order[p] == v) return p;
    }
    return -1;
  }
};

/// Individualization-refinement search for the lexicographically largest code.
/// Automorphisms found at leaves prune sibling subtrees; the recorded
/// automorphisms generate the full group.
class Canonizer {
 public:
  explicit Canonizer(const DenseGraph& g) : g_(g), n_(g.n) {}

  Result run() {
    Result r;
    r.n = n_;
    if (n_ <= 1) {
      r.order[0] = 0;
      code_under_order(g_, r.order.data(), r.code);
      for (int v = 0; v < n_; ++v) r.orbit[v] = static_cast<std::uint8_t>(v);
      return r;
    }
    Partition root;
    for (int v = 0; v < n_; ++v) root.ord[v] = static_cast<std::uint8_t>(v);
    root.starts = bit(0);
    search(root, 0);

    r.order = best_order_;
    r.code = std::move(best_code_);
    r.generators = std::move(generators_);
    UnionFind uf(n_);
    for (const auto& gen : r.generators) {
      for (int v = 0; v < n_; ++v) uf.unite(v, gen[v]);
    }
    for (int v = 0; v < n_; ++v) r.orbit[v] = static_cast<std::uint8_t>(uf.find(v));
    return r;
  }

 private:
  struct Partition {
    std::array<std::uint8_t, kMaxDenseOrder> ord{};
    Mask starts = 0;  // bit p set iff a cell begins at position p
  };

  int cell_end(const Partition& p, int s) const {
    Mask later = p.starts & ~low_mask(s + 1);
    return later ? lowest(later) : n_;
  }

  bool discrete(const Partition& p) const { return p.starts == low_mask(n_); }

  // Splits every cell by neighbour counts into every other cell until the
  // partition is equitable. Sub-cells are ordered by ascending count.
  void refine(Partition& p) const {
    bool changed = true;
    std::array<std::uint8_t, kMaxDenseOrder> count{};
    while (changed) {
      changed = false;
      for (int ws = 0; ws < n_; ws = cell_end(p, ws)) {
        int we = cell_end(p, ws);
        Mask wmask = 0;
        for (int i = ws; i < we; ++i) wmask |= bit(p.ord[i]);
        for (int xs = 0; xs < n_;) {
          int xe = cell_end(p, xs);
          if (xe - xs > 1) {
            int lo = 64;
            int hi = -1;
            for (int i = xs; i < xe; ++i) {
              int c = popcount(g_.adj[p.ord[i]] & wmask);
              count[p.ord[i]] = static_cast<std::uint8_t>(c);
              lo = std::min(lo, c);
              hi = std::max(hi, c);
            }
            if (lo != hi) {
              std::sort(p.ord.begin() + xs, p.ord.begin() + xe,
                        [&](std::uint8_t a, std::uint8_t b) {
                          return count[a] != count[b] ? count[a] < count[b] : a < b;
                        });
              for (int i = xs + 1; i < xe; ++i) {
                if (count[p.ord[i]] != count[p.ord[i - 1]]) p.starts |= bit(i);
              }
              changed = true;
              if (ws >= xs && ws < xe) we = cell_end(p, ws);
            }
          }
          xs = xe;
        }
      }
    }
  }

  void leaf(const Partition& p) {
    code_under_order(g_, p.ord.data(), scratch_);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_order_ = p.ord;
      best_order_ = p.ord;
      first_code_ = scratch_;
      best_code_ = scratch_;
      return;
    }
    if (scratch_ == first_code_) {
      record_automorphism(first_order_, p.ord);
      return;
    }
    if (scratch_ == best_code_) {
      record_automorphism(best_order_, p.ord);
      return;
    }
    if (scratch_ > best_code_) {
      best_code_ = scratch_;
      best_order_ = p.ord;
    }
  }

  void record_automorphism(const std::array<std::uint8_t, kMaxDenseOrder>& from,
                           const std::array<std::uint8_t, kMaxDenseOrder>& to) {
    Permutation gamma{};
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gamma[from[i]] = to[i];
      identity &= from[i] == to[i];
    }
    if (!identity) generators_.push_back(gamma);
  }

  void search(Partition p, int depth) {
    refine(p);
    if (discrete(p)) {
      leaf(p);
      return;
    }
    int ts = 0;
    while (cell_end(p, ts) - ts == 1) ts = cell_end(p, ts);
    int te = cell_end(p, ts);

    std::array<std::uint8_t, kMaxDenseOrder> cell{};
    int size = te - ts;
    std::copy(p.ord.begin() + ts, p.ord.begin() + te, cell.begin());
    std::sort(cell.begin(), cell.begin() + size);

    std::array<std::uint8_t, kMaxDenseOrder> explored{};
    int explored_count = 0;
    std::size_t gens_seen = 0;
    UnionFind uf(n_);
    for (int c = 0; c < size; ++c) {
      int w = cell[c];
      if (explored_count > 0 && !generators_.empty()) {
        if (gens_seen != generators_.size()) {
          uf = UnionFind(n_);
          for (const auto& gen : generators_) {
            bool fixes_path = true;
            for (int d = 0; d < depth && fixes_path; ++d) fixes_path = gen[path_[d]] == path_[d];
            if (!fixes_path) continue;
            for (int v = 0; v < n_; ++v) uf.unite(v, gen[v]);
          }
          gens_seen = generators_.size();
        }
        bool pruned = false;
        for (int e = 0; e < explored_count && !pruned; ++e) pruned = uf.find(explored[e]) == uf.find(w);
        if (pruned) continue;
      }
      explored[explored_count++] = static_cast<std::uint8_t>(w);
      Partition child = p;
      auto it = std::find(child.ord.begin() + ts, child.ord.begin() + te, w);
      std::iter_swap(child.ord.begin() + ts, it);
      child.starts |= bit(ts + 1);
      path_[depth] = static_cast<std::uint8_t>(w);
      search(child, depth + 1);
    }
  }

  const DenseGraph& g_;
  int n_;
  bool have_leaf_ = false;
  std::array<std::uint8_t, kMaxDenseOrder> first_order_{};
  std::array<std::uint8_t, kMaxDenseOrder> best_order_{};
  std::array<std::uint8_t, kMaxDenseOrder> path_{};
  CodeWords first_code_;
  CodeWords best_code_;
  CodeWords scratch_;
  std::vector<Permutation> generators_;
};

inline Result canonize(const DenseGraph& g) { return Canonizer(g).run(); }

}  // namespace canon

/// Isomorphism-class identifier: the graph6 text of the canonically relabeled
/// graph. Equal codes iff isomorphic; the ordering is lexicographic on bytes.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  /// The canonical form itself, decodable with parse_graph6.
  const std::string& graph6() const noexcept { return bytes_; }

  auto operator<=>(const CanonicalCode&) const = default;

 private:
  std::string bytes_;
};

inline CanonicalCode canonical_code(const DenseGraph& g) {
  auto r = canon::canonize(g);
  return CanonicalCode(canon::code_to_graph6(g.n, r.code));
}

inline CanonicalCode canonical_code(const Graph& g) { return canonical_code(DenseGraph(g)); }

inline Graph canonical_form(const Graph& g) { return parse_graph6(canonical_code(g).graph6()); }

/// Aut(g)-orbit representative (smallest member) of every vertex.
inline std::vector<Vertex> vertex_orbits(const Graph& g) {
  DenseGraph d(g);
  auto r = canon::canonize(d);
  std::vector<Vertex> out(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) out[v] = r.orbit[v];
  return out;
}

}  // namespace apexrandic
