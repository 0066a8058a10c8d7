#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "apexrandic/apex.hpp"
#include "apexrandic/canonical.hpp"
#include "apexrandic/enumerate.hpp"
#include "apexrandic/graph_io.hpp"
#include "apexrandic/named_graphs.hpp"
#include "apexrandic/randic.hpp"

namespace apexrandic {

/// n/2 - C, the conjectured maximum of R over k-apex trees of order n.
inline RadicalValue extremal_value(long n) {
  return RadicalValue(Rational(n, 2)) - extremal_constant();
}

inline std::size_t family_min_order(std::size_t k) { return 4 * k - 1; }

enum class MembershipVerdict { Member, OrderTooSmall, DegreesOutside, AsymmetricCount, Disconnected, ApexMismatch };

inline const char* to_string(MembershipVerdict v) {
  switch (v) {
    case MembershipVerdict::Member: return "member";
    case MembershipVerdict::OrderTooSmall: return "order below 4k-1";
    case MembershipVerdict::DegreesOutside: return "degree outside {2,3}";
    case MembershipVerdict::AsymmetricCount: return "asymmetric edge count is not 2";
    case MembershipVerdict::Disconnected: return "disconnected";
    case MembershipVerdict::ApexMismatch: return "apex number differs from k";
  }
  return "?";
}

struct FamilyMembership {
  Graph graph;
  bool degrees_ok = false;
  std::size_t asym_count = 0;
  std::optional<std::size_t> apex_k;  // absent when the check stopped earlier
  MembershipVerdict verdict = MembershipVerdict::OrderTooSmall;
  std::optional<RadicalValue> value;  // exact R, set for members
  bool member() const { return verdict == MembershipVerdict::Member; }
};

/// Conditions are checked in order and the first failure is the verdict; the
/// remaining cheap fields are still filled in.
inline FamilyMembership family_membership(const Graph& g, std::size_t k) {
  if (k < 2) throw UsageError("family membership needs k >= 2");
  FamilyMembership fm;
  fm.graph = g;
  fm.degrees_ok = g.order() > 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto d = g.degree(v);
    if (d != 2 && d != 3) fm.degrees_ok = false;
  }
  fm.asym_count = degree_pair_spectrum(g).asymmetric();

  if (g.order() < family_min_order(k)) {
    fm.verdict = MembershipVerdict::OrderTooSmall;
  } else if (!fm.degrees_ok) {
    fm.verdict = MembershipVerdict::DegreesOutside;
  } else if (fm.asym_count != 2) {
    fm.verdict = MembershipVerdict::AsymmetricCount;
  } else if (!is_connected(g)) {
    fm.verdict = MembershipVerdict::Disconnected;
  } else {
    fm.apex_k = apex_k(g);
    fm.verdict = *fm.apex_k == k ? MembershipVerdict::Member : MembershipVerdict::ApexMismatch;
  }
  if (fm.member()) {
    fm.value = randic(g).value;
    if (!(*fm.value == extremal_value(static_cast<long>(g.order())))) {
      throw ConsistencyError("family member " + write_graph6(g) + " has R=" + fm.value->to_string());
    }
  }
  return fm;
}

/// Cubic base graphs on at most `max_order` vertices: named graphs plus
/// seeded random pairings, one per isomorphism class, ascending code.
inline std::vector<Graph> cubic_catalog(std::size_t max_order = 14, std::uint64_t seed = 20240601,
                                        int random_per_order = 400) {
  std::vector<Graph> pool = {named::complete(4), named::complete_bipartite(3, 3), named::petersen(),
                             named::heawood()};
  for (std::size_t p = 3; 2 * p <= max_order; ++p) {
    for (std::size_t j = 1; 2 * j < p; ++j) pool.push_back(named::generalized_petersen(p, j));
  }
  for (std::size_t h = 6; h <= max_order; h += 2) pool.push_back(named::moebius_ladder(h));

  std::mt19937_64 rng(seed);
  for (std::size_t h = 4; h <= max_order; h += 2) {
    for (int attempt = 0; attempt < random_per_order; ++attempt) {
      std::vector<Vertex> points;
      for (Vertex v = 0; v < h; ++v) points.insert(points.end(), 3, v);
      std::shuffle(points.begin(), points.end(), rng);
      std::vector<Edge> e;
      bool ok = true;
      for (std::size_t i = 0; i < points.size() && ok; i += 2) {
        Vertex a = std::min(points[i], points[i + 1]);
        Vertex b = std::max(points[i], points[i + 1]);
        if (a == b || std::find(e.begin(), e.end(), Edge{a, b}) != e.end()) ok = false;
        e.push_back({a, b});
      }
      if (!ok) continue;
      Graph g(h, std::move(e));
      if (is_connected(g)) pool.push_back(std::move(g));
    }
  }

  std::map<CanonicalCode, Graph> unique;
  for (auto& g : pool) {
    if (g.order() > max_order || !is_connected(g) || is_regular(g) != std::optional<std::size_t>(3)) continue;
    auto code = canonical_code(g);
    unique.try_emplace(std::move(code), canonical_form(g));
  }
  std::vector<Graph> out;
  for (auto& [_, g] : unique) out.push_back(std::move(g));
  return out;
}

struct ConstructionResult {
  std::optional<Graph> graph;
  std::string method;                 // how the graph was obtained
  std::size_t candidates_tried = 0;   // distinct candidates tested
  std::vector<std::string> searched;  // description of each space searched
  bool found() const { return graph.has_value(); }
};

inline constexpr std::size_t kMaxConstructionOrder = kMaxDenseOrder;

/// A member of the extremal family for (k, n). NotFound is reported through an
/// empty `graph`, with the searched spaces listed.
inline ConstructionResult construct_member(std::size_t k, std::size_t n, const EnumerationOptions& opt = {}) {
  if (k < 2) throw UsageError("construct_member needs k >= 2");
  if (n < family_min_order(k)) {
    throw UsageError("construct_member needs n >= 4k-1 = " + std::to_string(family_min_order(k)));
  }
  if (n > kMaxConstructionOrder) {
    throw GuardError("construct_member verifies apex numbers on at most " +
                     std::to_string(kMaxConstructionOrder) + " vertices; requested n=" + std::to_string(n));
  }
  ConstructionResult res;

  if (k == 2) {
    res.searched.push_back("K4 with one edge subdivided n-4 times");
    ++res.candidates_tried;
    Graph g = named::subdivide_edge(named::complete(4), 2, 3, n - 4);
    if (family_membership(g, k).member()) {
      res.graph = std::move(g);
      res.method = "parametric:K4-subdivided";
      return res;
    }
  }

  auto catalog = cubic_catalog();
  res.searched.push_back("cubic catalog (" + std::to_string(catalog.size()) +
                         " classes, order <= 14) with one edge subdivided");
  std::set<CanonicalCode> tried;
  for (const auto& base : catalog) {
    if (base.order() >= n) continue;
    std::size_t times = n - base.order();
    for (const auto& e : base.edges()) {
      Graph g = named::subdivide_edge(base, e.u, e.v, times);
      if (!tried.insert(canonical_code(g)).second) continue;
      ++res.candidates_tried;
      if (family_membership(g, k).member()) {
        res.graph = canonical_form(g);
        res.method = "catalog:" + write_graph6(base) + "+subdivide(" + std::to_string(e.u) + "," +
                     std::to_string(e.v) + ")x" + std::to_string(times);
        return res;
      }
    }
  }

  if (n <= static_cast<std::size_t>(kDefaultEnumerationLimit) || (opt.allow_large && n <= kMaxEnumerationOrder)) {
    res.searched.push_back("exhaustive k-apex trees of order n");
    for (PackedCode c : k_apex_tree_codes(static_cast<int>(k), static_cast<int>(n), ApexStrategy::FilterConnected, opt)) {
      ++res.candidates_tried;
      Graph g = unpack_graph(static_cast<int>(n), c);
      if (family_membership(g, k).member()) {
        res.graph = std::move(g);
        res.method = "exhaustive";
        return res;
      }
    }
  }
  return res;
}

}  // namespace apexrandic
