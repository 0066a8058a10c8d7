#pragma once

#include <string>
#include <vector>

#include "apexrandic/apex.hpp"
#include "apexrandic/enumerate.hpp"
#include "apexrandic/graph_io.hpp"

namespace apexrandic {

/// A regular k-apex tree together with the deletion-set counting quantities.
struct RegularWitness {
  std::string graph6;
  std::size_t degree = 0;            // m
  std::vector<Vertex> witness;       // minimum deletion set X
  std::size_t cross_edges = 0;       // l = edges between V(G-X) and X
  long predicted_cross_edges = 0;    // m n - m k - 2n + 2k + 2
  bool identity_holds = false;       // l equals the prediction
  bool bound_holds = false;          // l <= m k
};

struct NonRegularityAudit {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t scanned = 0;
  std::vector<RegularWitness> regular;  // ascending canonical code
  bool in_scope = false;                // n >= 4k - 1
  /// In scope: no regular graph. Below scope: every witness satisfies both
  /// counting statements.
  bool theorem_consistent = false;
};

inline RegularWitness make_regular_witness(const Graph& g, std::size_t m) {
  RegularWitness w;
  w.graph6 = write_graph6(g);
  w.degree = m;
  auto cert = apex_number(g);
  w.witness = cert.witness;
  w.cross_edges = cross_edge_count(g, cert.witness);
  long n = static_cast<long>(g.order());
  long k = static_cast<long>(cert.k);
  long lm = static_cast<long>(m);
  w.predicted_cross_edges = lm * n - lm * k - 2 * n + 2 * k + 2;
  w.identity_holds = static_cast<long>(w.cross_edges) == w.predicted_cross_edges;
  w.bound_holds = static_cast<long>(w.cross_edges) <= lm * k;
  return w;
}

/// Scans every k-apex tree of order n for regular graphs.
inline NonRegularityAudit audit_nonregularity(std::size_t k, std::size_t n, const EnumerationOptions& opt = {}) {
  if (k < 2) throw UsageError("non-regularity audit needs k >= 2");
  NonRegularityAudit a;
  a.k = k;
  a.n = n;
  a.in_scope = n >= 4 * k - 1;
  auto codes = k_apex_tree_codes(static_cast<int>(k), static_cast<int>(n), ApexStrategy::FilterConnected, opt);
  a.scanned = codes.size();
  for (PackedCode c : codes) {
    Graph g = unpack_graph(static_cast<int>(n), c);
    if (auto m = is_regular(g)) a.regular.push_back(make_regular_witness(g, *m));
  }
  if (a.in_scope) {
    a.theorem_consistent = a.regular.empty();
  } else {
    a.theorem_consistent = std::all_of(a.regular.begin(), a.regular.end(),
                                       [](const RegularWitness& w) { return w.identity_holds && w.bound_holds; });
  }
  return a;
}

}  // namespace apexrandic
