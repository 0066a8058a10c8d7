#include <catch_amalgamated.hpp>

#include <set>

#include "apexrandic/canonical.hpp"
#include "apexrandic/trees.hpp"

using namespace apexrandic;

namespace {

/// Isomorphism classes of labeled trees on n vertices via every Pruefer sequence.
std::set<CanonicalCode> pruefer_classes(std::size_t n) {
  std::set<CanonicalCode> out;
  if (n <= 2) {
    std::vector<Edge> e;
    if (n == 2) e.push_back({0, 1});
    out.insert(canonical_code(Graph(n, e)));
    return out;
  }
  std::vector<std::size_t> seq(n - 2, 0);
  while (true) {
    std::vector<std::size_t> deg(n, 1);
    for (auto s : seq) ++deg[s];
    std::vector<Edge> edges;
    for (auto s : seq) {
      std::size_t leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      edges.push_back({static_cast<Vertex>(std::min(leaf, s)), static_cast<Vertex>(std::max(leaf, s))});
      --deg[leaf];
      --deg[s];
    }
    std::vector<Vertex> last;
    for (std::size_t v = 0; v < n; ++v) {
      if (deg[v] == 1) last.push_back(static_cast<Vertex>(v));
    }
    edges.push_back({last[0], last[1]});
    out.insert(canonical_code(Graph(n, edges)));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("free tree counts") {
  const std::size_t expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (std::size_t n = 0; n <= 12; ++n) CHECK(free_trees(n).size() == expected[n]);
}

TEST_CASE("free trees are trees, pairwise non-isomorphic, and match the Pruefer oracle") {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::set<CanonicalCode> codes;
    for (const auto& t : free_trees(n)) {
      REQUIRE(is_tree(t));
      codes.insert(canonical_code(t));
    }
    CHECK(codes.size() == free_trees(n).size());
    CHECK(codes == pruefer_classes(n));
  }
}

TEST_CASE("parent arrays put vertex 0 at the root") {
  for (const auto& p : free_tree_parent_arrays(7)) {
    CHECK(p[0] == -1);
    for (std::size_t v = 1; v < p.size(); ++v) CHECK((p[v] >= 0 && static_cast<std::size_t>(p[v]) < v));
  }
}
