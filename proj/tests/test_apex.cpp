#include <catch_amalgamated.hpp>

#include <random>

#include "apexrandic/apex.hpp"
#include "apexrandic/enumerate.hpp"
#include "apexrandic/named_graphs.hpp"
#include "support.hpp"

using namespace apexrandic;

namespace {

void check_certificate(const Graph& g, const ApexCertificate& c) {
  REQUIRE(c.witness.size() == c.k);
  CHECK(is_tree(c.residual));
  CHECK(c.residual == delete_vertices(g, c.witness));
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < c.residual.order(); ++v) degree_sum += c.residual.degree(v);
  CHECK(degree_sum == 2 * (g.order() - c.k - 1));
}

}  // namespace

TEST_CASE("apex number examples") {
  auto p5 = apex_number(named::path(5));
  CHECK(p5.k == 0);
  CHECK(p5.witness.empty());
  auto c7 = apex_number(named::cycle(7));
  CHECK(c7.k == 1);
  CHECK(c7.witness == std::vector<Vertex>{0});
  auto k4 = apex_number(named::complete(4));
  CHECK(k4.k == 2);
  CHECK(k4.witness == std::vector<Vertex>{0, 1});
  CHECK(apex_number(named::complete_bipartite(3, 3)).k == 2);
  CHECK(apex_number(named::complete(5)).k == 3);
  CHECK(apex_number(Graph(1, std::vector<Edge>{})).k == 0);
  CHECK(apex_number(named::petersen()).k == 3);
}

TEST_CASE("brute-force oracle examples and guard") {
  CHECK(apex_number_bruteforce(named::complete(4)).k == 2);
  CHECK(apex_number_bruteforce(named::cycle(7)).k == 1);
  CHECK(apex_number_bruteforce(named::complete(5)).k == 3);
  CHECK_THROWS_AS(apex_number_bruteforce(named::path(17)), GuardError);
}

TEST_CASE("disconnected input is a domain error") {
  CHECK_THROWS_AS(apex_number(Graph(4, {{0, 1}, {2, 3}})), DomainError);
  CHECK_THROWS_AS(apex_number_bruteforce(Graph(4, {{0, 1}, {2, 3}})), DomainError);
}

TEST_CASE("is_k_apex_tree examples") {
  CHECK(is_k_apex_tree(named::cycle(5), 1));
  CHECK_FALSE(is_k_apex_tree(named::complete(4), 1));
  CHECK(is_k_apex_tree(named::star(4), 0));
  CHECK_FALSE(is_k_apex_tree(Graph(4, {{0, 1}, {2, 3}}), 0));
}

TEST_CASE("cycles have apex number 1") {
  for (std::size_t n = 3; n <= 30; ++n) CHECK(apex_k(named::cycle(n)) == 1);
}

TEST_CASE("branch and bound equals the subset oracle on all connected graphs n <= 7") {
  std::size_t total = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      auto fast = apex_number(g);
      auto slow = apex_number_bruteforce(g);
      REQUIRE(fast.k == slow.k);
      CHECK(fast.witness == slow.witness);
      check_certificate(g, fast);
      ++total;
    }
  }
  CHECK(total == 996);
}

TEST_CASE("branch and bound equals the subset oracle on random graphs n in [8, 12]") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> order(8, 12);
  std::uniform_real_distribution<double> density(0.05, 0.6);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = testing::random_connected_graph(order(rng), density(rng), rng);
    auto fast = apex_number(g);
    auto slow = apex_number_bruteforce(g);
    REQUIRE(fast.k == slow.k);
    CHECK(fast.witness == slow.witness);
    check_certificate(g, fast);
  }
}

TEST_CASE("apex number is invariant under relabeling") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = testing::random_connected_graph(10, 0.35, rng);
    auto h = named::relabel(g, testing::random_permutation(10, rng));
    CHECK(apex_k(g) == apex_k(h));
  }
}

TEST_CASE("larger structured graphs") {
  CHECK(apex_k(named::heawood()) == apex_number_bruteforce(named::heawood()).k);
  CHECK(apex_k(named::generalized_petersen(7, 2)) == apex_number_bruteforce(named::generalized_petersen(7, 2)).k);
  CHECK(apex_k(named::complete(12)) == 10);
  CHECK(apex_k(named::complete_bipartite(4, 6)) == 3);
}

TEST_CASE("cross edge count") {
  auto g = named::complete(4);
  std::vector<Vertex> x{0, 1};
  CHECK(cross_edge_count(g, x) == 4);
}
