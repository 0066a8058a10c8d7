#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "apexrandic/named_graphs.hpp"
#include "apexrandic/randic.hpp"
#include "support.hpp"

using namespace apexrandic;

TEST_CASE("randic index examples") {
  CHECK(randic(named::complete(4)).value == RadicalValue(2L));
  CHECK(randic(named::cycle(6)).value == RadicalValue(3L));
  CHECK(randic(named::star(3)).value == RadicalValue::sqrt(3));
  // P4: two 1-2 edges and one 2-2 edge.
  CHECK(randic(named::path(4)).value == RadicalValue::sqrt(2) + RadicalValue(Rational(1, 2)));
  auto member = named::subdivide_edge(named::complete(4), 2, 3, 3);
  auto r = randic(member);
  CHECK(r.value == RadicalValue(Rational(8, 3)) + RadicalValue::sqrt_term(Rational(1, 3), 6));
  CHECK(r.gap == extremal_constant());
  CHECK(to_decimal(r.value).substr(0, 11) == "3.483163247");
}

TEST_CASE("gap functional examples") {
  CHECK(randic_gap(named::cycle(5)).is_zero());
  CHECK(randic_gap(named::complete(4)).is_zero());
  // Star K_{1,3}: (1/2) * 3 * (1 - 1/sqrt3)^2 = 2 - sqrt3
  CHECK(randic_gap(named::star(3)) == RadicalValue(2L) - RadicalValue::sqrt(3));
  CHECK(to_decimal(extremal_constant()).substr(0, 9) == "0.0168367");
}

TEST_CASE("gap identity on random graphs without isolated vertices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = testing::random_connected_graph(2 + trial % 14, 0.3, rng);
    CHECK(verify_gap_identity(g));
    CHECK(std::fabs(to_double(randic(g).value) - static_cast<double>(randic_float(g))) < 1e-9);
  }
}

TEST_CASE("gap identity rejects isolated vertices") {
  CHECK_THROWS_AS(verify_gap_identity(Graph(3, {{0, 1}})), UsageError);
}
