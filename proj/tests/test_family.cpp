#include <catch_amalgamated.hpp>

#include <cmath>

#include "apexrandic/family.hpp"
#include "apexrandic/nonregularity.hpp"

using namespace apexrandic;

TEST_CASE("extremal value examples") {
  CHECK(extremal_value(7) == RadicalValue(Rational(8, 3)) + RadicalValue::sqrt_term(Rational(1, 3), 6));
  CHECK(to_decimal(extremal_value(18)).substr(0, 9) == "8.9831632");
  CHECK(extremal_value(0) == -extremal_constant());
  for (long n = 0; n < 40; ++n) CHECK(extremal_value(n + 2) - extremal_value(n) == RadicalValue(1L));
}

TEST_CASE("membership examples") {
  auto member = named::subdivide_edge(named::complete(4), 2, 3, 3);
  auto fm = family_membership(member, 2);
  CHECK(fm.member());
  CHECK(fm.asym_count == 2);
  CHECK(fm.apex_k == std::optional<std::size_t>(2));
  REQUIRE(fm.value);
  CHECK(*fm.value == extremal_value(7));

  auto c7 = family_membership(named::cycle(7), 2);
  CHECK_FALSE(c7.member());
  CHECK(c7.verdict == MembershipVerdict::AsymmetricCount);
  CHECK(c7.asym_count == 0);

  auto k4 = family_membership(named::complete(4), 2);
  CHECK(k4.verdict == MembershipVerdict::OrderTooSmall);

  CHECK_THROWS_AS(family_membership(member, 1), UsageError);
}

TEST_CASE("construct_member for k = 2 across n in [7, 20]") {
  for (std::size_t n = 7; n <= 20; ++n) {
    auto res = construct_member(2, n);
    REQUIRE(res.found());
    CHECK(res.method == "parametric:K4-subdivided");
    CHECK(family_membership(*res.graph, 2).member());
    CHECK(randic(*res.graph).value == extremal_value(static_cast<long>(n)));
    CHECK(std::fabs(static_cast<double>(randic_float(*res.graph)) - to_double(extremal_value(static_cast<long>(n)))) < 1e-9);
  }
  auto k7 = construct_member(2, 7);
  CHECK(*k7.graph == named::subdivide_edge(named::complete(4), 2, 3, 3));
  CHECK(construct_member(2, 12).graph->order() == 12);
}

TEST_CASE("construct_member preconditions") {
  CHECK_THROWS_AS(construct_member(2, 6), UsageError);
  CHECK_THROWS_AS(construct_member(1, 10), UsageError);
  CHECK_THROWS_AS(construct_member(2, 65), GuardError);
}

TEST_CASE("construct_member for k = 3 and k = 4") {
  for (auto [k, n] : {std::pair<std::size_t, std::size_t>{3, 11}, {3, 14}, {4, 15}, {4, 18}}) {
    auto res = construct_member(k, n);
    INFO("k=" << k << " n=" << n << " tried=" << res.candidates_tried);
    REQUIRE(res.found());
    CHECK(res.graph->order() == n);
    CHECK(family_membership(*res.graph, k).member());
  }
}

TEST_CASE("cubic catalog holds only connected cubic graphs") {
  auto cat = cubic_catalog();
  CHECK(cat.size() >= 20);
  for (const auto& g : cat) {
    CHECK(is_regular(g) == std::optional<std::size_t>(3));
    CHECK(is_connected(g));
  }
}

TEST_CASE("non-regularity audit") {
  auto a7 = audit_nonregularity(2, 7);
  CHECK(a7.in_scope);
  CHECK(a7.scanned == 439);
  CHECK(a7.regular.empty());
  CHECK(a7.theorem_consistent);

  auto a4 = audit_nonregularity(2, 4);
  CHECK_FALSE(a4.in_scope);
  REQUIRE(a4.regular.size() == 1);
  CHECK(a4.regular[0].graph6 == "C~");
  CHECK(a4.regular[0].degree == 3);
  CHECK(a4.regular[0].cross_edges == 4);
  CHECK(a4.regular[0].identity_holds);
  CHECK(a4.regular[0].bound_holds);

  auto a6 = audit_nonregularity(2, 6);
  CHECK(a6.theorem_consistent);
  bool k33 = false;
  for (const auto& w : a6.regular) {
    CHECK(w.identity_holds);
    CHECK(w.bound_holds);
    if (canonical_code(parse_graph6(w.graph6)) == canonical_code(named::complete_bipartite(3, 3))) k33 = true;
  }
  CHECK(k33);
  CHECK(a6.regular.size() == 2);
  CHECK_THROWS_AS(audit_nonregularity(1, 5), UsageError);
}
