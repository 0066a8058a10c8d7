#include <catch_amalgamated.hpp>

#include <cmath>

#include "apexrandic/lemmas.hpp"

using namespace apexrandic;

namespace {

double approx(const RadicalValue& v) { return to_double(v); }

const ClaimAudit& claim(const LemmaAudit& a, ClaimKind k) {
  for (const auto& c : a.claims) {
    if (c.kind == k) return c;
  }
  throw std::logic_error("claim missing");
}

}  // namespace

TEST_CASE("lemma functions at hand-evaluated points") {
  // L3 at x=1: (1/sqrt2 - 1)^2 = 3/2 - sqrt2
  CHECK(lemma_function(LemmaId::L3, {Rational(1), Rational(0)}) == RadicalValue(Rational(3, 2)) - RadicalValue::sqrt(2));
  // L2 at x=4, a=1: (1/2 - 1)^2 = 1/4
  CHECK(lemma_function(LemmaId::L2, {Rational(4), Rational(1)}) == RadicalValue(Rational(1, 4)));
  CHECK(std::fabs(approx(lemma_function(LemmaId::L5, {Rational(4), Rational(0)})) - 0.0011125) < 1e-6);
  CHECK(std::fabs(approx(lemma_function(LemmaId::L5, {Rational(5), Rational(0)})) + 0.0056912) < 1e-6);
}

TEST_CASE("lemma domains are enforced") {
  CHECK_THROWS_AS(lemma_function(LemmaId::L2, {Rational(1), Rational(2)}), DomainError);
  CHECK_THROWS_AS(lemma_function(LemmaId::L4, {Rational(4), Rational(3)}), DomainError);
  CHECK_THROWS_AS(lemma_function(LemmaId::L4, {Rational(9), Rational(5, 2)}), DomainError);
  CHECK_THROWS_AS(lemma_function(LemmaId::L5, {Rational(3), Rational(0)}), DomainError);
  CHECK_THROWS_AS(lemma_function(LemmaId::L6, {Rational(5), Rational(6)}), DomainError);
  CHECK_NOTHROW(lemma_function(LemmaId::L6, {Rational(6), Rational(6)}));
}

TEST_CASE("range parsing") {
  auto r = parse_range("4..30");
  CHECK(r.lo == 4);
  CHECK(r.hi == 30);
  CHECK(r.points().size() == 27);
  auto q = parse_range("1/2..2:1/2");
  CHECK(q.points().size() == 4);
  CHECK(q.to_string() == "1/2..2:1/2");
  CHECK(parse_range("7").points().size() == 1);
  CHECK(parse_range("5..4").points().empty());
  CHECK_THROWS_AS(parse_range("a..b"), UsageError);
  CHECK_THROWS_AS(parse_range("1..4:0"), UsageError);
  CHECK_THROWS_AS(parse_range("1..4:-1"), UsageError);
}

TEST_CASE("monotonicity claims hold on integer grids up to 100") {
  auto l2 = audit_lemma(LemmaId::L2, {parse_range("1..100"), parse_range("1..10")});
  CHECK(l2.holds());
  CHECK(claim(l2, ClaimKind::Increasing).checked > 0);
  auto l3 = audit_lemma(LemmaId::L3, {parse_range("1..100"), std::nullopt});
  CHECK(l3.holds());
  CHECK(claim(l3, ClaimKind::Decreasing).checked == 99);
}

TEST_CASE("lemma5 fails from x=5 on") {
  auto a = audit_lemma(LemmaId::L5, {parse_range("4..30"), std::nullopt});
  const auto& pos = claim(a, ClaimKind::Positive);
  CHECK_FALSE(a.holds());
  REQUIRE(pos.witness);
  CHECK(pos.witness->point.x == 5);
  CHECK(pos.witness->sign == Sign::Negative);
  CHECK(pos.failures == 26);
}

TEST_CASE("lemma4 positivity fails at a=4, x=6") {
  auto a = audit_lemma(LemmaId::L4, {parse_range("4..30"), parse_range("2..4")});
  const auto& pos = claim(a, ClaimKind::Positive);
  CHECK_FALSE(pos.holds());
  REQUIRE(pos.witness);
  CHECK(pos.witness->point.param == 4);
  CHECK(pos.witness->point.x == 6);
  CHECK(claim(a, ClaimKind::Increasing).holds());
}

TEST_CASE("lemma6 positivity on its default grid") {
  auto a = audit_lemma(LemmaId::L6, default_lemma_grid(LemmaId::L6));
  CHECK(a.points > 0);
  CHECK_FALSE(a.holds());
  CHECK(a.claims.front().failures == 88);
}
