#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apexrandic/radical.hpp"
#include "apexrandic/randic.hpp"

namespace apexrandic {

/// The five scalar inequalities audited pointwise.
///   L2: (1/sqrt(x) - 1/sqrt(a))^2, increasing in x for x > a > 0
///   L3: (1/sqrt(x+1) - 1/sqrt(x))^2, decreasing for x > 0
///   L4: (1/sqrt(x) - 1/sqrt(a))^2 - C, increasing and positive (a >= 2 integer, x >= a+2)
///   L5: (x-1)(1/sqrt(x) - 1/sqrt(x-1))^2 - C, positive for x >= 4
///   L6: (x-1)(1/sqrt(m) - 1/sqrt(m-1))^2 - C, positive for x >= m >= 4
/// with C = extremal_constant().
enum class LemmaId { L2, L3, L4, L5, L6 };

inline std::string_view lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::L2: return "lemma2";
    case LemmaId::L3: return "lemma3";
    case LemmaId::L4: return "lemma4";
    case LemmaId::L5: return "lemma5";
    case LemmaId::L6: return "lemma6";
  }
  return "?";
}

inline std::optional<LemmaId> parse_lemma_name(std::string_view s) {
  for (auto id : {LemmaId::L2, LemmaId::L3, LemmaId::L4, LemmaId::L5, LemmaId::L6}) {
    if (lemma_name(id) == s) return id;
  }
  return std::nullopt;
}

/// Name of the second parameter (a or m), empty for one-variable lemmas.
inline std::string_view lemma_param_name(LemmaId id) {
  switch (id) {
    case LemmaId::L2:
    case LemmaId::L4: return "a";
    case LemmaId::L6: return "m";
    default: return "";
  }
}

struct LemmaPoint {
  Rational x;
  Rational param;  // a for L2/L4, m for L6, ignored otherwise
};

inline bool in_lemma_domain(LemmaId id, const LemmaPoint& p) {
  switch (id) {
    case LemmaId::L2: return p.param > 0 && p.x > p.param;
    case LemmaId::L3: return p.x > 0;
    case LemmaId::L4: return p.param.get_den() == 1 && p.param >= 2 && p.x >= p.param + 2;
    case LemmaId::L5: return p.x >= 4;
    case LemmaId::L6: return p.param >= 4 && p.x >= p.param;
  }
  return false;
}

inline RadicalValue lemma_function(LemmaId id, const LemmaPoint& p) {
  if (!in_lemma_domain(id, p)) {
    throw DomainError(std::string(lemma_name(id)) + ": point outside domain (x=" + p.x.get_str() +
                      ", param=" + p.param.get_str() + ")");
  }
  auto square = [](const RadicalValue& v) { return v * v; };
  const RadicalValue& c = extremal_constant();
  switch (id) {
    case LemmaId::L2: return square(inv_sqrt(p.x) - inv_sqrt(p.param));
    case LemmaId::L3: return square(inv_sqrt(Rational(p.x + 1)) - inv_sqrt(p.x));
    case LemmaId::L4: return square(inv_sqrt(p.x) - inv_sqrt(p.param)) - c;
    case LemmaId::L5:
      return square(inv_sqrt(p.x) - inv_sqrt(Rational(p.x - 1))) * Rational(p.x - 1) - c;
    case LemmaId::L6:
      return square(inv_sqrt(p.param) - inv_sqrt(Rational(p.param - 1))) * Rational(p.x - 1) - c;
  }
  throw UsageError("unknown lemma");
}

/// Arithmetic progression lo, lo+step, ... <= hi. Empty when lo > hi.
struct RationalRange {
  Rational lo;
  Rational hi;
  Rational step{1};

  std::vector<Rational> points() const {
    if (step <= 0) throw UsageError("range step must be positive");
    std::vector<Rational> out;
    for (Rational v = lo; v <= hi; v += step) out.push_back(v);
    return out;
  }

  std::string to_string() const {
    std::string s = lo.get_str() + ".." + hi.get_str();
    if (step != 1) s += ":" + step.get_str();
    return s;
  }
};

/// Parses "lo..hi" or "lo..hi:step"; each number an integer or p/q.
inline RationalRange parse_range(std::string_view text) {
  auto parse_q = [&](std::string_view s) {
    Rational q;
    if (s.empty() || q.set_str(std::string(s), 10) != 0) {
      throw UsageError("bad number '" + std::string(s) + "' in range '" + std::string(text) + "'");
    }
    q.canonicalize();
    return q;
  };
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    Rational v = parse_q(text);
    return {v, v, Rational(1)};
  }
  RationalRange r;
  r.lo = parse_q(text.substr(0, dots));
  auto rest = text.substr(dots + 2);
  auto colon = rest.find(':');
  r.hi = parse_q(rest.substr(0, colon));
  if (colon != std::string_view::npos) r.step = parse_q(rest.substr(colon + 1));
  if (r.step <= 0) throw UsageError("range step must be positive in '" + std::string(text) + "'");
  return r;
}

enum class ClaimKind { Positive, Increasing, Decreasing };

inline std::string_view claim_kind_name(ClaimKind k) {
  switch (k) {
    case ClaimKind::Positive: return "positive";
    case ClaimKind::Increasing: return "increasing";
    case ClaimKind::Decreasing: return "decreasing";
  }
  return "?";
}

inline std::vector<ClaimKind> lemma_claims(LemmaId id) {
  switch (id) {
    case LemmaId::L2: return {ClaimKind::Increasing};
    case LemmaId::L3: return {ClaimKind::Decreasing};
    case LemmaId::L4: return {ClaimKind::Increasing, ClaimKind::Positive};
    case LemmaId::L5:
    case LemmaId::L6: return {ClaimKind::Positive};
  }
  return {};
}

/// Evidence at one grid location. For monotonicity claims `value` is
/// f(x) - f(prev_x) and `prev_x` is set.
struct ClaimEvidence {
  LemmaPoint point;
  std::optional<Rational> prev_x;
  RadicalValue value;
  Sign sign = Sign::Zero;
};

struct ClaimAudit {
  ClaimKind kind = ClaimKind::Positive;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<ClaimEvidence> witness;  // first failure in grid order
  std::optional<ClaimEvidence> extreme;  // smallest margin observed
  bool holds() const { return failures == 0; }
};

struct LemmaGrid {
  RationalRange x;
  std::optional<RationalRange> param;
};

/// Default grids used by the CLI when none is given.
inline LemmaGrid default_lemma_grid(LemmaId id) {
  switch (id) {
    case LemmaId::L2: return {{Rational(1), Rational(100), Rational(1)}, RationalRange{Rational(1), Rational(10), Rational(1)}};
    case LemmaId::L3: return {{Rational(1), Rational(100), Rational(1)}, std::nullopt};
    case LemmaId::L4: return {{Rational(4), Rational(30), Rational(1)}, RationalRange{Rational(2), Rational(4), Rational(1)}};
    case LemmaId::L5: return {{Rational(4), Rational(30), Rational(1)}, std::nullopt};
    case LemmaId::L6: return {{Rational(4), Rational(30), Rational(1)}, RationalRange{Rational(4), Rational(10), Rational(1)}};
  }
  return {};
}

struct LemmaAudit {
  LemmaId lemma = LemmaId::L2;
  LemmaGrid grid;
  std::size_t points = 0;   // in-domain grid points evaluated
  std::size_t skipped = 0;  // grid points outside the lemma's domain
  std::vector<ClaimAudit> claims;
  bool holds() const {
    for (const auto& c : claims) {
      if (!c.holds()) return false;
    }
    return true;
  }
};

/// Pointwise audit with every sign decided exactly. Failures are findings and
/// are recorded, never thrown.
inline LemmaAudit audit_lemma(LemmaId id, const LemmaGrid& grid) {
  LemmaAudit audit;
  audit.lemma = id;
  audit.grid = grid;
  bool two_param = !lemma_param_name(id).empty();
  std::vector<Rational> params =
      two_param ? (grid.param ? grid.param->points() : default_lemma_grid(id).param->points())
                : std::vector<Rational>{Rational(0)};
  std::vector<Rational> xs = grid.x.points();

  for (auto kind : lemma_claims(id)) audit.claims.push_back({kind, 0, 0, std::nullopt, std::nullopt});

  auto consider = [](ClaimAudit& claim, ClaimEvidence ev, bool ok, bool smaller_is_tighter) {
    ++claim.checked;
    if (!ok) {
      ++claim.failures;
      if (!claim.witness) claim.witness = ev;
    }
    if (!claim.extreme) {
      claim.extreme = ev;
    } else {
      int cmp = compare(ev.value, claim.extreme->value);
      if (smaller_is_tighter ? cmp < 0 : cmp > 0) claim.extreme = std::move(ev);
    }
  };

  for (const auto& param : params) {
    std::optional<std::pair<Rational, RadicalValue>> prev;
    for (const auto& x : xs) {
      LemmaPoint p{x, param};
      if (!in_lemma_domain(id, p)) {
        ++audit.skipped;
        continue;
      }
      ++audit.points;
      RadicalValue f = lemma_function(id, p);
      for (auto& claim : audit.claims) {
        if (claim.kind == ClaimKind::Positive) {
          Sign s = sign(f);
          consider(claim, {p, std::nullopt, f, s}, s == Sign::Positive, true);
        } else if (prev) {
          RadicalValue diff = f - prev->second;
          Sign s = sign(diff);
          bool increasing = claim.kind == ClaimKind::Increasing;
          bool ok = increasing ? s == Sign::Positive : s == Sign::Negative;
          consider(claim, {p, prev->first, diff, s}, ok, increasing);
        }
      }
      prev = std::pair{x, f};
    }
  }
  return audit;
}

}  // namespace apexrandic
