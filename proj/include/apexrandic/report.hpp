#pragma once

#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "apexrandic/apex.hpp"
#include "apexrandic/claims.hpp"
#include "apexrandic/enumerate.hpp"
#include "apexrandic/family.hpp"
#include "apexrandic/graph_io.hpp"
#include "apexrandic/lemmas.hpp"
#include "apexrandic/nonregularity.hpp"
#include "apexrandic/randic.hpp"

namespace apexrandic::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "apexrandic";
inline constexpr const char* kToolVersion = "1.0.0";

/// Exact text plus a correctly rounded 12-digit decimal.
inline Json value(const RadicalValue& v) { return Json{{"exact", v.to_string()}, {"decimal", to_decimal(v)}}; }

/// Locale-independent rendering of a floating-point oracle value.
inline std::string float_text(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lg", x);
  return buf;
}

inline Json spectrum(const DegreePairSpectrum& sp) {
  Json arr = Json::array();
  for (const auto& [pair, count] : sp.counts()) arr.push_back({{"a", pair.first}, {"b", pair.second}, {"count", count}});
  return arr;
}

inline Json vertices(const std::vector<Vertex>& vs) {
  Json arr = Json::array();
  for (auto v : vs) arr.push_back(v);
  return arr;
}

inline Json randic_entry(const Graph& g) {
  auto r = randic(g);
  return Json{{"graph6", write_graph6(g)},
              {"n", g.order()},
              {"m", g.size()},
              {"R", value(r.value)},
              {"gap", value(r.gap)},
              {"spectrum", spectrum(r.spectrum)},
              {"asymmetric_edges", r.spectrum.asymmetric()}};
}

inline Json apex_entry(const ApexCertificate& c) {
  return Json{{"k", c.k}, {"witness", vertices(c.witness)}, {"residual_graph6", write_graph6(c.residual)}};
}

inline Json rational(const Rational& q) { return q.get_str(); }

inline Json point(LemmaId id, const LemmaPoint& p) {
  Json j{{"x", rational(p.x)}};
  auto name = lemma_param_name(id);
  if (!name.empty()) j[std::string(name)] = rational(p.param);
  return j;
}

inline Json evidence(LemmaId id, const ClaimEvidence& ev) {
  Json j = point(id, ev.point);
  if (ev.prev_x) j["prev_x"] = rational(*ev.prev_x);
  j["value"] = value(ev.value);
  j["sign"] = to_string(ev.sign);
  return j;
}

inline Json lemma_audit(const LemmaAudit& a) {
  Json grid{{"x", a.grid.x.to_string()}};
  auto pname = lemma_param_name(a.lemma);
  if (!pname.empty()) {
    grid[std::string(pname)] = a.grid.param ? a.grid.param->to_string() : default_lemma_grid(a.lemma).param->to_string();
  }
  Json claims = Json::array();
  for (const auto& c : a.claims) {
    Json cj{{"kind", claim_kind_name(c.kind)}, {"checked", c.checked}, {"failures", c.failures}, {"holds", c.holds()}};
    cj["witness"] = c.witness ? evidence(a.lemma, *c.witness) : Json(nullptr);
    cj["extreme"] = c.extreme ? evidence(a.lemma, *c.extreme) : Json(nullptr);
    claims.push_back(std::move(cj));
  }
  return Json{{"claim", lemma_name(a.lemma)},
              {"grid", grid},
              {"points", a.points},
              {"skipped", a.skipped},
              {"claims", claims},
              {"holds", a.holds()}};
}

inline Json nonregularity(const NonRegularityAudit& a) {
  Json ws = Json::array();
  for (const auto& w : a.regular) {
    ws.push_back({{"graph6", w.graph6},
                  {"degree", w.degree},
                  {"witness", vertices(w.witness)},
                  {"cross_edges", w.cross_edges},
                  {"predicted_cross_edges", w.predicted_cross_edges},
                  {"identity_holds", w.identity_holds},
                  {"bound_holds", w.bound_holds}});
  }
  return Json{{"claim", "theorem1"},
              {"k", a.k},
              {"n", a.n},
              {"scanned", a.scanned},
              {"in_scope", a.in_scope},
              {"regular_witnesses", ws},
              {"theorem_consistent", a.theorem_consistent}};
}

inline Json finding(const Finding& f) {
  Json j{{"graph6", f.graph6}, {"R", value(f.value)}};
  if (!f.note.empty()) j["note"] = f.note;
  return j;
}

inline Json verification(const VerificationReport& r) {
  Json j{{"claim", r.claim}, {"k", r.k}, {"n", r.n}};
  for (const auto& [key, val] : r.params) j[key] = val;
  j["scanned"] = r.scanned;
  j["qualifying"] = r.qualifying;
  j["extremal_value"] = value(extremal_value(static_cast<long>(r.n)));
  j["violations"] = r.violations;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(finding(w));
  j["witnesses"] = ws;
  j["extreme"] = r.extreme ? finding(*r.extreme) : Json(nullptr);
  j["notes"] = r.notes;
  j["holds"] = r.holds();
  return j;
}

inline Json conjecture(const ConjectureReport& r) {
  const auto& s = r.scan;
  return Json{{"claim", "conjecture"},
              {"k", s.k},
              {"n", s.n},
              {"scanned", s.scanned},
              {"max_value", s.max_value ? value(*s.max_value) : Json(nullptr)},
              {"maximizers", s.maximizers},
              {"extremal_value", value(r.extremal)},
              {"family_members", s.members},
              {"max_vs_extremal", to_string(r.max_vs_extremal)},
              {"verdict", to_string(r.verdict)},
              {"conjecture_holds", r.conjecture_holds()},
              {"counterexample", r.counterexample ? finding(*r.counterexample) : Json(nullptr)},
              {"float_check",
               {{"max_value", float_text(s.float_check.max_value)},
                {"argmax_count", s.float_check.argmax_count},
                {"values_agree", s.float_check.values_agree},
                {"argmax_agree", s.float_check.argmax_agree}}}};
}

inline Json construction(std::size_t k, std::size_t n, const ConstructionResult& c) {
  Json j{{"k", k}, {"n", n}, {"found", c.found()}};
  j["graph6"] = c.found() ? Json(write_graph6(*c.graph)) : Json(nullptr);
  j["method"] = c.method;
  j["candidates_tried"] = c.candidates_tried;
  j["searched"] = c.searched;
  if (c.found()) j["R"] = value(randic(*c.graph).value);
  return j;
}

inline Json summary(const EnumerationSummary& s) {
  return Json{{"n", s.n}, {"filter", s.filter}, {"count", s.count}, {"strategy", s.strategy}};
}

}  // namespace apexrandic::report
