#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apexrandic/enumerate.hpp"
#include "apexrandic/family.hpp"
#include "apexrandic/graph_io.hpp"
#include "apexrandic/randic.hpp"

namespace apexrandic {

/// One graph cited by a report.
struct Finding {
  std::string graph6;
  RadicalValue value;  // exact R
  std::string note;
};

inline constexpr std::size_t kMaxReportedWitnesses = 25;

/// Outcome of one scan-based claim check.
struct VerificationReport {
  std::string claim;
  std::size_t k = 0;
  std::size_t n = 0;
  std::vector<std::pair<std::string, std::string>> params;
  std::size_t scanned = 0;     // k-apex trees of order n
  std::size_t qualifying = 0;  // those meeting the claim's hypothesis
  std::size_t violations = 0;
  std::vector<Finding> witnesses;  // first kMaxReportedWitnesses violations, ascending code
  std::optional<Finding> extreme;  // largest R among qualifying graphs
  std::vector<std::string> notes;
  bool holds() const { return violations == 0; }
};

namespace detail {

/// The k-apex trees of order n with their spectra, in ascending code order.
struct ApexTreeScan {
  int n = 0;
  std::vector<PackedCode> codes;
  std::vector<DegreePairSpectrum> spectra;

  Graph graph(std::size_t i) const { return unpack_graph(n, codes[i]); }
  std::string graph6(std::size_t i) const { return packed_graph6(n, codes[i]); }
};

inline ApexTreeScan scan_apex_trees(std::size_t k, std::size_t n, const EnumerationOptions& opt) {
  ApexTreeScan s;
  s.n = static_cast<int>(n);
  s.codes = k_apex_tree_codes(static_cast<int>(k), s.n, ApexStrategy::FilterConnected, opt);
  s.spectra.resize(s.codes.size());
  parallel_for(s.codes.size(), opt.jobs, [&](std::size_t i) { s.spectra[i] = degree_pair_spectrum(s.graph(i)); });
  return s;
}

/// Exact R per distinct spectrum; R depends on nothing else.
class SpectrumValues {
 public:
  const RadicalValue& operator()(const DegreePairSpectrum& sp) {
    auto it = cache_.find(sp);
    if (it == cache_.end()) it = cache_.emplace(sp, randic_value(sp)).first;
    return it->second;
  }

 private:
  std::map<DegreePairSpectrum, RadicalValue> cache_;
};

/// Degrees only 2 and 3 with exactly two asymmetric edges.
inline bool family_shaped(const DegreePairSpectrum& sp) {
  if (sp.asymmetric() != 2) return false;
  for (const auto& [pair, count] : sp.counts()) {
    for (auto d : {pair.first, pair.second}) {
      if (d != 2 && d != 3) return false;
    }
  }
  return true;
}

inline void consider_extreme(std::optional<Finding>& extreme, Finding f) {
  if (!extreme || compare(f.value, extreme->value) > 0) extreme = std::move(f);
}

template <class Qualifies>
VerificationReport strict_bound_scan(std::string claim, std::size_t k, std::size_t n, const EnumerationOptions& opt,
                                     Qualifies&& qualifies) {
  VerificationReport rep;
  rep.claim = std::move(claim);
  rep.k = k;
  rep.n = n;
  auto scan = scan_apex_trees(k, n, opt);
  rep.scanned = scan.codes.size();
  SpectrumValues values;
  RadicalValue bound = extremal_value(static_cast<long>(n));
  for (std::size_t i = 0; i < scan.codes.size(); ++i) {
    if (!qualifies(scan, i)) continue;
    ++rep.qualifying;
    const RadicalValue& r = values(scan.spectra[i]);
    Sign s = sign(r - bound);
    Finding f{scan.graph6(i), r, ""};
    if (s != Sign::Negative) {
      ++rep.violations;
      if (rep.witnesses.size() < kMaxReportedWitnesses) {
        rep.witnesses.push_back({f.graph6, r, s == Sign::Zero ? "R equals n/2 - C" : "R exceeds n/2 - C"});
      }
    }
    consider_extreme(rep.extreme, std::move(f));
  }
  return rep;
}

}  // namespace detail

/// Graphs with an asymmetric edge of degree gap >= 2 must satisfy R < n/2 - C.
inline VerificationReport check_corollary_gap2(std::size_t k, std::size_t n, const EnumerationOptions& opt = {}) {
  if (k < 2) throw UsageError("corollary checks need k >= 2");
  auto rep = detail::strict_bound_scan("corollary1", k, n, opt, [](const detail::ApexTreeScan& s, std::size_t i) {
    return s.spectra[i].max_gap() >= 2;
  });
  rep.notes.push_back("hypothesis read as: some asymmetric edge has degree gap >= 2");
  if (n < family_min_order(k)) rep.notes.push_back("n is below 4k-1");
  return rep;
}

/// Graphs whose asymmetric edges all have degree gap 1 and number at least
/// 2m-2 must satisfy R < n/2 - C. Family members are excluded.
inline VerificationReport check_corollary_many_asym(std::size_t k, std::size_t n, std::size_t m,
                                                    const EnumerationOptions& opt = {}) {
  if (k < 2) throw UsageError("corollary checks need k >= 2");
  if (m < 2 || m > k + 2) {
    throw UsageError("m=" + std::to_string(m) + " outside [2, k+2] = [2, " + std::to_string(k + 2) + "]");
  }
  std::size_t need = 2 * m - 2;
  auto rep = detail::strict_bound_scan(
      "corollary2", k, n, opt, [&](const detail::ApexTreeScan& s, std::size_t i) {
        const auto& sp = s.spectra[i];
        if (sp.asymmetric() < need || sp.max_gap() != 1) return false;
        if (detail::family_shaped(sp) && family_membership(s.graph(i), k).member()) return false;
        return true;
      });
  rep.params.emplace_back("m", std::to_string(m));
  rep.notes.push_back("hypothesis read as: all asymmetric edges have degree gap 1, at least 2m-2 of them");
  rep.notes.push_back("family members are excluded from the scan");
  if (m < 4) rep.notes.push_back("the supporting scalar inequality is only asserted for m >= 4");
  if (n < family_min_order(k)) rep.notes.push_back("n is below 4k-1");
  return rep;
}

struct FloatCrossCheck {
  long double max_value = 0;
  std::size_t argmax_count = 0;
  bool values_agree = false;  // |float max - exact max| <= 1e-9
  bool argmax_agree = false;  // same graphs within 1e-9 of the float max
};

/// Maximum of R over the k-apex trees of order n.
struct MaxRandicScan {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t scanned = 0;
  std::optional<RadicalValue> max_value;  // absent when nothing was scanned
  std::vector<std::string> maximizers;    // graph6, ascending code
  std::vector<std::string> members;       // family members among the scanned graphs
  FloatCrossCheck float_check;
};

inline constexpr long double kFloatTolerance = 1e-9L;

inline MaxRandicScan scan_max_randic(std::size_t k, std::size_t n, const EnumerationOptions& opt = {}) {
  MaxRandicScan out;
  out.k = k;
  out.n = n;
  auto scan = detail::scan_apex_trees(k, n, opt);
  out.scanned = scan.codes.size();
  if (scan.codes.empty()) return out;

  std::map<DegreePairSpectrum, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < scan.codes.size(); ++i) groups[scan.spectra[i]].push_back(i);
  const RadicalValue* best = nullptr;
  std::vector<const std::vector<std::size_t>*> best_groups;
  std::vector<RadicalValue> group_values;
  group_values.reserve(groups.size());
  for (const auto& [sp, members] : groups) {
    group_values.push_back(randic_value(sp));
    const RadicalValue& v = group_values.back();
    int c = best ? compare(v, *best) : 1;
    if (c > 0) {
      best = &v;
      best_groups.clear();
    }
    if (c >= 0) best_groups.push_back(&members);
  }
  out.max_value = *best;
  std::vector<std::size_t> argmax;
  for (const auto* g : best_groups) argmax.insert(argmax.end(), g->begin(), g->end());
  std::sort(argmax.begin(), argmax.end());
  for (auto i : argmax) out.maximizers.push_back(scan.graph6(i));

  if (k >= 2) {
    for (std::size_t i = 0; i < scan.codes.size(); ++i) {
      if (detail::family_shaped(scan.spectra[i]) && family_membership(scan.graph(i), k).member()) {
        out.members.push_back(scan.graph6(i));
      }
    }
  }

  // Independent route: per-edge floating sums, no spectra, no radicals.
  std::vector<long double> fl(scan.codes.size());
  parallel_for(scan.codes.size(), opt.jobs, [&](std::size_t i) { fl[i] = randic_float(scan.graph(i)); });
  long double fmax = *std::max_element(fl.begin(), fl.end());
  std::vector<std::size_t> fargmax;
  for (std::size_t i = 0; i < fl.size(); ++i) {
    if (fmax - fl[i] <= kFloatTolerance) fargmax.push_back(i);
  }
  out.float_check.max_value = fmax;
  out.float_check.argmax_count = fargmax.size();
  out.float_check.values_agree = std::fabs(fmax - static_cast<long double>(to_double(*best))) <= kFloatTolerance;
  out.float_check.argmax_agree = fargmax == argmax;
  return out;
}

enum class ConjectureVerdict { Holds, HoldsFamilyEmpty, BoundExceeded, EqualitySetDiffers };

inline const char* to_string(ConjectureVerdict v) {
  switch (v) {
    case ConjectureVerdict::Holds: return "holds";
    case ConjectureVerdict::HoldsFamilyEmpty: return "holds (family empty, maximum strictly below n/2 - C)";
    case ConjectureVerdict::BoundExceeded: return "fails: maximum exceeds n/2 - C";
    case ConjectureVerdict::EqualitySetDiffers: return "fails: equality set differs from the family";
  }
  return "?";
}

struct ConjectureReport {
  MaxRandicScan scan;
  RadicalValue extremal;
  Sign max_vs_extremal = Sign::Zero;
  ConjectureVerdict verdict = ConjectureVerdict::Holds;
  std::optional<Finding> counterexample;
  bool conjecture_holds() const {
    return verdict == ConjectureVerdict::Holds || verdict == ConjectureVerdict::HoldsFamilyEmpty;
  }
};

inline ConjectureReport verify_conjecture(std::size_t k, std::size_t n, const EnumerationOptions& opt = {}) {
  if (k < 2) throw UsageError("the conjecture concerns k >= 2");
  if (n < family_min_order(k)) {
    throw UsageError("the conjecture needs n >= 4k-1 = " + std::to_string(family_min_order(k)) +
                     "; got n=" + std::to_string(n));
  }
  ConjectureReport rep;
  rep.scan = scan_max_randic(k, n, opt);
  rep.extremal = extremal_value(static_cast<long>(n));
  if (!rep.scan.max_value) {
    rep.max_vs_extremal = Sign::Negative;
    rep.verdict = ConjectureVerdict::HoldsFamilyEmpty;
    return rep;
  }
  const RadicalValue& max = *rep.scan.max_value;
  rep.max_vs_extremal = sign(max - rep.extremal);
  const auto& maxi = rep.scan.maximizers;
  const auto& mem = rep.scan.members;
  switch (rep.max_vs_extremal) {
    case Sign::Positive:
      rep.verdict = ConjectureVerdict::BoundExceeded;
      rep.counterexample = Finding{maxi.front(), max, "R exceeds n/2 - C"};
      break;
    case Sign::Zero:
      if (maxi == mem) {
        rep.verdict = ConjectureVerdict::Holds;
      } else {
        rep.verdict = ConjectureVerdict::EqualitySetDiffers;
        auto odd = std::find_if(maxi.begin(), maxi.end(),
                                [&](const std::string& g) { return std::find(mem.begin(), mem.end(), g) == mem.end(); });
        if (odd != maxi.end()) rep.counterexample = Finding{*odd, max, "attains n/2 - C but is not a family member"};
      }
      break;
    case Sign::Negative:
      if (!mem.empty()) throw ConsistencyError("family members exceed the computed maximum");
      rep.verdict = ConjectureVerdict::HoldsFamilyEmpty;
      break;
  }
  return rep;
}

}  // namespace apexrandic
