// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "apexrandic/apex.hpp"
#include "apexrandic/claims.hpp"
#include "apexrandic/enumerate.hpp"
#include "apexrandic/family.hpp"
#include "apexrandic/graph_io.hpp"
#include "apexrandic/lemmas.hpp"
#include "apexrandic/nonregularity.hpp"
#include "support.hpp"

#ifndef APEXRANDIC_CLI
#error "APEXRANDIC_CLI must name the command-line binary"
#endif

using namespace apexrandic;

namespace {

/// Collects the reasons a criterion failed.
struct Outcome {
  std::vector<std::string> problems;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.problems.push_back(std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = out.problems.empty();
  if (!ok) ++failures;
  std::printf("criterion %d: %s - %s (%.1fs)%s%s\n", id, ok ? "PASS" : "FAIL", title.c_str(), s,
              out.detail.empty() ? "" : "; ", out.detail.c_str());
  for (const auto& p : out.problems) std::printf("    %s\n", p.c_str());
  std::fflush(stdout);
}

std::vector<Graph> connected_upto(int n) {
  std::vector<Graph> all;
  for (int i = 1; i <= n; ++i) {
    auto g = enumerate_connected(i);
    all.insert(all.end(), g.begin(), g.end());
  }
  return all;
}

/// Connected classes via every labeled graph, deduplicated by canonical code.
std::size_t labeled_sweep_count(int n) {
  std::set<PackedCode> seen;
  std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto g = testing::labeled_graph(n, mask);
    if (g.connected()) seen.insert(pack(canon::canonize(g)));
  }
  return seen.size();
}

std::string run_cli(const std::string& args, int& status) {
  std::string cmd = std::string(APEXRANDIC_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for " + cmd);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int rc = pclose(pipe);
  status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return out;
}

}  // namespace

int main() {
  criterion(1, "gap identity R = n/2 - gap on all connected graphs n <= 7", [](Outcome& o) {
    auto graphs = connected_upto(7);
    o.require(graphs.size() == 996, "expected 996 graphs, got " + std::to_string(graphs.size()));
    std::size_t ok = 0;
    std::size_t excluded = 0;
    for (const auto& g : graphs) {
      if (g.order() == 1) {
        // K1 has an isolated vertex: R = gap = 0 but n/2 = 1/2, so it lies
        // outside the identity's minimum-degree hypothesis.
        o.require(randic(g).value.is_zero() && randic_gap(g).is_zero(), "K1 values");
        ++excluded;
        continue;
      }
      if (verify_gap_identity(g)) ++ok;
    }
    o.require(ok + excluded == graphs.size(), "identity failed on some graph");
    o.detail = std::to_string(ok) + " graphs exact; K1 excluded (isolated vertex)";
  });

  criterion(2, "branch-and-bound apex number equals exhaustive subsets", [](Outcome& o) {
    std::size_t checked = 0;
    for (const auto& g : connected_upto(7)) {
      auto a = apex_number(g);
      auto b = apex_number_bruteforce(g);
      o.require(a.k == b.k && a.witness == b.witness, "mismatch on " + write_graph6(g));
      o.require(is_tree(a.residual), "residual not a tree on " + write_graph6(g));
      ++checked;
    }
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<std::size_t> order(8, 12);
    std::uniform_real_distribution<double> density(0.05, 0.6);
    for (int t = 0; t < 500; ++t) {
      auto g = testing::random_connected_graph(order(rng), density(rng), rng);
      auto a = apex_number(g);
      auto b = apex_number_bruteforce(g);
      o.require(a.k == b.k, "mismatch on random " + write_graph6(g));
      ++checked;
    }
    o.detail = std::to_string(checked) + " graphs (996 exhaustive + 500 random)";
  });

  criterion(3, "no regular 2-apex tree for n in {7,8,9}; K4 and K33 below the threshold", [](Outcome& o) {
    std::string counts;
    for (std::size_t n : {7, 8, 9}) {
      auto a = audit_nonregularity(2, n);
      o.require(a.regular.empty(), "regular 2-apex tree at n=" + std::to_string(n));
      o.require(a.theorem_consistent, "inconsistent at n=" + std::to_string(n));
      counts += (counts.empty() ? "" : ",") + std::to_string(a.scanned);
    }
    auto a4 = audit_nonregularity(2, 4);
    o.require(a4.regular.size() == 1 && a4.regular[0].graph6 == "C~", "K4 witness missing at n=4");
    auto a6 = audit_nonregularity(2, 6);
    bool k33 = false;
    for (const auto& w : a6.regular) {
      o.require(w.identity_holds && w.bound_holds, "counting identity fails on " + w.graph6);
      if (canonical_code(parse_graph6(w.graph6)) == canonical_code(named::complete_bipartite(3, 3))) k33 = true;
    }
    for (const auto& w : a4.regular) o.require(w.identity_holds && w.bound_holds, "counting identity fails on K4");
    o.require(k33, "K33 witness missing at n=6");
    o.detail = "scanned " + counts + " graphs";
  });

  criterion(4, "construct_member(2, n) attains n/2 - C for n in [7, 20]", [](Outcome& o) {
    for (std::size_t n = 7; n <= 20; ++n) {
      auto c = construct_member(2, n);
      auto tag = "n=" + std::to_string(n);
      if (!c.found()) {
        o.require(false, "not found at " + tag);
        continue;
      }
      auto ext = extremal_value(static_cast<long>(n));
      auto expected = RadicalValue(Rational(static_cast<long>(n), 2)) - RadicalValue(Rational(5, 6)) +
                      RadicalValue::sqrt_term(Rational(1, 3), 6);
      o.require(ext == expected, "closed form mismatch at " + tag);
      o.require(randic(*c.graph).value == ext, "exact value mismatch at " + tag);
      o.require(family_membership(*c.graph, 2).member(), "not a member at " + tag);
      double diff = std::fabs(static_cast<double>(randic_float(*c.graph)) - to_double(ext));
      o.require(diff <= 1e-9, "float disagreement at " + tag);
    }
    o.detail = "14 orders";
  });

  criterion(5, "conjecture scans at k=2, n in {7,8,9} with float cross-check and pinned verdicts", [](Outcome& o) {
    // Pinned after the first verified run: the bound is exceeded at n=7 and
    // attained exactly by the family at n=8 and n=9.
    const std::array<std::pair<std::size_t, ConjectureVerdict>, 3> pinned = {
        {{7, ConjectureVerdict::BoundExceeded}, {8, ConjectureVerdict::Holds}, {9, ConjectureVerdict::Holds}}};
    std::string verdicts;
    for (const auto& [n, expected] : pinned) {
      auto r = verify_conjecture(2, n);
      auto tag = "n=" + std::to_string(n);
      o.require(r.scan.max_value.has_value(), "no maximum at " + tag);
      o.require(r.scan.float_check.values_agree, "float max disagrees at " + tag);
      o.require(r.scan.float_check.argmax_agree, "float argmax set differs at " + tag);
      o.require(r.verdict == expected, "verdict changed at " + tag + ": " + to_string(r.verdict));
      verdicts += tag + " " + to_string(r.verdict) + " (max " + to_decimal(*r.scan.max_value) + ", " +
                  std::to_string(r.scan.maximizers.size()) + " maximizers); ";
    }
    o.detail = verdicts;
  });

  criterion(6, "lemma audits with exact signs", [](Outcome& o) {
    auto l2 = audit_lemma(LemmaId::L2, {parse_range("1..100"), parse_range("1..10")});
    o.require(l2.holds(), "lemma2 increasing has failures");
    auto l3 = audit_lemma(LemmaId::L3, {parse_range("1..100"), std::nullopt});
    o.require(l3.holds(), "lemma3 decreasing has failures");
    auto f4 = lemma_function(LemmaId::L5, {Rational(4), Rational(0)});
    auto f5 = lemma_function(LemmaId::L5, {Rational(5), Rational(0)});
    o.require(sign(f4) == Sign::Positive, "lemma5 f(4) not positive");
    o.require(sign(f5) == Sign::Negative, "lemma5 f(5) not negative");
    o.require(std::fabs(to_double(f4) - 0.0011125) <= 1e-6, "lemma5 f(4) decimal " + to_decimal(f4));
    o.require(std::fabs(to_double(f5) + 0.0056912) <= 1e-6, "lemma5 f(5) decimal " + to_decimal(f5));
    auto l4 = audit_lemma(LemmaId::L4, {parse_range("4..30"), parse_range("2..4")});
    bool found = false;
    for (const auto& c : l4.claims) {
      if (c.kind == ClaimKind::Positive && c.witness && c.witness->point.param == 4 && c.witness->point.x == 6) found = true;
    }
    o.require(found, "lemma4 witness (a=4, x=6) not found");
    o.detail = "lemma5 f(4)=" + to_decimal(f4) + ", f(5)=" + to_decimal(f5);
  });

  criterion(7, "enumeration counts by two strategies; k-apex strategies A and B agree", [](Outcome& o) {
    const std::array<std::size_t, 8> expected = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
      auto a = connected_graph_codes(n).size();
      auto b = labeled_sweep_count(n);
      o.require(a == expected[n] && b == expected[n],
                "n=" + std::to_string(n) + ": augmentation " + std::to_string(a) + ", labeled sweep " + std::to_string(b));
    }
    std::size_t pairs = 0;
    for (int k = 1; k <= 2; ++k) {
      for (int n = k + 1; n <= 8; ++n) {
        auto a = k_apex_tree_codes(k, n, ApexStrategy::FilterConnected);
        auto b = k_apex_tree_codes(k, n, ApexStrategy::AttachToTrees);
        o.require(a == b, "A/B disagree at k=" + std::to_string(k) + ", n=" + std::to_string(n));
        ++pairs;
      }
    }
    o.detail = "counts 1,1,2,6,21,112,853; " + std::to_string(pairs) + " (k,n) stream pairs identical";
  });

  criterion(8, "audit reports byte-identical with --jobs 1 and --jobs 8", [](Outcome& o) {
    const std::vector<std::string> runs = {
        "audit lemma5 --grid 4..30",        "audit lemma4",
        "audit theorem1 --k 2 --n 8",       "audit corollary1 --k 2 --n 8",
        "audit corollary2 --k 2 --n 7",     "audit conjecture --k 2 --n 8",
        "audit family --k 3 --n 11",        "scan-plot --k 2 --n-range 6..8",
        "enumerate --n 8 --k 2 --strategy B"};
    for (const auto& args : runs) {
      int s1 = 0, s8 = 0;
      auto one = run_cli(args + " --jobs 1", s1);
      auto eight = run_cli(args + " --jobs 8", s8);
      o.require(!one.empty(), "empty output for " + args);
      o.require(one == eight, "outputs differ for " + args);
      o.require(s1 == s8, "exit codes differ for " + args);
    }
    o.detail = std::to_string(runs.size()) + " runs compared";
  });

  criterion(9, "graph6 round trip over every enumerated graph n <= 8", [](Outcome& o) {
    std::size_t checked = 0;
    for (int n = 1; n <= 8; ++n) {
      for (PackedCode c : connected_graph_codes(n)) {
        auto text = packed_graph6(n, c);
        auto g = parse_graph6(text);
        o.require(write_graph6(g) == text && g == unpack_graph(n, c), "round trip failed for " + text);
        ++checked;
      }
    }
    auto k4 = parse_graph6("C~");
    o.require(k4 == named::complete(4), "C~ is not K4");
    o.require(write_graph6(k4) == "C~", "K4 does not serialize to C~");
    o.detail = std::to_string(checked) + " graphs";
  });

  std::printf("acceptance: %s (%d failing)\n", failures == 0 ? "PASS" : "FAIL", failures);
  return failures == 0 ? 0 : 1;
}
