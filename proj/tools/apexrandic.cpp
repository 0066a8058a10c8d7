// Command-line front end: exact Randic indices, apex numbers, claim audits,
// enumeration and plot data.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "apexrandic/report.hpp"

namespace ar = apexrandic;
using ar::report::Json;

namespace {

enum Exit { kHolds = 0, kViolation = 1, kUsage = 2 };

struct RunConfig {
  std::string command;
  std::string claim;
  std::optional<std::size_t> k;
  std::optional<std::size_t> n;
  std::string n_range;
  std::string grid;
  std::string param;
  std::optional<std::size_t> m;
  std::string strategy = "A";
  std::string format;
  std::string input = "-";
  std::string output;
  unsigned jobs = ar::default_jobs();
  bool allow_large = false;
  bool timing = false;

  ar::EnumerationOptions enumeration() const { return {jobs, allow_large}; }

  /// Everything that can change the result. Parallelism and the output path
  /// are left out so reports compare byte for byte across them.
  Json to_json() const {
    Json j{{"command", command}};
    if (!claim.empty()) j["claim"] = claim;
    if (k) j["k"] = *k;
    if (n) j["n"] = *n;
    if (!n_range.empty()) j["n_range"] = n_range;
    if (!grid.empty()) j["grid"] = grid;
    if (!param.empty()) j["param"] = param;
    if (m) j["m"] = *m;
    if (command == "enumerate") j["strategy"] = strategy;
    if (command == "randic" || command == "apex") j["input"] = input;
    j["format"] = format;
    j["allow_large"] = allow_large;
    return j;
  }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ar::UsageError("cannot open input file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw ar::UsageError("cannot open output file '" + cfg.output + "'");
  out << text;
}

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

void emit_json(const RunConfig& cfg, Json result, const Clock& clock) {
  Json doc{{"tool", ar::report::kToolName}, {"version", ar::report::kToolVersion}, {"config", cfg.to_json()}};
  double ms = clock.ms();
  if (cfg.timing) doc["wall_time_ms"] = ms;
  doc["result"] = std::move(result);
  write_output(cfg, doc.dump(2) + "\n");
  std::cerr << "wall time: " << ar::report::float_text(ms) << " ms\n";
}

std::vector<std::size_t> orders(const RunConfig& cfg) {
  if (cfg.n && !cfg.n_range.empty()) throw ar::UsageError("give either --n or --n-range, not both");
  if (cfg.n) return {*cfg.n};
  if (cfg.n_range.empty()) throw ar::UsageError("--n or --n-range is required");
  auto r = ar::parse_range(cfg.n_range);
  std::vector<std::size_t> out;
  for (const auto& q : r.points()) {
    if (q.get_den() != 1 || q < 1) throw ar::UsageError("--n-range must contain positive integers");
    out.push_back(q.get_num().get_ui());
  }
  return out;
}

std::size_t k_or_default(const RunConfig& cfg) { return cfg.k.value_or(2); }

/// Rejects infeasible enumeration sizes before any work starts.
void check_guards(const RunConfig& cfg, std::size_t k, const std::vector<std::size_t>& ns) {
  for (auto n : ns) {
    if (n <= k) throw ar::UsageError("n=" + std::to_string(n) + " must exceed k=" + std::to_string(k));
    ar::check_enumeration_guard(static_cast<int>(n), cfg.enumeration());
  }
}

Json single_or_list(std::vector<Json> items) {
  if (items.size() == 1) return std::move(items.front());
  Json arr = Json::array();
  for (auto& j : items) arr.push_back(std::move(j));
  return arr;
}

int cmd_randic(const RunConfig& cfg) {
  Clock clock;
  auto graphs = ar::read_graphs(read_input(cfg.input));
  if (cfg.format == "csv") {
    std::string out = "index,graph6,n,m,R_exact,R_decimal,gap_exact,gap_decimal,asymmetric_edges\n";
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      auto r = ar::randic(graphs[i]);
      out += std::to_string(i) + "," + ar::write_graph6(graphs[i]) + "," + std::to_string(graphs[i].order()) + "," +
             std::to_string(graphs[i].size()) + ",\"" + r.value.to_string() + "\"," + ar::to_decimal(r.value) +
             ",\"" + r.gap.to_string() + "\"," + ar::to_decimal(r.gap) + "," +
             std::to_string(r.spectrum.asymmetric()) + "\n";
    }
    write_output(cfg, out);
    return kHolds;
  }
  Json arr = Json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    Json e{{"index", i}};
    e.update(ar::report::randic_entry(graphs[i]));
    arr.push_back(std::move(e));
  }
  emit_json(cfg, Json{{"graphs", arr}}, clock);
  return kHolds;
}

int cmd_apex(const RunConfig& cfg) {
  Clock clock;
  auto graphs = ar::read_graphs(read_input(cfg.input));
  Json arr = Json::array();
  bool failed = false;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    Json e{{"index", i}, {"graph6", ar::write_graph6(graphs[i])}, {"n", graphs[i].order()}};
    try {
      e.update(ar::report::apex_entry(ar::apex_number(graphs[i])));
    } catch (const ar::DomainError& err) {
      e["error"] = err.what();
      failed = true;
    }
    arr.push_back(std::move(e));
  }
  if (cfg.format == "csv") {
    std::string out = "index,graph6,n,k,witness,residual_graph6,error\n";
    for (const auto& e : arr) {
      std::string witness;
      if (e.contains("witness")) {
        for (const auto& v : e["witness"]) witness += (witness.empty() ? "" : " ") + std::to_string(v.get<unsigned>());
      }
      out += std::to_string(e["index"].get<std::size_t>()) + "," + e["graph6"].get<std::string>() + "," +
             std::to_string(e["n"].get<std::size_t>()) + "," +
             (e.contains("k") ? std::to_string(e["k"].get<std::size_t>()) : "") + "," + witness + "," +
             (e.contains("residual_graph6") ? e["residual_graph6"].get<std::string>() : "") + "," +
             (e.contains("error") ? "\"" + e["error"].get<std::string>() + "\"" : "") + "\n";
    }
    write_output(cfg, out);
  } else {
    emit_json(cfg, Json{{"graphs", arr}}, clock);
  }
  return failed ? kViolation : kHolds;
}

int cmd_audit(const RunConfig& cfg) {
  Clock clock;
  if (cfg.format == "csv") throw ar::UsageError("audit reports are JSON only");
  auto opt = cfg.enumeration();

  if (auto lemma = ar::parse_lemma_name(cfg.claim)) {
    ar::LemmaGrid grid = ar::default_lemma_grid(*lemma);
    if (!cfg.grid.empty()) grid.x = ar::parse_range(cfg.grid);
    if (!cfg.param.empty()) {
      if (ar::lemma_param_name(*lemma).empty()) throw ar::UsageError(cfg.claim + " has no second parameter");
      grid.param = ar::parse_range(cfg.param);
    }
    auto audit = ar::audit_lemma(*lemma, grid);
    emit_json(cfg, ar::report::lemma_audit(audit), clock);
    return audit.holds() ? kHolds : kViolation;
  }

  std::size_t k = k_or_default(cfg);
  if (k < 2) throw ar::UsageError("--k must be at least 2 for " + cfg.claim);
  auto ns = orders(cfg);
  std::vector<Json> results;
  bool holds = true;

  if (cfg.claim == "family") {
    for (auto n : ns) {
      auto c = ar::construct_member(k, n, opt);
      holds = holds && c.found();
      results.push_back(ar::report::construction(k, n, c));
    }
  } else if (cfg.claim == "theorem1") {
    check_guards(cfg, k, ns);
    for (auto n : ns) {
      auto a = ar::audit_nonregularity(k, n, opt);
      holds = holds && a.theorem_consistent;
      results.push_back(ar::report::nonregularity(a));
    }
  } else if (cfg.claim == "corollary1") {
    check_guards(cfg, k, ns);
    for (auto n : ns) {
      auto r = ar::check_corollary_gap2(k, n, opt);
      holds = holds && r.holds();
      results.push_back(ar::report::verification(r));
    }
  } else if (cfg.claim == "corollary2") {
    check_guards(cfg, k, ns);
    std::vector<std::size_t> ms;
    if (cfg.m) {
      if (*cfg.m < 2 || *cfg.m > k + 2) {
        throw ar::UsageError("--m " + std::to_string(*cfg.m) + " outside [2, k+2] = [2, " + std::to_string(k + 2) + "]");
      }
      ms.push_back(*cfg.m);
    } else {
      for (std::size_t m = 2; m <= k + 2; ++m) ms.push_back(m);
    }
    for (auto n : ns) {
      for (auto m : ms) {
        auto r = ar::check_corollary_many_asym(k, n, m, opt);
        holds = holds && r.holds();
        results.push_back(ar::report::verification(r));
      }
    }
  } else if (cfg.claim == "conjecture") {
    for (auto n : ns) {
      if (n < ar::family_min_order(k)) {
        throw ar::UsageError("the conjecture needs n >= 4k-1 = " + std::to_string(ar::family_min_order(k)));
      }
    }
    check_guards(cfg, k, ns);
    for (auto n : ns) {
      auto r = ar::verify_conjecture(k, n, opt);
      holds = holds && r.conjecture_holds();
      results.push_back(ar::report::conjecture(r));
    }
  } else {
    throw ar::UsageError("unknown claim '" + cfg.claim +
                         "' (expected lemma2..lemma6, theorem1, corollary1, corollary2, conjecture, family)");
  }
  emit_json(cfg, single_or_list(std::move(results)), clock);
  return holds ? kHolds : kViolation;
}

int cmd_scan_plot(const RunConfig& cfg) {
  Clock clock;
  std::size_t k = k_or_default(cfg);
  if (k < 1) throw ar::UsageError("--k must be at least 1");
  if (cfg.n_range.empty()) throw ar::UsageError("scan-plot needs --n-range");
  auto ns = orders(cfg);
  check_guards(cfg, k, ns);
  struct Row {
    std::size_t n, count;
    std::string max_r, extremal, gap, conjecture;
    bool in_scope;
  };
  std::vector<Row> rows;
  for (auto n : ns) {
    auto s = ar::scan_max_randic(k, n, cfg.enumeration());
    auto ext = ar::extremal_value(static_cast<long>(n));
    Row row{n, s.scanned, "", ar::to_decimal(ext), "", "n/a", k >= 2 && n >= ar::family_min_order(k)};
    if (s.max_value) {
      row.max_r = ar::to_decimal(*s.max_value);
      row.gap = ar::to_decimal(ext - *s.max_value);
    }
    if (row.in_scope) row.conjecture = k >= 2 ? (ar::verify_conjecture(k, n, cfg.enumeration()).conjecture_holds() ? "holds" : "fails") : "n/a";
    rows.push_back(std::move(row));
  }
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n}, {"count", r.count}, {"max_R", r.max_r}, {"extremal_value", r.extremal},
                     {"gap_to_bound", r.gap}, {"in_scope", r.in_scope}, {"conjecture", r.conjecture}});
    }
    emit_json(cfg, Json{{"k", k}, {"rows", arr}}, clock);
    return kHolds;
  }
  std::string out = "n,count,max_R,extremal_value,gap_to_bound,in_scope,conjecture\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.count) + "," + r.max_r + "," + r.extremal + "," + r.gap + "," +
           (r.in_scope ? "true" : "false") + "," + r.conjecture + "\n";
  }
  write_output(cfg, out);
  return kHolds;
}

int cmd_enumerate(const RunConfig& cfg) {
  Clock clock;
  if (!cfg.n) throw ar::UsageError("enumerate needs --n");
  int n = static_cast<int>(*cfg.n);
  auto opt = cfg.enumeration();
  std::vector<ar::PackedCode> codes;
  Json summary;
  if (cfg.k) {
    int k = static_cast<int>(*cfg.k);
    if (cfg.strategy == "both") {
      auto s = ar::count_cross_check(k, n, opt);
      summary = ar::report::summary(s);
      codes = ar::k_apex_tree_codes(k, n, ar::ApexStrategy::FilterConnected, opt);
    } else {
      auto strat = cfg.strategy == "B" ? ar::ApexStrategy::AttachToTrees : ar::ApexStrategy::FilterConnected;
      codes = ar::k_apex_tree_codes(k, n, strat, opt);
      summary = ar::report::summary({n, "apex=" + std::to_string(k), codes.size(), 0, ar::strategy_name(strat)});
    }
  } else {
    codes = ar::connected_graph_codes(n, opt);
    summary = ar::report::summary({n, "connected", codes.size(), 0, "canonical-augmentation"});
  }
  if (cfg.format == "json") {
    emit_json(cfg, summary, clock);
    return kHolds;
  }
  std::string out;
  out.reserve(codes.size() * static_cast<std::size_t>(n + 2));
  for (auto c : codes) {
    out += ar::packed_graph6(n, c);
    out += '\n';
  }
  write_output(cfg, out);
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Exact Randic index, apex numbers and claim audits for k-apex trees"};
  app.set_version_flag("--version", std::string(ar::report::kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--jobs", cfg.jobs, "Worker threads (default: $APEXRANDIC_JOBS or hardware threads)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format: json or csv (enumerate: graph6 or json)")
      ->check(CLI::IsMember({"json", "csv", "graph6"}));
  app.add_option("--output", cfg.output, "Write the report to PATH instead of stdout");
  app.add_flag("--allow-large", cfg.allow_large, "Lift the default enumeration guards");
  app.add_flag("--timing", cfg.timing, "Embed wall time in JSON reports (breaks byte-identity across runs)");

  auto* randic = app.add_subcommand("randic", "Exact Randic index of each input graph");
  auto* apex = app.add_subcommand("apex", "Apex number with witness and residual tree");
  for (auto* sub : {randic, apex}) sub->add_option("--input", cfg.input, "graph6 or edge-list file ('-' = stdin)");

  auto* audit = app.add_subcommand("audit", "Audit one claim over a parameter range");
  audit->add_option("claim", cfg.claim, "lemma2..lemma6, theorem1, corollary1, corollary2, conjecture, family")
      ->required();
  audit->add_option("--grid", cfg.grid, "Lemma x range lo..hi[:step]");
  audit->add_option("--param", cfg.param, "Lemma second-parameter range (a or m)");
  audit->add_option("--m", cfg.m, "corollary2 parameter (default: every m in [2, k+2])");

  auto* scan = app.add_subcommand("scan-plot", "Per-order maximum R versus the conjectured bound");
  auto* enumerate = app.add_subcommand("enumerate", "Connected graphs or k-apex trees of order n");
  enumerate->add_option("--strategy", cfg.strategy, "k-apex strategy: A (filter), B (attach to trees), both")
      ->check(CLI::IsMember({"A", "B", "both"}));

  for (auto* sub : {audit, scan, enumerate}) {
    sub->add_option("--k", cfg.k, "Apex number k");
    sub->add_option("--n", cfg.n, "Order n");
    sub->add_option("--n-range", cfg.n_range, "Order range lo..hi");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (randic->parsed()) {
      cfg.command = "randic";
      if (cfg.format.empty()) cfg.format = "json";
      return cmd_randic(cfg);
    }
    if (apex->parsed()) {
      cfg.command = "apex";
      if (cfg.format.empty()) cfg.format = "json";
      return cmd_apex(cfg);
    }
    if (audit->parsed()) {
      cfg.command = "audit";
      if (cfg.format.empty()) cfg.format = "json";
      return cmd_audit(cfg);
    }
    if (scan->parsed()) {
      cfg.command = "scan-plot";
      if (cfg.format.empty()) cfg.format = "csv";
      if (cfg.format == "graph6") throw ar::UsageError("scan-plot emits csv or json");
      return cmd_scan_plot(cfg);
    }
    if (enumerate->parsed()) {
      cfg.command = "enumerate";
      if (cfg.format.empty()) cfg.format = "graph6";
      if (cfg.format == "csv") throw ar::UsageError("enumerate emits graph6 or json");
      return cmd_enumerate(cfg);
    }
  } catch (const ar::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ar::GuardError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kUsage;
  } catch (const ar::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ar::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return kUsage;
}
