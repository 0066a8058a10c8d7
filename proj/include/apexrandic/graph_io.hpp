#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "apexrandic/graph.hpp"

namespace apexrandic {

namespace detail {

inline constexpr int kGraph6Bias = 63;

inline void append_graph6_order(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Bias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63U) + kGraph6Bias));
    }
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63U) + kGraph6Bias));
    }
  }
}

/// Packs a bit stream MSB-first into printable graph6 characters.
class Graph6BitWriter {
 public:
  explicit Graph6BitWriter(std::string& out) : out_(out) {}
  void push(bool b) {
    acc_ = static_cast<unsigned>((acc_ << 1) | (b ? 1U : 0U));
    if (++filled_ == 6) flush_char();
  }
  void finish() {
    if (filled_ == 0) return;
    acc_ <<= (6 - filled_);
    flush_char();
  }

 private:
  void flush_char() {
    out_.push_back(static_cast<char>(acc_ + kGraph6Bias));
    acc_ = 0;
    filled_ = 0;
  }
  std::string& out_;
  unsigned acc_ = 0;
  int filled_ = 0;
};

inline int graph6_value(std::string_view text, std::size_t pos) {
  auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("graph6: character out of range at byte " + std::to_string(pos), pos);
  }
  return c - kGraph6Bias;
}

}  // namespace detail

inline std::string write_graph6(const Graph& g) {
  std::string out;
  detail::append_graph6_order(out, g.order());
  detail::Graph6BitWriter bits(out);
  for (Vertex j = 1; j < g.order(); ++j) {
    auto nb = g.neighbors(j);
    auto it = nb.begin();
    for (Vertex i = 0; i < j; ++i) {
      while (it != nb.end() && *it < i) ++it;
      bits.push(it != nb.end() && *it == i);
    }
  }
  bits.finish();
  return out;
}

/// Parses one graph6 record (an optional ">>graph6<<" header and a trailing
/// newline are accepted). Errors carry the byte offset of the problem.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.size() <= base) throw ParseError("graph6: empty record", base);

  std::size_t pos = base;
  std::size_t n = 0;
  if (text[pos] != '~') {
    n = static_cast<std::size_t>(detail::graph6_value(text, pos));
    pos += 1;
  } else {
    std::size_t digits = 3;
    pos += 1;
    if (pos < text.size() && text[pos] == '~') {
      digits = 6;
      pos += 1;
    }
    if (text.size() < pos + digits) throw ParseError("graph6: truncated vertex count", text.size());
    for (std::size_t i = 0; i < digits; ++i) {
      n = (n << 6) | static_cast<std::size_t>(detail::graph6_value(text, pos + i));
    }
    pos += digits;
  }
  if (n == 0) throw ParseError("graph6: empty graph (n=0) is not supported", base);

  std::size_t bits = n * (n - 1) / 2;
  std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) + " edge bytes for n=" +
                         std::to_string(n) + ", found " + std::to_string(text.size() - pos),
                     std::min(text.size(), pos + expected));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      std::size_t at = pos + k / 6;
      int value = detail::graph6_value(text, at);
      if ((value >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (bits % 6 != 0) {
    std::size_t at = text.size() - 1;
    int value = detail::graph6_value(text, at);
    int pad = static_cast<int>(6 - bits % 6);
    if ((value & ((1 << pad) - 1)) != 0) {
      throw ParseError("graph6: nonzero padding bits at byte " + std::to_string(at), at);
    }
  }
  return Graph(n, std::move(edges));
}

/// "n m" header then m lines "u v"; 0-based labels.
inline std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

namespace detail {

inline std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
  return line;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    if (nl == std::string_view::npos) {
      lines.push_back(text);
      break;
    }
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  for (auto& l : lines) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  }
  return lines;
}

inline std::vector<std::size_t> parse_numbers(std::string_view line, std::size_t lineno) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() ||
        (ptr != line.data() + line.size() && !std::isspace(static_cast<unsigned char>(*ptr)))) {
      throw ParseError("edge list: expected non-negative integers on line " +
                           std::to_string(lineno),
                       lineno);
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace detail

/// One or more consecutive edge-list blocks. ParseError positions are 1-based line numbers.
inline std::vector<Graph> parse_edge_lists(std::string_view text) {
  std::vector<Graph> graphs;
  auto lines = detail::split_lines(text);
  std::size_t i = 0;
  auto next_content = [&]() -> std::optional<std::pair<std::size_t, std::string_view>> {
    while (i < lines.size()) {
      auto body = detail::strip_comment(lines[i]);
      ++i;
      if (!body.empty()) return std::pair{i, body};
    }
    return std::nullopt;
  };
  while (auto header = next_content()) {
    auto [hline, hbody] = *header;
    auto nm = detail::parse_numbers(hbody, hline);
    if (nm.size() != 2) throw ParseError("edge list: header must be \"n m\" on line " + std::to_string(hline), hline);
    auto [n, m] = std::pair{nm[0], nm[1]};
    if (n == 0) throw ParseError("edge list: empty graph (n=0) on line " + std::to_string(hline), hline);
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t e = 0; e < m; ++e) {
      auto row = next_content();
      if (!row) throw ParseError("edge list: expected " + std::to_string(m) + " edges after line " + std::to_string(hline), lines.size());
      auto [eline, ebody] = *row;
      auto uv = detail::parse_numbers(ebody, eline);
      if (uv.size() != 2) throw ParseError("edge list: expected \"u v\" on line " + std::to_string(eline), eline);
      if (uv[0] >= n || uv[1] >= n) throw ParseError("edge list: vertex out of range on line " + std::to_string(eline), eline);
      if (uv[0] == uv[1]) throw ParseError("edge list: self-loop on line " + std::to_string(eline), eline);
      edges.push_back({static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])});
    }
    try {
      graphs.emplace_back(n, std::move(edges));
    } catch (const UsageError& err) {
      throw ParseError(std::string("edge list: ") + err.what() + " in block starting on line " + std::to_string(hline), hline);
    }
  }
  return graphs;
}

enum class InputFormat { Graph6, EdgeList };

/// Lines starting with a digit or '#' select the edge-list format, otherwise graph6.
inline InputFormat detect_format(std::string_view text) {
  for (auto line : detail::split_lines(text)) {
    if (line.empty()) continue;
    auto c = static_cast<unsigned char>(line.front());
    return (std::isdigit(c) || c == '#') ? InputFormat::EdgeList : InputFormat::Graph6;
  }
  return InputFormat::Graph6;
}

/// Reads every graph in `text`. ParseError messages name the 1-based line.
inline std::vector<Graph> read_graphs(std::string_view text) {
  if (detect_format(text) == InputFormat::EdgeList) return parse_edge_lists(text);
  std::vector<Graph> graphs;
  std::size_t lineno = 0;
  for (auto line : detail::split_lines(text)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const ParseError& err) {
      throw ParseError("line " + std::to_string(lineno) + ": " + err.what(), lineno);
    }
  }
  return graphs;
}

}  // namespace apexrandic
