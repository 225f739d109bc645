#pragma once

// Text formats.
//
//   edgelist:  one "u v" pair per line.
//   rotation:  one "v: n1 n2 ... nk" line per vertex, neighbors in clockwise order.
//
// Blank lines and lines starting with '#' are ignored in both formats.

#include <charconv>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lly/embedding.hpp"
#include "lly/graph.hpp"

namespace lly {

enum class InputFormat { edgelist, rotation };

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  /// 1-based offending line; 0 for whole-input failures such as disconnection.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParsedGraph {
  Graph graph;
  std::optional<RotationSystem> rotation;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline VertexId parse_id(std::string_view tok, std::size_t line) {
  VertexId v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0) {
    throw ParseError(line, "expected a nonnegative integer vertex id, got '" + std::string(tok) + "'");
  }
  return v;
}

inline bool skippable(std::string_view line) {
  auto toks = split_ws(line);
  return toks.empty() || toks.front().starts_with('#');
}

inline ParsedGraph parse_edgelist(std::istream& in) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::set<std::pair<VertexId, VertexId>> seen;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (skippable(line)) continue;
    auto toks = split_ws(line);
    if (toks.size() != 2) throw ParseError(number, "expected two vertex ids");
    VertexId u = parse_id(toks[0], number);
    VertexId v = parse_id(toks[1], number);
    if (u == v) throw ParseError(number, "self-loop on vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second) {
      throw ParseError(number, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw ParseError(0, "edge list is empty");
  try {
    return {Graph::from_edges(edges), std::nullopt};
  } catch (const GraphError& e) {
    throw ParseError(0, e.what());
  }
}

inline ParsedGraph parse_rotation(std::istream& in) {
  std::map<VertexId, std::pair<std::vector<VertexId>, std::size_t>> lists;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (skippable(line)) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(number, "expected 'v: n1 n2 ...'");
    auto head = split_ws(std::string_view(line).substr(0, colon));
    if (head.size() != 1) throw ParseError(number, "expected a single vertex id before ':'");
    VertexId v = parse_id(head.front(), number);
    std::vector<VertexId> cycle;
    std::set<VertexId> distinct;
    for (auto tok : split_ws(std::string_view(line).substr(colon + 1))) {
      VertexId u = parse_id(tok, number);
      if (u == v) throw ParseError(number, "self-loop on vertex " + std::to_string(v));
      if (!distinct.insert(u).second) {
        throw ParseError(number, "duplicate edge " + std::to_string(v) + " " + std::to_string(u));
      }
      cycle.push_back(u);
    }
    if (!lists.emplace(v, std::pair{std::move(cycle), number}).second) {
      throw ParseError(number, "vertex " + std::to_string(v) + " listed twice");
    }
  }
  if (lists.empty()) throw ParseError(0, "rotation file is empty");

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> vertices;
  for (const auto& [v, entry] : lists) {
    vertices.push_back(v);
    for (VertexId u : entry.first) {
      auto other = lists.find(u);
      bool symmetric = other != lists.end() &&
                       std::ranges::find(other->second.first, v) != other->second.first.end();
      if (!symmetric) {
        throw ParseError(entry.second, "asymmetric rotation: " + std::to_string(v) + " lists " +
                                           std::to_string(u) + " but not conversely");
      }
      if (v < u) edges.emplace_back(v, u);
    }
  }
  Graph g;
  try {
    g = Graph::from_edges(edges, vertices);
  } catch (const GraphError& e) {
    throw ParseError(0, e.what());
  }
  std::vector<std::vector<Vertex>> cyclic(g.vertex_count());
  for (const auto& [v, entry] : lists) {
    auto& cyc = cyclic[g.at(v)];
    for (VertexId u : entry.first) cyc.push_back(g.at(u));
  }
  RotationSystem rot(g, std::move(cyclic));
  return {std::move(g), std::move(rot)};
}

}  // namespace detail

/// Parses a graph; the rotation format also yields a RotationSystem.
/// Throws ParseError naming the offending line.
inline ParsedGraph parse_graph(std::istream& in, InputFormat format) {
  return format == InputFormat::edgelist ? detail::parse_edgelist(in) : detail::parse_rotation(in);
}

inline ParsedGraph parse_graph(std::string_view text, InputFormat format) {
  std::istringstream in{std::string(text)};
  return parse_graph(in, format);
}

inline std::string write_edgelist(const Graph& g) {
  std::ostringstream out;
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
  return out.str();
}

inline std::string write_rotation(const Graph& g, const RotationSystem& rot) {
  std::ostringstream out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << g.label(v) << ':';
    for (Vertex u : rot.cyclic(v)) out << ' ' << g.label(u);
    out << '\n';
  }
  return out.str();
}

}  // namespace lly
