#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "wcolkit/graph.hpp"

namespace wcolkit {

namespace detail {

/// Splits a stream into whitespace tokens per line, dropping blank lines and
/// lines whose first non-blank character is '#'.
struct TokenLine {
  int number = 0;
  std::vector<std::string> tokens;
};

inline std::vector<TokenLine> tokenize_lines(std::istream& in) {
  std::vector<TokenLine> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ss(raw);
    TokenLine line{number, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] inline void format_error(int line, const std::string& what) {
  throw Error("format", "line " + std::to_string(line) + ": " + what);
}

inline long long parse_integer(const std::string& token, int line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    format_error(line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) format_error(line, "expected an integer, got '" + token + "'");
  return value;
}

inline Vertex parse_vertex(const std::string& token, int line, int n) {
  const long long v = parse_integer(token, line);
  if (v < 0 || v >= n) format_error(line, "vertex " + token + " out of range");
  return static_cast<Vertex>(v);
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open '" + path + "'");
  return in;
}

}  // namespace detail

/// Reads the text graph format: `p <n> <m>`, m lines `e <u> <v>`, optional
/// `c <v> <color>` lines; `#` starts a comment line.
inline Graph read_graph(std::istream& in) {
  const auto lines = detail::tokenize_lines(in);
  if (lines.empty()) throw Error("format", "missing 'p <n> <m>' header");
  const auto& header = lines.front();
  if (header.tokens.size() != 3 || header.tokens[0] != "p")
    detail::format_error(header.number, "expected 'p <n> <m>'");
  const long long n = detail::parse_integer(header.tokens[1], header.number);
  const long long m = detail::parse_integer(header.tokens[2], header.number);
  if (n < 0 || m < 0) detail::format_error(header.number, "negative count");

  Graph g(static_cast<int>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const std::string& kind = line.tokens[0];
    if (kind == "e") {
      if (line.tokens.size() != 3) detail::format_error(line.number, "expected 'e <u> <v>'");
      const Vertex u = detail::parse_vertex(line.tokens[1], line.number, g.vertex_count());
      const Vertex v = detail::parse_vertex(line.tokens[2], line.number, g.vertex_count());
      if (u == v) detail::format_error(line.number, "loop at vertex " + line.tokens[1]);
      if (!g.add_edge(u, v)) detail::format_error(line.number, "duplicate edge");
    } else if (kind == "c") {
      if (line.tokens.size() != 3) detail::format_error(line.number, "expected 'c <v> <color>'");
      g.add_color(line.tokens[2], detail::parse_vertex(line.tokens[1], line.number, g.vertex_count()));
    } else {
      detail::format_error(line.number, "unknown record '" + kind + "'");
    }
  }
  if (g.edge_count() != m)
    throw Error("format", "header announces " + std::to_string(m) + " edges, found " +
                              std::to_string(g.edge_count()));
  return g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  for (const auto& [name, members] : g.colors())
    for (Vertex v : members) out << "c " << v << ' ' << name << '\n';
}

/// Reads whitespace-separated vertex ids forming a permutation of 0..n-1.
inline VertexOrdering read_ordering(std::istream& in, int expected_size = -1) {
  std::vector<Vertex> perm;
  for (const auto& line : detail::tokenize_lines(in))
    for (const auto& tok : line.tokens) perm.push_back(static_cast<Vertex>(detail::parse_integer(tok, line.number)));
  if (expected_size >= 0 && static_cast<int>(perm.size()) != expected_size)
    throw Error("format", "ordering has " + std::to_string(perm.size()) + " entries, graph has " +
                              std::to_string(expected_size) + " vertices");
  try {
    return VertexOrdering(std::move(perm));
  } catch (const Error& e) {
    throw Error("format", e.what());
  }
}

inline void write_ordering(std::ostream& out, const VertexOrdering& order) {
  for (int i = 0; i < order.size(); ++i) out << (i ? " " : "") << order.at(i);
  out << '\n';
}

/// Edge list: one `<u> <v>` (or `e <u> <v>`) per line.
inline std::vector<Edge> read_edge_list(std::istream& in, int n) {
  std::vector<Edge> edges;
  for (const auto& line : detail::tokenize_lines(in)) {
    std::size_t first = 0;
    if (line.tokens[0] == "e") first = 1;
    if (line.tokens.size() != first + 2) detail::format_error(line.number, "expected '<u> <v>'");
    const Vertex u = detail::parse_vertex(line.tokens[first], line.number, n);
    const Vertex v = detail::parse_vertex(line.tokens[first + 1], line.number, n);
    if (u == v) detail::format_error(line.number, "loop in edge list");
    edges.push_back(make_edge(u, v));
  }
  return edges;
}

inline void write_edge_list(std::ostream& out, std::span<const Edge> edges) {
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
}

inline Graph load_graph(const std::string& path) {
  auto in = detail::open_input(path);
  return read_graph(in);
}

inline VertexOrdering load_ordering(const std::string& path, int expected_size = -1) {
  auto in = detail::open_input(path);
  return read_ordering(in, expected_size);
}

inline std::vector<Edge> load_edge_list(const std::string& path, int n) {
  auto in = detail::open_input(path);
  return read_edge_list(in, n);
}

}  // namespace wcolkit
