#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "wcolkit/graph_io.hpp"
#include "wcolkit/minor_model.hpp"

namespace wcolkit {

namespace detail {

inline int parse_keyed(const std::string& token, const std::string& key, int line, bool allow_inf) {
  if (token.rfind(key + "=", 0) != 0) format_error(line, "expected '" + key + "=<value>'");
  const std::string value = token.substr(key.size() + 1);
  if (allow_inf && value == "inf") return kUnboundedDepth;
  const long long v = parse_integer(value, line);
  if (v < 0) format_error(line, "negative " + key);
  return static_cast<int>(v);
}

}  // namespace detail

/// Model file:
///   model <|V(H)|> c=<c> d=<d|inf>
///   <u> : <v1> <v2> ...      (one line per H-vertex)
///   he <u> <v>               (H edges)
/// The host graph is supplied separately.
inline MinorModel read_model(std::istream& in, const Graph& host) {
  const auto lines = detail::tokenize_lines(in);
  if (lines.empty()) throw Error("format", "missing 'model' header");
  const auto& header = lines.front();
  if (header.tokens.size() != 4 || header.tokens[0] != "model")
    detail::format_error(header.number, "expected 'model <h> c=<c> d=<d>'");
  const long long h = detail::parse_integer(header.tokens[1], header.number);
  if (h < 0) detail::format_error(header.number, "negative H size");

  MinorModel m;
  m.host = host;
  m.pattern = Graph(static_cast<int>(h));
  m.congestion = detail::parse_keyed(header.tokens[2], "c", header.number, false);
  m.depth = detail::parse_keyed(header.tokens[3], "d", header.number, true);
  m.branch_sets.assign(static_cast<std::size_t>(h), {});
  std::vector<char> seen(static_cast<std::size_t>(h), 0);

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] == "he") {
      if (line.tokens.size() != 3) detail::format_error(line.number, "expected 'he <u> <v>'");
      const Vertex u = detail::parse_vertex(line.tokens[1], line.number, static_cast<int>(h));
      const Vertex v = detail::parse_vertex(line.tokens[2], line.number, static_cast<int>(h));
      if (u == v) detail::format_error(line.number, "loop in H");
      if (!m.pattern.add_edge(u, v)) detail::format_error(line.number, "duplicate H edge");
      continue;
    }
    if (line.tokens.size() < 2 || line.tokens[1] != ":") detail::format_error(line.number, "expected '<u> : <vertices>'");
    const Vertex u = detail::parse_vertex(line.tokens[0], line.number, static_cast<int>(h));
    if (seen[static_cast<std::size_t>(u)]) detail::format_error(line.number, "H-vertex listed twice");
    seen[static_cast<std::size_t>(u)] = 1;
    VertexSet set;
    for (std::size_t j = 2; j < line.tokens.size(); ++j)
      set.push_back(detail::parse_vertex(line.tokens[j], line.number, host.vertex_count()));
    m.branch_sets[static_cast<std::size_t>(u)] = normalized(std::move(set));
  }
  return m;
}

inline void write_model(std::ostream& out, const MinorModel& m) {
  out << "model " << m.pattern.vertex_count() << " c=" << m.congestion << " d=";
  if (m.depth == kUnboundedDepth) {
    out << "inf";
  } else {
    out << m.depth;
  }
  out << '\n';
  for (std::size_t u = 0; u < m.branch_sets.size(); ++u) {
    out << u << " :";
    for (Vertex v : m.branch_sets[u]) out << ' ' << v;
    out << '\n';
  }
  for (const Edge& e : m.pattern.edges()) out << "he " << e.u << ' ' << e.v << '\n';
}

inline MinorModel load_model(const std::string& path, const Graph& host) {
  auto in = detail::open_input(path);
  return read_model(in, host);
}

}  // namespace wcolkit
