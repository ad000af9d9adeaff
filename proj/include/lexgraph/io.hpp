#ifndef LEXGRAPH_IO_HPP
#define LEXGRAPH_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lexgraph/graph.hpp"
#include "lexgraph/morphism.hpp"

// Text formats.
//
// eog v1, line oriented:
//   eog 1
//   point <vertex>
//   edge <u> <v>        # one line per edge
// '#' starts a comment, blank lines are ignored, and the per-source listing
// order of the edge lines is the out-edge order (first = least).
//
// Vertex map files have one "<source-vertex> <target-vertex>" line per
// source vertex.

namespace lexgraph {

namespace detail {

inline std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : line) {
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

}  // namespace detail

inline EdgeOrderedGraph parse_eog(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  bool saw_point = false;
  RawGraph raw;
  auto declare = [&](const std::string& name) {
    for (const auto& v : raw.vertices)
      if (v == name) return;
    raw.vertices.push_back(name);
  };
  auto syntax = [&](const std::string& what) {
    fail(errc::syntax, "line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    if (!saw_header) {
      if (tokens.size() != 2 || tokens[0] != "eog" || tokens[1] != "1")
        syntax("expected 'eog 1' header");
      saw_header = true;
    } else if (tokens[0] == "point") {
      if (saw_point) syntax("duplicate 'point' line");
      if (tokens.size() != 2) syntax("expected 'point <vertex>'");
      saw_point = true;
      raw.point = tokens[1];
      declare(tokens[1]);
    } else if (tokens[0] == "edge") {
      if (!saw_point) syntax("'edge' line before 'point' line");
      if (tokens.size() != 3) syntax("expected 'edge <u> <v>'");
      declare(tokens[1]);
      declare(tokens[2]);
      raw.edges.emplace_back(tokens[1], tokens[2]);
    } else {
      syntax("unknown directive '" + tokens[0] + "'");
    }
  }
  if (!saw_header) fail(errc::syntax, "empty input, expected 'eog 1' header");
  if (!saw_point) fail(errc::missing_point, "no 'point' line");
  return validate(raw);
}

inline std::string emit_eog(const EdgeOrderedGraph& g) {
  // Vertices only appear through point/edge lines, so a graph with an
  // isolated non-point vertex has no eog representation.
  auto in = g.in_neighbors();
  for (Vertex v = 0; v < g.size(); ++v)
    if (v != g.point() && g.out(v).empty() && in[v].empty())
      fail(errc::io, "vertex '" + g.name(v) +
                         "' is isolated and cannot be written as eog");
  std::string out = "eog 1\npoint " + g.name(g.point()) + "\n";
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v : g.out(u))
      out += "edge " + g.name(u) + " " + g.name(v) + "\n";
  return out;
}

// DOT export: the point is double-circled and every edge is labeled with
// its 1-based rank in its source's out-edge order.
inline std::string emit_dot(const EdgeOrderedGraph& g) {
  std::string out = "digraph {\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    out += "  \"" + g.name(v) + "\"";
    if (v == g.point()) out += " [shape=doublecircle]";
    out += ";\n";
  }
  for (Vertex u = 0; u < g.size(); ++u) {
    const auto& row = g.out(u);
    for (std::size_t i = 0; i < row.size(); ++i)
      out += "  \"" + g.name(u) + "\" -> \"" + g.name(row[i]) +
             "\" [label=\"" + std::to_string(i + 1) + "\"];\n";
  }
  out += "}\n";
  return out;
}

inline VertexMap parse_vertex_map(std::string_view text,
                                  const EdgeOrderedGraph& src,
                                  const EdgeOrderedGraph& dst) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  VertexMap m;
  m.to.assign(src.size(), -1);
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      fail(errc::syntax, "line " + std::to_string(lineno) +
                             ": expected '<source-vertex> <target-vertex>'");
    Vertex s = src.find(tokens[0]);
    if (s < 0)
      fail(errc::unknown_vertex, "line " + std::to_string(lineno) +
                                     ": unknown source vertex '" + tokens[0] +
                                     "'");
    Vertex t = dst.find(tokens[1]);
    if (t < 0)
      fail(errc::unknown_vertex, "line " + std::to_string(lineno) +
                                     ": unknown target vertex '" + tokens[1] +
                                     "'");
    if (m.to[s] >= 0)
      fail(errc::syntax, "line " + std::to_string(lineno) +
                             ": vertex '" + tokens[0] + "' mapped twice");
    m.to[s] = t;
  }
  for (Vertex v = 0; v < src.size(); ++v)
    if (m.to[v] < 0)
      fail(errc::syntax, "no image for vertex '" + src.name(v) + "'");
  return m;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io, "cannot write '" + path + "'");
  out << text;
  if (!out) fail(errc::io, "error while writing '" + path + "'");
}

inline EdgeOrderedGraph parse_eog_file(const std::string& path) {
  return parse_eog(read_file(path));
}

}  // namespace lexgraph

#endif  // LEXGRAPH_IO_HPP
