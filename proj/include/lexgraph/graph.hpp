#ifndef LEXGRAPH_GRAPH_HPP
#define LEXGRAPH_GRAPH_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

// Finite, pointed, edge-ordered directed graphs.
//
// Vertices are interned: every vertex of a graph is identified by a dense
// index into the graph's name table. Derived graphs (trees, closures) keep
// the name table of the graph they were built from, so a vertex index means
// the same vertex across a whole chain of constructions.
//
// The per-vertex out-edge order is the position in the adjacency list:
// out(u)[0] is the least out-edge of u.

namespace lexgraph {

using Vertex = int;

// A path is a nonempty vertex sequence; a single vertex is the empty path
// starting there. A linear order is a duplicate-free vertex sequence.
using Path = std::vector<Vertex>;
using LinearOrder = std::vector<Vertex>;

enum class errc {
  empty_graph,
  missing_point,
  unknown_vertex,
  self_loop,
  duplicate_edge,
  syntax,
  io,
  invalid_path,
  improper_path,
  not_co_initial,
  unreachable,
  enumeration_bound,
  not_connected,
  not_a_traversal,
  not_a_lex_graph,
  not_an_arborescence,
  not_a_transitive_arborescence,
  empty_order,
  not_a_morphism,
  wrong_category,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

// Raw, unvalidated description of a graph. Edge listing order per source
// defines the out-edge order (earlier = lesser).
struct RawGraph {
  std::vector<std::string> vertices;
  std::string point;
  std::vector<std::pair<std::string, std::string>> edges;
};

inline bool is_valid_vertex_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (c == '#' || std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

class EdgeOrderedGraph {
 public:
  // Builds a graph from interned data: names[i] is vertex i, adj[u] lists
  // the out-neighbors of u in increasing edge order. Enforces the structural
  // invariants (valid names, no self-loops, no duplicate edges).
  EdgeOrderedGraph(std::vector<std::string> names, Vertex point,
                   std::vector<std::vector<Vertex>> adj)
      : names_(std::move(names)), point_(point), adj_(std::move(adj)) {
    const int n = static_cast<int>(names_.size());
    if (n == 0) fail(errc::empty_graph, "graph has no vertices");
    if (point_ < 0 || point_ >= n)
      fail(errc::missing_point, "point is not a vertex of the graph");
    if (static_cast<int>(adj_.size()) != n)
      fail(errc::unknown_vertex, "adjacency table size mismatch");
    for (Vertex u = 0; u < n; ++u) {
      std::vector<bool> seen(n, false);
      for (Vertex v : adj_[u]) {
        if (v < 0 || v >= n)
          fail(errc::unknown_vertex, "edge target out of range");
        if (v == u)
          fail(errc::self_loop, "self-loop at vertex '" + names_[u] + "'");
        if (seen[v])
          fail(errc::duplicate_edge, "duplicate edge " + names_[u] + " -> " +
                                         names_[v]);
        seen[v] = true;
      }
    }
    for (int i = 0; i < n; ++i) {
      if (!is_valid_vertex_name(names_[i]))
        fail(errc::syntax, "invalid vertex name '" + names_[i] + "'");
      if (!index_.emplace(names_[i], i).second)
        fail(errc::duplicate_edge, "duplicate vertex name '" + names_[i] + "'");
    }
  }

  int size() const noexcept { return static_cast<int>(names_.size()); }
  Vertex point() const noexcept { return point_; }
  const std::string& name(Vertex v) const { return names_[v]; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  // Index of a named vertex, or -1.
  Vertex find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : it->second;
  }

  // Out-neighbors of u, least edge first.
  const std::vector<Vertex>& out(Vertex u) const { return adj_[u]; }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& row = adj_[u];
    return std::find(row.begin(), row.end(), v) != row.end();
  }

  // Position of v in u's out-edge order (0-based), or -1 if no such edge.
  int edge_rank(Vertex u, Vertex v) const {
    const auto& row = adj_[u];
    auto it = std::find(row.begin(), row.end(), v);
    return it == row.end() ? -1 : static_cast<int>(it - row.begin());
  }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (const auto& row : adj_) total += row.size();
    return total;
  }

  std::vector<std::vector<Vertex>> in_neighbors() const {
    std::vector<std::vector<Vertex>> in(size());
    for (Vertex u = 0; u < size(); ++u)
      for (Vertex v : adj_[u]) in[v].push_back(u);
    return in;
  }

 private:
  std::vector<std::string> names_;
  Vertex point_;
  std::vector<std::vector<Vertex>> adj_;
  std::unordered_map<std::string, Vertex> index_;
};

// Structural equality on named data: same vertex set, same point, same
// per-source out-edge sequences. Independent of internal index order.
inline bool operator==(const EdgeOrderedGraph& a, const EdgeOrderedGraph& b) {
  if (a.size() != b.size()) return false;
  if (a.name(a.point()) != b.name(b.point())) return false;
  for (Vertex u = 0; u < a.size(); ++u) {
    Vertex bu = b.find(a.name(u));
    if (bu < 0) return false;
    const auto& ra = a.out(u);
    const auto& rb = b.out(bu);
    if (ra.size() != rb.size()) return false;
    for (std::size_t i = 0; i < ra.size(); ++i)
      if (a.name(ra[i]) != b.name(rb[i])) return false;
  }
  return true;
}

inline bool operator!=(const EdgeOrderedGraph& a, const EdgeOrderedGraph& b) {
  return !(a == b);
}

// Checks a raw description and interns it. Vertex indices follow the
// declaration order of `vertices`.
inline EdgeOrderedGraph validate(const RawGraph& raw) {
  if (raw.vertices.empty()) fail(errc::empty_graph, "graph has no vertices");
  std::unordered_map<std::string, Vertex> index;
  for (const auto& name : raw.vertices) {
    if (!is_valid_vertex_name(name))
      fail(errc::syntax, "invalid vertex name '" + name + "'");
    if (!index.emplace(name, static_cast<Vertex>(index.size())).second)
      fail(errc::duplicate_edge, "duplicate vertex name '" + name + "'");
  }
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end())
      fail(errc::unknown_vertex, "unknown vertex '" + name + "'");
    return it->second;
  };
  if (raw.point.empty()) fail(errc::missing_point, "no point declared");
  Vertex point = lookup(raw.point);
  std::vector<std::vector<Vertex>> adj(raw.vertices.size());
  for (const auto& [src, dst] : raw.edges) {
    Vertex u = lookup(src);
    Vertex v = lookup(dst);
    if (u == v) fail(errc::self_loop, "self-loop at vertex '" + src + "'");
    if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end())
      fail(errc::duplicate_edge, "duplicate edge " + src + " -> " + dst);
    adj[u].push_back(v);
  }
  return EdgeOrderedGraph(raw.vertices, point, std::move(adj));
}

// Set of vertices reachable from `root` along directed edges.
inline std::vector<bool> reachable_from(const EdgeOrderedGraph& g,
                                        Vertex root) {
  std::vector<bool> seen(g.size(), false);
  std::vector<Vertex> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.out(u)) {
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

inline bool is_connected(const EdgeOrderedGraph& g) {
  auto seen = reachable_from(g, g.point());
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// True if p is a valid path in g: nonempty, and each consecutive pair an
// edge of g.
inline bool is_path(const EdgeOrderedGraph& g, const Path& p) {
  if (p.empty()) return false;
  for (Vertex v : p)
    if (v < 0 || v >= g.size()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1])) return false;
  return true;
}

// True if no vertex repeats.
inline bool is_proper(const Path& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] == p[j]) return false;
  return true;
}

inline std::string path_to_string(const EdgeOrderedGraph& g, const Path& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += g.name(p[i]);
  }
  out += ")";
  return out;
}

}  // namespace lexgraph

#endif  // LEXGRAPH_GRAPH_HPP
