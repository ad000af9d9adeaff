#ifndef LEXGRAPH_CATEGORY_HPP
#define LEXGRAPH_CATEGORY_HPP

#include <optional>
#include <string>
#include <vector>

#include "lexgraph/graph.hpp"
#include "lexgraph/path_order.hpp"

// Object-membership predicates for the categories the library works with.
//
// FinGraphEo, FinGraphLex and FinGraphShortLex share their objects (finite
// connected pointed edge-ordered graphs) and differ only in morphisms, so as
// object predicates they coincide.

namespace lexgraph {

enum class CategoryKind {
  FinGraphEo,
  FinGraphLex,
  FinGraphShortLex,
  LexGraph,
  FinArb,
  TLexGraph,
  TArb,
  FinLoset,
};

inline const char* to_string(CategoryKind k) {
  switch (k) {
    case CategoryKind::FinGraphEo: return "fingrapheo";
    case CategoryKind::FinGraphLex: return "fingraphlex";
    case CategoryKind::FinGraphShortLex: return "fingraphshortlex";
    case CategoryKind::LexGraph: return "lexgraph";
    case CategoryKind::FinArb: return "finarb";
    case CategoryKind::TLexGraph: return "tlexgraph";
    case CategoryKind::TArb: return "tarb";
    case CategoryKind::FinLoset: return "finloset";
  }
  return "?";
}

// Transitivity of the edge relation. Self-loops are outside the carrier, so
// the condition is only required for distinct endpoints.
inline bool is_transitive(const EdgeOrderedGraph& g) {
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v : g.out(u))
      for (Vertex w : g.out(v))
        if (w != u && !g.has_edge(u, w)) return false;
  return true;
}

namespace detail {

inline std::optional<std::string> check_connected(const EdgeOrderedGraph& g) {
  auto seen = reachable_from(g, g.point());
  for (Vertex v = 0; v < g.size(); ++v)
    if (!seen[v])
      return "vertex '" + g.name(v) + "' is not reachable from the point";
  return std::nullopt;
}

inline std::optional<std::string> check_arborescence(
    const EdgeOrderedGraph& g) {
  if (auto r = check_connected(g)) return r;
  std::vector<int> indeg(g.size(), 0);
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v : g.out(u)) ++indeg[v];
  for (Vertex v = 0; v < g.size(); ++v) {
    int want = v == g.point() ? 0 : 1;
    if (indeg[v] != want)
      return "vertex '" + g.name(v) + "' has in-degree " +
             std::to_string(indeg[v]);
  }
  return std::nullopt;
}

// Per-vertex test that the out-edge order agrees with the lexicographic
// order on least paths.
inline std::optional<std::string> check_lex_graph(const EdgeOrderedGraph& g) {
  if (auto r = check_connected(g)) return r;
  for (Vertex u = 0; u < g.size(); ++u) {
    const auto& row = g.out(u);
    if (row.size() < 2) continue;
    auto mins = min_paths_from(g, u, SearchMode::Dfs);
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      if (compare_lex(g, *mins[row[i]], *mins[row[i + 1]]) !=
          PathComparison::Less)
        return "edge order at '" + g.name(u) +
               "' disagrees with the least-path order between '" +
               g.name(row[i]) + "' and '" + g.name(row[i + 1]) + "'";
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> check_transitive(const EdgeOrderedGraph& g) {
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v : g.out(u))
      for (Vertex w : g.out(v))
        if (w != u && !g.has_edge(u, w))
          return "edge relation is not transitive: " + g.name(u) + " -> " +
                 g.name(v) + " -> " + g.name(w) + " but no " + g.name(u) +
                 " -> " + g.name(w);
  return std::nullopt;
}

// Topological order of a DAG, or nullopt if g has a directed cycle.
inline std::optional<std::vector<Vertex>> topological_order(
    const EdgeOrderedGraph& g) {
  std::vector<int> indeg(g.size(), 0);
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v : g.out(u)) ++indeg[v];
  std::vector<Vertex> order;
  for (Vertex v = 0; v < g.size(); ++v)
    if (indeg[v] == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex v : g.out(order[i]))
      if (--indeg[v] == 0) order.push_back(v);
  if (static_cast<int>(order.size()) != g.size()) return std::nullopt;
  return order;
}

// Length of the longest path from the point to each vertex. Requires a
// connected DAG.
inline std::vector<int> longest_depths(const EdgeOrderedGraph& g,
                                       const std::vector<Vertex>& topo) {
  std::vector<int> depth(g.size(), 0);
  for (Vertex u : topo)
    for (Vertex v : g.out(u)) depth[v] = std::max(depth[v], depth[u] + 1);
  return depth;
}

// The subgraph of edges lying on longest paths from the point, with
// inherited edge order. For transitive closures of arborescences this
// recovers the original tree.
inline EdgeOrderedGraph longest_path_subgraph(const EdgeOrderedGraph& g,
                                              const std::vector<int>& depth) {
  std::vector<std::vector<Vertex>> adj(g.size());
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v : g.out(u))
      if (depth[u] + 1 == depth[v]) adj[u].push_back(v);
  return EdgeOrderedGraph(g.names(), g.point(), adj);
}

inline std::optional<std::string> check_transitive_arborescence(
    const EdgeOrderedGraph& g) {
  if (auto r = check_connected(g)) return r;
  auto topo = topological_order(g);
  if (!topo) return "graph has a directed cycle";
  auto depth = longest_depths(g, *topo);
  auto tree = longest_path_subgraph(g, depth);
  if (auto r = check_arborescence(tree))
    return "longest-path edges do not form an arborescence: " + *r;

  // The edge relation must be exactly the transitive closure of the tree.
  for (Vertex u = 0; u < g.size(); ++u) {
    auto reach = reachable_from(tree, u);
    for (Vertex v = 0; v < g.size(); ++v) {
      bool closure_edge = v != u && reach[v];
      if (closure_edge && !g.has_edge(u, v))
        return "missing transitive-closure edge " + g.name(u) + " -> " +
               g.name(v);
      if (!closure_edge && g.has_edge(u, v))
        return "edge " + g.name(u) + " -> " + g.name(v) +
               " is not in the transitive closure of the longest-path tree";
    }
  }

  // Out-edge order must be shortlex on the unique tree paths from the point.
  std::vector<Vertex> parent(g.size(), -1);
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v : tree.out(u)) parent[v] = u;
  parent[g.point()] = g.point();
  std::vector<Path> root_path(g.size());
  for (Vertex v = 0; v < g.size(); ++v)
    root_path[v] = path_from_parents(parent, g.point(), v);
  for (Vertex u = 0; u < g.size(); ++u) {
    const auto& row = g.out(u);
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      if (compare_shortlex(tree, root_path[row[i]], root_path[row[i + 1]]) !=
          PathComparison::Less)
        return "edge order at '" + g.name(u) +
               "' disagrees with shortlex on tree paths between '" +
               g.name(row[i]) + "' and '" + g.name(row[i + 1]) + "'";
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> check_star(const EdgeOrderedGraph& g) {
  for (Vertex u = 0; u < g.size(); ++u) {
    if (u == g.point()) continue;
    if (!g.out(u).empty())
      return "non-point vertex '" + g.name(u) + "' has out-edges";
    if (!g.has_edge(g.point(), u))
      return "no edge from the point to '" + g.name(u) + "'";
  }
  return std::nullopt;
}

}  // namespace detail

// First violated membership condition for k, or nullopt if g is an object
// of k.
inline std::optional<std::string> check_object(const EdgeOrderedGraph& g,
                                               CategoryKind k) {
  switch (k) {
    case CategoryKind::FinGraphEo:
    case CategoryKind::FinGraphLex:
    case CategoryKind::FinGraphShortLex:
      return detail::check_connected(g);
    case CategoryKind::LexGraph:
      return detail::check_lex_graph(g);
    case CategoryKind::FinArb:
      return detail::check_arborescence(g);
    case CategoryKind::TLexGraph:
      if (auto r = detail::check_lex_graph(g)) return r;
      return detail::check_transitive(g);
    case CategoryKind::TArb:
      return detail::check_transitive_arborescence(g);
    case CategoryKind::FinLoset:
      return detail::check_star(g);
  }
  return "unknown category";
}

inline bool is_object_of(const EdgeOrderedGraph& g, CategoryKind k) {
  return !check_object(g, k).has_value();
}

}  // namespace lexgraph

#endif  // LEXGRAPH_CATEGORY_HPP
