#ifndef LEXGRAPH_FUNCTORS_HPP
#define LEXGRAPH_FUNCTORS_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lexgraph/category.hpp"
#include "lexgraph/graph.hpp"
#include "lexgraph/path_order.hpp"

// The object-level constructions: least-path trees, the two transitive
// closures, the longest-path tree, the point-neighborhood order, star
// graphs of linear orders, and the traversal pipelines built from them.
// All constructions keep the vertex names of their input.

namespace lexgraph {

// Keeps exactly the edges lying on some lex-least path from the point. The
// result is an arborescence with the inherited edge order.
inline EdgeOrderedGraph least_path_tree(const EdgeOrderedGraph& g) {
  auto parent = min_path_parents(g, g.point(), SearchMode::Dfs);
  std::vector<std::vector<Vertex>> adj(g.size());
  for (Vertex u = 0; u < g.size(); ++u) {
    if (parent[u] < 0)
      fail(errc::not_connected, "graph is not connected from its point");
    for (Vertex v : g.out(u))
      if (parent[v] == u) adj[u].push_back(v);
  }
  return EdgeOrderedGraph(g.names(), g.point(), adj);
}

// Keeps exactly the edges lying on some lex-least shortest path from the
// point; likewise an arborescence.
inline EdgeOrderedGraph least_shortest_path_tree(const EdgeOrderedGraph& g) {
  auto parent = min_path_parents(g, g.point(), SearchMode::Bfs);
  std::vector<std::vector<Vertex>> adj(g.size());
  for (Vertex u = 0; u < g.size(); ++u) {
    if (parent[u] < 0)
      fail(errc::not_connected, "graph is not connected from its point");
    for (Vertex v : g.out(u))
      if (parent[v] == u) adj[u].push_back(v);
  }
  return EdgeOrderedGraph(g.names(), g.point(), adj);
}

// Transitive closure of a lex-graph, with u's out-edges ordered by the
// lexicographic order on the least paths from u. Self-loops stay outside
// the edge relation, so a cycle through u contributes no edge u -> u.
inline EdgeOrderedGraph lex_transitive_closure(const EdgeOrderedGraph& g) {
  if (auto r = check_object(g, CategoryKind::LexGraph))
    fail(errc::not_a_lex_graph, *r);
  std::vector<std::vector<Vertex>> adj(g.size());
  for (Vertex u = 0; u < g.size(); ++u) {
    auto mins = min_paths_from(g, u, SearchMode::Dfs);
    for (Vertex v = 0; v < g.size(); ++v)
      if (v != u && mins[v]) adj[u].push_back(v);
    std::sort(adj[u].begin(), adj[u].end(), [&](Vertex a, Vertex b) {
      return compare_lex(g, *mins[a], *mins[b]) == PathComparison::Less;
    });
  }
  return EdgeOrderedGraph(g.names(), g.point(), adj);
}

// Transitive closure of an arborescence, with co-initial edges ordered by
// shortlex on the unique tree paths from the point.
inline EdgeOrderedGraph shortlex_transitive_closure(
    const EdgeOrderedGraph& t) {
  if (auto r = check_object(t, CategoryKind::FinArb))
    fail(errc::not_an_arborescence, *r);
  std::vector<Vertex> parent(t.size(), -1);
  for (Vertex u = 0; u < t.size(); ++u)
    for (Vertex v : t.out(u)) parent[v] = u;
  parent[t.point()] = t.point();
  std::vector<Path> root_path(t.size());
  for (Vertex v = 0; v < t.size(); ++v)
    root_path[v] = detail::path_from_parents(parent, t.point(), v);

  std::vector<std::vector<Vertex>> adj(t.size());
  for (Vertex u = 0; u < t.size(); ++u) {
    auto reach = reachable_from(t, u);
    for (Vertex v = 0; v < t.size(); ++v)
      if (v != u && reach[v]) adj[u].push_back(v);
    std::sort(adj[u].begin(), adj[u].end(), [&](Vertex a, Vertex b) {
      return compare_shortlex(t, root_path[a], root_path[b]) ==
             PathComparison::Less;
    });
  }
  return EdgeOrderedGraph(t.names(), t.point(), adj);
}

// Recovers the arborescence underlying a transitive arborescence: the edges
// on longest paths from the point, order inherited.
inline EdgeOrderedGraph longest_path_tree(const EdgeOrderedGraph& g) {
  if (auto r = check_object(g, CategoryKind::TArb))
    fail(errc::not_a_transitive_arborescence, *r);
  auto topo = detail::topological_order(g);
  auto depth = detail::longest_depths(g, *topo);
  return detail::longest_path_subgraph(g, depth);
}

// The linear order on the point and its out-neighborhood: point first, then
// the out-neighbors in edge order.
inline LinearOrder point_order(const EdgeOrderedGraph& g) {
  LinearOrder order{g.point()};
  for (Vertex v : g.out(g.point())) order.push_back(v);
  return order;
}

// Star graph of a linear order over vertices of `host`: the least element
// becomes the point, with one edge to every later element, in order.
inline EdgeOrderedGraph star_graph(const EdgeOrderedGraph& host,
                                   const LinearOrder& order) {
  if (order.empty()) fail(errc::empty_order, "empty linear order");
  std::vector<std::string> names;
  names.reserve(order.size());
  for (Vertex v : order) names.push_back(host.name(v));
  std::vector<std::vector<Vertex>> adj(order.size());
  for (Vertex i = 1; i < static_cast<Vertex>(order.size()); ++i)
    adj[0].push_back(i);
  return EdgeOrderedGraph(std::move(names), 0, adj);
}

struct PipelineStage {
  std::string label;
  EdgeOrderedGraph graph;
};

// The four snapshots of a traversal pipeline plus the resulting vertex
// order.
struct StagePipeline {
  std::vector<PipelineStage> stages;
  LinearOrder order;
};

// Runs the universal-construction pipeline: extract the least-path tree
// (Dfs) or least-shortest-path tree (Bfs), transitively close it, then read
// off the ordered neighborhood of the point. The final order is the
// lexicographic depth-first respectively breadth-first traversal.
inline StagePipeline run_pipeline(const EdgeOrderedGraph& g, SearchMode mode) {
  EdgeOrderedGraph tree = mode == SearchMode::Dfs
                              ? least_path_tree(g)
                              : least_shortest_path_tree(g);
  EdgeOrderedGraph closure = mode == SearchMode::Dfs
                                 ? lex_transitive_closure(tree)
                                 : shortlex_transitive_closure(tree);
  LinearOrder order = point_order(closure);
  EdgeOrderedGraph star = star_graph(closure, order);
  StagePipeline p;
  p.stages.push_back({"input", g});
  p.stages.push_back({"least-path-tree", std::move(tree)});
  p.stages.push_back({"transitive-closure", std::move(closure)});
  p.stages.push_back({"neighborhood-order", std::move(star)});
  p.order = std::move(order);
  return p;
}

}  // namespace lexgraph

#endif  // LEXGRAPH_FUNCTORS_HPP
