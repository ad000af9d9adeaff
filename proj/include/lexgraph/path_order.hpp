#ifndef LEXGRAPH_PATH_ORDER_HPP
#define LEXGRAPH_PATH_ORDER_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "lexgraph/graph.hpp"
#include "lexgraph/traversal.hpp"

// The lexicographic path order on co-initial proper paths, its shortlex
// refinement, least paths under both, and a brute-force enumeration oracle
// used to certify the search-based implementations.

namespace lexgraph {

enum class PathComparison { Less, Greater, Equal, Incomparable };

inline PathComparison flip(PathComparison c) {
  if (c == PathComparison::Less) return PathComparison::Greater;
  if (c == PathComparison::Greater) return PathComparison::Less;
  return c;
}

// Longest common prefix of two co-initial paths.
inline Path longest_common_prefix(const Path& p, const Path& q) {
  if (p.empty() || q.empty() || p.front() != q.front())
    fail(errc::not_co_initial, "paths do not share a source");
  std::size_t i = 0;
  while (i < p.size() && i < q.size() && p[i] == q[i]) ++i;
  return Path(p.begin(), p.begin() + i);
}

namespace detail {

inline void require_proper_path(const EdgeOrderedGraph& g, const Path& p) {
  if (!is_path(g, p))
    fail(errc::invalid_path, "not a path in the graph: " + path_to_string(g, p));
  if (!is_proper(p))
    fail(errc::improper_path, "path repeats a vertex: " + path_to_string(g, p));
}

}  // namespace detail

// Lexicographic comparison of two proper paths in g. A prefix precedes its
// extensions; otherwise the paths are ordered by the out-edge order of the
// first edges after their longest common prefix. Paths with different
// sources are Incomparable.
inline PathComparison compare_lex(const EdgeOrderedGraph& g, const Path& p,
                                  const Path& q) {
  detail::require_proper_path(g, p);
  detail::require_proper_path(g, q);
  if (p.front() != q.front()) return PathComparison::Incomparable;
  std::size_t i = 0;
  while (i < p.size() && i < q.size() && p[i] == q[i]) ++i;
  if (i == p.size() && i == q.size()) return PathComparison::Equal;
  if (i == p.size()) return PathComparison::Less;
  if (i == q.size()) return PathComparison::Greater;
  Vertex u = p[i - 1];
  return g.edge_rank(u, p[i]) < g.edge_rank(u, q[i]) ? PathComparison::Less
                                                     : PathComparison::Greater;
}

// Shortlex: shorter first, ties broken lexicographically.
inline PathComparison compare_shortlex(const EdgeOrderedGraph& g,
                                       const Path& p, const Path& q) {
  detail::require_proper_path(g, p);
  detail::require_proper_path(g, q);
  if (p.front() != q.front()) return PathComparison::Incomparable;
  if (p.size() != q.size())
    return p.size() < q.size() ? PathComparison::Less : PathComparison::Greater;
  return compare_lex(g, p, q);
}

namespace detail {

inline Path path_from_parents(const std::vector<Vertex>& parent, Vertex root,
                              Vertex v) {
  Path p{v};
  while (p.back() != root) p.push_back(parent[p.back()]);
  std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace detail

// Least paths from u to every reachable vertex, as a parent table: the
// winning-copy parents of a lexicographic search rooted at u. Dfs gives the
// lex-least proper paths, Bfs the lex-least shortest paths.
inline std::vector<Vertex> min_path_parents(const EdgeOrderedGraph& g,
                                            Vertex u, SearchMode mode) {
  return detail::lex_search(g, u, mode).parent;
}

// Least paths from u to all targets (empty optional where unreachable).
inline std::vector<std::optional<Path>> min_paths_from(
    const EdgeOrderedGraph& g, Vertex u, SearchMode mode) {
  auto parent = min_path_parents(g, u, mode);
  std::vector<std::optional<Path>> out(g.size());
  for (Vertex v = 0; v < g.size(); ++v)
    if (parent[v] >= 0) out[v] = detail::path_from_parents(parent, u, v);
  return out;
}

// The lexicographically least proper path from u to v.
inline Path min_path(const EdgeOrderedGraph& g, Vertex u, Vertex v) {
  auto parent = min_path_parents(g, u, SearchMode::Dfs);
  if (parent[v] < 0)
    fail(errc::unreachable,
         "'" + g.name(v) + "' is not reachable from '" + g.name(u) + "'");
  return detail::path_from_parents(parent, u, v);
}

// The lexicographically least shortest path from u to v.
inline Path min_shortest_path(const EdgeOrderedGraph& g, Vertex u, Vertex v) {
  auto parent = min_path_parents(g, u, SearchMode::Bfs);
  if (parent[v] < 0)
    fail(errc::unreachable,
         "'" + g.name(v) + "' is not reachable from '" + g.name(u) + "'");
  return detail::path_from_parents(parent, u, v);
}

enum class PathOrder { Lex, ShortLex };

// Vertex count above which the enumeration oracle refuses to run.
inline constexpr int kOracleVertexBound = 10;

namespace detail {

// Walks every proper path out of `current`, visiting neighbors by vertex
// index rather than edge order so the enumeration shares nothing with the
// lexicographic searches. Calls f on every completed proper path.
template <class F>
void enumerate_proper_paths(const EdgeOrderedGraph& g, Path& current,
                            std::vector<bool>& on_path, F&& f) {
  f(current);
  std::vector<Vertex> nbrs = g.out(current.back());
  std::sort(nbrs.begin(), nbrs.end());
  for (Vertex v : nbrs) {
    if (on_path[v]) continue;
    on_path[v] = true;
    current.push_back(v);
    enumerate_proper_paths(g, current, on_path, f);
    current.pop_back();
    on_path[v] = false;
  }
}

}  // namespace detail

// Reference implementation of min_path / min_shortest_path by exhaustive
// enumeration of all proper paths from u, kept independent of the
// search-based implementations. Only for small graphs.
inline Path oracle_min_path(const EdgeOrderedGraph& g, Vertex u, Vertex v,
                            PathOrder order) {
  if (g.size() > kOracleVertexBound)
    fail(errc::enumeration_bound,
         "oracle refuses graphs with more than " +
             std::to_string(kOracleVertexBound) + " vertices");
  std::optional<Path> best;
  Path current{u};
  std::vector<bool> on_path(g.size(), false);
  on_path[u] = true;
  detail::enumerate_proper_paths(g, current, on_path, [&](const Path& p) {
    if (p.back() != v) return;
    if (!best) {
      best = p;
      return;
    }
    PathComparison c = order == PathOrder::Lex ? compare_lex(g, p, *best)
                                               : compare_shortlex(g, p, *best);
    if (c == PathComparison::Less) best = p;
  });
  if (!best)
    fail(errc::unreachable,
         "'" + g.name(v) + "' is not reachable from '" + g.name(u) + "'");
  return *best;
}

// All-targets variant of the oracle; shares one enumeration pass.
inline std::vector<std::optional<Path>> oracle_min_paths_from(
    const EdgeOrderedGraph& g, Vertex u, PathOrder order) {
  if (g.size() > kOracleVertexBound)
    fail(errc::enumeration_bound,
         "oracle refuses graphs with more than " +
             std::to_string(kOracleVertexBound) + " vertices");
  std::vector<std::optional<Path>> best(g.size());
  Path current{u};
  std::vector<bool> on_path(g.size(), false);
  on_path[u] = true;
  detail::enumerate_proper_paths(g, current, on_path, [&](const Path& p) {
    auto& slot = best[p.back()];
    if (!slot) {
      slot = p;
      return;
    }
    PathComparison c = order == PathOrder::Lex ? compare_lex(g, p, *slot)
                                               : compare_shortlex(g, p, *slot);
    if (c == PathComparison::Less) slot = p;
  });
  return best;
}

}  // namespace lexgraph

#endif  // LEXGRAPH_PATH_ORDER_HPP
