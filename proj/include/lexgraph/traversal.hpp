#ifndef LEXGRAPH_TRAVERSAL_HPP
#define LEXGRAPH_TRAVERSAL_HPP

#include <algorithm>
#include <deque>
#include <vector>

#include "lexgraph/graph.hpp"

// Lexicographic depth-first and breadth-first search, traversal predecessor
// maps and canonical predecessor paths, and the first-order traversal checks.

namespace lexgraph {

enum class SearchMode { Dfs, Bfs };

namespace detail {

struct SearchTrace {
  LinearOrder order;            // visit order; covers the reachable set only
  std::vector<Vertex> parent;   // vertex whose expansion scheduled the
                                // winning copy; root maps to itself; -1 if
                                // never reached
  std::vector<int> position;    // index in `order`, or -1
};

// The search: keep a visit list L and a stack (Dfs) or queue (Bfs) of
// pending vertices seeded with `root`. Take the next pending vertex; if
// already visited, skip it; otherwise visit it and schedule its unvisited
// out-neighbors. Dfs pushes them in reverse edge order so the least ends up
// on top; Bfs enqueues them in edge order. Vertices may be pending several
// times; only the first copy taken wins. Each pending entry remembers who
// scheduled it: the winner's scheduler is recorded as its parent.
inline SearchTrace lex_search(const EdgeOrderedGraph& g, Vertex root,
                              SearchMode mode) {
  SearchTrace t;
  t.parent.assign(g.size(), -1);
  t.position.assign(g.size(), -1);

  struct Entry {
    Vertex vertex;
    Vertex scheduler;
  };
  std::deque<Entry> pending;
  pending.push_back({root, root});

  while (!pending.empty()) {
    Entry e = mode == SearchMode::Dfs ? pending.back() : pending.front();
    if (mode == SearchMode::Dfs)
      pending.pop_back();
    else
      pending.pop_front();
    if (t.position[e.vertex] >= 0) continue;

    t.position[e.vertex] = static_cast<int>(t.order.size());
    t.order.push_back(e.vertex);
    t.parent[e.vertex] = e.scheduler;

    const auto& nbrs = g.out(e.vertex);
    if (mode == SearchMode::Dfs) {
      for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it)
        if (t.position[*it] < 0) pending.push_back({*it, e.vertex});
    } else {
      for (Vertex v : nbrs)
        if (t.position[v] < 0) pending.push_back({v, e.vertex});
    }
  }
  return t;
}

}  // namespace detail

// The unique lexicographic depth-first traversal of g.
inline LinearOrder lex_dfs(const EdgeOrderedGraph& g) {
  auto t = detail::lex_search(g, g.point(), SearchMode::Dfs);
  if (static_cast<int>(t.order.size()) != g.size())
    fail(errc::not_connected, "graph is not connected from its point");
  return t.order;
}

// The unique lexicographic breadth-first traversal of g.
inline LinearOrder lex_bfs(const EdgeOrderedGraph& g) {
  auto t = detail::lex_search(g, g.point(), SearchMode::Bfs);
  if (static_cast<int>(t.order.size()) != g.size())
    fail(errc::not_connected, "graph is not connected from its point");
  return t.order;
}

namespace detail {

// Positions of `order`'s entries, after checking it lists every vertex of g
// exactly once starting at the point.
inline std::vector<int> order_positions(const EdgeOrderedGraph& g,
                                        const LinearOrder& order) {
  if (static_cast<int>(order.size()) != g.size())
    fail(errc::not_a_traversal, "order does not list every vertex");
  if (order.front() != g.point())
    fail(errc::not_a_traversal, "order does not start at the point");
  std::vector<int> pos(g.size(), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    Vertex v = order[i];
    if (v < 0 || v >= g.size() || pos[v] >= 0)
      fail(errc::not_a_traversal, "order is not a permutation of the vertices");
    pos[v] = i;
  }
  return pos;
}

}  // namespace detail

// Traversal predecessors: for each non-initial vertex of the order, the
// greatest (Dfs) or least (Bfs) earlier in-neighbor. The point maps to
// itself. Fails with not_a_traversal if some non-initial vertex has no
// earlier in-neighbor.
inline std::vector<Vertex> predecessor_map(const EdgeOrderedGraph& g,
                                           const LinearOrder& order,
                                           SearchMode mode) {
  auto pos = detail::order_positions(g, order);
  auto in = g.in_neighbors();
  std::vector<Vertex> pred(g.size(), -1);
  pred[g.point()] = g.point();
  for (Vertex v = 0; v < g.size(); ++v) {
    if (v == g.point()) continue;
    Vertex best = -1;
    for (Vertex u : in[v]) {
      if (pos[u] >= pos[v]) continue;
      if (best < 0) {
        best = u;
      } else if (mode == SearchMode::Dfs ? pos[u] > pos[best]
                                         : pos[u] < pos[best]) {
        best = u;
      }
    }
    if (best < 0)
      fail(errc::not_a_traversal,
           "vertex '" + g.name(v) + "' has no earlier in-neighbor");
    pred[v] = best;
  }
  return pred;
}

// The canonical predecessor path to v: reverse of the orbit of v under the
// predecessor map, a path from the point to v.
inline Path canonical_path(const EdgeOrderedGraph& g, const LinearOrder& order,
                           SearchMode mode, Vertex v) {
  auto pred = predecessor_map(g, order, mode);
  Path p{v};
  while (p.back() != g.point()) p.push_back(pred[p.back()]);
  std::reverse(p.begin(), p.end());
  return p;
}

namespace detail {

// Scan all position triples u < v < w with an edge u -> w and test the
// given condition on (u, v).
template <class Cond>
bool check_fo(const EdgeOrderedGraph& g, const LinearOrder& order,
              Cond&& holds_at) {
  auto pos = order_positions(g, order);
  const int n = g.size();
  for (int i = 0; i < n; ++i) {
    Vertex u = order[i];
    for (Vertex w : g.out(u)) {
      if (pos[w] <= i) continue;
      for (int j = i + 1; j < pos[w]; ++j) {
        if (!holds_at(pos, i, order[j])) return false;
      }
    }
  }
  return true;
}

}  // namespace detail

// Necessary condition for a depth-first traversal: whenever u < v < w and
// u -> w, some v' with u <= v' < v has an edge to v.
inline bool check_fo_dft(const EdgeOrderedGraph& g, const LinearOrder& order) {
  auto in = g.in_neighbors();
  return detail::check_fo(g, order,
                          [&](const std::vector<int>& pos, int i, Vertex v) {
                            for (Vertex x : in[v])
                              if (pos[x] >= i && pos[x] < pos[v]) return true;
                            return false;
                          });
}

// Necessary condition for a breadth-first traversal: whenever u < v < w and
// u -> w, some v' with v' <= u < v has an edge to v.
inline bool check_fo_bft(const EdgeOrderedGraph& g, const LinearOrder& order) {
  auto in = g.in_neighbors();
  return detail::check_fo(g, order,
                          [&](const std::vector<int>& pos, int i, Vertex v) {
                            for (Vertex x : in[v])
                              if (pos[x] <= i && pos[x] < pos[v]) return true;
                            return false;
                          });
}

}  // namespace lexgraph

#endif  // LEXGRAPH_TRAVERSAL_HPP
