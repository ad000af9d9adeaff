#ifndef LEXGRAPH_ENUMERATE_HPP
#define LEXGRAPH_ENUMERATE_HPP

#include <random>
#include <string>
#include <vector>

#include "lexgraph/graph.hpp"

// Instance generators for the verification suites: exhaustive enumeration
// of all pointed edge-ordered graphs on small labeled vertex sets, and a
// seeded random generator for larger ones.

namespace lexgraph {

inline std::vector<std::string> default_vertex_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (i < 26)
      names.emplace_back(1, static_cast<char>('a' + i));
    else
      names.push_back("v" + std::to_string(i));
  }
  return names;
}

namespace detail {

// All duplicate-free sequences over pool (including the empty one): the
// possible ordered out-neighborhoods of one vertex.
inline void ordered_subsets(const std::vector<Vertex>& pool,
                            std::vector<Vertex>& current,
                            std::vector<bool>& used,
                            std::vector<std::vector<Vertex>>& out) {
  out.push_back(current);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    current.push_back(pool[i]);
    ordered_subsets(pool, current, used, out);
    current.pop_back();
    used[i] = false;
  }
}

inline std::vector<std::vector<Vertex>> neighborhood_choices(int n, Vertex u) {
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < n; ++v)
    if (v != u) pool.push_back(v);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> current;
  std::vector<bool> used(pool.size(), false);
  ordered_subsets(pool, current, used, out);
  return out;
}

}  // namespace detail

// Calls f with every pointed edge-ordered graph on exactly n labeled
// vertices: every combination of ordered out-neighborhoods and every choice
// of point. Intended for small n; the count grows brutally fast.
template <class F>
void for_each_eo_graph(int n, F&& f) {
  auto names = default_vertex_names(n);
  std::vector<std::vector<std::vector<Vertex>>> choices;
  for (Vertex u = 0; u < n; ++u)
    choices.push_back(detail::neighborhood_choices(n, u));
  std::vector<std::vector<Vertex>> adj(n);
  auto rec = [&](auto&& self, Vertex u) -> void {
    if (u == n) {
      for (Vertex point = 0; point < n; ++point)
        f(EdgeOrderedGraph(names, point, adj));
      return;
    }
    for (const auto& row : choices[u]) {
      adj[u] = row;
      self(self, u + 1);
    }
  };
  rec(rec, 0);
}

// As above for every size 1..max_n, connected instances only.
template <class F>
void for_each_connected_eo_graph(int max_n, F&& f) {
  for (int n = 1; n <= max_n; ++n)
    for_each_eo_graph(n, [&](const EdgeOrderedGraph& g) {
      if (is_connected(g)) f(g);
    });
}

// A random connected pointed edge-ordered graph on n vertices: a random
// spanning arborescence plus extra edges with a per-instance density, with
// every out-neighborhood order shuffled.
inline EdgeOrderedGraph random_connected_eo_graph(int n, std::mt19937_64& rng) {
  auto names = default_vertex_names(n);
  Vertex point = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);

  std::vector<Vertex> others;
  for (Vertex v = 0; v < n; ++v)
    if (v != point) others.push_back(v);
  std::shuffle(others.begin(), others.end(), rng);

  std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
  std::vector<Vertex> grown{point};
  for (Vertex v : others) {
    Vertex u = grown[std::uniform_int_distribution<std::size_t>(
        0, grown.size() - 1)(rng)];
    has[u][v] = true;
    grown.push_back(v);
  }

  double density = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
  std::bernoulli_distribution extra(density);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && !has[u][v] && extra(rng)) has[u][v] = true;

  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v)
      if (has[u][v]) adj[u].push_back(v);
    std::shuffle(adj[u].begin(), adj[u].end(), rng);
  }
  return EdgeOrderedGraph(std::move(names), point, std::move(adj));
}

}  // namespace lexgraph

#endif  // LEXGRAPH_ENUMERATE_HPP
