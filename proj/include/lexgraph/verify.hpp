#ifndef LEXGRAPH_VERIFY_HPP
#define LEXGRAPH_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lexgraph/category.hpp"
#include "lexgraph/enumerate.hpp"
#include "lexgraph/functors.hpp"
#include "lexgraph/graph.hpp"
#include "lexgraph/io.hpp"
#include "lexgraph/path_order.hpp"
#include "lexgraph/traversal.hpp"

// The single-instance invariant battery and the two verification suites
// built on it. Every check here ties the pipeline of constructions back to
// the searches, or an efficient implementation back to its brute-force
// counterpart.

namespace lexgraph {

struct VerifyOptions {
  // Compare the search-based least paths against full path enumeration on
  // instances up to this many vertices.
  int oracle_max_n = 8;
};

// Runs every invariant on one connected pointed instance; returns a
// description of each violated invariant (empty means the instance passes).
inline std::vector<std::string> verify_instance(const EdgeOrderedGraph& g,
                                                const VerifyOptions& opts = {}) {
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };

  const int n = g.size();
  LinearOrder dfs = lex_dfs(g);
  LinearOrder bfs = lex_bfs(g);
  std::vector<int> dfs_pos(n), bfs_pos(n);
  for (int i = 0; i < n; ++i) dfs_pos[dfs[i]] = i;
  for (int i = 0; i < n; ++i) bfs_pos[bfs[i]] = i;

  // Pipelines reproduce the searches.
  StagePipeline pd = run_pipeline(g, SearchMode::Dfs);
  StagePipeline pb = run_pipeline(g, SearchMode::Bfs);
  expect(pd.order == dfs, "dfs pipeline order differs from lex_dfs");
  expect(pb.order == bfs, "bfs pipeline order differs from lex_bfs");

  // Canonical predecessor paths are the least paths.
  auto min_lex = min_paths_from(g, g.point(), SearchMode::Dfs);
  auto min_slex = min_paths_from(g, g.point(), SearchMode::Bfs);
  for (Vertex v = 0; v < n; ++v) {
    expect(canonical_path(g, dfs, SearchMode::Dfs, v) == *min_lex[v],
           "canonical df-path to '" + g.name(v) + "' is not the least path");
    expect(canonical_path(g, bfs, SearchMode::Bfs, v) == *min_slex[v],
           "canonical bf-path to '" + g.name(v) +
               "' is not the least shortest path");
  }

  // Least paths are closed under prefixes.
  for (Vertex v = 0; v < n; ++v) {
    const Path& p = *min_lex[v];
    for (std::size_t len = 1; len <= p.size(); ++len)
      expect(Path(p.begin(), p.begin() + len) == *min_lex[p[len - 1]],
             "least path to '" + g.name(v) + "' has a non-least prefix");
  }

  // Search order agrees with the path orders on least paths.
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      expect((dfs_pos[u] < dfs_pos[v]) ==
                 (compare_lex(g, *min_lex[u], *min_lex[v]) ==
                  PathComparison::Less),
             "dfs order disagrees with the lex order on least paths");
      expect((bfs_pos[u] < bfs_pos[v]) ==
                 (compare_shortlex(g, *min_slex[u], *min_slex[v]) ==
                  PathComparison::Less),
             "bfs order disagrees with shortlex on least shortest paths");
    }
  }

  // Against the enumeration oracle, from every source.
  if (n <= opts.oracle_max_n) {
    for (Vertex u = 0; u < n; ++u) {
      auto fast_lex = min_paths_from(g, u, SearchMode::Dfs);
      auto fast_slex = min_paths_from(g, u, SearchMode::Bfs);
      auto slow_lex = oracle_min_paths_from(g, u, PathOrder::Lex);
      auto slow_slex = oracle_min_paths_from(g, u, PathOrder::ShortLex);
      for (Vertex v = 0; v < n; ++v) {
        expect(fast_lex[v] == slow_lex[v],
               "min path " + g.name(u) + " ~> " + g.name(v) +
                   " differs from the oracle");
        expect(fast_slex[v] == slow_slex[v],
               "min shortest path " + g.name(u) + " ~> " + g.name(v) +
                   " differs from the oracle");
      }
    }
  }

  // Structural guarantees of the constructions.
  const EdgeOrderedGraph& tree_d = pd.stages[1].graph;
  const EdgeOrderedGraph& tree_b = pb.stages[1].graph;
  const EdgeOrderedGraph& closure_d = pd.stages[2].graph;
  const EdgeOrderedGraph& closure_b = pb.stages[2].graph;
  expect(is_object_of(tree_d, CategoryKind::FinArb),
         "least-path tree is not an arborescence");
  expect(is_object_of(tree_b, CategoryKind::FinArb),
         "least-shortest-path tree is not an arborescence");
  expect(is_object_of(closure_d, CategoryKind::TLexGraph),
         "lex transitive closure is not a transitive lex-graph");
  expect(is_object_of(closure_b, CategoryKind::TArb),
         "shortlex transitive closure is not a transitive arborescence");
  expect(longest_path_tree(closure_b) == tree_b,
         "longest-path tree does not invert the shortlex closure");
  expect(least_path_tree(tree_d) == tree_d,
         "least-path tree of an arborescence is not itself");
  expect(least_shortest_path_tree(tree_b) == tree_b,
         "least-shortest-path tree of an arborescence is not itself");

  // On lex-graphs the closure preserves least paths from the point and
  // extends the edge order. Least paths between interior pairs coincide
  // too, but only on acyclic hosts: a cycle lets the closure route a least
  // path through vertices a proper path could not revisit.
  if (is_object_of(g, CategoryKind::LexGraph)) {
    EdgeOrderedGraph fc = lex_transitive_closure(g);
    expect(is_object_of(fc, CategoryKind::TLexGraph),
           "lex transitive closure of a lex-graph is not a transitive "
           "lex-graph");
    expect(min_paths_from(fc, g.point(), SearchMode::Dfs) == min_lex,
           "least paths from the point change under the lex transitive "
           "closure");
    if (detail::topological_order(g)) {
      bool mins_agree = true;
      for (Vertex u = 0; u < n && mins_agree; ++u)
        if (min_paths_from(fc, u, SearchMode::Dfs) !=
            min_paths_from(g, u, SearchMode::Dfs))
          mins_agree = false;
      expect(mins_agree,
             "least paths change under the lex transitive closure of an "
             "acyclic lex-graph");
    }
    bool order_extends = true;
    for (Vertex u = 0; u < n && order_extends; ++u) {
      const auto& row = g.out(u);
      for (std::size_t i = 0; i + 1 < row.size(); ++i)
        if (fc.edge_rank(u, row[i]) >= fc.edge_rank(u, row[i + 1]))
          order_extends = false;
    }
    expect(order_extends,
           "lex transitive closure does not extend the edge order");
  }
  if (is_object_of(g, CategoryKind::FinArb)) {
    expect(longest_path_tree(shortlex_transitive_closure(g)) == g,
           "shortlex closure round trip does not return the arborescence");
  }

  // First-order traversal conditions.
  expect(check_fo_dft(g, dfs), "lex_dfs order fails the df condition");
  expect(check_fo_bft(g, bfs), "lex_bfs order fails the bf condition");

  // Breadth-first predecessors are weakly monotone, and both predecessor
  // maps match the search traces.
  auto dfp = predecessor_map(g, dfs, SearchMode::Dfs);
  auto bfp = predecessor_map(g, bfs, SearchMode::Bfs);
  for (int i = 0; i + 1 < n; ++i)
    expect(bfs_pos[bfp[bfs[i]]] <= bfs_pos[bfp[bfs[i + 1]]],
           "bf predecessor map is not weakly monotone");
  expect(detail::lex_search(g, g.point(), SearchMode::Dfs).parent == dfp,
         "df search trace disagrees with the predecessor map");
  expect(detail::lex_search(g, g.point(), SearchMode::Bfs).parent == bfp,
         "bf search trace disagrees with the predecessor map");

  // Star graphs of linear orders read back as the same order.
  EdgeOrderedGraph star = star_graph(g, dfs);
  LinearOrder back = point_order(star);
  bool star_ok = back.size() == dfs.size();
  for (std::size_t i = 0; star_ok && i < back.size(); ++i)
    star_ok = star.name(back[i]) == g.name(dfs[i]);
  expect(star_ok, "point order of a star graph differs from its order");

  return failures;
}

struct SuiteReport {
  std::size_t instances = 0;
  std::size_t failed_instances = 0;
  std::size_t failed_checks = 0;
  std::optional<std::string> first_counterexample;  // eog text
  std::vector<std::string> first_failures;

  bool ok() const { return failed_instances == 0; }
};

namespace detail {

inline void record_failures(SuiteReport& report, const EdgeOrderedGraph& g,
                            const std::vector<std::string>& failures) {
  ++report.instances;
  if (failures.empty()) return;
  ++report.failed_instances;
  report.failed_checks += failures.size();
  if (!report.first_counterexample) {
    report.first_counterexample = emit_eog(g);
    report.first_failures = failures;
  }
}

}  // namespace detail

// Exhaustive battery over every connected pointed edge-ordered graph with
// at most max_n vertices.
inline SuiteReport run_small_suite(int max_n, const VerifyOptions& opts = {}) {
  SuiteReport report;
  for_each_connected_eo_graph(max_n, [&](const EdgeOrderedGraph& g) {
    detail::record_failures(report, g, verify_instance(g, opts));
  });
  return report;
}

// Seeded battery over random connected instances with 4..max_n vertices.
inline SuiteReport run_random_suite(int max_n, std::size_t samples,
                                    std::uint64_t seed,
                                    const VerifyOptions& opts = {}) {
  SuiteReport report;
  std::mt19937_64 rng(seed);
  const int lo = 4;
  const int hi = max_n < lo ? lo : max_n;
  std::uniform_int_distribution<int> size_dist(lo, hi);
  for (std::size_t i = 0; i < samples; ++i) {
    EdgeOrderedGraph g = random_connected_eo_graph(size_dist(rng), rng);
    detail::record_failures(report, g, verify_instance(g, opts));
  }
  return report;
}

}  // namespace lexgraph

#endif  // LEXGRAPH_VERIFY_HPP
