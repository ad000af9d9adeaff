// lexgraph: traversals of edge-ordered graphs, the universal-construction
// pipeline that reproduces them, and the object/morphism/adjunction
// checkers, over eog files.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lexgraph/lexgraph.hpp"

namespace {

using namespace lexgraph;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case errc::io: return 2;
    case errc::wrong_category: return 3;
    case errc::enumeration_bound: return 4;
    default: return 1;
  }
}

std::string order_text(const EdgeOrderedGraph& g, const LinearOrder& order) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += ' ';
    out += g.name(order[i]);
  }
  return out;
}

SearchMode parse_mode(const std::string& mode) {
  if (mode == "dfs") return SearchMode::Dfs;
  if (mode == "bfs") return SearchMode::Bfs;
  throw CLI::ValidationError("--mode", "expected dfs or bfs");
}

CategoryKind parse_category(const std::string& kind) {
  for (CategoryKind k :
       {CategoryKind::FinGraphEo, CategoryKind::FinGraphLex,
        CategoryKind::FinGraphShortLex, CategoryKind::LexGraph,
        CategoryKind::FinArb, CategoryKind::TLexGraph, CategoryKind::TArb,
        CategoryKind::FinLoset})
    if (kind == to_string(k)) return k;
  throw CLI::ValidationError("--kind", "unknown category '" + kind + "'");
}

MorphismKind parse_morphism_kind(const std::string& kind) {
  for (MorphismKind k :
       {MorphismKind::Graph, MorphismKind::Pointed, MorphismKind::EdgeOrdered,
        MorphismKind::Lex, MorphismKind::ShortLex, MorphismKind::TArb,
        MorphismKind::Monotone})
    if (kind == to_string(k)) return k;
  throw CLI::ValidationError("--kind", "unknown morphism kind '" + kind + "'");
}

Adjunction parse_adjunction(const std::string& which) {
  for (Adjunction a :
       {Adjunction::LeastPathTree, Adjunction::LeastShortestPathTree,
        Adjunction::LexClosure, Adjunction::ShortlexClosure})
    if (which == to_string(a)) return a;
  throw CLI::ValidationError("--which", "unknown adjunction '" + which + "'");
}

int cmd_traverse(const std::string& input, const std::string& mode,
                 const std::string& format) {
  EdgeOrderedGraph g = parse_eog_file(input);
  SearchMode m = parse_mode(mode);
  LinearOrder order = m == SearchMode::Dfs ? lex_dfs(g) : lex_bfs(g);
  if (format == "text")
    std::cout << order_text(g, order) << "\n";
  else
    std::cout << emit_dot(star_graph(g, order));
  return 0;
}

int cmd_pipeline(const std::string& input, const std::string& mode,
                 const std::string& stage_dir, const std::string& format) {
  EdgeOrderedGraph g = parse_eog_file(input);
  SearchMode m = parse_mode(mode);
  StagePipeline p = run_pipeline(g, m);
  LinearOrder search = m == SearchMode::Dfs ? lex_dfs(g) : lex_bfs(g);
  if (p.order != search) {
    std::cerr << "pipeline order disagrees with the search\n";
    return 5;
  }
  if (!stage_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(stage_dir, ec);
    if (ec) fail(errc::io, "cannot create directory '" + stage_dir + "'");
    const char* stems[] = {"0-input", "1-tree", "2-closure", "3-order"};
    for (std::size_t i = 0; i < p.stages.size(); ++i) {
      std::string path = stage_dir + "/" + stems[i] +
                         (format == "eog" ? ".eog" : ".dot");
      write_file(path, format == "eog" ? emit_eog(p.stages[i].graph)
                                       : emit_dot(p.stages[i].graph));
    }
  }
  std::cout << order_text(g, p.order) << "\n";
  return 0;
}

int cmd_check(const std::string& input, const std::string& kind) {
  EdgeOrderedGraph g = parse_eog_file(input);
  if (auto reason = check_object(g, parse_category(kind))) {
    std::cout << "no: " << *reason << "\n";
    return 3;
  }
  std::cout << "yes\n";
  return 0;
}

int cmd_hom(const std::string& from, const std::string& to,
            const std::string& map_file, const std::string& kind) {
  EdgeOrderedGraph src = parse_eog_file(from);
  EdgeOrderedGraph dst = parse_eog_file(to);
  VertexMap m = parse_vertex_map(read_file(map_file), src, dst);
  if (auto reason = check_morphism(src, dst, m, parse_morphism_kind(kind))) {
    std::cout << "no: " << *reason << "\n";
    return 3;
  }
  std::cout << "yes\n";
  return 0;
}

int cmd_adjunction(const std::string& which, const std::string& left_file,
                   const std::string& right_file, std::uint64_t seed) {
  EdgeOrderedGraph left = parse_eog_file(left_file);
  EdgeOrderedGraph right = parse_eog_file(right_file);
  AdjunctionReport r = check_adjunction(left, right, parse_adjunction(which), seed);
  std::cout << "left homs: " << r.left_homs << "\n"
            << "right homs: " << r.right_homs << "\n"
            << "bijection: " << (r.bijection_ok ? "ok" : "FAIL") << "\n"
            << "naturality: " << (r.naturality_ok ? "ok" : "FAIL") << " ("
            << r.naturality_checks << " checks)\n";
  return r.ok() ? 0 : 3;
}

int cmd_verify(const std::string& suite, int max_n, std::size_t samples,
               std::uint64_t seed, const std::string& counterexample_path) {
  SuiteReport report;
  if (suite == "small") {
    std::cout << "suite: small, max-n " << max_n << "\n";
    report = run_small_suite(max_n);
  } else {
    std::cout << "suite: random, max-n " << max_n << ", samples " << samples
              << ", seed " << seed << "\n";
    report = run_random_suite(max_n, samples, seed);
  }
  std::cout << "instances: " << report.instances << "\n"
            << "failed instances: " << report.failed_instances << "\n"
            << "failed checks: " << report.failed_checks << "\n";
  if (report.first_counterexample) {
    write_file(counterexample_path, *report.first_counterexample);
    std::cout << "first counterexample written to " << counterexample_path
              << "\n";
    for (const auto& what : report.first_failures)
      std::cout << "  " << what << "\n";
  }
  std::cout << "RESULT: " << (report.ok() ? "pass" : "fail") << "\n";
  return report.ok() ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lexicographic traversals of edge-ordered graphs by search "
               "and by universal constructions"};
  app.require_subcommand(1);

  std::string input, mode = "dfs", format, stage_dir;
  std::string kind, from, to, map_file, which, left_file, right_file;
  std::string suite, counterexample_path = "counterexample.eog";
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  int max_n = 0;

  auto* traverse = app.add_subcommand("traverse", "print a traversal");
  traverse->add_option("--input", input)->required();
  traverse->add_option("--mode", mode, "dfs or bfs")->required();
  format = "text";
  traverse->add_option("--format", format, "text or dot")
      ->check(CLI::IsMember({"text", "dot"}));

  auto* pipeline = app.add_subcommand(
      "pipeline", "run the construction pipeline and emit its stages");
  pipeline->add_option("--input", input)->required();
  pipeline->add_option("--mode", mode, "dfs or bfs")->required();
  std::string pformat = "eog";
  pipeline->add_option("--emit-stages", stage_dir, "directory for stage files");
  pipeline->add_option("--format", pformat, "eog or dot")
      ->check(CLI::IsMember({"eog", "dot"}));

  auto* check = app.add_subcommand("check", "category membership of a graph");
  check->add_option("--input", input)->required();
  check->add_option("--kind", kind)->required();

  auto* hom = app.add_subcommand("hom", "check a vertex map between graphs");
  hom->add_option("--from", from)->required();
  hom->add_option("--to", to)->required();
  hom->add_option("--map", map_file)->required();
  hom->add_option("--kind", kind)->required();

  auto* adjunction =
      app.add_subcommand("adjunction", "certify an adjunction on a pair");
  adjunction->add_option("--which", which, "itheta, is, fu or gammal")
      ->required();
  adjunction->add_option("--left", left_file)->required();
  adjunction->add_option("--right", right_file)->required();
  adjunction->add_option("--seed", seed)->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "small or random")
      ->check(CLI::IsMember({"small", "random"}))
      ->required();
  verify->add_option("--max-n", max_n)->required();
  verify->add_option("--samples", samples);
  verify->add_option("--seed", seed);
  verify->add_option("--counterexample", counterexample_path,
                     "where to write the first failing instance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*traverse) return cmd_traverse(input, mode, format);
    if (*pipeline) return cmd_pipeline(input, mode, stage_dir, pformat);
    if (*check) return cmd_check(input, kind);
    if (*hom) return cmd_hom(from, to, map_file, kind);
    if (*adjunction) return cmd_adjunction(which, left_file, right_file, seed);
    if (*verify) {
      if (suite == "random" && samples == 0) {
        std::cerr << "the random suite needs --samples\n";
        return 1;
      }
      return cmd_verify(suite, max_n, samples, seed, counterexample_path);
    }
  } catch (const lexgraph::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 0;
}
