// bugscope: certify betweenness-uniform graphs and their complements.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bugscope/centrality.hpp"
#include "bugscope/certify.hpp"
#include "bugscope/constructions.hpp"
#include "bugscope/errors.hpp"
#include "bugscope/graph_io.hpp"
#include "bugscope/lemmas.hpp"
#include "bugscope/parallel.hpp"
#include "bugscope/report.hpp"
#include "bugscope/search.hpp"

namespace {

using namespace bugscope;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

// graph6 needs n(n-1)/2 bits; past this order the edge list is used.
constexpr std::size_t kAutoGraph6MaxOrder = 2048;

struct GlobalOptions {
  std::string format = "json";
  std::string output;
  std::size_t jobs = default_jobs();
  bool deterministic = false;

  std::size_t effective_jobs() const { return deterministic ? 1 : jobs; }
};

void emit(const GlobalOptions& opts, const Json& doc) {
  const std::string body = opts.format == "text" ? render_text(doc) : doc.dump(2) + "\n";
  if (opts.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + opts.output);
  out << body;
}

void write_graph(const Graph& g, const std::string& path, const std::string& format) {
  const bool use_graph6 =
      format == "graph6" || (format == "auto" && g.vertex_count() <= kAutoGraph6MaxOrder);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  if (use_graph6) {
    out << to_graph6(g) << "\n";
  } else {
    out << to_edge_list(g);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certification of betweenness-uniform graphs and their complements"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", opts.output, "Write the report here instead of stdout");
  app.add_option("-j,--jobs", opts.jobs, "Worker threads (default: hardware concurrency)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--deterministic", opts.deterministic, "Single-threaded execution");

  std::string graph_path;

  auto* analyze = app.add_subcommand("analyze", "Exact per-vertex betweenness of a connected graph");
  analyze->add_option("graph", graph_path, "graph6 or edge-list file")->required();

  bool expect_cobug = false;
  bool expect_not_cobug = false;
  std::string expect_value;
  auto* certify = app.add_subcommand("certify", "Certify a graph as the complement of a BUG");
  certify->add_option("graph", graph_path, "graph6 or edge-list file")->required();
  auto* ec = certify->add_flag("--expect-cobug", expect_cobug, "Exit 1 unless the graph is a coBUG");
  certify->add_flag("--expect-not-cobug", expect_not_cobug, "Exit 1 if the graph is a coBUG")->excludes(ec);
  certify->add_option("--expect-value", expect_value, "Exit 1 unless the betweenness equals this p/q");

  std::string family_spec;
  std::string graph_output;
  std::string graph_format = "auto";
  auto* construct = app.add_subcommand("construct", "Build and certify a construction family member");
  construct->add_option("spec", family_spec,
                        "'stars k l', 'cycles l1,l2,..', 'multipartite p1,p2,..', 'above-one t' or "
                        "'inflated l1,l2,..'")
      ->required();
  construct->add_option("--graph-output", graph_output, "Also write the graph to this file");
  construct->add_option("--graph-format", graph_format, "Format of --graph-output")
      ->check(CLI::IsMember({"auto", "graph6", "edge-list"}));

  SearchConfig cfg;
  std::string corpus;
  auto* search = app.add_subcommand("search", "Exhaustive search for exotic coBUGs");
  search->add_option("--ell-min", cfg.ell_min, "Smallest star size")->capture_default_str();
  search->add_option("--ell-max", cfg.ell_max, "Largest star size")->capture_default_str();
  search->add_option("--cap", cfg.component_vertex_cap, "Largest non-star component order")
      ->capture_default_str();
  search->add_option("--n-cap", cfg.n_cap, "Largest host order when no bound is tighter")->capture_default_str();
  search->add_option("--max-nonstar", cfg.max_nonstar_components, "Non-star components per host (1 or 2)")
      ->check(CLI::Range(1, 2))
      ->capture_default_str();
  search->add_option("--corpus", corpus, "graph6 file of candidate components")->check(CLI::ExistingFile);
  search->add_flag("--allow-betweenness-one", cfg.allow_betweenness_one,
                   "Drop the low-betweenness filters and report non-exotic coBUGs");
  search->add_flag("--eliminations", cfg.record_eliminations, "Log why each candidate was eliminated");

  std::size_t n_max = 7;
  std::size_t ell_max = 8;
  auto* lemmas = app.add_subcommand("verify-lemmas", "Exhaustively check every lemma");
  lemmas->add_option("--n-max", n_max, "Largest graph order")->capture_default_str();
  lemmas->add_option("--ell-max", ell_max, "Largest star size for the star exclusions")->capture_default_str();

  auto* scan = app.add_subcommand("scan", "List every connected BUG up to a given order");
  scan->add_option("--n-max", n_max, "Largest graph order")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze) {
      const Graph g = read_graph_file(graph_path);
      emit(opts, profile_json(g, betweenness_exact(g)));
      return kExitOk;
    }
    if (*certify) {
      const Graph g = read_graph_file(graph_path);
      const CertificationReport report = is_cobug(g);
      emit(opts, certification_json(report));
      if (expect_cobug && !report.is_cobug) return kExitNegative;
      if (expect_not_cobug && report.is_cobug) return kExitNegative;
      if (!expect_value.empty()) {
        const Rational want = Rational::parse(expect_value);
        if (!report.betweenness || *report.betweenness != want) return kExitNegative;
      }
      return kExitOk;
    }
    if (*construct) {
      const Construction c = construct_from_text(family_spec);
      if (!graph_output.empty()) write_graph(c.graph, graph_output, graph_format);
      emit(opts, construction_json(c, is_cobug(c.graph)));
      return kExitOk;
    }
    if (*search) {
      if (!corpus.empty()) cfg.corpus = corpus;
      cfg.jobs = opts.effective_jobs();
      emit(opts, search_json(exotic_search(cfg)));
      return kExitOk;
    }
    if (*lemmas) {
      const LemmaReport report = verify_lemmas(n_max, ell_max, opts.effective_jobs());
      emit(opts, lemmas_json(report));
      return report.all_passed() ? kExitOk : kExitNegative;
    }
    if (*scan) {
      const auto bugs = exhaustive_bug_scan(n_max, opts.effective_jobs());
      emit(opts, bug_scan_json(n_max, bugs));
      return kExitOk;
    }
  } catch (const UnsupportedSizeError& e) {
    std::cerr << "bugscope: " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    std::cerr << "bugscope: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "bugscope: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
