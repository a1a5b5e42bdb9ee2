#include "bugscope/lemmas.hpp"

#include <algorithm>
#include <array>

#include "bugscope/centrality.hpp"
#include "bugscope/certify.hpp"
#include "bugscope/complement_lens.hpp"
#include "bugscope/enumerate.hpp"
#include "bugscope/errors.hpp"
#include "bugscope/graph_io.hpp"
#include "bugscope/parallel.hpp"
#include "bugscope/search.hpp"
#include "bugscope/structure.hpp"

namespace bugscope {

bool LemmaReport::all_passed() const {
  return std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaOutcome& l) { return l.passed(); });
}

namespace {

enum GraphLemma : std::size_t {
  kOracle,
  kRatioBound,
  kWeightIdentity,
  kDoubleStar,
  kMultipartite,
  kUniformCounting,
  kExcessDegree,
  kMinDegreeExcess,
  kCloseMembership,
  kSixVertex,
  kCertification,
  kCompleteZero,
  kNoBugBelowHalf,
  kDiameterThreeLow,
  kLowBugsAreStars,
  kGraphLemmaCount,
};

constexpr std::array<const char*, kGraphLemmaCount> kGraphLemmaNames = {
    "oracle-equivalence",
    "ratio-bound",
    "weight-identity",
    "double-star",
    "multipartite-equivalence",
    "uniform-counting",
    "excess-degree",
    "min-degree-3-excess",
    "close-membership",
    "six-vertex",
    "certification-consistency",
    "complete-graphs-zero",
    "no-bug-below-half",
    "diameter-3-low-bug",
    "low-bugs-are-star-complements",
};

struct Check {
  bool applicable = false;
  bool ok = true;
};

using GraphChecks = std::array<Check, kGraphLemmaCount>;

bool complement_is_disjoint_cliques(const Graph& g) {
  const Graph gc = complement(g);
  for (const Component& c : connected_components(gc).components) {
    const std::size_t s = c.vertices.size();
    if (c.edge_count != s * (s - 1) / 2) return false;
  }
  return true;
}

bool uniform_with_edges_and_vertices(const Graph& g) {
  const CloseCounts counts = close_counts(g);
  const auto all_eq = [](const std::vector<std::size_t>& v, std::size_t want) {
    return std::all_of(v.begin(), v.end(), [want](std::size_t x) { return x == want; });
  };
  return all_eq(counts.vertex_close, g.edge_count()) && all_eq(counts.edge_close, g.vertex_count());
}

bool membership_symmetric(const ClosenessTables& t) {
  for (std::size_t e = 0; e < t.close_of_edge.size(); ++e) {
    const auto& set = t.close_of_edge[e];
    if (!std::binary_search(set.begin(), set.end(), t.edges[e].u)) return false;
    if (!std::binary_search(set.begin(), set.end(), t.edges[e].v)) return false;
    for (Vertex v : set) {
      const auto& cv = t.close_of_vertex[v];
      if (!std::binary_search(cv.begin(), cv.end(), e)) return false;
    }
  }
  std::size_t total_vertex = 0;
  std::size_t total_edge = 0;
  for (const auto& cv : t.close_of_vertex) total_vertex += cv.size();
  for (const auto& ce : t.close_of_edge) total_edge += ce.size();
  return total_vertex == total_edge;
}

GraphChecks check_graph(const Graph& g) {
  GraphChecks c{};
  const std::size_t n = g.vertex_count();
  const Graph gc = complement(g);
  const Diameter diam = diameter(g);
  const bool diam2 = diam.at_most(2);

  const BetweennessProfile exact = betweenness_exact(g);
  const BetweennessProfile oracle = betweenness_oracle(g);
  c[kOracle] = {true, exact.per_vertex == oracle.per_vertex};

  const Rational ratio = Rational::fraction(static_cast<std::int64_t>(gc.edge_count()), static_cast<std::int64_t>(n));
  c[kRatioBound] = {true, exact.average >= ratio && ((exact.average == ratio) == diam2)};

  if (diam2) c[kWeightIdentity] = {true, weight_identity_check(g)};

  c[kDoubleStar] = {true, !diam2 == (is_connected(gc) && has_spanning_double_star(gc))};

  const bool cm = is_complete_multipartite(g);
  c[kMultipartite] = {true, cm == uniform_with_edges_and_vertices(g) && cm == complement_is_disjoint_cliques(g)};

  const UniformityReport uni = uniformity_params(g);
  if (uni.is_uniform) c[kUniformCounting] = {true, uni.m * n == uni.t * g.edge_count()};

  std::int64_t deg_sum = 0;
  std::size_t min_deg = n;
  for (Vertex v = 0; v < n; ++v) {
    deg_sum += static_cast<std::int64_t>(g.degree(v)) - 2;
    min_deg = std::min(min_deg, g.degree(v));
  }
  c[kExcessDegree] = {true, 2 * excess(g) == deg_sum};
  if (min_deg >= 3) c[kMinDegreeExcess] = {true, 2 * excess(g) >= static_cast<std::int64_t>(n)};

  const ClosenessTables tables = closeness_tables(g);
  c[kCloseMembership] = {true, membership_symmetric(tables)};

  if (n <= 5 && !is_star(g) && !cm) {
    const StructuralVerdict v = structural_filters(g);
    const bool fails = v.failed(Claim::degree_1) || v.failed(Claim::triangle_deg2) ||
                       v.failed(Claim::c4c5_adjacent_deg2) || v.failed(Claim::path_of_three_deg2) ||
                       v.failed(Claim::close_inclusion);
    c[kSixVertex] = {true, fails};
  }

  const CertificationReport cert = is_cobug(gc);
  const bool same_value = !exact.is_uniform || (cert.betweenness && *cert.betweenness == exact.average);
  c[kCertification] = {true, cert.is_cobug == exact.is_uniform && same_value};

  if (exact.is_uniform) {
    const Rational& b = exact.average;
    const bool complete = g.edge_count() == n * (n - 1) / 2;
    c[kCompleteZero] = {true, b.is_zero() == complete};
    c[kNoBugBelowHalf] = {true, b.is_zero() || b >= Rational::fraction(1, 2)};
    if (!diam2) c[kDiameterThreeLow] = {true, b >= Rational(1)};
    if (b < Rational(1)) c[kLowBugsAreStars] = {true, connected_components(gc).uniform_star().has_value()};
  } else if (g.edge_count() == n * (n - 1) / 2) {
    c[kCompleteZero] = {true, false};
  }
  return c;
}

struct StarExpectation {
  bool window_empty;
  std::vector<std::size_t> forced_closeness;
  std::optional<std::int64_t> max_excess;
};

std::optional<StarExpectation> expectation_for(std::size_t ell) {
  if (ell <= 6) return StarExpectation{true, {}, std::nullopt};
  if (ell == 7) return StarExpectation{false, {8}, 2};
  if (ell == 8) return StarExpectation{false, {9}, 3};
  return std::nullopt;
}

LemmaOutcome star_exclusion_outcome(std::size_t ell, std::size_t cap, std::size_t jobs) {
  SearchConfig base;
  base.jobs = jobs;
  const StarExclusionReport r = verify_star_exclusion(ell, cap, base);
  LemmaOutcome o;
  o.name = "star-exclusion-" + std::to_string(ell);
  o.checked = r.search.enumerated;
  o.violations = r.search.found.size();
  if (!r.search.found.empty()) o.counterexample = to_graph6(r.search.found.front().graph);

  o.detail = "n window [" + std::to_string(r.n_lower) + ", " + std::to_string(r.n_upper) + "]";
  if (r.window_empty) o.detail += " empty";
  if (!r.forced_closeness.empty()) {
    o.detail += "; forced closeness";
    for (std::size_t c : r.forced_closeness) o.detail += " " + std::to_string(c);
  }
  if (r.max_excess) o.detail += "; max excess " + std::to_string(*r.max_excess);
  o.detail += "; " + std::to_string(r.search.survivors) + " survivors";

  if (const auto want = expectation_for(ell)) {
    if (want->window_empty != r.window_empty || want->forced_closeness != r.forced_closeness ||
        want->max_excess != r.max_excess) {
      ++o.violations;
      o.detail += "; numeric bounds differ from the expected values";
    }
  }
  return o;
}

}  // namespace

LemmaReport verify_lemmas(std::size_t n_max, std::size_t ell_max, std::size_t jobs) {
  if (n_max > kMaxEnumeratedOrder) {
    throw UnsupportedSizeError("lemma verification supports at most " + std::to_string(kMaxEnumeratedOrder) +
                               " vertices");
  }
  LemmaReport report;
  report.n_max = n_max;
  report.ell_max = ell_max;
  for (const char* name : kGraphLemmaNames) {
    LemmaOutcome o;
    o.name = name;
    report.lemmas.push_back(std::move(o));
  }

  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::vector<Graph>& graphs = enumerate_connected_graphs(n);
    std::vector<GraphChecks> checks(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) { checks[i] = check_graph(graphs[i]); });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (std::size_t l = 0; l < kGraphLemmaCount; ++l) {
        const Check& ch = checks[i][l];
        if (!ch.applicable) continue;
        LemmaOutcome& o = report.lemmas[l];
        ++o.checked;
        if (!ch.ok && o.violations++ == 0) o.counterexample = to_graph6(graphs[i]);
      }
    }
  }

  for (std::size_t ell = 0; ell <= ell_max; ++ell) report.lemmas.push_back(star_exclusion_outcome(ell, n_max, jobs));
  return report;
}

}  // namespace bugscope
