#include "bugscope/certify.hpp"

#include <algorithm>

#include "bugscope/centrality.hpp"
#include "bugscope/complement_lens.hpp"

namespace bugscope {

std::string_view route_name(CertificationRoute route) {
  switch (route) {
    case CertificationRoute::none: return "none";
    case CertificationRoute::co_betweenness: return "co-betweenness";
    case CertificationRoute::direct_betweenness: return "direct-betweenness";
  }
  return "none";
}

namespace {

void direct_fallback(const Graph& hbar, const CertifyOptions& options, CertificationReport& report) {
  if (hbar.vertex_count() > options.fallback_max_order) {
    report.violations.emplace_back("fallback-too-large");
    return;
  }
  const Graph g = complement(hbar);
  if (!is_connected(g)) {
    report.violations.emplace_back("complement-disconnected");
    return;
  }
  report.route = CertificationRoute::direct_betweenness;
  const BugVerdict verdict = is_bug(g);
  report.is_cobug = verdict.is_bug;
  report.betweenness = verdict.value;
  if (!verdict.is_bug) report.violations.emplace_back("complement-not-bug");
}

void fill_exotic(CertificationReport& report) {
  if (!report.is_cobug) {
    report.exotic_reason = "not a coBUG";
  } else if (*report.betweenness >= Rational(1)) {
    report.exotic_reason = "betweenness is at least 1";
  } else if (const auto ell = report.inventory.uniform_star()) {
    report.exotic_reason = "every component is K_{1," + std::to_string(*ell) + "}";
  } else {
    report.exotic = true;
    report.exotic_reason = "low betweenness and not a union of equal stars";
  }
}

void fill_structure(const Graph& hbar, const CertifyOptions& options, CertificationReport& report) {
  const auto& comps = report.inventory.components;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Component& c = comps[i];
    if (c.star || c.vertices.size() > options.structure_max_order) continue;
    const Graph h = induced_subgraph(hbar, c.vertices);
    ComponentStructure entry;
    entry.component = i;
    entry.uniformity = uniformity_params(h);
    entry.excess = excess(h);
    entry.closeness = closeness(h);
    entry.verdict = structural_filters(h);
    report.structure.push_back(std::move(entry));
  }
}

}  // namespace

CertificationReport is_cobug(const Graph& hbar, const CertifyOptions& options) {
  CertificationReport report;
  report.n = hbar.vertex_count();
  report.edge_count = hbar.edge_count();
  report.inventory = connected_components(hbar);
  if (report.n == 0) {
    report.violations.emplace_back("empty-graph");
    report.exotic_reason = "not a coBUG";
    return report;
  }

  // An edge close to every vertex is a spanning double star of hbar, i.e. the
  // complement has diameter at least 3.
  const CloseCounts counts = close_counts(hbar);
  const bool diameter_at_most_2 =
      std::none_of(counts.edge_close.begin(), counts.edge_close.end(),
                   [n = report.n](std::size_t c) { return c >= n; });

  if (diameter_at_most_2) {
    report.route = CertificationRoute::co_betweenness;
    const WeightedComplement wc = co_betweenness_all(hbar);
    report.is_cobug = wc.co_betweenness_uniform();
    if (report.is_cobug) {
      report.co_betweenness = wc.co_betweenness.front();
      report.betweenness = Rational::fraction(static_cast<std::int64_t>(report.edge_count),
                                              static_cast<std::int64_t>(report.n));
    } else {
      report.violations.emplace_back("co-betweenness-not-uniform");
    }
  } else {
    report.violations.emplace_back("undefined-weight");
    direct_fallback(hbar, options, report);
  }
  report.complement_is_bug = report.is_cobug;
  fill_exotic(report);
  fill_structure(hbar, options, report);
  return report;
}

}  // namespace bugscope
