#include "bugscope/search.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "bugscope/centrality.hpp"
#include "bugscope/complement_lens.hpp"
#include "bugscope/enumerate.hpp"
#include "bugscope/errors.hpp"
#include "bugscope/graph_io.hpp"
#include "bugscope/parallel.hpp"

namespace bugscope {

namespace {

std::vector<Graph> candidate_source(const SearchConfig& cfg) {
  if (cfg.corpus) return read_graph6_corpus_file(*cfg.corpus);
  if (cfg.component_vertex_cap > kMaxEnumeratedOrder) {
    throw UnsupportedSizeError("component cap " + std::to_string(cfg.component_vertex_cap) +
                               " exceeds the built-in enumerator limit of " +
                               std::to_string(kMaxEnumeratedOrder) + "; supply a graph6 corpus");
  }
  return enumerate_connected_graphs_up_to(cfg.component_vertex_cap);
}

void validate(const SearchConfig& cfg) {
  if (cfg.ell_min > cfg.ell_max) throw PreconditionError("ell_min exceeds ell_max");
  if (cfg.max_nonstar_components < 1 || cfg.max_nonstar_components > 2) {
    throw PreconditionError("max_nonstar_components must be 1 or 2");
  }
}

/// A surviving candidate with the data the host loop needs.
struct Survivor {
  std::size_t candidate = 0;
  Graph graph;
  CloseProfile profile;
  std::size_t t = 0;
  std::size_t edges = 0;
  std::size_t closeness = 0;
};

Survivor make_survivor(std::size_t index, const Graph& g) {
  Survivor s;
  s.candidate = index;
  s.graph = g;
  s.profile = close_profile(g);
  s.t = g.vertex_count();
  s.edges = g.edge_count();
  for (const CloseHistogram& vh : s.profile.vertex) {
    std::size_t total = 0;
    for (const auto& [size, count] : vh) total += static_cast<std::size_t>(count);
    s.closeness = std::max(s.closeness, total);
  }
  return s;
}

struct Window {
  std::int64_t lo = 0;  // first admissible n (already in the right residue class)
  std::int64_t hi = 0;
  bool n_cap_limited = false;

  bool empty() const { return lo > hi; }
};

/// Host orders for non-star components on t vertices of closeness values cs.
Window host_window(const SearchConfig& cfg, std::size_t ell, std::size_t t, std::initializer_list<std::size_t> cs) {
  const auto l = static_cast<std::int64_t>(ell);
  const auto ti = static_cast<std::int64_t>(t);
  Window w;
  std::int64_t lo = ti + l + 1;
  if (!cfg.allow_betweenness_one) lo = std::max(lo, 3 * (l + 1) + ti);
  w.hi = static_cast<std::int64_t>(cfg.n_cap);
  w.n_cap_limited = true;
  if (!cfg.allow_betweenness_one) {
    for (std::size_t c : cs) {
      if (c <= ell) continue;
      const std::int64_t bound = closeness_bound(ell, c);
      if (bound <= w.hi) {
        w.hi = bound;
        w.n_cap_limited = false;
      }
    }
  }
  const std::int64_t step = l + 1;
  const std::int64_t shift = ((ti - lo) % step + step) % step;
  w.lo = lo + shift;
  return w;
}

Rational star_co_betweenness(std::size_t ell, std::size_t n) {
  return Rational::fraction(static_cast<std::int64_t>(ell), static_cast<std::int64_t>(n - ell - 1));
}

bool balanced_at(const Survivor& s, std::size_t ell, std::size_t n) {
  const auto common = uniform_co_betweenness_at(s.profile, n);
  return common && *common == star_co_betweenness(ell, n);
}

/// A balanced (components, ell, n) before certification.
struct RawHit {
  std::size_t ell = 0;
  std::size_t n = 0;
  std::vector<std::size_t> survivors;
};

struct SingleOutcome {
  std::vector<EllStats> stats;  // indexed by ell - ell_min
  std::vector<RawHit> hits;
  std::vector<std::string> log;
};

bool low_betweenness(std::size_t nonstar_edges, std::size_t nonstar_vertices, std::size_t ell, std::size_t n) {
  const std::size_t copies = (n - nonstar_vertices) / (ell + 1);
  return nonstar_edges + copies * ell < n;
}

SingleOutcome evaluate_single(const SearchConfig& cfg, const Survivor& s, std::size_t index) {
  SingleOutcome out;
  for (std::size_t ell = cfg.ell_min; ell <= cfg.ell_max; ++ell) {
    EllStats st;
    st.ell = ell;
    st.evaluated = 1;
    const Window w = host_window(cfg, ell, s.t, {s.closeness});
    std::string entry = "l=" + std::to_string(ell) + ": ";
    if (w.empty()) {
      st.window_empty = 1;
      entry += "window-empty";
    } else {
      if (w.n_cap_limited) st.n_cap_limited = 1;
      std::vector<std::size_t> balanced;
      for (std::int64_t n = w.lo; n <= w.hi; n += static_cast<std::int64_t>(ell + 1)) {
        const auto host = static_cast<std::size_t>(n);
        ++st.hosts_tested;
        if (!balanced_at(s, ell, host)) {
          ++st.mismatches;
          continue;
        }
        balanced.push_back(host);
        const bool low = low_betweenness(s.edges, s.t, ell, host);
        if (low || cfg.allow_betweenness_one) ++st.accepted;
        out.hits.push_back({ell, host, {index}});
      }
      if (balanced.empty()) {
        entry += "co-betweenness-mismatch (" + std::to_string(st.hosts_tested) + " hosts)";
      } else {
        entry += "balanced at n =";
        for (std::size_t n : balanced) entry += " " + std::to_string(n);
      }
    }
    out.log.push_back(std::move(entry));
    out.stats.push_back(st);
  }
  return out;
}

/// balanced[ell - ell_min][n] for n up to n_cap.
std::vector<std::vector<char>> balance_table(const SearchConfig& cfg, const Survivor& s) {
  std::vector<std::vector<char>> table;
  for (std::size_t ell = cfg.ell_min; ell <= cfg.ell_max; ++ell) {
    std::vector<char> row(cfg.n_cap + 1, 0);
    for (std::size_t n = s.t + ell + 2; n <= cfg.n_cap; ++n) row[n] = balanced_at(s, ell, n) ? 1 : 0;
    table.push_back(std::move(row));
  }
  return table;
}

SingleOutcome evaluate_pairs_from(const SearchConfig& cfg, const std::vector<Survivor>& survivors,
                                  const std::vector<std::vector<std::vector<char>>>& tables, std::size_t i) {
  SingleOutcome out;
  const Survivor& a = survivors[i];
  for (std::size_t ell = cfg.ell_min; ell <= cfg.ell_max; ++ell) {
    EllStats st;
    st.ell = ell;
    const std::size_t row = ell - cfg.ell_min;
    for (std::size_t j = i; j < survivors.size(); ++j) {
      const Survivor& b = survivors[j];
      ++st.evaluated;
      const Window w = host_window(cfg, ell, a.t + b.t, {a.closeness, b.closeness});
      if (w.empty()) {
        ++st.window_empty;
        continue;
      }
      if (w.n_cap_limited) ++st.n_cap_limited;
      for (std::int64_t n = w.lo; n <= w.hi; n += static_cast<std::int64_t>(ell + 1)) {
        const auto host = static_cast<std::size_t>(n);
        ++st.hosts_tested;
        if (!tables[i][row][host] || !tables[j][row][host]) {
          ++st.mismatches;
          continue;
        }
        const bool low = low_betweenness(a.edges + b.edges, a.t + b.t, ell, host);
        if (low || cfg.allow_betweenness_one) ++st.accepted;
        out.hits.push_back({ell, host, {i, j}});
      }
    }
    out.stats.push_back(st);
  }
  return out;
}

void add_stats(EllStats& into, const EllStats& from) {
  into.evaluated += from.evaluated;
  into.window_empty += from.window_empty;
  into.n_cap_limited += from.n_cap_limited;
  into.hosts_tested += from.hosts_tested;
  into.mismatches += from.mismatches;
  into.accepted += from.accepted;
}

}  // namespace

std::vector<CandidateOutcome> classify_candidates(const SearchConfig& cfg) {
  std::vector<Graph> source = candidate_source(cfg);
  std::vector<CandidateOutcome> out(source.size());
  parallel_for(source.size(), cfg.jobs, [&](std::size_t i) {
    CandidateOutcome& o = out[i];
    o.graph = std::move(source[i]);
    const Graph& h = o.graph;
    if (h.vertex_count() > cfg.component_vertex_cap) {
      o.pruned_by = kPrunedOverCap;
    } else if (!is_connected(h)) {
      o.pruned_by = kPrunedDisconnected;
    } else if (is_star(h)) {
      o.pruned_by = kPrunedStar;
    } else if (!cfg.allow_betweenness_one) {
      o.failed_claims = structural_filters(h).failed_claims;
      if (uniformity_params(h).is_uniform) {
        o.pruned_by = kPrunedUniform;
      } else if (!o.failed_claims.empty()) {
        o.pruned_by = std::string(claim_name(o.failed_claims.front()));
      }
    }
  });
  return out;
}

std::vector<Graph> candidate_components(const SearchConfig& cfg) {
  std::vector<Graph> out;
  for (CandidateOutcome& o : classify_candidates(cfg))
    if (!o.pruned_by) out.push_back(std::move(o.graph));
  return out;
}

SearchResult exotic_search(const SearchConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  SearchResult result;
  result.config = cfg;

  std::vector<CandidateOutcome> outcomes = classify_candidates(cfg);
  result.enumerated = outcomes.size();

  std::vector<std::string> filter_order{kPrunedOverCap, kPrunedDisconnected, kPrunedStar, kPrunedUniform};
  for (Claim c : kAllClaims) filter_order.emplace_back(claim_name(c));
  for (const std::string& name : filter_order) result.pruned_counts.emplace_back(name, 0);
  for (Claim c : kAllClaims) result.claim_tallies.emplace_back(std::string(claim_name(c)), 0);

  std::vector<std::size_t> survivor_index;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const CandidateOutcome& o = outcomes[i];
    for (Claim c : o.failed_claims) ++result.claim_tallies[static_cast<std::size_t>(c)].second;
    if (o.pruned_by) {
      const auto pos = std::find(filter_order.begin(), filter_order.end(), *o.pruned_by) - filter_order.begin();
      ++result.pruned_counts[static_cast<std::size_t>(pos)].second;
    } else {
      survivor_index.push_back(i);
    }
  }
  result.survivors = survivor_index.size();

  std::vector<Survivor> survivors(survivor_index.size());
  parallel_for(survivors.size(), cfg.jobs, [&](std::size_t k) {
    survivors[k] = make_survivor(survivor_index[k], outcomes[survivor_index[k]].graph);
  });

  for (std::size_t ell = cfg.ell_min; ell <= cfg.ell_max; ++ell) result.per_ell.push_back({.ell = ell});

  std::vector<SingleOutcome> singles(survivors.size());
  parallel_for(survivors.size(), cfg.jobs, [&](std::size_t k) { singles[k] = evaluate_single(cfg, survivors[k], k); });

  std::vector<SingleOutcome> pairs;
  if (cfg.max_nonstar_components == 2) {
    std::vector<std::vector<std::vector<char>>> tables(survivors.size());
    parallel_for(survivors.size(), cfg.jobs, [&](std::size_t k) { tables[k] = balance_table(cfg, survivors[k]); });
    pairs.resize(survivors.size());
    parallel_for(survivors.size(), cfg.jobs,
                 [&](std::size_t k) { pairs[k] = evaluate_pairs_from(cfg, survivors, tables, k); });
  }

  std::vector<RawHit> raw;
  for (const auto* group : {&singles, &pairs}) {
    for (const SingleOutcome& o : *group) {
      for (std::size_t e = 0; e < o.stats.size(); ++e) add_stats(result.per_ell[e], o.stats[e]);
      raw.insert(raw.end(), o.hits.begin(), o.hits.end());
    }
  }

  std::vector<bool> participates(survivors.size(), false);
  std::vector<SearchHit> hits(raw.size());
  parallel_for(raw.size(), cfg.jobs, [&](std::size_t r) {
    const RawHit& rh = raw[r];
    SearchHit& hit = hits[r];
    hit.ell = rh.ell;
    hit.n = rh.n;
    std::size_t t_total = 0;
    std::vector<Graph> parts;
    for (std::size_t k : rh.survivors) {
      hit.components.push_back(survivors[k].graph);
      parts.push_back(survivors[k].graph);
      t_total += survivors[k].t;
    }
    hit.star_copies = (rh.n - t_total) / (rh.ell + 1);
    const Graph star = star_graph(rh.ell);
    for (std::size_t c = 0; c < hit.star_copies; ++c) parts.push_back(star);
    hit.graph = disjoint_union(parts);
    hit.report = is_cobug(hit.graph);
  });
  for (std::size_t r = 0; r < raw.size(); ++r) {
    for (std::size_t k : raw[r].survivors) participates[k] = true;
    (hits[r].report.exotic ? result.found : result.non_exotic).push_back(std::move(hits[r]));
  }

  result.accepted_candidates = static_cast<std::size_t>(std::count(participates.begin(), participates.end(), true));
  result.pruned_counts.emplace_back(kPrunedNoHost, survivors.size() - result.accepted_candidates);

  if (cfg.record_eliminations) {
    std::vector<std::string> survivor_log(outcomes.size());
    for (std::size_t k = 0; k < survivors.size(); ++k) {
      std::string joined;
      for (const std::string& entry : singles[k].log) joined += (joined.empty() ? "" : "; ") + entry;
      survivor_log[survivors[k].candidate] = std::move(joined);
    }
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      result.eliminations.push_back(
          {to_graph6(outcomes[i].graph), outcomes[i].pruned_by ? *outcomes[i].pruned_by : survivor_log[i]});
    }
  }

  // Every configured window was evaluated in full; coverage beyond n_cap is
  // reported through EllStats::n_cap_limited, not through this flag.
  result.exhausted = true;
  result.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

StarExclusionReport verify_star_exclusion(std::size_t ell, std::size_t cap, const SearchConfig& base) {
  StarExclusionReport r;
  r.ell = ell;
  const auto l = static_cast<std::int64_t>(ell);
  r.n_lower = 3 * l + 9;
  r.n_upper = closeness_bound(ell, ell + 1);
  if (const auto mincob = min_co_betweenness_bound(ell)) r.n_upper = std::min(r.n_upper, *mincob);
  r.window_empty = r.n_upper < r.n_lower;
  for (std::size_t c = ell + 1; closeness_bound(ell, c) >= r.n_lower; ++c) r.forced_closeness.push_back(c);
  if (!r.window_empty) {
    const std::int64_t q = (r.n_upper - 6) / (l + 1);
    r.max_excess = q - 1;
  }

  SearchConfig cfg = base;
  cfg.ell_min = ell;
  cfg.ell_max = ell;
  cfg.component_vertex_cap = cap;
  cfg.allow_betweenness_one = false;
  cfg.record_eliminations = true;
  r.search = exotic_search(cfg);
  r.excluded = r.search.found.empty();
  return r;
}

std::vector<BugEntry> exhaustive_bug_scan(std::size_t n_max, std::size_t jobs) {
  if (n_max > kMaxEnumeratedOrder) {
    throw UnsupportedSizeError("exhaustive scans support at most " + std::to_string(kMaxEnumeratedOrder) +
                               " vertices");
  }
  std::vector<BugEntry> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::vector<Graph>& graphs = enumerate_connected_graphs(n);
    std::vector<BugVerdict> verdicts(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) { verdicts[i] = is_bug(graphs[i]); });
    for (std::size_t i = 0; i < graphs.size(); ++i)
      if (verdicts[i].is_bug) out.push_back({graphs[i], *verdicts[i].value});
  }
  return out;
}

}  // namespace bugscope
