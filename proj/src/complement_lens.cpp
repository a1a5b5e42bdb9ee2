#include "bugscope/complement_lens.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "bugscope/centrality.hpp"
#include "bugscope/errors.hpp"

namespace bugscope {

namespace {

using Histogram = CloseHistogram;

// A handful of entries per vertex in practice, so a flat vector with linear
// lookup.
void bump(Histogram& hist, std::size_t close, std::int64_t delta) {
  for (auto& [size, count] : hist) {
    if (size == close) {
      count += delta;
      return;
    }
  }
  hist.emplace_back(close, delta);
}

template <class Fn>
void for_each_common_neighbor(const Graph& g, Vertex a, Vertex b, Fn&& fn) {
  auto na = g.neighbors(a);
  auto nb = g.neighbors(b);
  if (na.size() > nb.size()) std::swap(na, nb);
  if (na.size() * 16 < nb.size()) {
    for (Vertex x : na)
      if (std::binary_search(nb.begin(), nb.end(), x)) fn(x);
    return;
  }
  auto i = na.begin();
  auto j = nb.begin();
  while (i != na.end() && j != nb.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      fn(*i);
      ++i;
      ++j;
    }
  }
}

void check_host(const Graph& h, std::size_t n_total) {
  if (n_total < h.vertex_count()) {
    throw PreconditionError("host order " + std::to_string(n_total) + " is smaller than the graph (" +
                            std::to_string(h.vertex_count()) + " vertices)");
  }
}

}  // namespace

// |close(uv)| = deg u + deg v - |N(u) ∩ N(v)|, and the edges close to x are
// those incident to a neighbour of x, counted once even when both endpoints
// are neighbours of x (i.e. the edge closes a triangle through x).
CloseProfile close_profile(const Graph& h) {
  const std::size_t n = h.vertex_count();
  CloseProfile out;
  out.edge_close.resize(h.edge_count());
  std::vector<Histogram> incident(n);
  out.vertex.assign(n, {});
  std::vector<Vertex> common;
  for (std::size_t id = 0; id < h.edge_count(); ++id) {
    const Edge e = h.edges()[id];
    common.clear();
    for_each_common_neighbor(h, e.u, e.v, [&](Vertex x) { common.push_back(x); });
    const std::size_t close = h.degree(e.u) + h.degree(e.v) - common.size();
    out.edge_close[id] = close;
    bump(incident[e.u], close, 1);
    bump(incident[e.v], close, 1);
    for (Vertex x : common) bump(out.vertex[x], close, -1);
  }
  for (Vertex x = 0; x < n; ++x) {
    Histogram& acc = out.vertex[x];
    for (Vertex u : h.neighbors(x))
      for (const auto& [size, count] : incident[u]) bump(acc, size, count);
    std::erase_if(acc, [](const auto& entry) { return entry.second == 0; });
    std::sort(acc.begin(), acc.end());
  }
  return out;
}

std::size_t CloseProfile::max_edge_close() const {
  return edge_close.empty() ? 0 : *std::max_element(edge_close.begin(), edge_close.end());
}

std::optional<Rational> uniform_co_betweenness_at(const CloseProfile& profile, std::size_t n_total) {
  if (n_total <= profile.max_edge_close()) {
    throw PreconditionError("host order " + std::to_string(n_total) + " leaves some edge weight undefined");
  }
  std::map<std::size_t, Rational> inverse;
  const auto weight_of = [&](std::size_t close) -> const Rational& {
    auto it = inverse.find(close);
    if (it == inverse.end()) {
      it = inverse.emplace(close, Rational::fraction(1, static_cast<std::int64_t>(n_total - close))).first;
    }
    return it->second;
  };
  std::optional<Rational> common;
  for (const CloseHistogram& vh : profile.vertex) {
    Rational cob;
    for (const auto& [close, count] : vh) cob += Rational(count) * weight_of(close);
    if (!common) {
      common = std::move(cob);
    } else if (*common != cob) {
      return std::nullopt;
    }
  }
  return common ? common : Rational();
}

ClosenessTables closeness_tables(const Graph& h) { return closeness_tables(h, h.vertex_count()); }

ClosenessTables closeness_tables(const Graph& h, std::size_t n_total) {
  check_host(h, n_total);
  ClosenessTables t;
  t.n_total = n_total;
  t.edges = h.edges();
  t.close_of_edge.resize(h.edge_count());
  t.close_of_vertex.resize(h.vertex_count());
  for (std::size_t id = 0; id < t.edges.size(); ++id) {
    const auto nu = h.neighbors(t.edges[id].u);
    const auto nv = h.neighbors(t.edges[id].v);
    auto& set = t.close_of_edge[id];
    std::set_union(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(set));
    for (Vertex x : set) t.close_of_vertex[x].push_back(id);
  }
  return t;
}

CloseCounts close_counts(const Graph& h) { return close_counts(h, h.vertex_count()); }

CloseCounts close_counts(const Graph& h, std::size_t n_total) {
  check_host(h, n_total);
  CloseProfile hist = close_profile(h);
  CloseCounts counts;
  counts.n_total = n_total;
  counts.edge_close = std::move(hist.edge_close);
  counts.vertex_close.reserve(h.vertex_count());
  for (const Histogram& vh : hist.vertex) {
    std::int64_t total = 0;
    for (const auto& [size, count] : vh) total += count;
    counts.vertex_close.push_back(static_cast<std::size_t>(total));
  }
  return counts;
}

Rational edge_weight(const ClosenessTables& tables, std::size_t edge_id) {
  const std::size_t close = tables.close_of_edge.at(edge_id).size();
  if (close >= tables.n_total) throw UndefinedWeightError(tables.edges[edge_id].u, tables.edges[edge_id].v);
  return Rational::fraction(1, static_cast<std::int64_t>(tables.n_total - close));
}

Rational WeightedComplement::weight(std::size_t edge_id) const {
  return Rational::fraction(1, static_cast<std::int64_t>(n_total - edge_close.at(edge_id)));
}

bool WeightedComplement::co_betweenness_uniform() const {
  return std::adjacent_find(co_betweenness.begin(), co_betweenness.end(), std::not_equal_to<>()) ==
         co_betweenness.end();
}

WeightedComplement co_betweenness_all(const Graph& h) { return co_betweenness_all(h, h.vertex_count()); }

WeightedComplement co_betweenness_all(const Graph& h, std::size_t n_total) {
  check_host(h, n_total);
  CloseProfile hist = close_profile(h);
  WeightedComplement wc;
  wc.n_total = n_total;
  wc.edges = h.edges();

  std::map<std::size_t, Rational> inverse;
  std::map<std::size_t, std::int64_t> per_size;
  for (std::size_t id = 0; id < hist.edge_close.size(); ++id) {
    const std::size_t close = hist.edge_close[id];
    if (close >= n_total) throw UndefinedWeightError(wc.edges[id].u, wc.edges[id].v);
    if (!inverse.contains(close)) {
      inverse.emplace(close, Rational::fraction(1, static_cast<std::int64_t>(n_total - close)));
    }
    ++per_size[close];
  }
  for (const auto& [close, count] : per_size) wc.total_weight += Rational(count) * inverse.at(close);

  wc.co_betweenness.reserve(h.vertex_count());
  for (const Histogram& vh : hist.vertex) {
    Rational cob;
    for (const auto& [close, count] : vh) cob += Rational(count) * inverse.at(close);
    wc.co_betweenness.push_back(std::move(cob));
  }
  wc.edge_close = std::move(hist.edge_close);
  return wc;
}

bool weight_identity_check(const Graph& g) {
  if (!diameter(g).at_most(2)) {
    throw PreconditionError("the weight identity needs a graph of diameter at most 2");
  }
  const BetweennessProfile profile = betweenness_exact(g);
  const WeightedComplement wc = co_betweenness_all(complement(g));
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    if (profile.per_vertex[x] != wc.total_weight - wc.co_betweenness[x]) return false;
  }
  return true;
}

std::optional<std::pair<Vertex, Vertex>> close_inclusion_violation(const Graph& h) {
  return close_inclusion_violation(closeness_tables(h), h.vertex_count());
}

std::optional<std::pair<Vertex, Vertex>> close_inclusion_violation(const ClosenessTables& tables,
                                                                   std::size_t vertex_count) {
  const auto& cv = tables.close_of_vertex;
  for (Vertex x = 0; x < vertex_count; ++x) {
    for (Vertex y = 0; y < vertex_count; ++y) {
      if (cv[x].size() >= cv[y].size()) continue;
      if (std::includes(cv[y].begin(), cv[y].end(), cv[x].begin(), cv[x].end())) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

}  // namespace bugscope
