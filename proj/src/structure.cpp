#include "bugscope/structure.hpp"

#include <algorithm>
#include <functional>

#include "bugscope/complement_lens.hpp"
#include "bugscope/errors.hpp"

namespace bugscope {

UniformityReport uniformity_params(const Graph& h) {
  const CloseCounts counts = close_counts(h);
  UniformityReport r;
  const auto all_same = [](const std::vector<std::size_t>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
  };
  r.is_uniform = all_same(counts.vertex_close) && all_same(counts.edge_close);
  if (r.is_uniform) {
    r.m = counts.vertex_close.empty() ? 0 : counts.vertex_close.front();
    r.t = counts.edge_close.empty() ? 0 : counts.edge_close.front();
  }
  r.is_complete_multipartite = is_complete_multipartite(h);
  return r;
}

bool is_complete_multipartite(const Graph& h) {
  for (const Edge& e : h.edges()) {
    for (Vertex w = 0; w < h.vertex_count(); ++w) {
      if (w == e.u || w == e.v) continue;
      if (!h.adjacent(w, e.u) && !h.adjacent(w, e.v)) return false;
    }
  }
  return true;
}

std::int64_t excess(const Graph& h) {
  return static_cast<std::int64_t>(h.edge_count()) - static_cast<std::int64_t>(h.vertex_count());
}

std::size_t closeness(const Graph& h) {
  const CloseCounts counts = close_counts(h);
  return counts.vertex_close.empty()
             ? 0
             : *std::max_element(counts.vertex_close.begin(), counts.vertex_close.end());
}

std::string_view claim_name(Claim c) {
  switch (c) {
    case Claim::degree_1: return "degree-1";
    case Claim::triangle_deg2: return "triangle-deg2";
    case Claim::c4c5_adjacent_deg2: return "c4c5-adjacent-deg2";
    case Claim::path_of_three_deg2: return "path-of-three-deg2";
    case Claim::close_inclusion: return "close-inclusion";
    case Claim::min_close_4: return "min-close-4";
    case Claim::min_size_6: return "min-size-6";
    case Claim::excess_lt_2: return "excess-lt-2";
    case Claim::closeness_bound: return "closeness-bound";
  }
  return "unknown";
}

std::optional<Claim> claim_from_name(std::string_view name) {
  for (Claim c : kAllClaims)
    if (claim_name(c) == name) return c;
  return std::nullopt;
}

bool StructuralVerdict::failed(Claim c) const {
  return std::find(failed_claims.begin(), failed_claims.end(), c) != failed_claims.end();
}

namespace {

Vertex other_neighbor(const Graph& h, Vertex of, Vertex not_this) {
  for (Vertex w : h.neighbors(of))
    if (w != not_this) return w;
  return not_this;
}

bool has_common_neighbor(const Graph& h, Vertex a, Vertex b) {
  const auto na = h.neighbors(a);
  const auto nb = h.neighbors(b);
  auto i = na.begin();
  auto j = nb.begin();
  while (i != na.end() && j != nb.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

}  // namespace

StructuralVerdict structural_filters(const Graph& h) {
  if (!is_connected(h)) throw PreconditionError("structural filters need a connected graph");
  if (is_star(h)) throw PreconditionError("structural filters do not apply to stars");

  const std::size_t n = h.vertex_count();
  const ClosenessTables tables = closeness_tables(h);
  const auto deg = [&h](Vertex v) { return h.degree(v); };

  std::vector<bool> fails(kAllClaims.size(), false);
  const auto mark = [&fails](Claim c) { fails[static_cast<std::size_t>(c)] = true; };

  for (Vertex x = 0; x < n; ++x) {
    if (deg(x) == 1) mark(Claim::degree_1);
    if (deg(x) != 2) continue;
    const auto nb = h.neighbors(x);
    if (h.adjacent(nb[0], nb[1])) mark(Claim::triangle_deg2);
    if (deg(nb[0]) == 2 && deg(nb[1]) == 2) mark(Claim::path_of_three_deg2);
  }

  for (const Edge& e : h.edges()) {
    if (deg(e.u) != 2 || deg(e.v) != 2) continue;
    const Vertex a = other_neighbor(h, e.u, e.v);
    const Vertex b = other_neighbor(h, e.v, e.u);
    if (a == b) continue;  // triangle, covered by triangle-deg2
    if (h.adjacent(a, b) || has_common_neighbor(h, a, b)) mark(Claim::c4c5_adjacent_deg2);
  }

  if (close_inclusion_violation(tables, n)) mark(Claim::close_inclusion);
  for (const auto& set : tables.close_of_edge)
    if (set.size() < 4) mark(Claim::min_close_4);
  if (n < 6) mark(Claim::min_size_6);
  if (excess(h) < 2) mark(Claim::excess_lt_2);
  for (Vertex v = 0; v < n; ++v)
    if (tables.close_of_vertex[v].size() < 2 * deg(v)) mark(Claim::closeness_bound);

  StructuralVerdict verdict;
  for (Claim c : kAllClaims)
    if (fails[static_cast<std::size_t>(c)]) verdict.failed_claims.push_back(c);
  verdict.passes = verdict.failed_claims.empty();
  return verdict;
}

StarUniformConstraints star_uniform_constraints(std::size_t ell, std::size_t m, std::size_t t) {
  if (m < 1 || t < 2) throw PreconditionError("star/uniform constraints need m >= 1 and t >= 2");
  const auto l = static_cast<std::int64_t>(ell);
  const auto mi = static_cast<std::int64_t>(m);
  const auto ti = static_cast<std::int64_t>(t);

  StarUniformConstraints r;
  r.item3 = mi > l && ti < l + 1;
  r.item4 = l * (l + 1) >= mi * ti;
  if (mi == l) {
    r.reasons.emplace_back("m equals l: the co-betweenness balance has no solution for n");
  } else {
    const Rational extra = Rational::fraction(l * (l + 1 - ti), mi - l);
    r.n = Rational(l + 1) + extra;
    r.item2 = extra >= Rational(ti);
    r.n_positive_integer = r.n->is_integer() && r.n->sign() > 0;
    if (!r.item2) r.reasons.emplace_back("item 2 fails: l(l+1-t)/(m-l) < t");
    if (!r.n_positive_integer) r.reasons.emplace_back("forced n = " + r.n->to_string() + " is not a positive integer");
  }
  if (!r.item3) r.reasons.emplace_back("item 3 fails: need m > l and t < l+1");
  if (!r.item4) r.reasons.emplace_back("item 4 fails: l(l+1) < m t");
  r.feasible = r.n.has_value() && r.item2 && r.item3 && r.item4 && r.n_positive_integer;
  return r;
}

std::int64_t closeness_bound(std::size_t ell, std::size_t c) {
  if (c <= ell) throw PreconditionError("closeness bound needs c > l");
  const auto l = static_cast<std::int64_t>(ell);
  const auto ci = static_cast<std::int64_t>(c);
  const std::int64_t num = ci * (l + 1) - 4 * l;
  const std::int64_t den = ci - l;
  std::int64_t q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

std::optional<std::int64_t> min_co_betweenness_bound(std::size_t ell) {
  if (ell >= 6) return std::nullopt;
  const auto l = static_cast<std::int64_t>(ell);
  return (2 * l + 6) / (6 - l);
}

}  // namespace bugscope
