#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bugscope/graph.hpp"
#include "bugscope/rational.hpp"

namespace bugscope {

// A vertex v is close to an edge xy when v is adjacent to x or to y; the
// endpoints are close to their own edge. close(e) = N(x) ∪ N(y) and close(v)
// is the set of edges meeting N(v).

/// Materialised close sets. Memory is Σ_e |close(e)|, so this is meant for
/// small and medium graphs; CloseCounts covers large hosts.
struct ClosenessTables {
  std::size_t n_total = 0;
  std::vector<Edge> edges;                              // by edge id
  std::vector<std::vector<Vertex>> close_of_edge;       // sorted vertex sets
  std::vector<std::vector<std::size_t>> close_of_vertex;  // sorted edge ids
};

/// Tables for h as its own host (n_total = |V(h)|), or for h as a component
/// of a host with n_total >= |V(h)| vertices.
ClosenessTables closeness_tables(const Graph& h);
ClosenessTables closeness_tables(const Graph& h, std::size_t n_total);

/// Only the cardinalities |close(e)| and |close(v)|.
struct CloseCounts {
  std::size_t n_total = 0;
  std::vector<std::size_t> edge_close;
  std::vector<std::size_t> vertex_close;
};

CloseCounts close_counts(const Graph& h);
CloseCounts close_counts(const Graph& h, std::size_t n_total);

/// (|close(e)|, multiplicity) pairs, ascending by size.
using CloseHistogram = std::vector<std::pair<std::size_t, std::int64_t>>;

/// Host-independent summary: every edge's close size and, per vertex, the
/// histogram of close sizes over the edges close to it. Enough to evaluate
/// co-betweenness for any host order.
struct CloseProfile {
  std::vector<std::size_t> edge_close;
  std::vector<CloseHistogram> vertex;

  std::size_t max_edge_close() const;
};

CloseProfile close_profile(const Graph& h);

/// The common co-betweenness of every vertex of h inside a host of n_total
/// vertices, or nullopt when the values differ. Requires n_total to exceed
/// every edge's close size (PreconditionError otherwise).
std::optional<Rational> uniform_co_betweenness_at(const CloseProfile& profile, std::size_t n_total);

/// 1 / (n_total - |close(e)|). Throws UndefinedWeightError when the edge is
/// close to every host vertex.
Rational edge_weight(const ClosenessTables& tables, std::size_t edge_id);

/// Edge weights and co-betweenness coB(x) = Σ_{e ∈ close(x)} w(e).
struct WeightedComplement {
  std::size_t n_total = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_close;
  std::vector<Rational> co_betweenness;
  Rational total_weight;

  Rational weight(std::size_t edge_id) const;
  bool co_betweenness_uniform() const;
};

/// Works from close-set sizes and neighbourhood intersections only, so hosts
/// with hundreds of thousands of vertices are fine. Throws UndefinedWeightError.
WeightedComplement co_betweenness_all(const Graph& h);
WeightedComplement co_betweenness_all(const Graph& h, std::size_t n_total);

/// B_G(x) == Σ w - coB(x) on the complement, for every vertex of g.
/// Requires diameter(g) <= 2 (PreconditionError otherwise).
bool weight_identity_check(const Graph& g);

/// First pair (x, y), in lexicographic order, with close(x) ⊊ close(y).
std::optional<std::pair<Vertex, Vertex>> close_inclusion_violation(const Graph& h);
std::optional<std::pair<Vertex, Vertex>> close_inclusion_violation(const ClosenessTables& tables,
                                                                   std::size_t vertex_count);

}  // namespace bugscope
