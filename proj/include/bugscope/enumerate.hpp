#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bugscope/graph.hpp"

namespace bugscope {

/// Largest order served by the built-in enumerator; bigger candidate spaces
/// come from graph6 corpora.
inline constexpr std::size_t kMaxEnumeratedOrder = 8;

/// Adjacency code of a labelled graph on at most 11 vertices: the graph6
/// upper-triangle bit string read as a big-endian integer.
std::uint64_t adjacency_code(const Graph& g);
Graph graph_from_code(std::size_t n, std::uint64_t code);

/// Minimum adjacency code over all n! relabellings (n <= 8).
std::uint64_t canonical_code_exhaustive(const Graph& g);

/// Minimum adjacency code over the relabellings that respect the stable
/// colour-refinement partition (n <= 11). An isomorphism invariant, usually
/// far cheaper than the exhaustive form; the two codes differ in general.
std::uint64_t canonical_code_refined(const Graph& g);

/// One representative per isomorphism class of connected graphs on n
/// vertices, ordered by (edge count, canonical code). Results are computed
/// once per order and cached; safe to call concurrently.
///
/// Orders up to 6 deduplicate with canonical_code_exhaustive, orders 7 and 8
/// with canonical_code_refined. Throws UnsupportedSizeError outside 1..8.
const std::vector<Graph>& enumerate_connected_graphs(std::size_t n);

/// All connected graphs with 1..n_max vertices, smallest order first.
std::vector<Graph> enumerate_connected_graphs_up_to(std::size_t n_max);

}  // namespace bugscope
