#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bugscope/graph.hpp"
#include "bugscope/rational.hpp"

namespace bugscope {

enum class Family { stars, cycles, multipartite_plus_stars, above_one, inflated_cycles };

std::string_view family_name(Family f);

struct ConstructionSpec {
  Family family = Family::stars;
  std::vector<std::int64_t> parameters;
  Rational predicted_betweenness;
};

/// A coBUG together with the betweenness its complement is expected to have.
/// Components are laid out in parameter order.
struct Construction {
  Graph graph;
  ConstructionSpec spec;
};

/// k copies of K_{1,l}; predicts l/(l+1). Requires k >= 2.
Construction stars_cobug(std::int64_t k, std::int64_t ell);

/// Disjoint cycles; predicts 1. Requires at least two cycles, each of length >= 4.
Construction cycles_cobug(std::span<const std::int64_t> lengths);

/// H ∪ (m-t) K_{1,m-1} with H complete multipartite on t vertices and m edges;
/// predicts 1. Requires m > t.
Construction multipartite_plus_stars(std::span<const std::int64_t> part_sizes);

/// k K_{1,l} ∪ b K_{c,c} with k = 4t²-4t-1, l = 4t²-1, b = t+1, c = 2t;
/// predicts (4t+1)/(4t). Requires t >= 2.
Construction family_above_one(std::int64_t t);

/// 27-fold inflation of a union of cycles on 721 vertices, next to 81 copies
/// of K_{1,3924}; predicts 13/4. Requires lengths >= 4 summing to 721.
Construction inflated_cycles_cobug(std::span<const std::int64_t> cycle_lengths);

/// Parses "stars k l", "cycles l1,l2,...", "multipartite p1,p2,...",
/// "above-one t" or "inflated l1,l2,..." and builds the graph. Parameters may
/// be separated by commas or whitespace; the long family names
/// "multipartite-plus-stars" and "inflated-cycles" are accepted too. Throws
/// ParseError (line 1) on malformed text.
Construction construct_from_text(std::string_view text);

}  // namespace bugscope
