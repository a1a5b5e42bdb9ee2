#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bugscope/graph.hpp"
#include "bugscope/rational.hpp"

namespace bugscope {

/// Exact betweenness of every vertex, summed over unordered pairs with the
/// vertex strictly inside the path, plus the graph average.
struct BetweennessProfile {
  std::vector<Rational> per_vertex;
  Rational average;
  bool is_uniform = false;

  static BetweennessProfile from_values(std::vector<Rational> values);
};

/// Brandes-style accumulation: path counts as big integers, dependencies as
/// rationals. Throws DisconnectedGraphError unless g is connected.
BetweennessProfile betweenness_exact(const Graph& g);

inline constexpr std::size_t kOracleMaxOrder = 12;

/// Independent check of betweenness_exact that lists every shortest path
/// explicitly. Throws UnsupportedSizeError above kOracleMaxOrder vertices.
BetweennessProfile betweenness_oracle(const Graph& g);

struct BugVerdict {
  bool is_bug = false;
  std::optional<Rational> value;  // the common betweenness when is_bug
};

BugVerdict is_bug(const Graph& g);

}  // namespace bugscope
