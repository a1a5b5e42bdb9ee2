#include "bugscope/enumerate.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bugscope/errors.hpp"
#include "bugscope/graph_io.hpp"
#include "support/oracles.hpp"

namespace bugscope {
namespace {

TEST(EnumerateTest, KnownCounts) {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(enumerate_connected_graphs(n).size(), expected[n - 1]) << "n = " << n;
  }
}

TEST(EnumerateTest, CountsMatchLabelledFiltering) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(enumerate_connected_graphs(n).size(), oracle::count_connected_classes(n)) << "n = " << n;
  }
}

TEST(EnumerateTest, RepresentativesAreConnectedAndPairwiseNonIsomorphic) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<std::vector<bool>> seen;
    for (const Graph& g : enumerate_connected_graphs(n)) {
      EXPECT_EQ(g.vertex_count(), n);
      EXPECT_TRUE(oracle::connected(g));
      EXPECT_TRUE(seen.insert(oracle::brute_canonical(g)).second) << to_graph6(g);
    }
  }
}

TEST(EnumerateTest, OrderedByEdgeCount) {
  const auto& graphs = enumerate_connected_graphs(6);
  for (std::size_t i = 1; i < graphs.size(); ++i) EXPECT_LE(graphs[i - 1].edge_count(), graphs[i].edge_count());
  EXPECT_EQ(graphs.front().edge_count(), 5u);
  EXPECT_EQ(graphs.back(), complete_graph(6));
}

TEST(EnumerateTest, CanonicalCodesAreRelabellingInvariant) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const Graph h = oracle::random_relabel(g, rng);
    EXPECT_EQ(canonical_code_exhaustive(g), canonical_code_exhaustive(h));
    EXPECT_EQ(canonical_code_refined(g), canonical_code_refined(h));
  }
}

TEST(EnumerateTest, CanonicalCodesSeparateClasses) {
  // Regular graphs defeat colour refinement; the search must still separate them.
  const Graph c6 = cycle_graph(6);
  const Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
  EXPECT_NE(canonical_code_refined(c6), canonical_code_refined(two_triangles));
  const std::vector<std::size_t> parts{3, 3};
  const Graph prism = complement(c6);
  EXPECT_NE(canonical_code_refined(complete_multipartite(parts)), canonical_code_refined(prism));
}

TEST(EnumerateTest, AdjacencyCodeRoundTrip) {
  const Graph p = path_graph(5);
  EXPECT_EQ(graph_from_code(5, adjacency_code(p)), p);
}

TEST(EnumerateTest, OutOfRange) {
  EXPECT_THROW(enumerate_connected_graphs(0), UnsupportedSizeError);
  EXPECT_THROW(enumerate_connected_graphs(9), UnsupportedSizeError);
  EXPECT_EQ(enumerate_connected_graphs_up_to(4).size(), 1u + 1u + 2u + 6u);
}

}  // namespace
}  // namespace bugscope
