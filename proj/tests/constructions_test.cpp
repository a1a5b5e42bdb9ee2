#include "bugscope/constructions.hpp"

#include <gtest/gtest.h>

#include "bugscope/centrality.hpp"
#include "bugscope/certify.hpp"
#include "bugscope/errors.hpp"
#include "support/oracles.hpp"

namespace bugscope {
namespace {

void expect_certified(const Construction& c) {
  const CertificationReport r = is_cobug(c.graph);
  ASSERT_TRUE(r.is_cobug) << family_name(c.spec.family);
  EXPECT_EQ(r.betweenness, c.spec.predicted_betweenness) << family_name(c.spec.family);
}

// Second route: Brandes on the complement itself.
void expect_direct(const Construction& c) {
  const BetweennessProfile p = betweenness_exact(complement(c.graph));
  EXPECT_TRUE(p.is_uniform) << family_name(c.spec.family);
  EXPECT_EQ(p.average, c.spec.predicted_betweenness) << family_name(c.spec.family);
}

TEST(ConstructionsTest, Stars) {
  for (std::int64_t k = 2; k <= 4; ++k) {
    for (std::int64_t ell = 0; ell <= 6; ++ell) {
      const Construction c = stars_cobug(k, ell);
      EXPECT_EQ(c.graph.vertex_count(), static_cast<std::size_t>(k * (ell + 1)));
      EXPECT_EQ(c.spec.predicted_betweenness, Rational::fraction(ell, ell + 1));
      EXPECT_TRUE(oracle::equal_star_union(c.graph));
      expect_certified(c);
      expect_direct(c);
    }
  }
  EXPECT_THROW(stars_cobug(1, 3), PreconditionError);
  EXPECT_THROW(stars_cobug(2, -1), PreconditionError);
}

TEST(ConstructionsTest, Cycles) {
  for (const auto& lengths :
       {std::vector<std::int64_t>{4, 4}, {5, 7}, {4, 4, 4}, {6, 9, 4}, {10, 10}}) {
    const Construction c = cycles_cobug(lengths);
    EXPECT_EQ(c.spec.predicted_betweenness, Rational(1));
    expect_certified(c);
    expect_direct(c);
  }
  const std::vector<std::int64_t> one{5};
  const std::vector<std::int64_t> short_cycle{3, 5};
  EXPECT_THROW(cycles_cobug(one), PreconditionError);
  EXPECT_THROW(cycles_cobug(short_cycle), PreconditionError);
}

TEST(ConstructionsTest, MultipartitePlusStars) {
  for (const auto& parts :
       {std::vector<std::int64_t>{1, 1, 2}, {2, 3}, {3, 3}, {1, 2, 2}, {2, 2, 2}}) {
    const Construction c = multipartite_plus_stars(parts);
    std::int64_t t = 0, sq = 0;
    for (std::int64_t p : parts) t += p, sq += p * p;
    const std::int64_t m = (t * t - sq) / 2;
    EXPECT_EQ(c.graph.vertex_count(), static_cast<std::size_t>(m * m - m * t + t));
    expect_certified(c);
    if (c.graph.vertex_count() <= 60) expect_direct(c);
  }
  // K_{1,3}: m = 3 = t - 1 < t.
  const std::vector<std::int64_t> claw{1, 3};
  EXPECT_THROW(multipartite_plus_stars(claw), PreconditionError);
}

TEST(ConstructionsTest, AboveOne) {
  const Construction c2 = family_above_one(2);
  EXPECT_EQ(c2.graph.vertex_count(), 136u);
  EXPECT_EQ(c2.spec.predicted_betweenness, Rational::fraction(9, 8));
  expect_certified(c2);
  expect_direct(c2);
  const Construction c3 = family_above_one(3);
  EXPECT_EQ(c3.spec.predicted_betweenness, Rational::fraction(13, 12));
  expect_certified(c3);
  EXPECT_THROW(family_above_one(1), PreconditionError);
  EXPECT_THROW(family_above_one(31), UnsupportedSizeError);
}

TEST(ConstructionsTest, InflatedCycles) {
  const std::vector<std::int64_t> split{700, 17, 4};
  const Construction c = inflated_cycles_cobug(split);
  EXPECT_EQ(c.graph.vertex_count(), 337392u);
  EXPECT_EQ(c.graph.edge_count(), 1096524u);
  const CertificationReport r = is_cobug(c.graph);
  ASSERT_TRUE(r.is_cobug);
  EXPECT_EQ(r.co_betweenness, Rational::fraction(3924, 333467));
  EXPECT_EQ(r.betweenness, Rational::fraction(13, 4));
  const std::vector<std::int64_t> wrong{720};
  EXPECT_THROW(inflated_cycles_cobug(wrong), PreconditionError);
}

TEST(ConstructionsTest, ParseText) {
  EXPECT_EQ(construct_from_text("stars 3 2").graph, stars_cobug(3, 2).graph);
  EXPECT_EQ(construct_from_text("cycles 4,5").spec.family, Family::cycles);
  EXPECT_EQ(construct_from_text("multipartite-plus-stars 2, 3").spec.parameters,
            (std::vector<std::int64_t>{2, 3}));
  EXPECT_EQ(construct_from_text("above-one 2").graph.vertex_count(), 136u);
  EXPECT_THROW(construct_from_text(""), ParseError);
  EXPECT_THROW(construct_from_text("stars 3"), ParseError);
  EXPECT_THROW(construct_from_text("stars 3 x"), ParseError);
  EXPECT_THROW(construct_from_text("wheels 5"), ParseError);
  EXPECT_THROW(construct_from_text("stars 1 2"), PreconditionError);
}

TEST(ConstructionsTest, FamilyNames) {
  EXPECT_EQ(family_name(Family::multipartite_plus_stars), "multipartite-plus-stars");
  EXPECT_EQ(family_name(Family::inflated_cycles), "inflated-cycles");
}

}  // namespace
}  // namespace bugscope
