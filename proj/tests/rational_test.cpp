#include "bugscope/rational.hpp"

#include <gtest/gtest.h>

#include "bugscope/errors.hpp"

namespace bugscope {
namespace {

TEST(RationalTest, CanonicalForm) {
  const Rational r(BigInt(6), BigInt(-8));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(r.to_string(), "-3/4");
  EXPECT_EQ(Rational::fraction(10, 5).to_string(), "2");
  EXPECT_EQ(Rational().to_string(), "0");
}

TEST(RationalTest, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), PreconditionError);
  EXPECT_THROW(Rational(1) / Rational(0), PreconditionError);
}

TEST(RationalTest, Arithmetic) {
  const Rational a = Rational::fraction(1, 3);
  const Rational b = Rational::fraction(1, 6);
  EXPECT_EQ(a + b, Rational::fraction(1, 2));
  EXPECT_EQ(a - b, b);
  EXPECT_EQ(a * b, Rational::fraction(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational::fraction(-1, 3));
  EXPECT_LT(b, a);
  EXPECT_GT(Rational(1), Rational::fraction(9, 10));
}

TEST(RationalTest, LargeValuesStayExact) {
  Rational sum;
  for (std::int64_t k = 1; k <= 60; ++k) sum += Rational::fraction(1, k);
  // Harmonic number H_60 has a 25-digit denominator.
  EXPECT_GT(sum.denominator().get_str().size(), 20u);
  EXPECT_EQ(sum - sum, Rational());
  EXPECT_EQ(Rational::fraction(3924, 333467) * Rational(333467), Rational(3924));
}

TEST(RationalTest, Parse) {
  EXPECT_EQ(Rational::parse("13/4"), Rational::fraction(13, 4));
  EXPECT_EQ(Rational::parse("-2/6"), Rational::fraction(-1, 3));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational::parse("1/2/3"), ParseError);
}

TEST(RationalTest, FloorAndPredicates) {
  EXPECT_EQ(Rational::fraction(7, 2).floor(), 3);
  EXPECT_EQ(Rational::fraction(-7, 2).floor(), -4);
  EXPECT_TRUE(Rational(5).is_integer());
  EXPECT_FALSE(Rational::fraction(5, 2).is_integer());
  EXPECT_EQ(Rational::fraction(-5, 2).sign(), -1);
  EXPECT_DOUBLE_EQ(Rational::fraction(1, 4).to_double(), 0.25);
}

}  // namespace
}  // namespace bugscope
