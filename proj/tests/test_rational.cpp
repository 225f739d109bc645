#include <gtest/gtest.h>

#include "lly/rational.hpp"

using lly::parse_rational;
using lly::Rational;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(lly::to_string(lly::make_rational(4, -6)), "-2/3");
  EXPECT_EQ(lly::to_string(lly::make_rational(6, 3)), "2");
  EXPECT_EQ(lly::to_string(lly::make_rational(0, 5)), "0");
  EXPECT_THROW(lly::make_rational(1, 0), std::invalid_argument);
}

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("1/3"), lly::make_rational(1, 3));
  EXPECT_EQ(parse_rational("-2/4"), lly::make_rational(-1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("0.25"), lly::make_rational(1, 4));
  EXPECT_EQ(parse_rational("0.1"), lly::make_rational(1, 10));
  EXPECT_EQ(parse_rational("-1.5"), lly::make_rational(-3, 2));
  EXPECT_EQ(parse_rational("010"), Rational(10));
  EXPECT_EQ(parse_rational("08/09"), lly::make_rational(8, 9));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.2.3", "1e3", "0x10", "1/-2", " 1", "."}) {
    EXPECT_THROW(parse_rational(bad), lly::RationalParseError) << bad;
  }
}

TEST(Rational, IntegerHelpers) {
  EXPECT_EQ(lly::lcm(lly::Integer(4), lly::Integer(6)), lly::Integer(12));
  EXPECT_EQ(lly::pow(lly::Integer(17), 3), lly::Integer(4913));
  EXPECT_TRUE(lly::is_integral(Rational(5)));
  EXPECT_FALSE(lly::is_integral(lly::make_rational(5, 2)));
}
