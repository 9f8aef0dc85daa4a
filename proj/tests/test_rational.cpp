#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

#include "chordtim/errors.hpp"
#include "chordtim/rational.hpp"

using chordtim::ParseError;
using chordtim::Rational;

TEST(Rational, NormalizesToLowestTerms) {
  EXPECT_EQ(Rational(2, 4).to_string(), "1/2");
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  EXPECT_EQ(Rational(0, 5).to_string(), "0");
}

TEST(Rational, ParsesStrictForms) {
  EXPECT_EQ(Rational::parse("1/3"), Rational(1, 3));
  EXPECT_EQ(Rational::parse("-2/6"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("0/9"), Rational(0));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/3").to_string(), "41152263004115226300411522630");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "/", "1/", "/2", "1.5", " 1/2", "1/2 ", "+1", "1/-2", "1//2", "a", "1/0", "--1"}) {
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
  }
  EXPECT_THROW(Rational(1, 0), ParseError);
}

TEST(Rational, ArithmeticIsExact) {
  const Rational third(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_EQ(-Rational(1, 2), Rational(-1, 2));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, OrderingAndPredicates) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(7, 6), Rational(1));
  EXPECT_TRUE(Rational(0).is_zero());
  EXPECT_TRUE(Rational(6, 3).is_integer());
  EXPECT_FALSE(Rational(1, 3).is_integer());
  EXPECT_EQ(Rational(-1, 7).sign(), -1);
  EXPECT_EQ(Rational(0).sign(), 0);
}

TEST(Rational, RoundTripsThroughText) {
  for (const Rational& r : {Rational(0), Rational(5), Rational(-3, 7), Rational(22, 7)}) {
    EXPECT_EQ(Rational::parse(r.to_string()), r);
    std::ostringstream os;
    os << r;
    EXPECT_EQ(os.str(), r.to_string());
  }
}
