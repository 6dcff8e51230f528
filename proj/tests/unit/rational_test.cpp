#include <gtest/gtest.h>

#include "springer_rca/errors.hpp"
#include "springer_rca/rational.hpp"

using namespace springer_rca;

TEST(Rational, MakeRationalIsCanonical) {
  const Rational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(make_rational(0, 7), 0);
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_THROW(make_rational(1, 0), ArgumentError); }

TEST(Rational, ToStringFormats) {
  EXPECT_EQ(to_string(make_rational(3, 2)), "3/2");
  EXPECT_EQ(to_string(make_rational(-4, 2)), "-2");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, ParseRoundTrips) {
  for (const char* s : {"0", "7", "-7", "3/2", "-5/9", "12345678901234567890/7"}) {
    EXPECT_EQ(to_string(parse_rational(s)), s);
  }
  EXPECT_EQ(parse_rational("4/6"), make_rational(2, 3));
}

TEST(Rational, ParseRejectsMalformed) {
  EXPECT_THROW(parse_rational(""), ArgumentError);
  EXPECT_THROW(parse_rational("1/0"), ArgumentError);
  EXPECT_THROW(parse_rational("a/b"), ArgumentError);
}

TEST(Rational, IsInteger) {
  EXPECT_TRUE(is_integer(make_rational(4, 2)));
  EXPECT_FALSE(is_integer(make_rational(1, 3)));
}
