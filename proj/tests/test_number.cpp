#include <gtest/gtest.h>

#include "sylvester/number.hpp"

using namespace sylvester;

TEST(Number, FloorModAndDiv) {
  EXPECT_EQ(floor_mod(-1, 4), 3);
  EXPECT_EQ(floor_mod(7, 4), 3);
  EXPECT_EQ(floor_div(-1, 4), -1);
  EXPECT_EQ(floor_div(8, 4), 2);
}

TEST(Number, MakeRationalIsCanonical) {
  const Rational q = make_rational(0, 2);
  EXPECT_EQ(q, Rational(0));
  EXPECT_EQ(fraction_string(make_rational(6, -4)), "-3/2");
}

TEST(Number, FractionStrings) {
  EXPECT_EQ(fraction_string(Rational(1)), "1/1");
  EXPECT_EQ(exact_string(Rational(5)), "5");
  EXPECT_EQ(exact_string(make_rational(-1, 12)), "-1/12");
}

TEST(Number, ParseReducedFraction) {
  EXPECT_EQ(parse_reduced_fraction("-7/12"), make_rational(-7, 12));
  EXPECT_EQ(parse_reduced_fraction("3/1"), Rational(3));
  EXPECT_THROW(parse_reduced_fraction("3"), std::invalid_argument);
  EXPECT_THROW(parse_reduced_fraction("2/4"), std::invalid_argument);
  EXPECT_THROW(parse_reduced_fraction("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_reduced_fraction("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_reduced_fraction("x/2"), std::invalid_argument);
}

TEST(Number, HalfInteger) {
  const auto h = HalfInteger::parse("15/2");
  EXPECT_EQ(h.doubled(), 15);
  EXPECT_FALSE(h.is_integer());
  EXPECT_EQ(h.value(), make_rational(15, 2));
  EXPECT_THROW(h.integer(), OffGridError);
  EXPECT_EQ(HalfInteger(3).integer(), 3);
  EXPECT_EQ((h + HalfInteger::from_doubled(1)).integer(), 8);
  EXPECT_EQ(HalfInteger(-3).halved(), HalfInteger::from_doubled(-3));
  EXPECT_THROW(h.halved(), OffGridError);
  EXPECT_EQ(h.str(), "15/2");
  EXPECT_THROW(HalfInteger::parse("1/3"), std::invalid_argument);
}

TEST(Number, CheckedLcmOverflow) {
  EXPECT_EQ(checked_lcm(4, 6), 12);
  EXPECT_THROW(checked_lcm(std::int64_t{1} << 40, (std::int64_t{1} << 40) - 1), std::overflow_error);
}
