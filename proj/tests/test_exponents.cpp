#include <gtest/gtest.h>

#include <algorithm>

#include "oracle.hpp"
#include "sylvester/exponents.hpp"
#include "sylvester/lcm_growth.hpp"

using namespace sylvester;

TEST(ExponentTuple, SortsAndValidates) {
  const ExponentTuple t{4, 2, 6, 4};
  EXPECT_EQ(std::vector<std::int64_t>(t.degrees().begin(), t.degrees().end()), (std::vector<std::int64_t>{2, 4, 4, 6}));
  EXPECT_THROW(ExponentTuple({0, 1}), std::invalid_argument);
  EXPECT_THROW(ExponentTuple(std::vector<std::int64_t>{}), std::invalid_argument);
  EXPECT_THROW(ExponentTuple::parse("1,,2"), std::invalid_argument);
  EXPECT_THROW(ExponentTuple::parse("1,2x"), std::invalid_argument);
}

TEST(ExponentTuple, Period) {
  EXPECT_EQ(symmetric_degrees(10).period(), 2520);
  EXPECT_EQ(ExponentTuple({7}).period(), 7);
  EXPECT_EQ(ExponentTuple({2, 8, 12, 14, 18, 20, 24, 30}).period(), 2520);
  EXPECT_EQ(symmetric_degrees(15).period(), 360360);
  EXPECT_EQ(ExponentTuple({2, 3, 4}).prefix_period(2), 6);
}

TEST(ExponentTuple, XiShift) {
  EXPECT_EQ(ExponentTuple({1, 2, 3, 4}).xi_shift(), HalfInteger(5));
  EXPECT_EQ(ExponentTuple({1, 2, 3, 4, 5}).xi_shift(), HalfInteger::from_doubled(15));
  EXPECT_EQ(ExponentTuple({2}).xi_shift(), HalfInteger(1));
}

TEST(ExponentTuple, Gcd) {
  EXPECT_EQ(ExponentTuple({4, 6}).gcd(), 2);
  EXPECT_EQ(ExponentTuple({2, 3}).gcd(), 1);
  EXPECT_TRUE(ExponentTuple({2, 3, 5}).pairwise_coprime());
  EXPECT_FALSE(ExponentTuple({2, 3, 4}).pairwise_coprime());
}

TEST(ExponentTuple, PermutationAndConcatenation) {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> b;
    for (auto n = rng.range(1, 6); n > 0; --n) a.push_back(rng.range(1, 15));
    for (auto n = rng.range(1, 6); n > 0; --n) b.push_back(rng.range(1, 15));
    auto shuffled = a;
    std::reverse(shuffled.begin(), shuffled.end());
    std::rotate(shuffled.begin(), shuffled.begin() + 1, shuffled.end());
    EXPECT_EQ(ExponentTuple(a).period(), ExponentTuple(shuffled).period());
    EXPECT_EQ(ExponentTuple(a), ExponentTuple(shuffled));
    EXPECT_EQ(ExponentTuple(a).concat(ExponentTuple(b)).xi_shift(), ExponentTuple(a).xi_shift() + ExponentTuple(b).xi_shift());
  }
}

TEST(Coxeter, Degrees) {
  EXPECT_EQ(CoxeterGroup(Family::A, 3).degrees(), ExponentTuple({2, 3, 4}));
  EXPECT_EQ(CoxeterGroup(Family::H3, 3).degrees(), ExponentTuple({2, 6, 10}));
  EXPECT_EQ(CoxeterGroup(Family::H3, 3).degrees().xi_shift(), HalfInteger(9));
  EXPECT_EQ(CoxeterGroup(Family::D, 4).degrees(), ExponentTuple({2, 4, 4, 6}));
  EXPECT_EQ(CoxeterGroup(Family::F4, 4).degrees(), ExponentTuple({2, 6, 8, 12}));
  EXPECT_EQ(CoxeterGroup(Family::I2, 7).degrees(), ExponentTuple({2, 7}));
}

TEST(Coxeter, Validation) {
  EXPECT_THROW(CoxeterGroup(Family::D, 2), std::invalid_argument);
  EXPECT_THROW(CoxeterGroup(Family::I2, 1), std::invalid_argument);
  EXPECT_THROW(CoxeterGroup(Family::A, 11), std::invalid_argument);
  EXPECT_THROW(CoxeterGroup(Family::E6, 7), std::invalid_argument);
  EXPECT_NO_THROW(CoxeterGroup(Family::A, 12, CatalogLimits{12, 20, 1000}));
}

TEST(Coxeter, Parse) {
  EXPECT_EQ(CoxeterGroup::parse("e8").family(), Family::E8);
  EXPECT_EQ(CoxeterGroup::parse("I2(7)").rank(), 7);
  EXPECT_EQ(CoxeterGroup::parse("i2(7)").degrees(), ExponentTuple({2, 7}));
  EXPECT_EQ(CoxeterGroup::parse("S6").degrees(), symmetric_degrees(6));
  EXPECT_EQ(CoxeterGroup::parse("b5").name(), "B5");
  EXPECT_THROW(CoxeterGroup::parse("X3"), std::invalid_argument);
  EXPECT_THROW(CoxeterGroup::parse("A"), std::invalid_argument);
  EXPECT_THROW(CoxeterGroup::parse("D2"), std::invalid_argument);
  EXPECT_THROW(CoxeterGroup::parse("I2(x)"), std::invalid_argument);
}

TEST(Coxeter, PrintedShiftMatchesHalfDegreeSum) {
  for (const auto& g : coxeter_catalog()) {
    EXPECT_EQ(g.catalog_xi(), g.degrees().xi_shift()) << g.name();
  }
}

// The published periods agree with lcm of the degrees everywhere except
// D_m with m a power of two, where 2 lcm(1..m) overcounts the power of 2.
TEST(Coxeter, CatalogPeriodAgainstLcmOfDegrees) {
  for (const auto& g : coxeter_catalog()) {
    const bool power_of_two_d = g.family() == Family::D && (g.rank() & (g.rank() - 1)) == 0;
    if (power_of_two_d) continue;
    EXPECT_EQ(g.catalog_period(), g.degrees().period()) << g.name();
  }
}

TEST(Coxeter, PowerOfTwoDPeriodIsHalfThePublishedValue) {
  EXPECT_EQ(CoxeterGroup(Family::D, 4).degrees().period(), 12);
  EXPECT_EQ(CoxeterGroup(Family::D, 4).catalog_period(), 24);
  EXPECT_EQ(CoxeterGroup(Family::D, 8).degrees().period(), 840);
  EXPECT_EQ(CoxeterGroup(Family::D, 8).catalog_period(), 1680);
}

TEST(Coxeter, ClassicalPeriodsThroughExactLcm) {
  for (int m = 1; m <= 10; ++m) {
    EXPECT_EQ(BigInt(CoxeterGroup(Family::A, m).degrees().period()), lcm_exact(m + 1));
    EXPECT_EQ(BigInt(CoxeterGroup(Family::B, m).degrees().period()), 2 * lcm_exact(m));
    EXPECT_EQ(lcm_upto(m), oracle::lcm_fold(m));
  }
}

TEST(Coxeter, ExceptionalPeriods) {
  EXPECT_EQ(CoxeterGroup(Family::E8, 8).degrees().period(), 2520);
  EXPECT_EQ(CoxeterGroup(Family::F4, 4).degrees().period(), 24);
  EXPECT_EQ(CoxeterGroup(Family::E6, 6).degrees().period(), 360);
  EXPECT_EQ(CoxeterGroup(Family::H4, 4).degrees().period(), 60);
}
