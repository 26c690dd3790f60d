#include <gtest/gtest.h>

#include "oracle.hpp"
#include "partition_table.hpp"
#include "sylvester/dp_oracle.hpp"

using namespace sylvester;

TEST(Count, PublishedValues) {
  EXPECT_EQ(count(symmetric_degrees(10), 10), 42);
  EXPECT_EQ(count(symmetric_degrees(7), 51), 19928);
  EXPECT_EQ(count(ExponentTuple({1}), 0), 1);
  EXPECT_EQ(count(ExponentTuple({2}), 3), 0);
  EXPECT_EQ(count(ExponentTuple({1, 2}), -1), 0);
}

TEST(Count, RangeMatchesHandEnumeration) {
  // x + 2y = s: s=0..4 has 1,1,2,2,3 solutions
  const auto v = count_range(ExponentTuple({1, 2}), 4);
  ASSERT_EQ(v.size(), 5u);
  const std::vector<int> want{1, 1, 2, 2, 3};
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], want[i]);
  EXPECT_EQ(count_range(ExponentTuple({3, 5}), 0), std::vector<BigInt>{BigInt(1)});
}

TEST(Count, PublishedTable) {
  std::vector<std::vector<BigInt>> cols;
  for (int m = 1; m <= 10; ++m) cols.push_back(count_range(symmetric_degrees(m), 110));
  for (const auto& row : fixtures::kPartitionTable) {
    for (int m = 1; m <= 10; ++m) {
      EXPECT_EQ(cols[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(row.s)], row.by_m[static_cast<std::size_t>(m - 1)])
          << "s=" << row.s << " m=" << m;
    }
  }
}

TEST(Count, AgreesWithEnumeration) {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::int64_t> d;
    for (auto n = rng.range(1, 4); n > 0; --n) d.push_back(rng.range(1, 9));
    const ExponentTuple t(d);
    const auto v = count_range(t, 40);
    for (std::int64_t s = 0; s <= 40; ++s) EXPECT_EQ(v[static_cast<std::size_t>(s)], oracle::enumerate(d, s)) << t.str();
  }
}

TEST(Count, RecursionOnLastExponent) {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::int64_t> d;
    for (auto n = rng.range(2, 6); n > 0; --n) d.push_back(rng.range(1, 12));
    const ExponentTuple t(d);
    const ExponentTuple head = t.prefix(t.size() - 1);
    const CountTable all(t, 200);
    const CountTable part(head, 200);
    for (std::int64_t s = 0; s <= 200; ++s) EXPECT_EQ(all.at(s), part.at(s) + all.at(s - t.largest())) << t.str() << " s=" << s;
  }
}

TEST(Count, SymmetricColumnsIncrease) {
  for (int m = 1; m < 12; ++m) {
    const auto a = count_range(symmetric_degrees(m), 60);
    const auto b = count_range(symmetric_degrees(m + 1), 60);
    for (std::int64_t s = 0; s <= 60; ++s) {
      EXPECT_LE(a[static_cast<std::size_t>(s)], b[static_cast<std::size_t>(s)]);
      EXPECT_EQ(a[static_cast<std::size_t>(s)] == b[static_cast<std::size_t>(s)], s <= m) << "m=" << m << " s=" << s;
    }
  }
}

TEST(Count, Scaling) {
  oracle::Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::int64_t> d;
    for (auto n = rng.range(1, 5); n > 0; --n) d.push_back(rng.range(1, 10));
    const ExponentTuple t(d);
    for (std::int64_t p : {2, 3, 5}) {
      const CountTable scaled(t.scaled(p), 150);
      const CountTable base(t, 150);
      for (std::int64_t s = 0; s <= 150; ++s) {
        EXPECT_EQ(scaled.at(s), s % p == 0 ? base.at(s / p) : BigInt(0));
      }
    }
  }
}

TEST(Count, NoOverflowForLargeValues) {
  // beyond 64 bits: compare with the closed form for (1,1,...,1) = C(s+m-1, m-1)
  const ExponentTuple ones(std::vector<std::int64_t>(30, 1));
  const BigInt v = count(ones, 1000);
  BigInt want;
  mpz_bin_uiui(want.get_mpz_t(), 1029, 29);
  EXPECT_EQ(v, want);
  EXPECT_GT(mpz_sizeinbase(v.get_mpz_t(), 2), 64u);
}
