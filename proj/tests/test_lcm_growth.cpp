#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracle.hpp"
#include "sylvester/lcm_growth.hpp"

using namespace sylvester;

TEST(Sieve, Basics) {
  const PrimeSieve sieve(100);
  EXPECT_EQ(sieve.prime_count(100), 25);
  EXPECT_EQ(sieve.prime_count(1), 0);
  EXPECT_TRUE(sieve.is_prime(97));
  EXPECT_FALSE(sieve.is_prime(91));
  EXPECT_FALSE(sieve.is_prime(1));
  EXPECT_THROW(sieve.require(101), std::out_of_range);
  EXPECT_THROW(PrimeSieve(0), std::invalid_argument);
}

TEST(PrimePower, Exponent) {
  EXPECT_EQ(prime_power_exponent(2, 1), 0);
  EXPECT_EQ(prime_power_exponent(2, 8), 3);
  EXPECT_EQ(prime_power_exponent(2, 15), 3);
  EXPECT_EQ(prime_power_exponent(3, 1000000), 12);
  EXPECT_EQ(prime_power_exponent(1000003, 1000002), 0);
}

TEST(LcmExact, Values) {
  EXPECT_EQ(lcm_exact(1), 1);
  EXPECT_EQ(lcm_exact(10), 2520);
  EXPECT_EQ(lcm_exact(20), 232792560);
  EXPECT_EQ(lcm_exact(30), BigInt("2329089562800"));
  EXPECT_THROW(lcm_exact(0), std::invalid_argument);
  EXPECT_THROW(lcm_exact(10001), std::out_of_range);
  EXPECT_NO_THROW(lcm_exact(20000, 20000));
}

TEST(LcmExact, AgreesWithFold) {
  BigInt fold = 1;
  for (std::int64_t n = 1; n <= 2000; ++n) {
    mpz_lcm_ui(fold.get_mpz_t(), fold.get_mpz_t(), static_cast<unsigned long>(n));
    if (n <= 40) {
      ASSERT_EQ(fold, oracle::lcm_fold(n));
    }
    if (n % 97 == 0 || n < 50) {
      ASSERT_EQ(lcm_exact(n), fold) << n;
    }
  }
  EXPECT_EQ(lcm_exact(2000), fold);
}

TEST(Theta, Examples) {
  const PrimeSieve sieve(1000);
  EXPECT_DOUBLE_EQ(theta(sieve, 1), 0.0);
  EXPECT_NEAR(theta(sieve, 10), std::log(210.0), 1e-12);
  EXPECT_NEAR(log_lcm(sieve, 10), std::log(2520.0), 1e-12);
}

TEST(LogLcm, MatchesExactLogarithm) {
  const PrimeSieve sieve(3000);
  for (std::int64_t n : {2, 17, 100, 256, 999, 2048, 3000}) {
    const BigInt l = lcm_exact(n);
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, l.get_mpz_t());
    const double ln = std::log(mant) + static_cast<double>(exp) * std::log(2.0);
    EXPECT_NEAR(log_lcm(sieve, n), ln, 1e-9 * ln) << n;
  }
}

TEST(LogLcm, ThetaDecomposition) {
  const PrimeSieve sieve(200000);
  for (std::int64_t n : {1, 2, 8, 9, 100, 1024, 65536, 199999, 200000}) {
    EXPECT_NEAR(theta_decomposition(sieve, n), log_lcm(sieve, n), 1e-9 * std::max(1.0, log_lcm(sieve, n))) << n;
  }
}

TEST(IntegerRoot, Exact) {
  EXPECT_EQ(integer_root(63, 2), 7);
  EXPECT_EQ(integer_root(64, 2), 8);
  EXPECT_EQ(integer_root(1000000, 3), 100);
  EXPECT_EQ(integer_root(999999, 3), 99);
  EXPECT_EQ(integer_root(1, 5), 1);
  EXPECT_EQ(integer_root(std::int64_t{1} << 40, 40), 2);
}

TEST(Ratio, StepsAreOneOrPrime) {
  BigInt prev = 1;
  const PrimeSieve sieve(3000);
  for (std::int64_t n = 2; n <= 3000; ++n) {
    const BigInt cur = lcm_exact(n);
    const BigInt q = cur / prev;
    ASSERT_EQ(cur % prev, 0);
    ASSERT_TRUE(q == 1 || sieve.is_prime(q.get_si())) << n;
    prev = cur;
  }
}

TEST(Ratio, SeriesMatchesPointwise) {
  const PrimeSieve sieve(50000);
  const auto rec = ratio_series(sieve, 50000, 1000);
  ASSERT_EQ(rec.size(), 50u);
  for (const auto& r : rec) {
    EXPECT_NEAR(r.log_lcm, log_lcm(sieve, r.n), 1e-9 * r.log_lcm);
    EXPECT_DOUBLE_EQ(r.ratio, r.log_lcm / static_cast<double>(r.n));
  }
  EXPECT_NEAR(rec.back().ratio, 1.0, 0.05);
  EXPECT_THROW(ratio_series(sieve, 100, 0), std::invalid_argument);
}

TEST(Ratio, CsvAndError) {
  const PrimeSieve sieve(10);
  const auto rec = ratio_series(sieve, 10, 5);
  std::ostringstream os;
  write_csv(os, rec);
  EXPECT_EQ(os.str(), "N,log_lcm,ratio\n5,4.09434456222,0.818868912444\n10,7.83201418051,0.783201418051\n");
  const auto e = error_record(rec);
  EXPECT_GT(e.max_scaled_error, 0);
  EXPECT_TRUE(e.at == 5 || e.at == 10);
}
