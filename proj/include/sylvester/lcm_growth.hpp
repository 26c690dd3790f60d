#pragma once
#ifndef SYLVESTER_LCM_GROWTH_HPP
#define SYLVESTER_LCM_GROWTH_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sylvester/number.hpp"

namespace sylvester {

/// Eratosthenes sieve up to a fixed limit.
class PrimeSieve {
 public:
  explicit PrimeSieve(std::int64_t limit) : limit_(limit) {
    if (limit < 1) throw std::invalid_argument("sieve limit must be positive");
    composite_.assign(static_cast<std::size_t>(limit + 1), false);
    for (std::int64_t p = 2; p <= limit; ++p) {
      if (composite_[static_cast<std::size_t>(p)]) continue;
      primes_.push_back(p);
      for (std::int64_t q = p * p; q <= limit; q += p) composite_[static_cast<std::size_t>(q)] = true;
    }
  }

  std::int64_t limit() const { return limit_; }
  const std::vector<std::int64_t>& primes() const { return primes_; }
  bool is_prime(std::int64_t n) const {
    require(n);
    return n >= 2 && !composite_[static_cast<std::size_t>(n)];
  }
  /// pi(n)
  std::int64_t prime_count(std::int64_t n) const {
    require(n);
    std::int64_t c = 0;
    for (auto p : primes_) {
      if (p > n) break;
      ++c;
    }
    return c;
  }

  void require(std::int64_t n) const {
    if (n > limit_) throw std::out_of_range("sieve limit " + std::to_string(limit_) + " is below " + std::to_string(n));
  }

 private:
  std::int64_t limit_;
  std::vector<bool> composite_;
  std::vector<std::int64_t> primes_;
};

/// Largest k with p^k <= n, by exact multiplication.
inline std::int64_t prime_power_exponent(std::int64_t p, std::int64_t n) {
  std::int64_t k = 0;
  for (std::int64_t q = 1; q <= n / p; q *= p) ++k;
  return k;
}

constexpr std::int64_t kDefaultLcmExactBound = 10000;

/// lcm(1..N) = prod_{p <= N} p^{floor(log_p N)}.
inline BigInt lcm_exact(std::int64_t n, std::int64_t bound = kDefaultLcmExactBound) {
  if (n < 1) throw std::invalid_argument("lcm_exact requires N >= 1");
  if (n > bound) throw std::out_of_range("lcm_exact is limited to N <= " + std::to_string(bound));
  const PrimeSieve sieve(n);
  BigInt out = 1;
  BigInt term;
  for (auto p : sieve.primes()) {
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(prime_power_exponent(p, n)));
    out *= term;
  }
  return out;
}

/// Chebyshev theta(N) = sum_{p <= N} ln p.
inline double theta(const PrimeSieve& sieve, std::int64_t n) {
  sieve.require(n);
  long double acc = 0;
  for (auto p : sieve.primes()) {
    if (p > n) break;
    acc += std::log(static_cast<long double>(p));
  }
  return static_cast<double>(acc);
}

/// ln lcm(1..N) = sum_{p <= N} floor(log_p N) ln p.
inline double log_lcm(const PrimeSieve& sieve, std::int64_t n) {
  sieve.require(n);
  long double acc = 0;
  for (auto p : sieve.primes()) {
    if (p > n) break;
    acc += static_cast<long double>(prime_power_exponent(p, n)) * std::log(static_cast<long double>(p));
  }
  return static_cast<double>(acc);
}

/// floor(n^{1/k}) exactly.
inline std::int64_t integer_root(std::int64_t n, std::int64_t k) {
  if (k == 1 || n < 2) return n;
  auto r = static_cast<std::int64_t>(std::pow(static_cast<long double>(n), 1.0L / static_cast<long double>(k)));
  auto pow_le = [&](std::int64_t x) {
    std::int64_t v = 1;
    for (std::int64_t i = 0; i < k; ++i) {
      if (v > n / x) return false;
      v *= x;
    }
    return v <= n;
  };
  while (r > 1 && !pow_le(r)) --r;
  while (pow_le(r + 1)) ++r;
  return r;
}

/// sum_{k >= 1} theta(floor(N^{1/k})), equal to ln lcm(1..N).
inline double theta_decomposition(const PrimeSieve& sieve, std::int64_t n) {
  long double acc = 0;
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t r = integer_root(n, k);
    if (r < 2) break;
    acc += theta(sieve, r);
  }
  return static_cast<double>(acc);
}

struct LcmRecord {
  std::int64_t n;
  double log_lcm;
  double ratio;
};

/// Records at N = step, 2 step, ... <= n_max.  ln lcm(1..N) grows by ln p
/// exactly when N is a power of the prime p, so one pass suffices.
inline std::vector<LcmRecord> ratio_series(const PrimeSieve& sieve, std::int64_t n_max, std::int64_t step) {
  if (step < 1) throw std::invalid_argument("step must be positive");
  sieve.require(n_max);
  // base[n] = p when n = p^k, else 0
  std::vector<std::int64_t> base(static_cast<std::size_t>(n_max + 1), 0);
  for (auto p : sieve.primes()) {
    if (p > n_max) break;
    for (std::int64_t q = p;; q *= p) {
      base[static_cast<std::size_t>(q)] = p;
      if (q > n_max / p) break;
    }
  }
  std::vector<LcmRecord> out;
  long double acc = 0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (base[static_cast<std::size_t>(n)] != 0) acc += std::log(static_cast<long double>(base[static_cast<std::size_t>(n)]));
    if (n % step == 0) out.push_back({n, static_cast<double>(acc), static_cast<double>(acc / static_cast<long double>(n))});
  }
  return out;
}

inline void write_csv(std::ostream& os, const std::vector<LcmRecord>& records) {
  os << "N,log_lcm,ratio\n";
  char line[96];
  for (const auto& r : records) {
    std::snprintf(line, sizeof line, "%lld,%.12g,%.12g\n", static_cast<long long>(r.n), r.log_lcm, r.ratio);
    os << line;
  }
}

/// max over the records of |ln lcm(1..N) - N| / (sqrt(N) ln N), N >= 2.
/// Measured only; nothing is asserted about its size.
struct ErrorRecord {
  double max_scaled_error = 0;
  std::int64_t at = 0;
};

inline ErrorRecord error_record(const std::vector<LcmRecord>& records) {
  ErrorRecord e;
  for (const auto& r : records) {
    if (r.n < 2) continue;
    const double n = static_cast<double>(r.n);
    const double v = std::fabs(r.log_lcm - n) / (std::sqrt(n) * std::log(n));
    if (v > e.max_scaled_error) {
      e.max_scaled_error = v;
      e.at = r.n;
    }
  }
  return e;
}

}  // namespace sylvester

#endif  // SYLVESTER_LCM_GROWTH_HPP
