#pragma once

// Independent reference computations for tests: plain enumeration with
// machine integers, no shared code with the library.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

// Number of non-negative solutions of sum d_i x_i = s, by recursion on the
// last exponent.
inline std::int64_t enumerate(const std::vector<std::int64_t>& d, std::int64_t s, std::size_t k) {
  if (s < 0) return 0;
  if (k == 0) return s == 0 ? 1 : 0;
  std::int64_t n = 0;
  for (std::int64_t x = 0; x * d[k - 1] <= s; ++x) n += enumerate(d, s - x * d[k - 1], k - 1);
  return n;
}

inline std::int64_t enumerate(const std::vector<std::int64_t>& d, std::int64_t s) { return enumerate(d, s, d.size()); }

// Power series coefficients of prod (1 - t^d)^{-1} up to t^n, int64.
inline std::vector<std::int64_t> series(const std::vector<std::int64_t>& d, std::int64_t n) {
  std::vector<std::int64_t> a(static_cast<std::size_t>(n + 1), 0);
  a[0] = 1;
  for (auto di : d) {
    for (std::int64_t s = di; s <= n; ++s) a[static_cast<std::size_t>(s)] += a[static_cast<std::size_t>(s - di)];
  }
  return a;
}

inline std::int64_t lcm_fold(std::int64_t n) {
  std::int64_t l = 1;
  for (std::int64_t k = 2; k <= n; ++k) l = std::lcm(l, k);
  return l;
}

// Fixed-seed generator for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // uniform in [lo, hi]
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace oracle
