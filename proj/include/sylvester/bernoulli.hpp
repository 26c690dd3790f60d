#pragma once
#ifndef SYLVESTER_BERNOULLI_HPP
#define SYLVESTER_BERNOULLI_HPP

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "sylvester/number.hpp"

namespace sylvester {

/// Bernoulli numbers B_0..B_n with B_1 = -1/2, from
/// sum_{k=0}^{n} C(n+1, k) B_k = 0.
inline const std::vector<Rational>& bernoulli_numbers(std::int64_t n) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<std::int64_t>(cache.size()) <= n) {
    const auto k_next = static_cast<std::int64_t>(cache.size());
    Rational acc = 0;
    for (std::int64_t k = 0; k < k_next; ++k) acc += Rational(binomial(k_next + 1, k)) * cache[static_cast<std::size_t>(k)];
    cache.push_back(-acc / Rational(k_next + 1));
  }
  return cache;
}

/// Coefficients of B_l(x) in ascending powers of x.
inline std::vector<Rational> bernoulli_polynomial(std::int64_t l) {
  if (l < 0) throw std::invalid_argument("Bernoulli index must be non-negative");
  const auto& b = bernoulli_numbers(l);
  std::vector<Rational> coeffs(static_cast<std::size_t>(l + 1));
  // B_l(x) = sum_k C(l, k) B_k x^{l-k}
  for (std::int64_t k = 0; k <= l; ++k) {
    coeffs[static_cast<std::size_t>(l - k)] = Rational(binomial(l, k)) * b[static_cast<std::size_t>(k)];
  }
  return coeffs;
}

inline Rational eval_polynomial(const std::vector<Rational>& ascending, const Rational& x) {
  Rational acc = 0;
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Exact value of the Bernoulli polynomial B_l at x.
inline Rational bernoulli(std::int64_t l, const Rational& x) { return eval_polynomial(bernoulli_polynomial(l), x); }

}  // namespace sylvester

#endif  // SYLVESTER_BERNOULLI_HPP
