#pragma once
#ifndef SYLVESTER_DP_ORACLE_HPP
#define SYLVESTER_DP_ORACLE_HPP

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sylvester/exponents.hpp"
#include "sylvester/number.hpp"

namespace sylvester {

/// W(s, d^m) for s = 0..s_max held as fixed-width limb vectors in one flat
/// buffer.  The width is sized from W(s, d^m) <= C(s + m - 1, m - 1), so the
/// in-place sweep never carries out of an entry.
class CountTable {
 public:
  CountTable(const ExponentTuple& t, std::int64_t s_max) : s_max_(s_max) {
    if (s_max < 0) throw std::invalid_argument("s_max must be non-negative");
    const auto m = static_cast<std::int64_t>(t.size());
    const BigInt bound = binomial(s_max + m - 1, m - 1);
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + 1;
    width_ = static_cast<std::size_t>((bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS);
    const auto n = static_cast<std::size_t>(s_max + 1);
    limbs_.assign(n * width_, 0);
    limbs_[0] = 1;
    // One in-place prefix pass per exponent: W_k(s) += W_k(s - d_k).
    for (auto d : t.degrees()) {
      for (std::int64_t s = d; s <= s_max; ++s) {
        mp_limb_t* dst = entry(s);
        mpn_add_n(dst, dst, entry(s - d), static_cast<mp_size_t>(width_));
      }
    }
  }

  std::int64_t s_max() const { return s_max_; }
  std::size_t limb_width() const { return width_; }

  /// Combinatorial count; zero for negative s.
  BigInt at(std::int64_t s) const {
    if (s < 0) return 0;
    if (s > s_max_) throw std::out_of_range("count table queried beyond s_max");
    BigInt r;
    mpz_import(r.get_mpz_t(), width_, -1, sizeof(mp_limb_t), 0, 0, entry(s));
    return r;
  }

 private:
  mp_limb_t* entry(std::int64_t s) { return limbs_.data() + static_cast<std::size_t>(s) * width_; }
  const mp_limb_t* entry(std::int64_t s) const { return limbs_.data() + static_cast<std::size_t>(s) * width_; }

  std::int64_t s_max_;
  std::size_t width_ = 1;
  std::vector<mp_limb_t> limbs_;
};

/// [W(0), ..., W(s_max)] from a single DP sweep.
inline std::vector<BigInt> count_range(const ExponentTuple& t, std::int64_t s_max) {
  CountTable table(t, s_max);
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(s_max + 1));
  for (std::int64_t s = 0; s <= s_max; ++s) out.push_back(table.at(s));
  return out;
}

/// Number of non-negative solutions of sum d_r x_r = s; 0 for s < 0.
inline BigInt count(const ExponentTuple& t, std::int64_t s) {
  if (s < 0) return 0;
  return CountTable(t, s).at(s);
}

}  // namespace sylvester

#endif  // SYLVESTER_DP_ORACLE_HPP
