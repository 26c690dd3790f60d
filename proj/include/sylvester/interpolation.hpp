#pragma once
#ifndef SYLVESTER_INTERPOLATION_HPP
#define SYLVESTER_INTERPOLATION_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sylvester/dp_oracle.hpp"
#include "sylvester/exponents.hpp"
#include "sylvester/number.hpp"
#include "sylvester/periodic_table.hpp"
#include "sylvester/quasipoly.hpp"

namespace sylvester {

/// Builds the W-space quasi-polynomial from DP samples.
///
/// For each residue r mod tau the values W(k*tau + r), k = 0..m-1, determine
/// a degree m-1 polynomial in k; substituting k = (s - r)/tau gives the
/// coefficients of s^{m-j} at s = r.  Everything is carried as integers
/// over the common denominator tau^{m-1} (m-1)!, and each coefficient
/// sequence must repeat with period lcm(d_1..d_j).
inline QuasiPolynomial build_by_interpolation(const ExponentTuple& t) {
  const auto m = static_cast<std::int64_t>(t.size());
  const std::int64_t tau = t.period();
  const CountTable samples(t, m * tau - 1);

  const BigInt tau_big = to_big(tau);
  BigInt denom;
  mpz_pow_ui(denom.get_mpz_t(), tau_big.get_mpz_t(), static_cast<unsigned long>(m - 1));
  denom *= factorial(m - 1);

  // scale[i] = denom / (tau^i i!)
  std::vector<BigInt> scale(static_cast<std::size_t>(m));
  {
    BigInt tau_pow_fact = 1;
    for (std::int64_t i = 0; i < m; ++i) {
      if (i > 0) tau_pow_fact *= tau_big * to_big(i);
      mpz_divexact(scale[static_cast<std::size_t>(i)].get_mpz_t(), denom.get_mpz_t(), tau_pow_fact.get_mpz_t());
    }
  }

  std::vector<std::int64_t> sub_period(static_cast<std::size_t>(m));
  std::vector<std::vector<BigInt>> numerators(static_cast<std::size_t>(m));
  for (std::int64_t j = 1; j <= m; ++j) {
    sub_period[static_cast<std::size_t>(j - 1)] = t.prefix_period(static_cast<std::size_t>(j));
    numerators[static_cast<std::size_t>(j - 1)].resize(static_cast<std::size_t>(sub_period[static_cast<std::size_t>(j - 1)]));
  }

  std::vector<BigInt> diff(static_cast<std::size_t>(m));
  std::vector<BigInt> basis(static_cast<std::size_t>(m));
  std::vector<BigInt> acc(static_cast<std::size_t>(m));
  BigInt term;
  BigInt shift;
  for (std::int64_t r = 0; r < tau; ++r) {
    for (std::int64_t k = 0; k < m; ++k) diff[static_cast<std::size_t>(k)] = samples.at(k * tau + r);
    for (std::int64_t i = 1; i < m; ++i) {
      for (std::int64_t k = m - 1; k >= i; --k) diff[static_cast<std::size_t>(k)] -= diff[static_cast<std::size_t>(k - 1)];
    }
    for (auto& a : acc) a = 0;
    for (auto& b : basis) b = 0;
    basis[0] = 1;
    for (std::int64_t i = 0; i < m; ++i) {
      // acc += diff[i] * scale[i] * prod_{u<i} (s - r - u*tau)
      if (diff[static_cast<std::size_t>(i)] != 0) {
        term = diff[static_cast<std::size_t>(i)] * scale[static_cast<std::size_t>(i)];
        for (std::int64_t e = 0; e <= i; ++e) {
          mpz_addmul(acc[static_cast<std::size_t>(e)].get_mpz_t(), term.get_mpz_t(), basis[static_cast<std::size_t>(e)].get_mpz_t());
        }
      }
      if (i + 1 < m) {
        // basis <- basis * (s - shift), highest power first
        shift = to_big(r + i * tau);
        for (std::int64_t e = i + 1; e >= 1; --e) {
          auto& hi = basis[static_cast<std::size_t>(e)];
          mpz_mul(term.get_mpz_t(), shift.get_mpz_t(), hi.get_mpz_t());
          mpz_sub(hi.get_mpz_t(), basis[static_cast<std::size_t>(e - 1)].get_mpz_t(), term.get_mpz_t());
        }
        basis[0] *= -shift;
      }
    }
    for (std::int64_t j = 1; j <= m; ++j) {
      const BigInt& n = acc[static_cast<std::size_t>(m - j)];
      const std::int64_t p = sub_period[static_cast<std::size_t>(j - 1)];
      auto& store = numerators[static_cast<std::size_t>(j - 1)];
      if (r < p) {
        store[static_cast<std::size_t>(r)] = n;
      } else if (store[static_cast<std::size_t>(r % p)] != n) {
        throw VerificationError("coefficient of s^" + std::to_string(m - j) + " for " + t.str() +
                                " is not periodic with period " + std::to_string(p));
      }
    }
  }

  QuasiPolynomial q{t, {}, Space::W, t.xi_shift()};
  for (std::int64_t j = 1; j <= m; ++j) {
    auto& store = numerators[static_cast<std::size_t>(j - 1)];
    std::vector<Rational> values(store.size());
    for (std::size_t r = 0; r < store.size(); ++r) {
      values[r] = make_rational(store[r], denom);
      store[r] = 0;
    }
    q.coefficients.push_back(PeriodicTable::on_integers(std::move(values)));
  }
  return q;
}

/// Per-residue k-polynomials W(k*tau + s) = sum_a A_a(s) k^a for s in a
/// window of residues, with an independent conversion to the Q tables.
class InterpolationContext {
 public:
  /// Fits A_a(s) for s = first .. first+count-1 (s may exceed tau).
  InterpolationContext(const ExponentTuple& t, std::int64_t first, std::int64_t count)
      : tuple_(t), first_(first), tau_(t.period()) {
    if (first < 0 || count < 1) throw std::invalid_argument("residue window must be non-empty and non-negative");
    const auto m = static_cast<std::int64_t>(t.size());
    const CountTable samples(t, (m - 1) * tau_ + first + count - 1);
    const auto newton = newton_basis(m);
    for (std::int64_t s = first; s < first + count; ++s) {
      std::vector<Rational> diff(static_cast<std::size_t>(m));
      for (std::int64_t k = 0; k < m; ++k) diff[static_cast<std::size_t>(k)] = Rational(samples.at(k * tau_ + s));
      for (std::int64_t i = 1; i < m; ++i) {
        for (std::int64_t k = m - 1; k >= i; --k) diff[static_cast<std::size_t>(k)] -= diff[static_cast<std::size_t>(k - 1)];
      }
      std::vector<Rational> a(static_cast<std::size_t>(m));
      for (std::int64_t i = 0; i < m; ++i) {
        for (std::int64_t e = 0; e <= i; ++e) a[static_cast<std::size_t>(e)] += diff[static_cast<std::size_t>(i)] * newton[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)];
      }
      k_coefficients_.push_back(std::move(a));
    }
  }

  const ExponentTuple& tuple() const { return tuple_; }
  std::int64_t first() const { return first_; }
  std::int64_t count() const { return static_cast<std::int64_t>(k_coefficients_.size()); }

  /// A_a(s): coefficient of k^a at residue s.
  const Rational& coefficient(std::int64_t s, std::int64_t a) const {
    return k_coefficients_.at(static_cast<std::size_t>(s - first_)).at(static_cast<std::size_t>(a));
  }

  /// Solves A_{m-r}(s) = sum_{j<=r} C(m-j, m-r) tau^{m-r} Q_j(s) s^{r-j} for
  /// Q_1..Q_m at every residue; requires the window to be exactly 0..tau-1.
  QuasiPolynomial to_quasipolynomial() const {
    const auto m = static_cast<std::int64_t>(tuple_.size());
    if (first_ != 0 || count() != tau_) throw std::logic_error("conversion needs residues 0..tau-1");
    std::vector<std::vector<Rational>> q(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(tau_)));
    for (std::int64_t s = 0; s < tau_; ++s) {
      const Rational sq = to_rational(s);
      for (std::int64_t r = 1; r <= m; ++r) {
        Rational rest = coefficient(s, m - r) / rational_pow(to_rational(tau_), m - r);
        for (std::int64_t j = 1; j < r; ++j) {
          rest -= Rational(binomial(m - j, m - r)) * q[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(s)] * rational_pow(sq, r - j);
        }
        q[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(s)] = rest;
      }
    }
    QuasiPolynomial out{tuple_, {}, Space::W, tuple_.xi_shift()};
    for (std::int64_t j = 1; j <= m; ++j) {
      auto full = PeriodicTable::on_integers(std::move(q[static_cast<std::size_t>(j - 1)]));
      out.coefficients.push_back(full.compressed(2 * tuple_.prefix_period(static_cast<std::size_t>(j))));
    }
    return out;
  }

 private:
  /// newton[i][e]: coefficient of k^e in C(k, i).
  static std::vector<std::vector<Rational>> newton_basis(std::int64_t m) {
    std::vector<std::vector<Rational>> out;
    std::vector<Rational> poly{Rational(1)};
    for (std::int64_t i = 0; i < m; ++i) {
      std::vector<Rational> scaled(static_cast<std::size_t>(m));
      const Rational inv_fact = make_rational(BigInt(1), factorial(i));
      for (std::size_t e = 0; e < poly.size(); ++e) scaled[e] = poly[e] * inv_fact;
      out.push_back(std::move(scaled));
      std::vector<Rational> next(poly.size() + 1);
      for (std::size_t e = 0; e < poly.size(); ++e) {
        next[e + 1] += poly[e];
        next[e] -= poly[e] * to_rational(i);
      }
      poly = std::move(next);
    }
    return out;
  }

  ExponentTuple tuple_;
  std::int64_t first_;
  std::int64_t tau_;
  std::vector<std::vector<Rational>> k_coefficients_;
};

}  // namespace sylvester

#endif  // SYLVESTER_INTERPOLATION_HPP
