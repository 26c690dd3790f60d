#pragma once
#ifndef SYLVESTER_QUASIPOLY_HPP
#define SYLVESTER_QUASIPOLY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sylvester/exponents.hpp"
#include "sylvester/number.hpp"
#include "sylvester/periodic_table.hpp"

namespace sylvester {

/// W-space: argument is s itself (integer lattice).
/// V-space: argument is s + xi, i.e. V(s) = W(s - xi); lattice parity = sum(d) mod 2.
enum class Space { W, V };

/// sum_{j=1}^{m} C_j(s) * s^{m-j} with periodic exact coefficient tables.
///
/// coefficients[j-1] multiplies s^{m-j} and has period dividing
/// lcm(d_1, ..., d_j).
struct QuasiPolynomial {
  ExponentTuple tuple;
  std::vector<PeriodicTable> coefficients;
  Space space = Space::W;
  HalfInteger shift;  ///< xi of the tuple; the offset between the two spaces

  std::size_t degree_count() const { return coefficients.size(); }

  friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b) {
    return a.tuple == b.tuple && a.space == b.space && a.shift == b.shift && a.coefficients == b.coefficients;
  }
};

/// Psi_p(s): 1 when s is an integer divisible by p, else 0.
inline int psi(std::int64_t p, HalfInteger s) {
  if (p < 1) throw std::invalid_argument("psi modulus must be positive");
  if (!s.is_integer()) return 0;
  return floor_mod(s.integer(), p) == 0 ? 1 : 0;
}

/// Value at the (half-)integer argument s in the quasi-polynomial's own
/// space.  Off-lattice arguments evaluate to 0 by the table convention.
inline Rational eval(const QuasiPolynomial& q, HalfInteger s) {
  const Rational x = s.value();
  Rational acc = 0;
  for (const auto& c : q.coefficients) {
    acc *= x;
    acc += c.at(s.doubled());
  }
  return acc;
}

inline Rational eval(const QuasiPolynomial& q, std::int64_t s) {
  if (q.space == Space::W) {
    // Integer Horner; one rational add per coefficient.
    const Rational x = to_rational(s);
    Rational acc = 0;
    for (const auto& c : q.coefficients) {
      acc *= x;
      acc += c.at(2 * s);
    }
    return acc;
  }
  return eval(q, HalfInteger(s));
}

/// The s^{m-1} coefficient; expected to be 1/((m-1)! * prod d_i).
inline Rational leading_coefficient(const QuasiPolynomial& q) {
  const auto& c = q.coefficients.front();
  const auto vals = c.lattice_values();
  for (const auto& v : vals) {
    if (v != vals.front()) throw VerificationError("leading coefficient is not constant");
  }
  return vals.front();
}

inline Rational expected_leading_coefficient(const ExponentTuple& t) {
  BigInt den = factorial(static_cast<std::int64_t>(t.size()) - 1);
  for (auto d : t.degrees()) den *= to_big(d);
  return make_rational(BigInt(1), den);
}

/// Re-expands a V-space quasi-polynomial in W-space:
/// Q_i(s) = sum_{j<=i} C(m-j, i-j) xi^{i-j} R_j(s + xi), each Q_i stored over
/// lcm(d_1..d_i).
inline QuasiPolynomial to_w_space(const QuasiPolynomial& v) {
  if (v.space == Space::W) return v;
  const auto m = static_cast<std::int64_t>(v.tuple.size());
  const Rational xi = v.shift.value();
  const std::int64_t shift_doubled = v.shift.doubled();
  std::vector<Rational> xi_pow(static_cast<std::size_t>(m + 1));
  xi_pow[0] = 1;
  for (std::int64_t k = 1; k <= m; ++k) xi_pow[static_cast<std::size_t>(k)] = xi_pow[static_cast<std::size_t>(k - 1)] * xi;

  QuasiPolynomial w{v.tuple, {}, Space::W, v.shift};
  for (std::int64_t i = 1; i <= m; ++i) {
    const std::int64_t period = v.tuple.prefix_period(static_cast<std::size_t>(i));
    w.coefficients.push_back(PeriodicTable::tabulate(2 * period, 0, [&](std::int64_t h) {
      Rational acc = 0;
      for (std::int64_t j = 1; j <= i; ++j) {
        const Rational& r = v.coefficients[static_cast<std::size_t>(j - 1)].at(h + shift_doubled);
        if (r == 0) continue;
        acc += Rational(binomial(m - j, i - j)) * xi_pow[static_cast<std::size_t>(i - j)] * r;
      }
      return acc;
    }));
  }
  return w;
}

/// Inverse of to_w_space: R_j(s) = sum_{i<=j} C(m-i, j-i) (-xi)^{j-i} Q_i(s - xi).
inline QuasiPolynomial to_v_space(const QuasiPolynomial& w) {
  if (w.space == Space::V) return w;
  const auto m = static_cast<std::int64_t>(w.tuple.size());
  const Rational neg_xi = -w.shift.value();
  const std::int64_t shift_doubled = w.shift.doubled();
  const int parity = static_cast<int>(floor_mod(shift_doubled, 2));
  std::vector<Rational> pw(static_cast<std::size_t>(m + 1));
  pw[0] = 1;
  for (std::int64_t k = 1; k <= m; ++k) pw[static_cast<std::size_t>(k)] = pw[static_cast<std::size_t>(k - 1)] * neg_xi;

  QuasiPolynomial v{w.tuple, {}, Space::V, w.shift};
  for (std::int64_t j = 1; j <= m; ++j) {
    const std::int64_t period = w.tuple.prefix_period(static_cast<std::size_t>(j));
    v.coefficients.push_back(PeriodicTable::tabulate(2 * period, parity, [&](std::int64_t h) {
      Rational acc = 0;
      for (std::int64_t i = 1; i <= j; ++i) {
        const Rational& q = w.coefficients[static_cast<std::size_t>(i - 1)].at(h - shift_doubled);
        if (q == 0) continue;
        acc += Rational(binomial(m - i, j - i)) * pw[static_cast<std::size_t>(j - i)] * q;
      }
      return acc;
    }));
  }
  return v;
}

}  // namespace sylvester

#endif  // SYLVESTER_QUASIPOLY_HPP
