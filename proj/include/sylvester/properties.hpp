#pragma once
#ifndef SYLVESTER_PROPERTIES_HPP
#define SYLVESTER_PROPERTIES_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sylvester/dp_oracle.hpp"
#include "sylvester/exponents.hpp"
#include "sylvester/interpolation.hpp"
#include "sylvester/number.hpp"
#include "sylvester/periodic_table.hpp"
#include "sylvester/quasipoly.hpp"

namespace sylvester {

/// Zeroes of the W-space continuation predicted from the tuple alone.
///
/// With p = gcd of the degrees: the multiples -p, -2p, ..., -(sum - p);
/// the point -xi when m is even (a half-integer when the sum is odd); and,
/// for p > 1, every integer not divisible by p.
struct ZeroSet {
  std::vector<std::int64_t> finite;     ///< descending from -p
  std::optional<HalfInteger> symmetric;  ///< -xi, for even m
  std::int64_t modulus = 1;              ///< p; non-multiples are zeroes when p > 1
  bool pairwise_coprime = false;
  bool setwise_coprime = false;

  bool contains(std::int64_t s) const {
    if (modulus > 1 && floor_mod(s, modulus) != 0) return true;
    if (symmetric && symmetric->is_integer() && symmetric->integer() == s) return true;
    for (auto z : finite) {
      if (z == s) return true;
    }
    return false;
  }

  std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < finite.size(); ++i) out += (i ? "," : "") + std::to_string(finite[i]);
    out += "}";
    if (symmetric) out += " U {" + symmetric->str() + "}";
    if (modulus > 1) out += " U {s : s != 0 mod " + std::to_string(modulus) + "}";
    return out;
  }
};

inline ZeroSet predicted_zeroes(const ExponentTuple& t) {
  ZeroSet z;
  z.modulus = t.gcd();
  z.setwise_coprime = z.modulus == 1;
  z.pairwise_coprime = t.pairwise_coprime();
  for (std::int64_t s = -z.modulus; s > -t.sum(); s -= z.modulus) z.finite.push_back(s);
  if (t.size() % 2 == 0) z.symmetric = -t.xi_shift();
  return z;
}

struct ZeroReport {
  bool ok = true;
  ZeroSet predicted;
  std::int64_t points_checked = 0;
  /// The -xi zero of even m: verified directly when -xi is an integer, or
  /// true by the off-grid convention when it is a half-integer.
  bool symmetric_on_grid = false;
  std::string first_failure;
};

/// The continuation vanishes exactly on the predicted set within [-sum, 0],
/// and (for gcd p > 1) on every non-multiple of p in [-3 tau, 3 tau].
inline ZeroReport verify_zeroes(const QuasiPolynomial& q) {
  ZeroReport report;
  report.predicted = predicted_zeroes(q.tuple);
  const auto& z = report.predicted;
  auto fail = [&](const std::string& why) {
    if (report.ok) report.first_failure = why;
    report.ok = false;
  };
  for (std::int64_t s = -q.tuple.sum(); s <= 0; ++s) {
    ++report.points_checked;
    const bool zero = eval(q, s) == 0;
    if (zero != z.contains(s)) fail("W(" + std::to_string(s) + ") " + (zero ? "vanishes unexpectedly" : "does not vanish"));
  }
  if (z.modulus > 1) {
    const std::int64_t span = 3 * q.tuple.period();
    for (std::int64_t s = -span; s <= span; ++s) {
      if (floor_mod(s, z.modulus) == 0) continue;
      ++report.points_checked;
      if (eval(q, s) != 0) fail("W(" + std::to_string(s) + ") does not vanish off the multiples of " + std::to_string(z.modulus));
    }
  }
  if (z.symmetric) {
    report.symmetric_on_grid = z.symmetric->is_integer();
    // V(0) on the doubled grid; the off-parity case is zero by convention.
    const auto v = to_v_space(q);
    ++report.points_checked;
    if (eval(v, HalfInteger(0)) != 0) fail("V(0) does not vanish");
  }
  return report;
}

struct ParityReport {
  bool ok = true;
  std::int64_t points_checked = 0;
  std::string first_failure;
};

/// W(s) = (-1)^{m+1} W(-sum - s) for s over two full periods starting at 0.
inline ParityReport parity_report(const QuasiPolynomial& q) {
  ParityReport report;
  const std::int64_t total = q.tuple.sum();
  const int sign = q.tuple.size() % 2 == 1 ? 1 : -1;
  for (std::int64_t s = 0; s < 2 * q.tuple.period(); ++s) {
    ++report.points_checked;
    const Rational lhs = eval(q, s);
    const Rational rhs = eval(q, -total - s);
    if (lhs != sign * rhs) {
      report.ok = false;
      report.first_failure = "s=" + std::to_string(s);
      return report;
    }
  }
  return report;
}

inline bool verify_parity(const QuasiPolynomial& q) { return parity_report(q).ok; }

/// Quasi-polynomial of p*t from that of t: Q'_j(s) = Psi_p(s) Q_j(s/p) / p^{m-j}.
inline QuasiPolynomial scale_tuple(const QuasiPolynomial& q, std::int64_t p) {
  if (p < 1) throw std::invalid_argument("scale factor must be positive");
  if (q.space != Space::W) throw std::invalid_argument("scale_tuple expects a W-space quasi-polynomial");
  const auto m = static_cast<std::int64_t>(q.tuple.size());
  QuasiPolynomial out{q.tuple.scaled(p), {}, Space::W, HalfInteger::from_doubled(q.shift.doubled() * p)};
  for (std::int64_t j = 1; j <= m; ++j) {
    const auto& src = q.coefficients[static_cast<std::size_t>(j - 1)];
    const Rational factor = make_rational(BigInt(1), BigInt(rational_pow(to_rational(p), m - j)));
    const std::int64_t period = p * src.period();
    std::vector<Rational> values(static_cast<std::size_t>(period));
    for (std::int64_t s = 0; s < period; s += p) values[static_cast<std::size_t>(s)] = src.at(2 * (s / p)) * factor;
    out.coefficients.push_back(PeriodicTable::on_integers(std::move(values)));
  }
  return out;
}

struct DuplicateReport {
  bool ok = true;
  std::int64_t duplicated = 0;  ///< the repeated exponent d
  ExponentTuple reduced{1};     ///< one copy of d replaced by 2d
  std::int64_t points_checked = 0;
  std::string first_failure;
};

/// Checks W(s, t) = W(s - d, t') + W(s, t') where t' trades one copy of a
/// repeated exponent d for 2d, over the quasi-polynomial continuations on
/// [-sum(t), 2 tau(t')] and against the DP on the non-negative part.  In
/// V-space this is V(s, t) = V(s - d/2, t') + V(s + d/2, t').
inline DuplicateReport reduce_duplicate(const ExponentTuple& t) {
  const std::int64_t d = t.first_duplicate();
  if (d == 0) throw std::invalid_argument("tuple " + t.str() + " has no repeated exponent");
  DuplicateReport report;
  report.duplicated = d;
  report.reduced = t.without(d).with(2 * d);
  const auto q = build_by_interpolation(t);
  const auto q2 = build_by_interpolation(report.reduced);
  const std::int64_t hi = 2 * report.reduced.period();
  const CountTable dp(t, hi);
  const CountTable dp2(report.reduced, hi);
  auto fail = [&](const std::string& why) {
    if (report.ok) report.first_failure = why;
    report.ok = false;
  };
  for (std::int64_t s = -t.sum(); s <= hi; ++s) {
    ++report.points_checked;
    if (eval(q, s) != eval(q2, s - d) + eval(q2, s)) fail("continuation at s=" + std::to_string(s));
    if (s >= 0 && dp.at(s) != dp2.at(s - d) + dp2.at(s)) fail("count at s=" + std::to_string(s));
  }
  const auto v = to_v_space(q);
  const auto v2 = to_v_space(q2);
  const HalfInteger half_d = HalfInteger::from_doubled(d);
  const HalfInteger xi = t.xi_shift();
  for (std::int64_t k = -t.sum(); k <= hi; ++k) {
    const HalfInteger s = xi + HalfInteger(k);
    ++report.points_checked;
    if (eval(v, s) != eval(v2, s - half_d) + eval(v2, s + half_d)) fail("V-space at s=" + s.str());
  }
  return report;
}

}  // namespace sylvester

#endif  // SYLVESTER_PROPERTIES_HPP
