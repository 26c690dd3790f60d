#pragma once
#ifndef SYLVESTER_RECURSION_HPP
#define SYLVESTER_RECURSION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sylvester/bernoulli.hpp"
#include "sylvester/exponents.hpp"
#include "sylvester/number.hpp"
#include "sylvester/periodic_table.hpp"
#include "sylvester/quasipoly.hpp"

namespace sylvester {

/// Quantities shared by one step m-1 -> m of the recursion.
struct RecursionContext {
  std::int64_t degree;  ///< d_m, the exponent being added
  std::int64_t period;  ///< tau{d^m}
  std::int64_t delta;   ///< tau{d^m} / d_m

  RecursionContext(const ExponentTuple& prefix)  // NOLINT(implicit)
      : degree(prefix.largest()), period(prefix.period()), delta(period / degree) {}

  /// lambda_p = p + 1/2 for p = 0..delta-1.
  std::vector<HalfInteger> lambdas() const {
    std::vector<HalfInteger> out;
    for (std::int64_t p = 0; p < delta; ++p) out.push_back(HalfInteger::from_doubled(2 * p + 1));
    return out;
  }
};

/// V-space tables of one recursion level (the tuple's first m exponents).
struct RecursionLevel {
  ExponentTuple tuple;
  std::vector<PeriodicTable> R;           ///< R^m_1..R^m_m, R^m_j over lcm(d_1..d_j)
  std::optional<PeriodicTable> principal;  ///< calR^m_m from the Bernoulli formula (m >= 2)
  std::optional<PeriodicTable> remainder;  ///< r^m_m = R^m_m - calR^m_m, period d_m (m >= 2)

  int parity() const { return static_cast<int>(floor_mod(tuple.sum(), 2)); }
};

struct RecursionOptions {
  bool check_difference_relation = true;
  bool keep_levels = false;
};

struct RecursionResult {
  QuasiPolynomial wave;    ///< W-space
  QuasiPolynomial v_wave;  ///< V-space, coefficients are the R^m_j
  RecursionLevel last;
  std::optional<RecursionLevel> previous;
  std::vector<RecursionLevel> levels;  ///< all levels when keep_levels is set
};

namespace detail {

using Poly = std::vector<Rational>;  // ascending powers

inline Rational poly_eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// P(p + 1) - P(p)
inline Poly forward_difference(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly out(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) {
    for (std::size_t i = 0; i < k; ++i) out[i] += p[k] * Rational(binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(i)));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

/// B_l(1 - lambda_p / delta) as a polynomial in p.
inline Poly bernoulli_weight(std::int64_t l, std::int64_t delta) {
  const Rational a = Rational(1) - make_rational(1, 2 * delta);
  const Rational b = make_rational(-1, delta);
  const auto bl = bernoulli_polynomial(l);
  Poly out(static_cast<std::size_t>(l + 1));
  // sum_k c_k (a + b p)^k
  for (std::int64_t k = 0; k <= l; ++k) {
    const Rational& c = bl[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    for (std::int64_t i = 0; i <= k; ++i) {
      out[static_cast<std::size_t>(i)] += c * Rational(binomial(k, i)) * rational_pow(a, k - i) * rational_pow(b, i);
    }
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

/// Evaluates O(h) = sum_{p=0}^{delta-1} P(p) * S(h - (2p+1) d) on every
/// lattice point of one period 2*tau of the output.
///
/// Along a residue class h = h0 + 2kd this is a circular convolution of
/// length delta with a polynomial kernel, so it is advanced in k through the
/// chain of forward differences of P instead of being summed directly.
class ShiftedSum {
 public:
  ShiftedSum(const Poly& kernel, std::int64_t delta) : delta_(delta) {
    Poly p = kernel;
    while (!p.empty()) {
      std::vector<Rational> vals(static_cast<std::size_t>(delta));
      for (std::int64_t i = 0; i < delta; ++i) vals[static_cast<std::size_t>(i)] = poly_eval(p, to_rational(i));
      jump_.push_back(poly_eval(p, Rational(0)) - poly_eval(p, to_rational(delta)));
      values_.push_back(std::move(vals));
      p = forward_difference(p);
    }
  }

  /// Adds coef * O(h) into `out` (indexed by h in [0, 2*tau)).
  void accumulate(const PeriodicTable& source, std::int64_t degree, int parity, const Rational& coef,
                  std::vector<Rational>& out) const {
    if (values_.empty() || coef == 0) return;
    const std::int64_t order = static_cast<std::int64_t>(values_.size());
    std::vector<Rational> g(static_cast<std::size_t>(delta_));
    std::vector<Rational> conv(static_cast<std::size_t>(order));
    Rational tmp;
    for (std::int64_t h0 = parity; h0 < 2 * degree; h0 += 2) {
      bool any = false;
      for (std::int64_t i = 0; i < delta_; ++i) {
        g[static_cast<std::size_t>(i)] = source.at(h0 - degree + 2 * i * degree);
        any = any || g[static_cast<std::size_t>(i)] != 0;
      }
      if (!any) continue;
      // conv_a[0] = sum_p P_a(p) g[-p mod delta]
      for (std::int64_t a = 0; a < order; ++a) {
        Rational& c = conv[static_cast<std::size_t>(a)];
        c = 0;
        const auto& vals = values_[static_cast<std::size_t>(a)];
        for (std::int64_t p = 0; p < delta_; ++p) {
          const Rational& gv = g[static_cast<std::size_t>(floor_mod(-p, delta_))];
          if (gv == 0) continue;
          mpq_mul(tmp.get_mpq_t(), vals[static_cast<std::size_t>(p)].get_mpq_t(), gv.get_mpq_t());
          c += tmp;
        }
      }
      for (std::int64_t k = 0; k < delta_; ++k) {
        Rational& slot = out[static_cast<std::size_t>(h0 + 2 * k * degree)];
        slot += coef * conv[0];
        if (k + 1 == delta_) break;
        // conv_a[k+1] = conv_a[k] + (P_a(0) - P_a(delta)) g[k+1] + conv_{a+1}[k]
        const Rational& g_next = g[static_cast<std::size_t>(k + 1)];
        for (std::int64_t a = 0; a < order; ++a) {
          Rational& c = conv[static_cast<std::size_t>(a)];
          if (g_next != 0) c += jump_[static_cast<std::size_t>(a)] * g_next;
          if (a + 1 < order) c += conv[static_cast<std::size_t>(a + 1)];
        }
      }
    }
  }

 private:
  std::int64_t delta_;
  std::vector<std::vector<Rational>> values_;  // values_[a][p] = P_a(p)
  std::vector<Rational> jump_;                 // P_a(0) - P_a(delta)
};

inline PeriodicTable table_from_dense(std::vector<Rational>&& dense, int parity) {
  PeriodicTable t(static_cast<std::int64_t>(dense.size()), parity);
  for (std::int64_t h = parity; h < static_cast<std::int64_t>(dense.size()); h += 2) t.set(h, std::move(dense[static_cast<std::size_t>(h)]));
  return t;
}

/// Psi_{d_1}(s - d_1/2) on the doubled lattice h = 2s.
inline RecursionLevel base_level(const ExponentTuple& first) {
  const std::int64_t d = first[0];
  RecursionLevel level{first, {}, std::nullopt, std::nullopt};
  level.R.push_back(PeriodicTable::tabulate(2 * d, static_cast<int>(d % 2), [d](std::int64_t h) {
    return Rational(floor_mod((h - d) / 2, d) == 0 ? 1 : 0);
  }));
  return level;
}

inline Rational half_power(std::int64_t h, std::int64_t e) { return rational_pow(make_rational(h, 2), e); }

}  // namespace detail

/// Result of checking the difference relation
/// R^m_{m-k}(s) - R^m_{m-k}(s - d_m) = sum_{j=k+1}^{m-1} [ (-d_m)^{j-k} C(j,k) R^m_{m-j}(s - d_m)
///                                      + (-d_m/2)^{j-1-k} C(j-1,k) R^{m-1}_{m-j}(s - d_m/2) ]
/// over every lattice point of one period, plus the k = 0 form for calR^m_m.
struct DifferenceRelationReport {
  bool ok = true;
  std::int64_t points_checked = 0;
  std::string first_failure;
};

inline DifferenceRelationReport check_difference_relation(const RecursionLevel& level, const RecursionLevel& previous) {
  DifferenceRelationReport report;
  const auto m = static_cast<std::int64_t>(level.tuple.size());
  const std::int64_t d = level.tuple.largest();
  const std::int64_t tau = level.tuple.period();
  const int parity = level.parity();
  auto R = [&](std::int64_t j, std::int64_t h) -> const Rational& { return level.R[static_cast<std::size_t>(j - 1)].at(h); };
  auto Rp = [&](std::int64_t j, std::int64_t h) -> const Rational& { return previous.R[static_cast<std::size_t>(j - 1)].at(h); };

  auto rhs = [&](std::int64_t k, std::int64_t h) {
    Rational acc = 0;
    for (std::int64_t j = k + 1; j <= m - 1; ++j) {
      acc += rational_pow(to_rational(-d), j - k) * Rational(binomial(j, k)) * R(m - j, h - 2 * d);
      acc += rational_pow(make_rational(-d, 2), j - 1 - k) * Rational(binomial(j - 1, k)) * Rp(m - j, h - d);
    }
    return acc;
  };

  for (std::int64_t h = parity; h < 2 * tau; h += 2) {
    for (std::int64_t k = 0; k <= m - 1; ++k) {
      const Rational expected = rhs(k, h);
      ++report.points_checked;
      if (R(m - k, h) - R(m - k, h - 2 * d) != expected) {
        report.ok = false;
        report.first_failure = "R^" + std::to_string(m) + "_" + std::to_string(m - k) + " at 2s=" + std::to_string(h);
        return report;
      }
      if (k == 0 && level.principal) {
        const auto& c = *level.principal;
        if (c.at(h) - c.at(h - 2 * d) != expected) {
          report.ok = false;
          report.first_failure = "calR^" + std::to_string(m) + "_" + std::to_string(m) + " at 2s=" + std::to_string(h);
          return report;
        }
      }
    }
  }
  return report;
}

/// One step of the recursion: tables of `prefix` (m exponents) from those
/// of its first m-1 exponents.
inline RecursionLevel recursion_step(const RecursionLevel& previous, const ExponentTuple& prefix) {
  const auto m = static_cast<std::int64_t>(prefix.size());
  const RecursionContext ctx(prefix);
  const std::int64_t d = ctx.degree;
  const std::int64_t tau = ctx.period;
  const int parity = static_cast<int>(floor_mod(prefix.sum(), 2));
  const Rational tau_q = to_rational(tau);

  std::vector<std::vector<Rational>> dense(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(2 * tau)));
  std::vector<Rational>& principal = dense[static_cast<std::size_t>(m - 1)];

  // Every (l, i) pair with kernel B_l and source R^{m-1}_i feeds R^m_{i+l}
  // (when i + l < m, Bernoulli coefficient formula) or calR^m_m (when i + l = m).
  for (std::int64_t l = 0; l <= m - 1; ++l) {
    const detail::ShiftedSum sum(detail::bernoulli_weight(l, ctx.delta), ctx.delta);
    for (std::int64_t i = 1; i + l <= m && i <= m - 1; ++i) {
      const std::int64_t j = i + l;
      Rational coef;
      if (j < m) {
        coef = rational_pow(tau_q, l) / tau_q * Rational(binomial(m - 1 - j + l, l)) / to_rational(m - j);
      } else {
        if (l == 0) continue;
        coef = rational_pow(tau_q, l) / tau_q / to_rational(l);
      }
      sum.accumulate(previous.R[static_cast<std::size_t>(i - 1)], d, parity, coef, dense[static_cast<std::size_t>(j - 1)]);
    }
  }

  RecursionLevel level{prefix, {}, std::nullopt, std::nullopt};
  for (std::int64_t j = 1; j < m; ++j) {
    auto full = detail::table_from_dense(std::move(dense[static_cast<std::size_t>(j - 1)]), parity);
    const std::int64_t sub = 2 * prefix.prefix_period(static_cast<std::size_t>(j));
    if (!full.has_period(sub)) {
      throw VerificationError("R^" + std::to_string(m) + "_" + std::to_string(j) + " of " + prefix.str() +
                              " is not periodic with period " + std::to_string(sub / 2));
    }
    level.R.push_back(full.compressed(sub));
  }
  PeriodicTable principal_table = detail::table_from_dense(std::move(principal), parity);

  // Close R^m_m = calR^m_m + r with r d_m-periodic: V vanishes on the
  // 2 xi - 1 lattice points strictly between -xi and xi, which cover every
  // residue mod d_m.
  const std::int64_t total = prefix.sum();
  if (total - 1 < d) throw VerificationError("not enough interior zeroes to close " + prefix.str());
  auto partial = [&](std::int64_t h) {
    Rational acc = 0;
    for (std::int64_t j = 1; j < m; ++j) acc += level.R[static_cast<std::size_t>(j - 1)].at(h) * detail::half_power(h, m - j);
    acc += principal_table.at(h);
    return acc;
  };
  PeriodicTable remainder(2 * d, parity);
  for (std::int64_t k = 1; k <= total - 1; ++k) {
    const std::int64_t h = -total + 2 * k;
    const Rational value = -partial(h);
    if (k <= d) {
      remainder.set(h, value);
    } else if (remainder.at(h) != value) {
      throw VerificationError("inconsistent closure for " + prefix.str() + " at 2s=" + std::to_string(h));
    }
  }
  if (partial(total) + remainder.at(total) != 1) {
    throw VerificationError("closure of " + prefix.str() + " violates V(xi) = 1");
  }

  PeriodicTable last(2 * tau, parity);
  for (std::int64_t h = parity; h < 2 * tau; h += 2) last.set(h, principal_table.at(h) + remainder.at(h));
  level.R.push_back(std::move(last));
  level.principal = std::move(principal_table);
  level.remainder = std::move(remainder);
  return level;
}

/// Builds the quasi-polynomial through the V-space coefficient recursion:
/// R^m_j (j < m) from the Bernoulli-weighted shifted sums of R^{m-1},
/// calR^m_m likewise, and the d_m-periodic remainder from the interior
/// zeroes of V.  Each level is checked against the difference relation
/// unless disabled.
inline RecursionResult build_by_recursion_traced(const ExponentTuple& t, const RecursionOptions& options = {}) {
  RecursionLevel current = detail::base_level(t.prefix(1));
  std::optional<RecursionLevel> previous;
  std::vector<RecursionLevel> levels;
  if (options.keep_levels) levels.push_back(current);
  for (std::size_t k = 2; k <= t.size(); ++k) {
    RecursionLevel next = recursion_step(current, t.prefix(k));
    if (options.check_difference_relation) {
      const auto report = check_difference_relation(next, current);
      if (!report.ok) throw VerificationError("difference relation fails for " + t.prefix(k).str() + ": " + report.first_failure);
    }
    previous = std::move(current);
    current = std::move(next);
    if (options.keep_levels) levels.push_back(current);
  }
  QuasiPolynomial v{t, current.R, Space::V, t.xi_shift()};
  QuasiPolynomial w = to_w_space(v);
  return RecursionResult{std::move(w), std::move(v), std::move(current), std::move(previous), std::move(levels)};
}

inline QuasiPolynomial build_by_recursion(const ExponentTuple& t) { return build_by_recursion_traced(t).wave; }

}  // namespace sylvester

#endif  // SYLVESTER_RECURSION_HPP
