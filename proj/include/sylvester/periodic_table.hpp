#pragma once
#ifndef SYLVESTER_PERIODIC_TABLE_HPP
#define SYLVESTER_PERIODIC_TABLE_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "sylvester/number.hpp"

namespace sylvester {

/// An exact rational function on a lattice of half-integers, given over one
/// period.
///
/// Arguments are addressed by their double h = 2s.  The function lives on
/// the residue class h = parity (mod 2); entries of the other class are zero
/// by convention, so lookups off the lattice return 0.
class PeriodicTable {
 public:
  PeriodicTable() = default;

  /// Zero table with the given doubled period (must be even) and parity.
  PeriodicTable(std::int64_t period_doubled, int parity)
      : period_doubled_(period_doubled), parity_(parity) {
    if (period_doubled < 2 || period_doubled % 2 != 0) {
      throw std::invalid_argument("doubled period must be a positive even number");
    }
    if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
    values_.resize(static_cast<std::size_t>(period_doubled));
  }

  /// Integer-lattice table with period `period` from values at s = 0..period-1.
  static PeriodicTable on_integers(std::vector<Rational> values) {
    const auto p = static_cast<std::int64_t>(values.size());
    PeriodicTable t(2 * p, 0);
    for (std::int64_t s = 0; s < p; ++s) t.values_[static_cast<std::size_t>(2 * s)] = std::move(values[static_cast<std::size_t>(s)]);
    return t;
  }

  static PeriodicTable constant(const Rational& c, int parity = 0) {
    PeriodicTable t(2, parity);
    t.values_[static_cast<std::size_t>(parity)] = c;
    return t;
  }

  /// Fills every on-lattice entry from f(h).
  static PeriodicTable tabulate(std::int64_t period_doubled, int parity,
                                const std::function<Rational(std::int64_t)>& f) {
    PeriodicTable t(period_doubled, parity);
    for (std::int64_t h = parity; h < period_doubled; h += 2) t.values_[static_cast<std::size_t>(h)] = f(h);
    return t;
  }

  std::int64_t period_doubled() const { return period_doubled_; }
  /// Period measured in s (half the doubled period).
  std::int64_t period() const { return period_doubled_ / 2; }
  int parity() const { return parity_; }
  const std::vector<Rational>& values() const { return values_; }

  bool on_lattice(std::int64_t h) const { return floor_mod(h, 2) == parity_; }

  const Rational& at(std::int64_t h) const { return values_[static_cast<std::size_t>(floor_mod(h, period_doubled_))]; }
  const Rational& at(HalfInteger s) const { return at(s.doubled()); }

  void set(std::int64_t h, Rational v) {
    if (!on_lattice(h)) throw OffGridError("write to off-lattice entry h=" + std::to_string(h));
    values_[static_cast<std::size_t>(floor_mod(h, period_doubled_))] = std::move(v);
  }

  /// On-lattice values at s = parity/2, parity/2 + 1, ... (one per period step).
  std::vector<Rational> lattice_values() const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(period()));
    for (std::int64_t h = parity_; h < period_doubled_; h += 2) out.push_back(values_[static_cast<std::size_t>(h)]);
    return out;
  }

  /// True if the table is invariant under a shift of `sub_doubled` (which
  /// must divide the stored period).
  bool has_period(std::int64_t sub_doubled) const {
    if (sub_doubled <= 0 || period_doubled_ % sub_doubled != 0) return false;
    for (std::int64_t h = 0; h + sub_doubled < period_doubled_; ++h) {
      if (values_[static_cast<std::size_t>(h)] != values_[static_cast<std::size_t>(h + sub_doubled)]) return false;
    }
    return true;
  }

  /// Same function stored over the shorter period; throws if it is not one.
  PeriodicTable compressed(std::int64_t sub_doubled) const {
    if (!has_period(sub_doubled) || sub_doubled % 2 != 0) {
      throw VerificationError("table is not periodic with doubled period " + std::to_string(sub_doubled));
    }
    PeriodicTable t(sub_doubled, parity_);
    for (std::int64_t h = 0; h < sub_doubled; ++h) t.values_[static_cast<std::size_t>(h)] = values_[static_cast<std::size_t>(h)];
    return t;
  }

  /// Same function stored over a longer period (a multiple of the current one).
  PeriodicTable expanded(std::int64_t period_doubled) const {
    if (period_doubled % period_doubled_ != 0) throw std::invalid_argument("expanded period must be a multiple");
    PeriodicTable t(period_doubled, parity_);
    for (std::int64_t h = 0; h < period_doubled; ++h) t.values_[static_cast<std::size_t>(h)] = at(h);
    return t;
  }

  /// Smallest doubled period (a divisor of the stored one) under which the table repeats.
  std::int64_t minimal_period_doubled() const {
    for (std::int64_t p = 2; p <= period_doubled_; p += 2) {
      if (period_doubled_ % p == 0 && has_period(p)) return p;
    }
    return period_doubled_;
  }

  /// Tables are equal as functions on the lattice.
  friend bool operator==(const PeriodicTable& a, const PeriodicTable& b) {
    if (a.parity_ != b.parity_) return false;
    const std::int64_t l = std::lcm(a.period_doubled_, b.period_doubled_);
    for (std::int64_t h = a.parity_; h < l; h += 2) {
      if (a.at(h) != b.at(h)) return false;
    }
    return true;
  }

 private:
  std::int64_t period_doubled_ = 2;
  int parity_ = 0;
  std::vector<Rational> values_ = std::vector<Rational>(2);
};

}  // namespace sylvester

#endif  // SYLVESTER_PERIODIC_TABLE_HPP
