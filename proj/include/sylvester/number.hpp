#pragma once
#ifndef SYLVESTER_NUMBER_HPP
#define SYLVESTER_NUMBER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sylvester {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an argument does not lie on the grid a wave is defined on.
class OffGridError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an internal consistency check fails (a bug, not bad input).
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t m) {
  return (a - floor_mod(a, m)) / m;
}

inline std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  const std::int64_t q = a / g;
  if (q != 0 && b > std::numeric_limits<std::int64_t>::max() / q) {
    throw std::overflow_error("lcm exceeds 64-bit range");
  }
  return q * b;
}

inline BigInt to_big(std::int64_t v) {
  BigInt r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

inline Rational to_rational(std::int64_t v) { return Rational(to_big(v)); }

/// num/den in canonical form (mpq_class's two-argument constructor does not reduce).
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}
inline Rational make_rational(std::int64_t num, std::int64_t den) { return make_rational(to_big(num), to_big(den)); }

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline BigInt factorial(std::int64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline Rational rational_pow(const Rational& base, std::int64_t e) {
  Rational r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= base;
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Always "num/den", including integers ("3/1").
inline std::string fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Integers print bare, everything else as num/den.
inline std::string exact_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return fraction_string(q);
}

inline BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("malformed integer: " + std::string(text));
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') {
      throw std::invalid_argument("malformed integer: " + std::string(text));
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits, 10);
}

/// Parses "num/den" and rejects anything not in lowest terms with den > 0.
inline Rational parse_reduced_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("expected num/den, got: " + std::string(text));
  }
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("non-positive denominator: " + std::string(text));
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) throw std::invalid_argument("fraction not reduced: " + std::string(text));
  Rational q;
  mpq_set_num(q.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(q.get_mpq_t(), den.get_mpz_t());
  return q;
}

/// An exact value in (1/2)Z, stored as its double.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  constexpr HalfInteger(std::int64_t integer) : doubled_(2 * integer) {}  // NOLINT(implicit)

  static constexpr HalfInteger from_doubled(std::int64_t doubled) {
    HalfInteger h;
    h.doubled_ = doubled;
    return h;
  }

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }

  /// Exact integer value; throws if the value is a proper half-integer.
  std::int64_t integer() const {
    if (!is_integer()) throw OffGridError("half-integer " + str() + " used as an integer");
    return doubled_ / 2;
  }

  Rational value() const { return make_rational(doubled_, 2); }
  double to_double() const { return static_cast<double>(doubled_) / 2.0; }

  std::string str() const {
    if (is_integer()) return std::to_string(doubled_ / 2);
    return std::to_string(doubled_) + "/2";
  }

  constexpr HalfInteger operator-() const { return from_doubled(-doubled_); }
  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
    return from_doubled(a.doubled_ + b.doubled_);
  }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
    return from_doubled(a.doubled_ - b.doubled_);
  }
  friend constexpr bool operator==(HalfInteger a, HalfInteger b) = default;
  friend constexpr auto operator<=>(HalfInteger a, HalfInteger b) {
    return a.doubled_ <=> b.doubled_;
  }

  /// Exact halving; requires an even doubled value (i.e. an integer argument
  /// whose half is again on the half-integer lattice).
  HalfInteger halved() const {
    if (!is_integer()) throw OffGridError("cannot halve " + str() + " on the half-integer lattice");
    return from_doubled(doubled_ / 2);
  }

  /// Parses "7", "-3", "15/2".
  static HalfInteger parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return HalfInteger(std::stoll(std::string(text)));
    }
    if (text.substr(slash + 1) != "2") throw std::invalid_argument("expected k/2: " + std::string(text));
    return from_doubled(std::stoll(std::string(text.substr(0, slash))));
  }

 private:
  std::int64_t doubled_ = 0;
};

}  // namespace sylvester

#endif  // SYLVESTER_NUMBER_HPP
