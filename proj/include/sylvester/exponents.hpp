#pragma once
#ifndef SYLVESTER_EXPONENTS_HPP
#define SYLVESTER_EXPONENTS_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sylvester/number.hpp"

namespace sylvester {

/// A non-empty multiset of positive exponents d_1 <= ... <= d_m.
///
/// The tuple is canonicalized to ascending order on construction; the
/// original input order is not kept.
class ExponentTuple {
 public:
  ExponentTuple(std::vector<std::int64_t> degrees) : degrees_(std::move(degrees)) {  // NOLINT
    if (degrees_.empty()) throw std::invalid_argument("exponent tuple must not be empty");
    for (auto d : degrees_) {
      if (d < 1) throw std::invalid_argument("exponents must be positive, got " + std::to_string(d));
    }
    std::sort(degrees_.begin(), degrees_.end());
  }
  ExponentTuple(std::initializer_list<std::int64_t> degrees)
      : ExponentTuple(std::vector<std::int64_t>(degrees)) {}

  std::span<const std::int64_t> degrees() const { return degrees_; }
  std::size_t size() const { return degrees_.size(); }
  std::int64_t operator[](std::size_t i) const { return degrees_[i]; }
  std::int64_t largest() const { return degrees_.back(); }

  std::int64_t sum() const { return std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0}); }

  std::int64_t gcd() const {
    std::int64_t g = 0;
    for (auto d : degrees_) g = std::gcd(g, d);
    return g;
  }

  /// lcm of all exponents; the common period of the wave.
  std::int64_t period() const { return prefix_period(size()); }

  /// lcm(d_1..d_j), the period of the j-th coefficient function.
  std::int64_t prefix_period(std::size_t j) const {
    std::int64_t l = 1;
    for (std::size_t i = 0; i < j; ++i) l = checked_lcm(l, degrees_[i]);
    return l;
  }

  /// Half the exponent sum, exact.
  HalfInteger xi_shift() const { return HalfInteger::from_doubled(sum()); }

  ExponentTuple prefix(std::size_t j) const {
    if (j == 0 || j > size()) throw std::out_of_range("prefix length out of range");
    return ExponentTuple(std::vector<std::int64_t>(degrees_.begin(), degrees_.begin() + static_cast<std::ptrdiff_t>(j)));
  }

  /// Removes one copy of `d`.
  ExponentTuple without(std::int64_t d) const {
    auto v = degrees_;
    auto it = std::find(v.begin(), v.end(), d);
    if (it == v.end()) throw std::invalid_argument("exponent " + std::to_string(d) + " not present");
    v.erase(it);
    return ExponentTuple(std::move(v));
  }

  ExponentTuple with(std::int64_t d) const {
    auto v = degrees_;
    v.push_back(d);
    return ExponentTuple(std::move(v));
  }

  ExponentTuple scaled(std::int64_t p) const {
    if (p < 1) throw std::invalid_argument("scale factor must be positive");
    auto v = degrees_;
    for (auto& d : v) d *= p;
    return ExponentTuple(std::move(v));
  }

  ExponentTuple concat(const ExponentTuple& other) const {
    auto v = degrees_;
    v.insert(v.end(), other.degrees_.begin(), other.degrees_.end());
    return ExponentTuple(std::move(v));
  }

  /// Smallest exponent occurring at least twice, or 0.
  std::int64_t first_duplicate() const {
    for (std::size_t i = 1; i < degrees_.size(); ++i) {
      if (degrees_[i] == degrees_[i - 1]) return degrees_[i];
    }
    return 0;
  }

  bool pairwise_coprime() const {
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      for (std::size_t j = i + 1; j < degrees_.size(); ++j) {
        if (std::gcd(degrees_[i], degrees_[j]) != 1) return false;
      }
    }
    return true;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(degrees_[i]);
    }
    return s + ")";
  }

  /// Comma separated positive integers, e.g. "1,2,3".
  static ExponentTuple parse(std::string_view csv) {
    std::vector<std::int64_t> v;
    std::string item;
    std::stringstream ss{std::string(csv)};
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw std::invalid_argument("empty entry in degree list");
      std::size_t used = 0;
      const long long d = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument("malformed degree: " + item);
      v.push_back(d);
    }
    return ExponentTuple(std::move(v));
  }

  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;

 private:
  std::vector<std::int64_t> degrees_;
};

/// lcm(1, ..., n) in 64 bits; the lcm_growth module has the arbitrary-precision version.
inline std::int64_t lcm_upto(std::int64_t n) {
  std::int64_t l = 1;
  for (std::int64_t k = 2; k <= n; ++k) l = checked_lcm(l, k);
  return l;
}

enum class Family { A, B, D, G2, F4, E6, E7, E8, H3, H4, I2, S };

/// Rank bounds for the catalog.  Classical families are capped to keep
/// periods at desk scale; the symmetric catalog must reach S15 for E8.
struct CatalogLimits {
  int max_classical_rank = 10;
  int max_symmetric_rank = 20;
  int max_dihedral = 1000;
};

/// An irreducible Coxeter group (plus the symmetric groups S_m, whose
/// "degrees" 1..m give the restricted partition numbers).
class CoxeterGroup {
 public:
  CoxeterGroup(Family family, int rank, const CatalogLimits& limits = {}) : family_(family), rank_(rank) {
    validate(limits);
  }

  Family family() const { return family_; }
  /// Rank, or the dihedral parameter m for I2(m), or m for S_m.
  int rank() const { return rank_; }

  std::string name() const {
    switch (family_) {
      case Family::A: return "A" + std::to_string(rank_);
      case Family::B: return "B" + std::to_string(rank_);
      case Family::D: return "D" + std::to_string(rank_);
      case Family::G2: return "G2";
      case Family::F4: return "F4";
      case Family::E6: return "E6";
      case Family::E7: return "E7";
      case Family::E8: return "E8";
      case Family::H3: return "H3";
      case Family::H4: return "H4";
      case Family::I2: return "I2(" + std::to_string(rank_) + ")";
      case Family::S: return "S" + std::to_string(rank_);
    }
    return "?";
  }

  /// Degrees of the basic invariants, ascending.
  ExponentTuple degrees() const {
    std::vector<std::int64_t> d;
    const std::int64_t m = rank_;
    switch (family_) {
      case Family::A:
        for (std::int64_t k = 2; k <= m + 1; ++k) d.push_back(k);
        break;
      case Family::B:
        for (std::int64_t k = 1; k <= m; ++k) d.push_back(2 * k);
        break;
      case Family::D:
        for (std::int64_t k = 1; k <= m - 1; ++k) d.push_back(2 * k);
        d.push_back(m);
        break;
      case Family::G2: d = {2, 6}; break;
      case Family::F4: d = {2, 6, 8, 12}; break;
      case Family::E6: d = {2, 5, 6, 8, 9, 12}; break;
      case Family::E7: d = {2, 6, 8, 10, 12, 14, 18}; break;
      case Family::E8: d = {2, 8, 12, 14, 18, 20, 24, 30}; break;
      case Family::H3: d = {2, 6, 10}; break;
      case Family::H4: d = {2, 12, 20, 30}; break;
      case Family::I2: d = {2, m}; break;
      case Family::S:
        for (std::int64_t k = 1; k <= m; ++k) d.push_back(k);
        break;
    }
    return ExponentTuple(std::move(d));
  }

  /// The period as listed in the published catalog of periods (not computed
  /// from the degrees; compare against degrees().period()).
  std::int64_t catalog_period() const {
    const std::int64_t m = rank_;
    switch (family_) {
      case Family::A: return lcm_upto(m + 1);
      case Family::B:
      case Family::D: return 2 * lcm_upto(m);
      case Family::G2: return 6;
      case Family::F4: return 24;
      case Family::E6: return 360;
      case Family::E7:
      case Family::E8: return 2520;
      case Family::H3: return 30;
      case Family::H4: return 60;
      case Family::I2: return m % 2 == 0 ? m : 2 * m;
      case Family::S: return lcm_upto(m);
    }
    return 0;
  }

  /// The shift xi(G) as printed with each family's wave formula.
  HalfInteger catalog_xi() const {
    const std::int64_t m = rank_;
    switch (family_) {
      case Family::A: return HalfInteger::from_doubled(m * (m + 3) / 2);
      case Family::B: return HalfInteger(m * (m + 1) / 2);
      case Family::D: return HalfInteger::from_doubled(m * m);
      case Family::G2: return 4;
      case Family::F4: return 14;
      case Family::E6: return 21;
      case Family::E7: return 35;
      case Family::E8: return 64;
      case Family::H3: return 9;
      case Family::H4: return 32;
      case Family::I2: return HalfInteger::from_doubled(2 + m);
      case Family::S: return HalfInteger::from_doubled(m * (m + 1) / 2);
    }
    return 0;
  }

  /// Accepts "A3", "B5", "D4", "G2", "F4", "E6", "E7", "E8", "H3", "H4",
  /// "I2(7)", "S6"; case-insensitive.
  static CoxeterGroup parse(std::string_view text, const CatalogLimits& limits = {}) {
    std::string s;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    auto fail = [&]() -> CoxeterGroup { throw std::invalid_argument("unknown group name: " + std::string(text)); };
    if (s.empty()) return fail();
    if (s == "G2") return {Family::G2, 2, limits};
    if (s == "F4") return {Family::F4, 4, limits};
    if (s == "E6") return {Family::E6, 6, limits};
    if (s == "E7") return {Family::E7, 7, limits};
    if (s == "E8") return {Family::E8, 8, limits};
    if (s == "H3") return {Family::H3, 3, limits};
    if (s == "H4") return {Family::H4, 4, limits};
    if (s.rfind("I2(", 0) == 0 && s.back() == ')') {
      return {Family::I2, parse_rank(s.substr(3, s.size() - 4), text), limits};
    }
    Family f;
    switch (s[0]) {
      case 'A': f = Family::A; break;
      case 'B': f = Family::B; break;
      case 'D': f = Family::D; break;
      case 'S': f = Family::S; break;
      default: return fail();
    }
    return {f, parse_rank(s.substr(1), text), limits};
  }

  friend bool operator==(const CoxeterGroup&, const CoxeterGroup&) = default;

 private:
  static int parse_rank(const std::string& digits, std::string_view original) {
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("unknown group name: " + std::string(original));
    }
    return std::stoi(digits);
  }

  void validate(const CatalogLimits& limits) const {
    auto bad = [&](const std::string& why) { throw std::invalid_argument(name() + ": " + why); };
    switch (family_) {
      case Family::A:
        if (rank_ < 1 || rank_ > limits.max_classical_rank) bad("rank outside supported range");
        break;
      case Family::B:
        if (rank_ < 1 || rank_ > limits.max_classical_rank) bad("rank outside supported range");
        break;
      case Family::D:
        if (rank_ < 3) bad("D requires rank >= 3");
        if (rank_ > limits.max_classical_rank) bad("rank outside supported range");
        break;
      case Family::I2:
        if (rank_ < 2 || rank_ > limits.max_dihedral) bad("I2(m) requires m >= 2");
        break;
      case Family::S:
        if (rank_ < 1 || rank_ > limits.max_symmetric_rank) bad("rank outside supported range");
        break;
      case Family::G2: if (rank_ != 2) bad("invalid rank"); break;
      case Family::F4: if (rank_ != 4) bad("invalid rank"); break;
      case Family::E6: if (rank_ != 6) bad("invalid rank"); break;
      case Family::E7: if (rank_ != 7) bad("invalid rank"); break;
      case Family::E8: if (rank_ != 8) bad("invalid rank"); break;
      case Family::H3: if (rank_ != 3) bad("invalid rank"); break;
      case Family::H4: if (rank_ != 4) bad("invalid rank"); break;
    }
  }

  Family family_;
  int rank_;
};

/// Every group in the catalog within `limits` (dihedral up to I2(max_dihedral_listed)).
inline std::vector<CoxeterGroup> coxeter_catalog(const CatalogLimits& limits = {}, int max_dihedral_listed = 12) {
  std::vector<CoxeterGroup> out;
  for (int m = 1; m <= limits.max_classical_rank; ++m) out.emplace_back(Family::A, m, limits);
  for (int m = 1; m <= limits.max_classical_rank; ++m) out.emplace_back(Family::B, m, limits);
  for (int m = 3; m <= limits.max_classical_rank; ++m) out.emplace_back(Family::D, m, limits);
  for (Family f : {Family::G2, Family::F4, Family::E6, Family::E7, Family::E8, Family::H3, Family::H4}) {
    const int rank = f == Family::G2 ? 2 : f == Family::F4 ? 4 : f == Family::E6 ? 6 : f == Family::E7 ? 7
                   : f == Family::E8 ? 8 : f == Family::H3 ? 3 : 4;
    out.emplace_back(f, rank, limits);
  }
  for (int m = 2; m <= max_dihedral_listed; ++m) out.emplace_back(Family::I2, m, limits);
  return out;
}

inline ExponentTuple coxeter_degrees(const CoxeterGroup& g) { return g.degrees(); }

inline ExponentTuple symmetric_degrees(int m) { return CoxeterGroup(Family::S, m).degrees(); }

}  // namespace sylvester

#endif  // SYLVESTER_EXPONENTS_HPP
