#pragma once
#ifndef SYLVESTER_COXETER_HPP
#define SYLVESTER_COXETER_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sylvester/dp_oracle.hpp"
#include "sylvester/exponents.hpp"
#include "sylvester/interpolation.hpp"
#include "sylvester/number.hpp"
#include "sylvester/quasipoly.hpp"

namespace sylvester {

/// V(s) of a wave as a function on its half-integer grid s in xi + Z.
class WaveEvaluator {
 public:
  using Fn = std::function<Rational(HalfInteger)>;

  WaveEvaluator(std::string name, HalfInteger xi, Fn fn) : name_(std::move(name)), xi_(xi), fn_(std::move(fn)) {}

  /// Evaluator backed by the W-space quasi-polynomial of a tuple.
  static WaveEvaluator from_quasipolynomial(std::string name, std::shared_ptr<const QuasiPolynomial> q) {
    const HalfInteger xi = q->tuple.xi_shift();
    return WaveEvaluator(std::move(name), xi, [q, xi](HalfInteger s) { return eval(*q, (s - xi).integer()); });
  }

  const std::string& name() const { return name_; }
  HalfInteger xi() const { return xi_; }
  bool on_grid(HalfInteger s) const { return (s - xi_).is_integer(); }

  Rational operator()(HalfInteger s) const {
    if (!on_grid(s)) throw OffGridError("argument " + s.str() + " is off the grid of " + name_);
    return fn_(s);
  }

 private:
  std::string name_;
  HalfInteger xi_;
  Fn fn_;
};

enum class Sign { Plus, Minus };

/// U_+(s, p) = V(s + p) + V(s - p) and U_-(s, p) = V(s + p) - V(s - p).
inline Rational u_combinator(Sign sign, const WaveEvaluator& e, HalfInteger s, HalfInteger p) {
  const Rational a = e(s + p);
  const Rational b = e(s - p);
  return sign == Sign::Plus ? Rational(a + b) : Rational(a - b);
}

inline Rational u_plus(const WaveEvaluator& e, HalfInteger s, HalfInteger p) { return u_combinator(Sign::Plus, e, s, p); }
inline Rational u_minus(const WaveEvaluator& e, HalfInteger s, HalfInteger p) { return u_combinator(Sign::Minus, e, s, p); }

/// Signed sum of U terms at a common argument.
struct UTerm {
  int coefficient;
  HalfInteger p;
};

inline Rational u_sum(Sign sign, const WaveEvaluator& e, HalfInteger s, const std::vector<UTerm>& terms) {
  Rational acc = 0;
  for (const auto& term : terms) acc += term.coefficient * u_combinator(sign, e, s, term.p);
  return acc;
}

inline HalfInteger half(std::int64_t doubled) { return HalfInteger::from_doubled(doubled); }

/// Caches the symmetric-group waves (built once per rank by interpolation)
/// and the per-group formula evaluators.  Population is serialised; the
/// returned evaluators are immutable and safe to share.
class WaveLibrary {
 public:
  explicit WaveLibrary(CatalogLimits limits = {}) : limits_(limits) {}

  const CatalogLimits& limits() const { return limits_; }

  std::shared_ptr<const QuasiPolynomial> symmetric_wave(int m) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = symmetric_.find(m);
    if (it != symmetric_.end()) return it->second;
    auto q = std::make_shared<const QuasiPolynomial>(build_by_interpolation(symmetric_degrees(m)));
    symmetric_.emplace(m, q);
    return q;
  }

  std::shared_ptr<const WaveEvaluator> symmetric(int m) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    const std::string key = "S" + std::to_string(m);
    auto it = evaluators_.find(key);
    if (it != evaluators_.end()) return it->second;
    auto e = std::make_shared<const WaveEvaluator>(WaveEvaluator::from_quasipolynomial(key, symmetric_wave(m)));
    evaluators_.emplace(key, e);
    return e;
  }

  /// The group wave through its family formula.
  std::shared_ptr<const WaveEvaluator> group(const CoxeterGroup& g) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    const std::string key = g.name();
    auto it = evaluators_.find(key);
    if (it != evaluators_.end()) return it->second;
    auto e = std::make_shared<const WaveEvaluator>(make_group(g));
    evaluators_.emplace(key, e);
    return e;
  }

  /// The printed alternative formulas for the dihedral groups I2(m),
  /// m in {2,3,4,5,6,8,10,12}, expressed through other groups' waves.
  std::shared_ptr<const WaveEvaluator> dihedral_coincidence(int m) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    const std::string key = "I2(" + std::to_string(m) + ")~";
    auto it = evaluators_.find(key);
    if (it != evaluators_.end()) return it->second;
    auto e = std::make_shared<const WaveEvaluator>(make_dihedral_coincidence(m));
    evaluators_.emplace(key, e);
    return e;
  }

 private:
  WaveEvaluator make_group(const CoxeterGroup& g) {
    const HalfInteger xi = g.degrees().xi_shift();
    const std::string name = g.name();
    const int r = g.rank();
    switch (g.family()) {
      case Family::A: {
        // V(s, A_m) = U_-(s, 1/2, S_{m+1}), the degree 1 removed from S_{m+1}
        auto s_wave = symmetric(r + 1);
        return WaveEvaluator(name, xi, [s_wave](HalfInteger s) { return u_minus(*s_wave, s, half(1)); });
      }
      case Family::B: {
        // V(s, B_m) = 1/2 Psi_2(s - xi) U_+(s/2, 0, S_m)
        auto s_wave = symmetric(r);
        return WaveEvaluator(name, xi, [s_wave, xi](HalfInteger s) -> Rational {
          if (psi(2, s - xi) == 0) return 0;
          return u_plus(*s_wave, s.halved(), 0) / 2;
        });
      }
      case Family::D:
        return make_d(g, xi);
      case Family::G2: {
        auto s3 = symmetric(3);
        return WaveEvaluator(name, xi, [s3](HalfInteger s) -> Rational {
          if (psi(2, s) == 0) return 0;
          return u_minus(*s3, s.halved(), 1);
        });
      }
      case Family::F4: {
        auto s6 = symmetric(6);
        return WaveEvaluator(name, xi, [s6](HalfInteger s) -> Rational {
          if (psi(2, s) == 0) return 0;
          return u_sum(Sign::Plus, *s6, s.halved(), {{1, half(7)}, {-1, half(3)}});
        });
      }
      case Family::E6: {
        auto s12 = symmetric(12);
        return WaveEvaluator(name, xi, [s12](HalfInteger s) {
          return u_sum(Sign::Plus, *s12, s, {{1, 18}, {-1, 17}, {-1, 15}, {1, 13}, {1, 5}, {-1, 2}});
        });
      }
      case Family::E7: {
        auto s9 = symmetric(9);
        return WaveEvaluator(name, xi, [s9](HalfInteger s) -> Rational {
          if (psi(2, s - 1) == 0) return 0;
          return u_sum(Sign::Plus, *s9, s.halved(), {{1, 5}, {-1, 3}});
        });
      }
      case Family::E8: {
        auto s15 = symmetric(15);
        return WaveEvaluator(name, xi, [s15](HalfInteger s) -> Rational {
          if (psi(2, s) == 0) return 0;
          return u_sum(Sign::Minus, *s15, s.halved(),
                       {{1, 28}, {1, 21}, {1, 12}, {1, 11}, {-1, 8}, {-1, 7}, {-1, 6}, {-1, 26}, {-1, 25}});
        });
      }
      case Family::H3: {
        auto s5 = symmetric(5);
        return WaveEvaluator(name, xi, [s5](HalfInteger s) -> Rational {
          if (psi(2, s - 1) == 0) return 0;
          return u_sum(Sign::Plus, *s5, s.halved(), {{1, 3}, {-1, 1}});
        });
      }
      case Family::H4: {
        auto e8 = group(CoxeterGroup(Family::E8, 8, limits_));
        return WaveEvaluator(name, xi, [e8](HalfInteger s) {
          return u_sum(Sign::Plus, *e8, s, {{1, 32}, {-1, 24}, {-1, 18}, {-1, 14}, {1, 10}, {-1, 8}, {1, 6}, {1, 0}});
        });
      }
      case Family::I2: {
        // sum over s1 = 0..s - xi of Psi_2(s - xi - s1) Psi_m(s1); empty below xi
        const std::int64_t m = r;
        return WaveEvaluator(name, xi, [m, xi](HalfInteger s) -> Rational {
          const std::int64_t top = (s - xi).integer();
          std::int64_t n = 0;
          for (std::int64_t s1 = 0; s1 <= top; s1 += m) n += psi(2, top - s1);
          return to_rational(n);
        });
      }
      case Family::S: {
        return *symmetric(r);
      }
    }
    throw std::invalid_argument("unsupported group " + name);
  }

  WaveEvaluator make_d(const CoxeterGroup& g, HalfInteger xi) {
    const int n = g.rank();
    const std::string name = g.name();
    if (n == 3) {
      // D3 = A3
      auto a3 = group(CoxeterGroup(Family::A, 3, limits_));
      return WaveEvaluator(name, xi, [a3](HalfInteger s) { return (*a3)(s); });
    }
    if (n == 5) {
      auto s8 = symmetric(8);
      return WaveEvaluator(name, xi, [s8](HalfInteger s) {
        return u_sum(Sign::Minus, *s8, s, {{1, half(11)}, {-1, half(9)}, {-1, half(5)}, {1, half(3)}});
      });
    }
    if (n % 2 == 0) {
      // V(s, D_{2k}) = Psi_2(s) U_+(s/2, k/2, S_{2k})
      auto s_wave = symmetric(n);
      const HalfInteger p = half(n / 2);
      return WaveEvaluator(name, xi, [s_wave, p](HalfInteger s) -> Rational {
        if (psi(2, s) == 0) return 0;
        return u_plus(*s_wave, s.halved(), p);
      });
    }
    // V(s, D_n) = sum_{s1 = 0, n, 2n, .. <= s - xi} V(s - n/2 - s1, B_{n-1}), n odd
    auto b = group(CoxeterGroup(Family::B, n - 1, limits_));
    const std::int64_t nn = n;
    return WaveEvaluator(name, xi, [b, xi, nn](HalfInteger s) -> Rational {
      const std::int64_t top = (s - xi).integer();
      Rational acc = 0;
      for (std::int64_t s1 = 0; s1 <= top; s1 += nn) acc += (*b)(s - half(nn) - HalfInteger(s1));
      return acc;
    });
  }

  WaveEvaluator make_dihedral_coincidence(int m) {
    const CoxeterGroup target(Family::I2, m, limits_);
    const HalfInteger xi = target.degrees().xi_shift();
    const std::string name = target.name() + " (coincidence)";
    auto same = [&](const CoxeterGroup& other) {
      auto e = group(other);
      return WaveEvaluator(name, xi, [e](HalfInteger s) { return (*e)(s); });
    };
    switch (m) {
      case 2: {
        // Degrees (2,2): the Psi_2 * Psi_2 convolution of two B1 waves.
        auto b1 = group(CoxeterGroup(Family::B, 1, limits_));
        return WaveEvaluator(name, xi, [b1, xi](HalfInteger s) -> Rational {
          const std::int64_t top = (s - xi).integer();
          Rational acc = 0;
          for (std::int64_t s1 = 0; s1 <= top; s1 += 2) acc += (*b1)(s - xi - HalfInteger(s1) + b1->xi());
          return acc;
        });
      }
      case 3:
        return same(CoxeterGroup(Family::A, 2, limits_));
      case 4:
        return same(CoxeterGroup(Family::B, 2, limits_));
      case 5: {
        auto a4 = group(CoxeterGroup(Family::A, 4, limits_));
        return WaveEvaluator(name, xi, [a4](HalfInteger s) { return u_sum(Sign::Plus, *a4, s, {{1, half(7)}, {-1, half(1)}}); });
      }
      case 6:
        return same(CoxeterGroup(Family::G2, 2, limits_));
      case 8: {
        auto b4 = group(CoxeterGroup(Family::B, 4, limits_));
        return WaveEvaluator(name, xi, [b4](HalfInteger s) { return u_sum(Sign::Plus, *b4, s, {{1, 5}, {-1, 1}}); });
      }
      case 10: {
        auto h3 = group(CoxeterGroup(Family::H3, 3, limits_));
        return WaveEvaluator(name, xi, [h3](HalfInteger s) { return u_minus(*h3, s, 3); });
      }
      case 12: {
        auto f4 = group(CoxeterGroup(Family::F4, 4, limits_));
        return WaveEvaluator(name, xi, [f4](HalfInteger s) { return u_sum(Sign::Plus, *f4, s, {{1, 7}, {-1, 1}}); });
      }
      default:
        throw std::invalid_argument("no coincidence formula for I2(" + std::to_string(m) + ")");
    }
  }

  CatalogLimits limits_;
  std::recursive_mutex mu_;
  std::map<int, std::shared_ptr<const QuasiPolynomial>> symmetric_;
  std::map<std::string, std::shared_ptr<const WaveEvaluator>> evaluators_;
};

/// V(s, G) through the family formula; s must lie on xi(G) + Z.
inline Rational v_group(WaveLibrary& library, const CoxeterGroup& g, HalfInteger s) { return (*library.group(g))(s); }

struct GroupReport {
  std::string group;
  ExponentTuple degrees{1};
  std::int64_t s_max = 0;
  std::int64_t points_checked = 0;
  bool ok = true;
  std::string first_failure;
};

/// Formula value = direct quasi-polynomial value = DP count for every W-space
/// point s in [0, s_max] (the formula evaluated at s + xi).
inline GroupReport verify_group(WaveLibrary& library, const CoxeterGroup& g, std::int64_t s_max) {
  GroupReport report;
  report.group = g.name();
  report.degrees = g.degrees();
  report.s_max = s_max;
  const auto formula = library.group(g);
  const auto direct = build_by_interpolation(report.degrees);
  const CountTable dp(report.degrees, s_max);
  const HalfInteger xi = report.degrees.xi_shift();
  for (std::int64_t s = 0; s <= s_max; ++s) {
    ++report.points_checked;
    const Rational f = (*formula)(xi + HalfInteger(s));
    const Rational q = eval(direct, s);
    const Rational c(dp.at(s));
    if (f != c || q != c) {
      report.ok = false;
      report.first_failure = "s=" + std::to_string(s) + ": formula " + exact_string(f) + ", quasi-polynomial " +
                             exact_string(q) + ", count " + exact_string(c);
      return report;
    }
  }
  return report;
}

/// Default verification window [0, 3 tau(G)].
inline GroupReport verify_group(WaveLibrary& library, const CoxeterGroup& g) {
  return verify_group(library, g, 3 * g.degrees().period());
}

}  // namespace sylvester

#endif  // SYLVESTER_COXETER_HPP
