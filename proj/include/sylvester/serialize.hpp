#pragma once
#ifndef SYLVESTER_SERIALIZE_HPP
#define SYLVESTER_SERIALIZE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sylvester/exponents.hpp"
#include "sylvester/number.hpp"
#include "sylvester/periodic_table.hpp"
#include "sylvester/quasipoly.hpp"

namespace sylvester {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON document of a W-space quasi-polynomial:
///   {"degrees": [...], "space": "W", "sum_of_degrees": n,
///    "coefficients": [{"power": m-j, "period": p, "values": ["num/den", ...]}, ...]}
/// Each period is the stored (not necessarily minimal) period of Q_j.
inline nlohmann::json to_json(const QuasiPolynomial& q) {
  const QuasiPolynomial w = to_w_space(q);
  nlohmann::json doc;
  doc["degrees"] = std::vector<std::int64_t>(w.tuple.degrees().begin(), w.tuple.degrees().end());
  doc["space"] = "W";
  doc["sum_of_degrees"] = w.tuple.sum();
  auto coeffs = nlohmann::json::array();
  const auto m = static_cast<std::int64_t>(w.tuple.size());
  for (std::int64_t j = 1; j <= m; ++j) {
    const auto& table = w.coefficients[static_cast<std::size_t>(j - 1)];
    auto values = nlohmann::json::array();
    for (const auto& v : table.lattice_values()) values.push_back(fraction_string(v));
    coeffs.push_back({{"power", m - j}, {"period", table.period()}, {"values", std::move(values)}});
  }
  doc["coefficients"] = std::move(coeffs);
  return doc;
}

inline std::string dump(const QuasiPolynomial& q, int indent = 1) { return to_json(q).dump(indent); }

inline QuasiPolynomial from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw FormatError("document must be an object");
    if (doc.at("space").get<std::string>() != "W") throw FormatError("only W-space documents are supported");
    const ExponentTuple t(doc.at("degrees").get<std::vector<std::int64_t>>());
    if (doc.at("sum_of_degrees").get<std::int64_t>() != t.sum()) throw FormatError("sum_of_degrees does not match degrees");
    const auto& coeffs = doc.at("coefficients");
    const auto m = static_cast<std::int64_t>(t.size());
    if (!coeffs.is_array() || static_cast<std::int64_t>(coeffs.size()) != m) {
      throw FormatError("expected " + std::to_string(m) + " coefficient tables");
    }
    QuasiPolynomial q{t, {}, Space::W, t.xi_shift()};
    for (std::int64_t j = 1; j <= m; ++j) {
      const auto& c = coeffs[static_cast<std::size_t>(j - 1)];
      if (c.at("power").get<std::int64_t>() != m - j) throw FormatError("coefficient " + std::to_string(j) + " has the wrong power");
      const auto period = c.at("period").get<std::int64_t>();
      if (period < 1 || t.prefix_period(static_cast<std::size_t>(j)) % period != 0) {
        throw FormatError("period " + std::to_string(period) + " of coefficient " + std::to_string(j) + " does not divide " +
                          std::to_string(t.prefix_period(static_cast<std::size_t>(j))));
      }
      const auto& values = c.at("values");
      if (!values.is_array() || static_cast<std::int64_t>(values.size()) != period) {
        throw FormatError("coefficient " + std::to_string(j) + " has " + std::to_string(values.size()) +
                          " values for period " + std::to_string(period));
      }
      std::vector<Rational> parsed;
      parsed.reserve(values.size());
      for (const auto& v : values) parsed.push_back(parse_reduced_fraction(v.get<std::string>()));
      q.coefficients.push_back(PeriodicTable::on_integers(std::move(parsed)));
    }
    return q;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("malformed document: ") + e.what());
  }
}

inline QuasiPolynomial load(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("not a JSON document: ") + e.what());
  }
  return from_json(doc);
}

}  // namespace sylvester

#endif  // SYLVESTER_SERIALIZE_HPP
