#pragma once
#ifndef SYLVESTER_CLI_HPP
#define SYLVESTER_CLI_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sylvester/coxeter.hpp"
#include "sylvester/dp_oracle.hpp"
#include "sylvester/exponents.hpp"
#include "sylvester/interpolation.hpp"
#include "sylvester/lcm_growth.hpp"
#include "sylvester/properties.hpp"
#include "sylvester/quasipoly.hpp"
#include "sylvester/recursion.hpp"
#include "sylvester/serialize.hpp"

namespace sylvester {
namespace cli {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "a..b" (inclusive).
inline std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("expected a range a..b, got '" + text + "'");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const long long lo = std::stoll(a, &used_a);
    const long long hi = std::stoll(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("trailing characters");
    if (lo > hi) throw UsageError("empty range '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("malformed range '" + text + "'");
  }
}

/// "1-10,51-60,101-110" or single values, in order of appearance.
inline std::vector<std::int64_t> parse_rows(const std::string& text) {
  std::vector<std::int64_t> rows;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      const auto dash = item.find('-', 1);
      std::size_t used = 0;
      if (dash == std::string::npos) {
        rows.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } else {
        const std::string a = item.substr(0, dash);
        const std::string b = item.substr(dash + 1);
        std::size_t ub = 0;
        const long long lo = std::stoll(a, &used);
        const long long hi = std::stoll(b, &ub);
        if (used != a.size() || ub != b.size() || lo > hi) throw std::invalid_argument(item);
        for (long long r = lo; r <= hi; ++r) rows.push_back(r);
      }
    } catch (const std::logic_error&) {
      throw UsageError("malformed row list '" + text + "'");
    }
  }
  if (rows.empty()) throw UsageError("empty row list");
  return rows;
}

/// "S1..S10", "A3,B4,I2(5)", or mixtures; ranges keep the family letter.
inline std::vector<CoxeterGroup> parse_groups(const std::string& text, const CatalogLimits& limits) {
  std::vector<CoxeterGroup> out;
  std::vector<std::string> items;
  {
    // split on commas outside parentheses
    std::string cur;
    int depth = 0;
    for (char c : text) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        items.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    items.push_back(cur);
  }
  for (const auto& item : items) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(CoxeterGroup::parse(item, limits));
      continue;
    }
    const auto first = CoxeterGroup::parse(item.substr(0, dots), limits);
    const auto last = CoxeterGroup::parse(item.substr(dots + 2), limits);
    if (first.family() != last.family() || first.rank() > last.rank()) throw UsageError("bad group range '" + item + "'");
    for (int r = first.rank(); r <= last.rank(); ++r) out.emplace_back(first.family(), r, limits);
  }
  return out;
}

enum class Format { Text, Csv, Json };

inline Format parse_format(const std::string& f) {
  if (f == "text") return Format::Text;
  if (f == "csv") return Format::Csv;
  if (f == "json") return Format::Json;
  throw UsageError("unknown format '" + f + "'");
}

enum class Method { Interp, Recursion, Both };

inline Method parse_method(const std::string& m) {
  if (m == "interp") return Method::Interp;
  if (m == "recursion") return Method::Recursion;
  if (m == "both") return Method::Both;
  throw UsageError("unknown method '" + m + "'");
}

/// Builds with the chosen method; `both` requires exactly equal tables.
inline QuasiPolynomial build(const ExponentTuple& t, Method method) {
  switch (method) {
    case Method::Interp: return build_by_interpolation(t);
    case Method::Recursion: return build_by_recursion(t);
    case Method::Both: {
      auto a = build_by_interpolation(t);
      auto b = build_by_recursion(t);
      if (!(a == b)) throw VerificationError("interpolation and recursion disagree for " + t.str());
      return a;
    }
  }
  throw std::logic_error("unreachable");
}

struct BenchRow {
  std::int64_t s;
  double eval_us;  ///< one quasi-polynomial evaluation
  double dp_ms;    ///< DP sweep 0..s
  double ratio;    ///< dp / eval
  std::string value;
};

/// Times one evaluation (averaged over `reps`) against a DP sweep to the same s.
inline std::vector<BenchRow> run_bench(const QuasiPolynomial& q, const std::vector<std::int64_t>& points, int reps = 2000) {
  using clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  for (auto s : points) {
    Rational v;
    const auto t0 = clock::now();
    for (int i = 0; i < reps; ++i) v = eval(q, s);
    const auto t1 = clock::now();
    const double eval_us = std::chrono::duration<double, std::micro>(t1 - t0).count() / reps;
    const auto t2 = clock::now();
    const CountTable dp(q.tuple, s);
    const BigInt c = dp.at(s);
    const auto t3 = clock::now();
    const double dp_ms = std::chrono::duration<double, std::milli>(t3 - t2).count();
    if (Rational(c) != v) throw VerificationError("bench: quasi-polynomial and DP disagree at s=" + std::to_string(s));
    rows.push_back({s, eval_us, dp_ms, dp_ms * 1000.0 / eval_us, c.get_str()});
  }
  return rows;
}

struct VerifyLine {
  std::string name;
  bool ok;
  std::string detail;
};

/// Property checks on one tuple.
inline std::vector<VerifyLine> verify_suite(const ExponentTuple& t) {
  std::vector<VerifyLine> lines;
  const auto m = static_cast<std::int64_t>(t.size());
  const std::int64_t tau = t.period();
  const auto q = build_by_interpolation(t);

  bool rec_ok = true;
  std::string rec_detail = "difference relation holds at every grid point";
  try {
    const auto rec = build_by_recursion_traced(t);
    if (!(rec.wave == q)) {
      rec_ok = false;
      rec_detail = "tables differ from interpolation";
    }
  } catch (const VerificationError& e) {
    rec_ok = false;
    rec_detail = e.what();
  }
  lines.push_back({"recursion build equals interpolation", rec_ok, rec_detail});

  {
    const CountTable dp(t, 3 * tau);
    bool ok = true;
    std::string detail = "s in [0, " + std::to_string(3 * tau) + "]";
    for (std::int64_t s = 0; s <= 3 * tau && ok; ++s) {
      if (eval(q, s) != Rational(dp.at(s))) {
        ok = false;
        detail = "mismatch at s=" + std::to_string(s);
      }
    }
    lines.push_back({"quasi-polynomial equals count", ok, detail});
  }
  {
    bool ok = true;
    std::string detail = "s in [" + std::to_string(-3 * tau) + ", 0)";
    for (std::int64_t s = -3 * tau; s < 0 && ok; ++s) {
      if (!is_integer(eval(q, s))) {
        ok = false;
        detail = "non-integer at s=" + std::to_string(s);
      }
    }
    lines.push_back({"integer values on negative s", ok, detail});
  }
  {
    bool ok = true;
    std::string detail;
    for (std::int64_t j = 1; j <= m; ++j) {
      const auto& c = q.coefficients[static_cast<std::size_t>(j - 1)];
      const std::int64_t want = t.prefix_period(static_cast<std::size_t>(j));
      const std::int64_t minimal = c.minimal_period_doubled() / 2;
      detail += (j > 1 ? " " : "") + std::to_string(minimal);
      if (want % minimal != 0) ok = false;
    }
    lines.push_back({"coefficient periods divide lcm(d_1..d_j)", ok, "minimal periods " + detail});
  }
  {
    bool ok = true;
    std::string detail;
    try {
      const Rational lead = leading_coefficient(q);
      ok = lead == expected_leading_coefficient(t);
      detail = exact_string(lead);
    } catch (const VerificationError& e) {
      ok = false;
      detail = e.what();
    }
    lines.push_back({"leading coefficient", ok, detail});
  }
  {
    const auto z = verify_zeroes(q);
    std::string detail = z.predicted.str();
    detail += z.predicted.pairwise_coprime ? "; pairwise coprime" : (z.predicted.setwise_coprime ? "; setwise but not pairwise coprime" : "; common factor");
    if (z.predicted.symmetric && !z.symmetric_on_grid) detail += "; -xi off the integer grid";
    if (!z.ok) detail += "; " + z.first_failure;
    lines.push_back({"zero set", z.ok, detail});
  }
  {
    const auto p = parity_report(q);
    lines.push_back({"parity", p.ok, p.ok ? std::to_string(p.points_checked) + " points" : p.first_failure});
  }
  for (std::int64_t p : {2, 3}) {
    const auto scaled = scale_tuple(q, p);
    const CountTable dp(scaled.tuple, 2 * p * tau);
    bool ok = true;
    std::string detail = scaled.tuple.str();
    for (std::int64_t s = 0; s <= 2 * p * tau && ok; ++s) {
      if (eval(scaled, s) != Rational(dp.at(s))) {
        ok = false;
        detail += " mismatch at s=" + std::to_string(s);
      }
    }
    lines.push_back({"scaling by " + std::to_string(p), ok, detail});
  }
  if (t.first_duplicate() != 0) {
    const auto d = reduce_duplicate(t);
    lines.push_back({"duplicate reduction", d.ok, d.ok ? "via " + d.reduced.str() : d.first_failure});
  }
  return lines;
}

namespace detail {

inline QuasiPolynomial read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream text;
  text << in.rdbuf();
  return load(text.str());
}

inline ExponentTuple resolve_tuple(const std::string& degrees, const std::string& group, const CatalogLimits& limits) {
  if (!degrees.empty() && !group.empty()) throw UsageError("give either --degrees or --group, not both");
  if (!degrees.empty()) {
    try {
      return ExponentTuple::parse(degrees);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad --degrees: ") + e.what());
    }
  }
  if (!group.empty()) {
    try {
      return CoxeterGroup::parse(group, limits).degrees();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("one of --degrees or --group is required");
}

inline std::vector<std::int64_t> points(const std::optional<std::int64_t>& s, const std::string& range) {
  if (s && !range.empty()) throw UsageError("give either --s or --s-range, not both");
  if (s) return {*s};
  if (!range.empty()) {
    const auto [lo, hi] = parse_range(range);
    std::vector<std::int64_t> v;
    for (auto x = lo; x <= hi; ++x) v.push_back(x);
    return v;
  }
  throw UsageError("one of --s or --s-range is required");
}

inline void emit_values(std::ostream& os, Format f, const ExponentTuple& t, const std::vector<std::int64_t>& pts,
                        const std::vector<std::string>& values) {
  if (f == Format::Json) {
    nlohmann::json doc;
    doc["degrees"] = std::vector<std::int64_t>(t.degrees().begin(), t.degrees().end());
    auto arr = nlohmann::json::array();
    for (std::size_t i = 0; i < pts.size(); ++i) arr.push_back({{"s", pts[i]}, {"value", values[i]}});
    doc["values"] = std::move(arr);
    os << doc.dump(1) << "\n";
    return;
  }
  if (pts.size() == 1 && f == Format::Text) {
    os << values[0] << "\n";
    return;
  }
  if (f == Format::Csv) os << "s,value\n";
  for (std::size_t i = 0; i < pts.size(); ++i) os << pts[i] << (f == Format::Csv ? "," : " ") << values[i] << "\n";
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Restricted partition numbers and their quasi-polynomial waves", "sylvester"};
  app.require_subcommand(1);

  std::string degrees;
  std::string group;
  std::string out_path;
  std::string format_name = "text";
  std::string method_name = "interp";
  std::optional<std::int64_t> s_opt;
  std::string s_range;
  std::string from_file;
  std::string groups_text = "S1..S10";
  std::string rows_text = "1-10,51-60,101-110";
  std::optional<std::int64_t> n_opt;
  std::int64_t step = 1;
  bool exact = false;
  std::string bench_points = "10000,100000,1000000,10000000";
  int reps = 2000;
  CatalogLimits limits;

  auto tuple_flags = [&](CLI::App* sub) {
    sub->add_option("--degrees", degrees, "comma separated exponents");
    sub->add_option("--group", group, "group name, e.g. E8, I2(7), S6");
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write output to this file");
    sub->add_option("--format", format_name, "text|csv|json");
  };

  auto* count_cmd = app.add_subcommand("count", "denumerant by dynamic programming");
  tuple_flags(count_cmd);
  common(count_cmd);
  count_cmd->add_option("--s", s_opt);
  count_cmd->add_option("--s-range", s_range);

  auto* build_cmd = app.add_subcommand("build", "construct and write the quasi-polynomial");
  tuple_flags(build_cmd);
  common(build_cmd);
  build_cmd->add_option("--method", method_name, "interp|recursion|both");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a quasi-polynomial");
  tuple_flags(eval_cmd);
  common(eval_cmd);
  eval_cmd->add_option("--from-file", from_file, "document written by build");
  eval_cmd->add_option("--method", method_name, "interp|recursion|both");
  eval_cmd->add_option("--s", s_opt);
  eval_cmd->add_option("--s-range", s_range);

  auto* zeroes_cmd = app.add_subcommand("zeroes", "predicted zero set and its verification");
  tuple_flags(zeroes_cmd);
  common(zeroes_cmd);

  auto* coxeter_cmd = app.add_subcommand("coxeter", "group wave formulas");
  coxeter_cmd->add_option("--group", group)->required();
  common(coxeter_cmd);
  coxeter_cmd->add_option("--s", s_opt, "W-space point to evaluate");
  coxeter_cmd->add_option("--n", n_opt, "verify on [0, n] (default 3 tau)");

  auto* table_cmd = app.add_subcommand("table", "table of partition numbers");
  common(table_cmd);
  table_cmd->add_option("--groups", groups_text);
  table_cmd->add_option("--rows", rows_text);
  table_cmd->add_option("--method", method_name, "interp|recursion|both (default: counts)");

  auto* lcm_cmd = app.add_subcommand("lcm", "lcm(1..N) and the ratio series");
  common(lcm_cmd);
  lcm_cmd->add_option("--n", n_opt)->required();
  lcm_cmd->add_option("--step", step);
  lcm_cmd->add_flag("--exact", exact);

  auto* verify_cmd = app.add_subcommand("verify", "property checks on a tuple");
  tuple_flags(verify_cmd);
  common(verify_cmd);
  verify_cmd->add_option("--from-file", from_file, "also check a document written by build");

  auto* bench_cmd = app.add_subcommand("bench", "quasi-polynomial evaluation versus DP");
  tuple_flags(bench_cmd);
  common(bench_cmd);
  bench_cmd->add_option("--points", bench_points, "comma separated s values");
  bench_cmd->add_option("--reps", reps, "evaluations per timing");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::ostringstream buffer;
  try {
    const Format format = parse_format(format_name);
    if (count_cmd->parsed()) {
      const auto t = detail::resolve_tuple(degrees, group, limits);
      const auto pts = detail::points(s_opt, s_range);
      const std::int64_t hi = *std::max_element(pts.begin(), pts.end());
      const CountTable dp(t, std::max<std::int64_t>(hi, 0));
      std::vector<std::string> values;
      for (auto s : pts) values.push_back(dp.at(s).get_str());
      detail::emit_values(buffer, format, t, pts, values);
    } else if (build_cmd->parsed()) {
      const auto t = detail::resolve_tuple(degrees, group, limits);
      buffer << dump(build(t, parse_method(method_name))) << "\n";
    } else if (eval_cmd->parsed()) {
      const QuasiPolynomial q = [&] {
        if (from_file.empty()) return build(detail::resolve_tuple(degrees, group, limits), parse_method(method_name));
        if (!degrees.empty() || !group.empty()) throw UsageError("--from-file excludes --degrees/--group");
        return detail::read_document(from_file);
      }();
      const auto pts = detail::points(s_opt, s_range);
      std::vector<std::string> values;
      for (auto s : pts) values.push_back(exact_string(eval(q, s)));
      detail::emit_values(buffer, format, q.tuple, pts, values);
    } else if (zeroes_cmd->parsed()) {
      const auto t = detail::resolve_tuple(degrees, group, limits);
      const auto report = verify_zeroes(build_by_interpolation(t));
      const auto& z = report.predicted;
      if (format == Format::Json) {
        nlohmann::json doc;
        doc["degrees"] = std::vector<std::int64_t>(t.degrees().begin(), t.degrees().end());
        doc["finite"] = z.finite;
        if (z.symmetric) doc["symmetric"] = z.symmetric->str();
        doc["modulus"] = z.modulus;
        doc["pairwise_coprime"] = z.pairwise_coprime;
        doc["setwise_coprime"] = z.setwise_coprime;
        doc["verified"] = report.ok;
        if (!report.ok) doc["failure"] = report.first_failure;
        buffer << doc.dump(1) << "\n";
      } else {
        buffer << "predicted " << z.str() << "\n";
        buffer << "coprime " << (z.pairwise_coprime ? "pairwise" : (z.setwise_coprime ? "setwise-only" : "no")) << "\n";
        if (z.symmetric) buffer << "-xi " << z.symmetric->str() << (report.symmetric_on_grid ? " (checked)" : " (off the integer grid; zero by convention)") << "\n";
        buffer << "verified " << (report.ok ? "yes" : "no: " + report.first_failure) << " (" << report.points_checked << " points)\n";
      }
      if (!report.ok) {
        out << buffer.str();
        return kExitVerification;
      }
    } else if (coxeter_cmd->parsed()) {
      CoxeterGroup g = [&] {
        try {
          return CoxeterGroup::parse(group, limits);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }();
      if (g.family() == Family::S) throw UsageError("coxeter expects a Coxeter group, not " + g.name());
      WaveLibrary library(limits);
      if (s_opt) {
        const HalfInteger xi = g.degrees().xi_shift();
        buffer << exact_string(v_group(library, g, xi + HalfInteger(*s_opt))) << "\n";
      } else {
        const auto report = n_opt ? verify_group(library, g, *n_opt) : verify_group(library, g);
        buffer << report.group << " " << report.degrees.str() << " s in [0, " << report.s_max << "]: "
               << (report.ok ? "PASS" : "FAIL " + report.first_failure) << "\n";
        if (!report.ok) {
          out << buffer.str();
          return kExitVerification;
        }
      }
    } else if (table_cmd->parsed()) {
      const auto groups = parse_groups(groups_text, limits);
      const auto rows = parse_rows(rows_text);
      const std::int64_t hi = std::max<std::int64_t>(0, *std::max_element(rows.begin(), rows.end()));
      const bool use_counts = !table_cmd->count("--method");
      std::vector<std::vector<std::string>> cells(rows.size(), std::vector<std::string>(groups.size()));
      for (std::size_t c = 0; c < groups.size(); ++c) {
        const auto t = groups[c].degrees();
        if (use_counts) {
          const CountTable dp(t, hi);
          for (std::size_t r = 0; r < rows.size(); ++r) cells[r][c] = dp.at(rows[r]).get_str();
        } else {
          const auto q = build(t, parse_method(method_name));
          for (std::size_t r = 0; r < rows.size(); ++r) cells[r][c] = exact_string(eval(q, rows[r]));
        }
      }
      if (format == Format::Csv) {
        buffer << "s";
        for (const auto& g : groups) buffer << "," << g.name();
        buffer << "\n";
        for (std::size_t r = 0; r < rows.size(); ++r) {
          buffer << rows[r];
          for (const auto& cell : cells[r]) buffer << "," << cell;
          buffer << "\n";
        }
      } else if (format == Format::Json) {
        nlohmann::json doc;
        auto names = nlohmann::json::array();
        for (const auto& g : groups) names.push_back(g.name());
        doc["groups"] = names;
        doc["rows"] = rows;
        doc["cells"] = cells;
        buffer << doc.dump(1) << "\n";
      } else {
        std::vector<std::size_t> width(groups.size() + 1, 1);
        for (auto r : rows) width[0] = std::max(width[0], std::to_string(r).size());
        for (std::size_t c = 0; c < groups.size(); ++c) {
          width[c + 1] = groups[c].name().size();
          for (const auto& row : cells) width[c + 1] = std::max(width[c + 1], row[c].size());
        }
        buffer << std::setw(static_cast<int>(width[0])) << "s";
        for (std::size_t c = 0; c < groups.size(); ++c) buffer << "  " << std::setw(static_cast<int>(width[c + 1])) << groups[c].name();
        buffer << "\n";
        for (std::size_t r = 0; r < rows.size(); ++r) {
          buffer << std::setw(static_cast<int>(width[0])) << rows[r];
          for (std::size_t c = 0; c < groups.size(); ++c) buffer << "  " << std::setw(static_cast<int>(width[c + 1])) << cells[r][c];
          buffer << "\n";
        }
      }
    } else if (lcm_cmd->parsed()) {
      if (*n_opt < 1) throw UsageError("--n must be positive");
      if (exact) {
        try {
          buffer << lcm_exact(*n_opt).get_str() << "\n";
        } catch (const std::out_of_range& e) {
          throw UsageError(e.what());
        }
      } else {
        if (step < 1) throw UsageError("--step must be positive");
        const PrimeSieve sieve(*n_opt);
        const auto records = ratio_series(sieve, *n_opt, step);
        const auto e = error_record(records);
        if (format == Format::Json) {
          nlohmann::json doc;
          auto arr = nlohmann::json::array();
          for (const auto& r : records) arr.push_back({{"N", r.n}, {"log_lcm", r.log_lcm}, {"ratio", r.ratio}});
          doc["records"] = std::move(arr);
          doc["max_scaled_error"] = e.max_scaled_error;
          doc["max_scaled_error_at"] = e.at;
          buffer << doc.dump(1) << "\n";
        } else {
          write_csv(buffer, records);
        }
      }
    } else if (verify_cmd->parsed()) {
      std::vector<VerifyLine> lines;
      ExponentTuple t{1};
      if (!from_file.empty()) {
        if (!degrees.empty() || !group.empty()) throw UsageError("--from-file excludes --degrees/--group");
        const auto q = detail::read_document(from_file);
        t = q.tuple;
        const bool same = q == build_by_interpolation(t);
        lines.push_back({"document equals rebuilt quasi-polynomial", same, from_file});
      } else {
        t = detail::resolve_tuple(degrees, group, limits);
      }
      for (auto& l : verify_suite(t)) lines.push_back(std::move(l));
      bool all = true;
      nlohmann::json doc = nlohmann::json::array();
      for (const auto& l : lines) {
        all = all && l.ok;
        if (format == Format::Json) {
          doc.push_back({{"check", l.name}, {"ok", l.ok}, {"detail", l.detail}});
        } else {
          buffer << (l.ok ? "PASS " : "FAIL ") << l.name << ": " << l.detail << "\n";
        }
      }
      if (format == Format::Json) buffer << doc.dump(1) << "\n";
      if (!all) {
        out << buffer.str();
        return kExitVerification;
      }
    } else if (bench_cmd->parsed()) {
      const auto t = degrees.empty() && group.empty() ? symmetric_degrees(10) : detail::resolve_tuple(degrees, group, limits);
      std::vector<std::int64_t> pts;
      for (auto v : parse_rows(bench_points)) {
        if (v < 0) throw UsageError("bench points must be non-negative");
        pts.push_back(v);
      }
      if (reps < 1) throw UsageError("--reps must be positive");
      const auto q = build_by_interpolation(t);
      const auto rows = run_bench(q, pts, reps);
      if (format == Format::Csv) {
        buffer << "s,eval_us,dp_ms,ratio\n";
        for (const auto& r : rows) buffer << r.s << "," << r.eval_us << "," << r.dp_ms << "," << r.ratio << "\n";
      } else if (format == Format::Json) {
        auto arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back({{"s", r.s}, {"eval_us", r.eval_us}, {"dp_ms", r.dp_ms}, {"ratio", r.ratio}, {"value", r.value}});
        buffer << arr.dump(1) << "\n";
      } else {
        buffer << "tuple " << t.str() << "\n";
        buffer << std::setw(10) << "s" << std::setw(14) << "eval_us" << std::setw(14) << "dp_ms" << std::setw(14) << "dp/eval" << "\n";
        for (const auto& r : rows) {
          buffer << std::setw(10) << r.s << std::fixed << std::setprecision(3) << std::setw(14) << r.eval_us << std::setw(14)
                 << r.dp_ms << std::setprecision(0) << std::setw(14) << r.ratio << "\n";
          buffer.unsetf(std::ios::fixed);
          buffer << std::setprecision(6);
        }
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OffGridError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return kExitOk;
}

}  // namespace cli
}  // namespace sylvester

#endif  // SYLVESTER_CLI_HPP
