#pragma once

#include "quotmotive/algebra/substitute.hpp"
#include "quotmotive/curve_spec.hpp"
#include "quotmotive/motive/classes.hpp"
#include "quotmotive/motive/poincare.hpp"
#include "quotmotive/motive/point_count.hpp"
#include "quotmotive/oracle/curve.hpp"
#include "quotmotive/oracle/submodules.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace quotmotive::cli {

using nlohmann::json;

struct SuiteCell {
  SuiteCell() = default;
  SuiteCell(std::string check_name, json cell_params) : check(std::move(check_name)), params(std::move(cell_params)) {}

  std::string check;
  json params;
  bool pass = false;
  bool error = false; // the cell could not run (budget, bad input)
  json detail;
};

struct SuiteReport {
  std::vector<SuiteCell> cells;

  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const SuiteCell& c) { return c.pass; }));
  }
  bool all_pass() const { return passed() == cells.size(); }
  bool any_error() const {
    return std::any_of(cells.begin(), cells.end(), [](const SuiteCell& c) { return c.error; });
  }

  json to_json() const {
    json cells_json = json::array();
    for (const auto& c : cells) {
      json cell{{"check", c.check}, {"params", c.params}, {"pass", c.pass}, {"detail", c.detail}};
      if (c.error) {
        cell["error"] = true;
      }
      cells_json.push_back(std::move(cell));
    }
    return {{"cells", cells_json},
            {"passed", passed()},
            {"failed", cells.size() - passed()},
            {"all_pass", all_pass()}};
  }

  std::string to_table() const {
    std::ostringstream out;
    for (const auto& c : cells) {
      out << (c.pass ? "PASS" : (c.error ? "ERROR" : "FAIL")) << '\t' << c.check << '\t' << c.params.dump() << '\t'
          << c.detail.dump() << '\n';
    }
    out << "summary\t" << passed() << '/' << cells.size() << " passed\n";
    return out.str();
  }
};

/// Genus-one Weierstrass models used by the default grid.
inline CurveSpec supersingular_curve_f2() {
  // y^2 + y = x^3 over F_2
  CurveSpec spec;
  spec.genus = 1;
  PlaneCurveEquation eq;
  eq.terms = {{0, 2, 1}, {0, 1, 1}, {3, 0, -1}};
  eq.points_at_infinity = {1};
  eq.genus = 1;
  spec.equation = eq;
  return spec;
}

inline CurveSpec elliptic_curve_f3() {
  // y^2 = x^3 - x + 1 over F_3
  CurveSpec spec;
  spec.genus = 1;
  PlaneCurveEquation eq;
  eq.terms = {{0, 2, 1}, {3, 0, -1}, {1, 0, 1}, {0, 0, -1}};
  eq.points_at_infinity = {1};
  eq.genus = 1;
  spec.equation = eq;
  return spec;
}

/// The full verification grid.
inline json default_grid() {
  json grid;
  json product = json::array();
  json properties = json::array();
  json euler = json::array();
  for (unsigned g = 0; g <= 3; ++g) {
    for (unsigned r = 1; r <= 4; ++r) {
      product.push_back({g, r, 6});
      for (unsigned n = 0; n <= 6; ++n) {
        properties.push_back({n, r, g});
        euler.push_back({n, r, g});
      }
    }
  }
  grid["product"] = product;
  grid["poincare_properties"] = properties;
  grid["euler"] = euler;

  json rank_one = json::array();
  for (unsigned n = 0; n <= 10; ++n) {
    rank_one.push_back(n);
  }
  json length_one = json::array();
  for (unsigned r = 1; r <= 6; ++r) {
    length_one.push_back(r);
  }
  grid["rank_one"] = rank_one;
  grid["length_one"] = length_one;

  json strat = json::array();
  for (unsigned n = 0; n <= 5; ++n) {
    for (unsigned r = 1; r <= 3; ++r) {
      for (unsigned N = 0; N <= 2; ++N) {
        strat.push_back({n, r, N});
      }
    }
  }
  grid["stratification"] = strat;

  json punctual = json::array();
  json affine = json::array();
  json p1 = json::array();
  for (unsigned q : {2U, 3U}) {
    for (unsigned r : {2U, 3U}) {
      for (unsigned n : {1U, 2U}) {
        punctual.push_back({q, r, n});
      }
    }
    for (unsigned r = 1; r <= 3; ++r) {
      for (unsigned n = 1; n <= 3; ++n) {
        affine.push_back({q, r, n});
        p1.push_back({q, r, n});
      }
    }
  }
  punctual.push_back({2, 2, 3});
  grid["punctual"] = punctual;
  grid["affine"] = affine;
  grid["p1"] = p1;

  grid["curve_zeta"] = json::array({
      {{"curve", curve_spec_to_json(supersingular_curve_f2())}, {"q", 2}, {"m_max", 4}},
      {{"curve", curve_spec_to_json(elliptic_curve_f3())}, {"q", 3}, {"m_max", 4}},
  });
  return grid;
}

namespace detail {

inline unsigned as_unsigned(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw SpecError("grid parameters must be non-negative integers, got " + j.dump());
  }
  return j.get<unsigned>();
}

inline std::vector<unsigned> triple(const json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw SpecError("grid cell must be a triple, got " + j.dump());
  }
  return {as_unsigned(j[0]), as_unsigned(j[1]), as_unsigned(j[2])};
}

inline void require_rank(unsigned r) {
  if (r == 0) {
    throw SpecError("rank must be >= 1");
  }
}

inline json poly_json(const IntPoly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) {
    out.push_back(integer_to_json(c));
  }
  return out;
}

using CellTask = std::function<SuiteCell()>;

inline SuiteCell check_product(unsigned g, unsigned r, unsigned order) {
  SuiteCell cell{"product", {{"g", g}, {"r", r}, {"order", order}}};
  const auto series = motive::poincare_series_product(r, g, order);
  json mismatches = json::array();
  for (unsigned n = 0; n <= order; ++n) {
    if (!(series[n] == motive::poincare_polynomial(n, r, g))) {
      mismatches.push_back(n);
    }
  }
  cell.pass = mismatches.empty();
  cell.detail = {{"mismatched_n", mismatches}};
  return cell;
}

inline SuiteCell check_poincare_properties(unsigned n, unsigned r, unsigned g) {
  SuiteCell cell{"poincare_properties", {{"n", n}, {"r", r}, {"g", g}}};
  const IntPoly p = motive::poincare_polynomial(n, r, g);
  const bool degree_ok = p.degree() == static_cast<long>(2 * n * r);
  const bool constant_ok = p.coeff(0) == 1;
  const bool palindromic = p.is_palindromic();
  cell.pass = degree_ok && constant_ok && palindromic;
  cell.detail = {{"degree", p.degree()}, {"b0", integer_to_json(p.coeff(0))}, {"palindromic", palindromic}};
  return cell;
}

inline SuiteCell check_euler(unsigned n, unsigned r, unsigned g) {
  SuiteCell cell{"euler", {{"n", n}, {"r", r}, {"g", g}}};
  const Integer chi = motive::euler_characteristic(n, r, g);
  const Integer top = (Integer(2) * g - 2) * r;
  Integer expected = generalized_binomial(top, n);
  if (n % 2 == 1) {
    expected = -expected;
  }
  cell.pass = chi == expected;
  cell.detail = {{"chi", integer_to_json(chi)}, {"binomial_law", integer_to_json(expected)}};
  return cell;
}

inline SuiteCell check_rank_one(unsigned n) {
  SuiteCell cell{"rank_one", {{"n", n}}};
  const MotiveClass c = motive::quot_class(n, 1);
  cell.pass = c == MotiveClass::sym(n);
  cell.detail = {{"class", c.to_string()}};
  return cell;
}

inline SuiteCell check_length_one(unsigned r) {
  SuiteCell cell{"length_one", {{"r", r}}};
  require_rank(r);
  MotiveClass fiber;
  for (unsigned i = 0; i < r; ++i) {
    fiber += MotiveClass::lefschetz(i);
  }
  const MotiveClass c = motive::quot_class(1, r);
  cell.pass = c == MotiveClass::sym(1) * fiber;
  cell.detail = {{"class", c.to_string()}};
  return cell;
}

inline SuiteCell check_stratification(unsigned n, unsigned r, unsigned points) {
  SuiteCell cell{"stratification", {{"n", n}, {"r", r}, {"points", points}}};
  const auto check = motive::verify_stratification(n, r, points);
  cell.pass = check.holds;
  cell.detail = check.holds ? json{{"class", check.lhs.to_string()}}
                            : json{{"difference", check.difference.to_string()}};
  return cell;
}

inline Integer specialize_at(const MotiveClass& c, const Integer& q) {
  Assignment<Integer> a;
  a.set(Symbol::L(), q);
  return substitute(c, a);
}

inline SuiteCell check_punctual(unsigned q, unsigned r, unsigned n, const oracle::OracleConfig& config) {
  SuiteCell cell{"punctual", {{"q", q}, {"r", r}, {"n", n}}};
  const auto field = oracle::FqField::of_size(q);
  const Integer count = oracle::count_punctual_quotients(field, r, n, oracle::PunctualMethod::automatic, config);
  const Integer formula = specialize_at(motive::punctual_class(n, r), q);
  cell.pass = count == formula;
  cell.detail = {{"oracle", integer_to_json(count)}, {"formula", integer_to_json(formula)}};
  return cell;
}

inline SuiteCell check_affine(unsigned q, unsigned r, unsigned n, const oracle::OracleConfig& config) {
  SuiteCell cell{"affine", {{"q", q}, {"r", r}, {"n", n}}};
  const auto field = oracle::FqField::of_size(q);
  const Integer count = oracle::count_colength_submodules_affine(field, r, n, config);
  Assignment<Integer> a;
  a.set(Symbol::L(), q);
  for (unsigned m = 1; m <= n; ++m) {
    a.set(Symbol::S(m), ipow(Integer(q), m));
  }
  const Integer formula = substitute(motive::quot_class(n, r), a);
  cell.pass = count == formula;
  cell.detail = {{"oracle", integer_to_json(count)}, {"formula", integer_to_json(formula)}};
  return cell;
}

inline SuiteCell check_p1(unsigned q, unsigned r, unsigned n, const oracle::OracleConfig& config) {
  SuiteCell cell{"p1", {{"q", q}, {"r", r}, {"n", n}}};
  const auto field = oracle::FqField::of_size(q);
  const Integer count = oracle::quot_point_count_bruteforce_P1(field, r, n, config);
  const Integer formula = motive::quot_point_count(n, r, CurveSpec::projective_line(), q);
  cell.pass = count == formula;
  cell.detail = {{"oracle", integer_to_json(count)}, {"formula", integer_to_json(formula)}};
  return cell;
}

/*
  Divisor counts from the explicit model against the zeta formula. The
  numerator comes from the curve file when given, from the trace of Frobenius
  for genus one, and from N_1..N_2g otherwise.
*/
inline SuiteCell check_curve_zeta(const json& spec_json, unsigned q, unsigned m_max,
                                  const oracle::OracleConfig& config) {
  const CurveSpec curve = curve_spec_from_json(spec_json);
  SuiteCell cell{"curve_zeta", {{"curve", spec_json}, {"q", q}, {"m_max", m_max}}};
  if (!curve.equation) {
    throw SpecError("curve_zeta cells need an explicit equation");
  }
  const auto counts = oracle::curve_point_counts(*curve.equation, q, std::max(m_max, 1U), config);
  CurveSpec zeta_side = curve;
  if (!curve.zeta_numerator) {
    if (curve.genus == 1) {
      zeta_side.zeta_numerator = std::vector<Integer>{1, counts[0] - q - 1, q};
    } else {
      zeta_side = oracle::with_zeta_numerator(curve, q, config);
    }
  }
  json brute = json::array();
  json formula = json::array();
  bool pass = true;
  for (unsigned m = 0; m <= m_max; ++m) {
    const Integer b = oracle::sym_point_count_bruteforce(*curve.equation, q, m, config);
    const Integer f = motive::sym_point_count(zeta_side, q, m);
    brute.push_back(integer_to_json(b));
    formula.push_back(integer_to_json(f));
    pass = pass && b == f;
  }
  json n_json = json::array();
  for (const auto& n : counts) {
    n_json.push_back(integer_to_json(n));
  }
  cell.pass = pass;
  cell.detail = {{"point_counts", n_json}, {"bruteforce", brute}, {"formula", formula}};
  return cell;
}

} // namespace detail

/*
  Runs every cell of `grid` and reports them in grid order. Recognised
  keys: product [g,r,order], poincare_properties [n,r,g], euler [n,r,g],
  rank_one n, length_one r, stratification [n,r,points], punctual [q,r,n],
  affine [q,r,n], p1 [q,r,n], curve_zeta {curve,q,m_max}. Cells may be
  evaluated on worker threads; the report order does not depend on that.
*/
inline SuiteReport run_suite(const json& grid, const oracle::OracleConfig& config = {}, unsigned threads = 0) {
  using detail::CellTask;
  if (!grid.is_object()) {
    throw SpecError("grid must be a JSON object");
  }
  std::vector<std::pair<CellTask, json>> tasks; // (task, params for error reports)
  static const std::vector<std::string> known{"product",        "poincare_properties", "euler", "rank_one",
                                              "length_one",     "stratification",      "punctual", "affine",
                                              "p1",             "curve_zeta"};
  for (const auto& [key, value] : grid.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw SpecError("unknown grid key \"" + key + "\"");
    }
    if (!value.is_array()) {
      throw SpecError("grid entry \"" + key + "\" must be an array");
    }
  }
  // Fixed key order, independent of the JSON object's iteration order.
  for (const auto& key : known) {
    if (!grid.contains(key)) {
      continue;
    }
    for (const auto& entry : grid.at(key)) {
      CellTask task;
      if (key == "rank_one" || key == "length_one") {
        const unsigned v = detail::as_unsigned(entry);
        task = key == "rank_one" ? CellTask([v] { return detail::check_rank_one(v); })
                                 : CellTask([v] { return detail::check_length_one(v); });
      } else if (key == "curve_zeta") {
        if (!entry.is_object() || !entry.contains("curve") || !entry.contains("q")) {
          throw SpecError("curve_zeta cells are {\"curve\": ..., \"q\": ..., \"m_max\": ...}");
        }
        const json spec = entry.at("curve");
        const unsigned q = detail::as_unsigned(entry.at("q"));
        const unsigned m_max = entry.contains("m_max") ? detail::as_unsigned(entry.at("m_max")) : 4U;
        task = [spec, q, m_max, config] { return detail::check_curve_zeta(spec, q, m_max, config); };
      } else {
        const auto t = detail::triple(entry);
        const unsigned a = t[0], b = t[1], c = t[2];
        if (key == "product") {
          detail::require_rank(b);
          task = [a, b, c] { return detail::check_product(a, b, c); };
        } else if (key == "poincare_properties") {
          detail::require_rank(b);
          task = [a, b, c] { return detail::check_poincare_properties(a, b, c); };
        } else if (key == "euler") {
          detail::require_rank(b);
          task = [a, b, c] { return detail::check_euler(a, b, c); };
        } else if (key == "stratification") {
          detail::require_rank(b);
          task = [a, b, c] { return detail::check_stratification(a, b, c); };
        } else {
          detail::require_rank(b);
          if (!oracle::prime_power(a)) {
            throw SpecError("q = " + std::to_string(a) + " is not a prime power");
          }
          if (key == "punctual") {
            task = [a, b, c, config] { return detail::check_punctual(a, b, c, config); };
          } else if (key == "affine") {
            task = [a, b, c, config] { return detail::check_affine(a, b, c, config); };
          } else {
            task = [a, b, c, config] { return detail::check_p1(a, b, c, config); };
          }
        }
      }
      tasks.emplace_back(std::move(task), json{{"entry", entry}});
      tasks.back().second["check"] = key;
    }
  }

  SuiteReport report;
  report.cells.resize(tasks.size());
  auto run_one = [&](std::size_t i) {
    try {
      report.cells[i] = tasks[i].first();
    } catch (const std::exception& e) {
      SuiteCell cell;
      cell.check = tasks[i].second.at("check").get<std::string>();
      cell.params = tasks[i].second.at("entry");
      cell.error = true;
      cell.detail = {{"error", e.what()}};
      report.cells[i] = std::move(cell);
    }
  };
  if (threads == 0) {
    threads = std::max(1U, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, tasks.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      run_one(i);
    }
    return report;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) {
        run_one(i);
      }
    });
  }
  for (auto& w : workers) {
    w.join();
  }
  return report;
}

} // namespace quotmotive::cli
