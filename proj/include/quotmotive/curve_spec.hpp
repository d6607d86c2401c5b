#pragma once

#include "quotmotive/algebra/integer.hpp"
#include "quotmotive/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace quotmotive {

/*
  Affine plane model sum c * x^i * y^j = 0 over a prime field, together with
  the number of points at infinity of its smooth projective model. The
  points at infinity are given per extension degree; when fewer entries than
  requested degrees are present the last entry applies to all higher ones.
*/
struct PlaneCurveEquation {
  std::vector<std::array<long long, 3>> terms; // (i, j, c)
  std::vector<unsigned> points_at_infinity{0};
  unsigned genus = 0;

  unsigned points_at_infinity_in_degree(unsigned d) const {
    if (points_at_infinity.empty()) {
      return 0;
    }
    const std::size_t idx = std::min<std::size_t>(d - 1, points_at_infinity.size() - 1);
    return points_at_infinity[idx];
  }
};

/// Genus plus zeta-numerator coefficients [1, c_1, ..., c_2g] and/or a plane model.
struct CurveSpec {
  unsigned genus = 0;
  std::optional<std::vector<Integer>> zeta_numerator;
  std::optional<PlaneCurveEquation> equation;

  static CurveSpec projective_line() {
    CurveSpec spec;
    spec.zeta_numerator = std::vector<Integer>{1};
    return spec;
  }

  /// Genus-one curve with #C(F_q) = q + 1 - a, numerator 1 - a u + q u^2.
  static CurveSpec genus_one(const Integer& trace, const Integer& q) {
    CurveSpec spec;
    spec.genus = 1;
    spec.zeta_numerator = std::vector<Integer>{1, -trace, q};
    return spec;
  }

  /// The numerator when it is known; genus 0 forces P = 1.
  std::optional<std::vector<Integer>> numerator() const {
    if (zeta_numerator) {
      return zeta_numerator;
    }
    if (genus == 0) {
      return std::vector<Integer>{1};
    }
    return std::nullopt;
  }

  void validate() const {
    if (zeta_numerator) {
      const auto& p = *zeta_numerator;
      if (p.empty() || p.front() != 1) {
        throw SpecError("zeta numerator must have constant coefficient 1");
      }
      std::size_t degree = 0;
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (!p[k].is_zero()) {
          degree = k;
        }
      }
      if (degree > 2 * static_cast<std::size_t>(genus)) {
        throw SpecError("zeta numerator degree " + std::to_string(degree) + " exceeds 2g = " +
                        std::to_string(2 * genus));
      }
    }
    if (equation && equation->genus != genus) {
      throw SpecError("equation genus " + std::to_string(equation->genus) + " differs from curve genus " +
                      std::to_string(genus));
    }
  }
};

namespace detail {

inline Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    return Integer(j.get<long long>());
  }
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      // fall through to the error below
    }
  }
  throw SpecError("expected an integer, got " + j.dump());
}

} // namespace detail

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline nlohmann::json integer_to_json(const Integer& value) {
  if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max()) {
    return value.convert_to<long long>();
  }
  return value.str();
}

inline PlaneCurveEquation plane_curve_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("affine_poly")) {
    throw SpecError("equation needs an \"affine_poly\" array");
  }
  PlaneCurveEquation eq;
  for (const auto& term : j.at("affine_poly")) {
    if (!term.is_array() || term.size() != 3) {
      throw SpecError("affine_poly entries are [i, j, c] triples");
    }
    const long long i = term[0].get<long long>();
    const long long jj = term[1].get<long long>();
    if (i < 0 || jj < 0) {
      throw SpecError("affine_poly exponents must be non-negative");
    }
    eq.terms.push_back({i, jj, term[2].get<long long>()});
  }
  if (j.contains("points_at_infinity")) {
    const auto& pts = j.at("points_at_infinity");
    eq.points_at_infinity.clear();
    if (pts.is_array()) {
      for (const auto& k : pts) {
        eq.points_at_infinity.push_back(k.get<unsigned>());
      }
    } else {
      eq.points_at_infinity.push_back(pts.get<unsigned>());
    }
  }
  eq.genus = j.value("genus", 0U);
  return eq;
}

inline nlohmann::json plane_curve_to_json(const PlaneCurveEquation& eq) {
  nlohmann::json poly = nlohmann::json::array();
  for (const auto& [i, j, c] : eq.terms) {
    poly.push_back({i, j, c});
  }
  nlohmann::json pts = eq.points_at_infinity.size() == 1 ? nlohmann::json(eq.points_at_infinity.front())
                                                         : nlohmann::json(eq.points_at_infinity);
  return {{"affine_poly", poly}, {"points_at_infinity", pts}, {"genus", eq.genus}};
}

namespace detail {

inline CurveSpec parse_curve_spec(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("genus")) {
    throw SpecError("curve spec needs a \"genus\" field");
  }
  CurveSpec spec;
  const long long genus = j.at("genus").get<long long>();
  if (genus < 0) {
    throw SpecError("genus must be non-negative");
  }
  spec.genus = static_cast<unsigned>(genus);
  if (j.contains("zeta_numerator") && !j.at("zeta_numerator").is_null()) {
    std::vector<Integer> p;
    for (const auto& c : j.at("zeta_numerator")) {
      p.push_back(detail::integer_from_json(c));
    }
    spec.zeta_numerator = std::move(p);
  }
  if (j.contains("equation") && !j.at("equation").is_null()) {
    spec.equation = plane_curve_from_json(j.at("equation"));
  }
  spec.validate();
  return spec;
}

} // namespace detail

inline CurveSpec curve_spec_from_json(const nlohmann::json& j) {
  try {
    return detail::parse_curve_spec(j);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed curve spec: ") + e.what());
  }
}

inline nlohmann::json curve_spec_to_json(const CurveSpec& spec) {
  nlohmann::json j{{"genus", spec.genus}};
  if (spec.zeta_numerator) {
    nlohmann::json p = nlohmann::json::array();
    for (const auto& c : *spec.zeta_numerator) {
      p.push_back(integer_to_json(c));
    }
    j["zeta_numerator"] = p;
  }
  if (spec.equation) {
    j["equation"] = plane_curve_to_json(*spec.equation);
  }
  return j;
}

inline CurveSpec load_curve_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw SpecError("cannot read curve spec " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SpecError("malformed curve spec " + path + ": " + e.what());
  }
  return curve_spec_from_json(j);
}

} // namespace quotmotive
