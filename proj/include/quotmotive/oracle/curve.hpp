#pragma once

#include "quotmotive/algebra/integer.hpp"
#include "quotmotive/algebra/series.hpp"
#include "quotmotive/curve_spec.hpp"
#include "quotmotive/oracle/budget.hpp"
#include "quotmotive/oracle/finite_field.hpp"
#include "quotmotive/oracle/submodules.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace quotmotive::oracle {

inline int mobius(unsigned n) {
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) {
        return 0;
      }
      result = -result;
    }
  }
  return n > 1 ? -result : result;
}

/// Throws unless |N_d - (q^d + 1)| <= 2 g q^{d/2} for every d.
inline void check_weil_bound(const std::vector<Integer>& counts, const Integer& q, unsigned genus) {
  for (unsigned d = 1; d <= counts.size(); ++d) {
    const Integer qd = ipow(q, d);
    const Integer deviation = counts[d - 1] - (qd + 1);
    if (deviation * deviation > 4 * Integer(genus) * genus * qd) {
      throw SpecError("point count N_" + std::to_string(d) + " = " + counts[d - 1].str() +
                      " violates the Weil bound for genus " + std::to_string(genus) + " over F_" + q.str());
    }
  }
}

/*
  N_1, ..., N_{d_max}: points of the projective model over F_{q^d}, by
  evaluating the affine equation at every pair (x, y) and adding the
  declared points at infinity. Coefficients are read in the prime field.
*/
inline std::vector<Integer> curve_point_counts(const PlaneCurveEquation& eq, unsigned long long q, unsigned d_max,
                                               const OracleConfig& config = {}) {
  const auto pk = prime_power(q);
  if (!pk) {
    throw SpecError(std::to_string(q) + " is not a prime power");
  }
  const auto [p, k] = *pk;
  OperationMeter meter(config.budget);
  unsigned max_i = 0;
  unsigned max_j = 0;
  for (const auto& [i, j, c] : eq.terms) {
    max_i = std::max(max_i, static_cast<unsigned>(i));
    max_j = std::max(max_j, static_cast<unsigned>(j));
  }

  std::vector<Integer> counts;
  for (unsigned d = 1; d <= d_max; ++d) {
    if (k * d > config.max_extension_degree) {
      throw BudgetExceededError("extension degree " + std::to_string(k * d) + " exceeds the cap " +
                                std::to_string(config.max_extension_degree));
    }
    const unsigned long long size = detail::upow(p, k * d);
    meter.require(detail::saturating_mul(size * size, eq.terms.size() + max_j + 1), "curve point enumeration");
    const FqField field = FqField::extension(p, k * d);

    std::vector<FqElement> coeffs;
    for (const auto& term : eq.terms) {
      coeffs.push_back(field.from_integer(term[2]));
    }
    Integer affine = 0;
    std::vector<FqElement> xpow(max_i + 1);
    std::vector<FqElement> ypow(max_j + 1);
    for (std::uint32_t xi = 0; xi < field.size(); ++xi) {
      xpow[0] = field.one();
      for (unsigned e = 1; e <= max_i; ++e) {
        xpow[e] = field.mul(xpow[e - 1], FqElement{xi});
      }
      for (std::uint32_t yi = 0; yi < field.size(); ++yi) {
        meter.charge(eq.terms.size() + max_j + 1, "curve point enumeration");
        ypow[0] = field.one();
        for (unsigned e = 1; e <= max_j; ++e) {
          ypow[e] = field.mul(ypow[e - 1], FqElement{yi});
        }
        FqElement value = field.zero();
        for (std::size_t t = 0; t < eq.terms.size(); ++t) {
          const auto& term = eq.terms[t];
          value = field.add(value, field.mul(coeffs[t], field.mul(xpow[term[0]], ypow[term[1]])));
        }
        if (value.index == 0) {
          ++affine;
        }
      }
    }
    counts.push_back(affine + eq.points_at_infinity_in_degree(d));
  }
  check_weil_bound(counts, Integer(q), eq.genus);
  return counts;
}

/// B_d = (1/d) sum_{e | d} mu(d/e) N_e: closed points of degree d.
inline std::vector<Integer> closed_point_counts(const std::vector<Integer>& counts) {
  std::vector<Integer> closed;
  for (unsigned d = 1; d <= counts.size(); ++d) {
    Integer acc = 0;
    for (unsigned e = 1; e <= d; ++e) {
      if (d % e == 0) {
        acc += mobius(d / e) * counts[e - 1];
      }
    }
    if (acc % d != 0 || acc < 0) {
      throw SpecError("point counts are not those of a curve: degree-" + std::to_string(d) +
                      " closed point count is not a non-negative integer");
    }
    closed.push_back(acc / d);
  }
  return closed;
}

/// prod_d (1 - u^d)^{-B_d} through u^order: counts of effective divisors by degree.
inline TruncatedSeries<Integer> effective_divisor_series(const std::vector<Integer>& closed, std::size_t order) {
  using Series = TruncatedSeries<Integer>;
  Series out = Series::one(order);
  for (std::size_t d = 1; d <= order && d <= closed.size(); ++d) {
    if (closed[d - 1].is_zero()) {
      continue;
    }
    const Series factor = series_inv(Series::binomial(Integer(-1), d, order));
    out = out * series_pow(factor, closed[d - 1].convert_to<long long>());
  }
  return out;
}

/// Effective F_q-rational divisors of degree m on the curve, from explicit point counts.
inline Integer sym_point_count_bruteforce(const PlaneCurveEquation& eq, unsigned long long q, unsigned m,
                                          const OracleConfig& config = {}) {
  if (m == 0) {
    return 1;
  }
  const auto counts = curve_point_counts(eq, q, m, config);
  return effective_divisor_series(closed_point_counts(counts), m)[m];
}

/// P(u) = Z(u) (1 - u)(1 - q u) truncated at degree 2g, from N_1, ..., N_{2g}.
inline std::vector<Integer> zeta_numerator_from_point_counts(const std::vector<Integer>& counts, const Integer& q,
                                                             unsigned genus) {
  const std::size_t order = 2 * static_cast<std::size_t>(genus);
  if (counts.size() < order) {
    throw SpecError("need N_1..N_" + std::to_string(order) + " to recover the zeta numerator");
  }
  using Series = TruncatedSeries<Integer>;
  const std::vector<Integer> head(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(order));
  const Series z = effective_divisor_series(closed_point_counts(head), order);
  const Series p = z * Series::binomial(Integer(-1), 1, order) * Series::binomial(Integer(-q), 1, order);
  return p.coefficients();
}

/// A copy of `curve` with its zeta numerator filled in from the equation when missing.
inline CurveSpec with_zeta_numerator(const CurveSpec& curve, unsigned long long q, const OracleConfig& config = {}) {
  curve.validate();
  if (curve.numerator()) {
    CurveSpec out = curve;
    out.zeta_numerator = curve.numerator();
    return out;
  }
  if (!curve.equation) {
    throw MissingZetaDataError("curve of genus " + std::to_string(curve.genus) +
                               " has neither a zeta numerator nor an equation");
  }
  CurveSpec out = curve;
  out.zeta_numerator =
      zeta_numerator_from_point_counts(curve_point_counts(*curve.equation, q, 2 * curve.genus, config), Integer(q),
                                       curve.genus);
  return out;
}

} // namespace quotmotive::oracle
