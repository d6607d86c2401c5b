#pragma once

#include "quotmotive/algebra/integer.hpp"
#include "quotmotive/algebra/series.hpp"
#include "quotmotive/algebra/substitute.hpp"
#include "quotmotive/curve_spec.hpp"
#include "quotmotive/motive/classes.hpp"

namespace quotmotive::motive {

using IntegerSeries = TruncatedSeries<Integer>;

/// sum_m #Sym^m(C)(F_q) u^m = P(u) / ((1 - u)(1 - q u)) through u^order.
inline IntegerSeries sym_point_count_series(const CurveSpec& curve, const Integer& q, std::size_t order) {
  curve.validate();
  const auto numerator = curve.numerator();
  if (!numerator) {
    throw MissingZetaDataError("curve of genus " + std::to_string(curve.genus) + " has no zeta numerator");
  }
  if (q < 2) {
    throw SpecError("q must be at least 2");
  }
  IntegerSeries p(order);
  for (std::size_t k = 0; k < numerator->size() && k <= order; ++k) {
    p.set(k, (*numerator)[k]);
  }
  const IntegerSeries denominator =
      IntegerSeries::binomial(Integer(-1), 1, order) * IntegerSeries::binomial(Integer(-q), 1, order);
  return p * series_inv(denominator);
}

inline Integer sym_point_count(const CurveSpec& curve, const Integer& q, unsigned m) {
  return sym_point_count_series(curve, q, m)[m];
}

/// #Q^n_C(E)(F_q): the class formula under S_m -> #Sym^m(C)(F_q), L -> q.
inline Integer quot_point_count(unsigned n, unsigned rank, const CurveSpec& curve, const Integer& q) {
  const IntegerSeries counts = sym_point_count_series(curve, q, n);
  Assignment<Integer> a;
  for (unsigned m = 1; m <= n; ++m) {
    a.set(Symbol::S(m), counts[m]);
  }
  a.set(Symbol::L(), q);
  return substitute(quot_class(n, rank), a);
}

} // namespace quotmotive::motive
