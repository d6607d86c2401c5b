#pragma once

#include "quotmotive/algebra/poly.hpp"
#include "quotmotive/algebra/series.hpp"
#include "quotmotive/algebra/substitute.hpp"
#include "quotmotive/motive/classes.hpp"

#include <vector>

namespace quotmotive::motive {

using PolySeries = TruncatedSeries<IntPoly>;

/// (1 + t u)^{2g} / ((1 - u)(1 - t^2 u)) through u^order.
inline PolySeries macdonald_series(unsigned genus, std::size_t order) {
  const IntPoly t = IntPoly::monomial(1, 1);
  const IntPoly t2 = IntPoly::monomial(1, 2);
  PolySeries numerator = series_pow(PolySeries::binomial(t, 1, order), 2LL * genus);
  PolySeries denominator = PolySeries::binomial(IntPoly(Integer(-1)), 1, order) *
                           PolySeries::binomial(-t2, 1, order);
  return numerator * series_inv(denominator);
}

/// Poincare polynomial of Sym^m of a genus-g curve.
inline IntPoly sym_poincare(unsigned genus, unsigned m) { return macdonald_series(genus, m)[m]; }

/// Specialization S_m -> P(Sym^m C; t), L -> t^2, t -> t.
inline Assignment<IntPoly> poincare_assignment(unsigned genus, unsigned max_sym) {
  Assignment<IntPoly> a;
  const PolySeries macdonald = macdonald_series(genus, max_sym);
  for (unsigned m = 1; m <= max_sym; ++m) {
    a.set(Symbol::S(m), macdonald[m]);
  }
  a.set(Symbol::L(), IntPoly::monomial(1, 2));
  a.set(Symbol::T(), IntPoly::monomial(1, 1));
  return a;
}

inline IntPoly poincare_polynomial(unsigned n, unsigned rank, unsigned genus) {
  return substitute(quot_class(n, rank), poincare_assignment(genus, n));
}

/// prod_{i<r} (1 + t^{2i+1} u)^{2g} / ((1 - t^{2i} u)(1 - t^{2i+2} u)).
inline PolySeries poincare_series_product(unsigned rank, unsigned genus, std::size_t order) {
  if (rank == 0) {
    throw SpecError("rank must be >= 1");
  }
  PolySeries product = PolySeries::one(order);
  for (unsigned i = 0; i < rank; ++i) {
    const PolySeries odd = PolySeries::binomial(IntPoly::monomial(1, 2 * i + 1), 1, order);
    const PolySeries lower = PolySeries::binomial(IntPoly::monomial(-1, 2 * i), 1, order);
    const PolySeries upper = PolySeries::binomial(IntPoly::monomial(-1, 2 * i + 2), 1, order);
    product = product * series_pow(odd, 2LL * genus) * series_inv(lower * upper);
  }
  return product;
}

/// b_0, ..., b_{2nr}.
inline std::vector<Integer> betti_numbers(unsigned n, unsigned rank, unsigned genus) {
  const IntPoly p = poincare_polynomial(n, rank, genus);
  std::vector<Integer> out(2 * static_cast<std::size_t>(n) * rank + 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = p.coeff(k);
  }
  return out;
}

/// Poincare polynomial at t = -1.
inline Integer euler_characteristic(unsigned n, unsigned rank, unsigned genus) {
  return poincare_polynomial(n, rank, genus).evaluate(-1);
}

} // namespace quotmotive::motive
