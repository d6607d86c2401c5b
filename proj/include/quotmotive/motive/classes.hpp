#pragma once

#include "quotmotive/algebra/motive_class.hpp"
#include "quotmotive/algebra/series.hpp"
#include "quotmotive/algebra/substitute.hpp"
#include "quotmotive/motive/composition.hpp"

#include <functional>
#include <string>
#include <vector>

namespace quotmotive::motive {

using ClassSeries = TruncatedSeries<MotiveClass>;

/// 1 + S_1 u + S_2 u^2 + ... through u^order.
inline ClassSeries sym_class_series(std::size_t order) {
  ClassSeries out(order);
  for (std::size_t m = 0; m <= order; ++m) {
    out.set(m, MotiveClass::sym(static_cast<unsigned>(m)));
  }
  return out;
}

/*
  Composition sum  sum_{|n| = length} X_{n_1} ... X_{n_r} L^{d_n}  for an
  arbitrary family of classes X_m (X_m = S_m gives the Quot class of a
  projective curve).
*/
template <class SymClass>
MotiveClass composition_sum(unsigned length, unsigned rank, SymClass&& sym_class) {
  std::vector<MotiveClass> cache;
  cache.reserve(length + 1);
  for (unsigned m = 0; m <= length; ++m) {
    cache.push_back(sym_class(m));
  }
  MotiveClass total;
  for_each_composition(length, rank, [&](const Composition& c) {
    MotiveClass term = MotiveClass::lefschetz(c.weighted_degree());
    for (unsigned part : c.parts()) {
      if (part != 0) {
        term *= cache[part];
      }
    }
    total += term;
  });
  return total;
}

/// Class of the Quot scheme of length-n quotients of a rank-r bundle.
inline MotiveClass quot_class(unsigned n, unsigned rank) {
  if (rank == 0) {
    throw SpecError("rank must be >= 1");
  }
  return composition_sum(n, rank, [](unsigned m) { return MotiveClass::sym(m); });
}

/// Class of the punctual fiber F_{n,r}: h_n(1, L, ..., L^{r-1}).
inline MotiveClass punctual_class(unsigned n, unsigned rank) {
  if (rank == 0) {
    throw SpecError("rank must be >= 1");
  }
  ClassSeries product = ClassSeries::one(n);
  for (unsigned i = 0; i < rank; ++i) {
    product = product * series_inv(ClassSeries::binomial(-MotiveClass::lefschetz(i), 1, n));
  }
  return product[n];
}

/// Series of Sym^m(U) for U the curve minus `points` rational points.
inline ClassSeries open_sym_series(unsigned points, std::size_t order) {
  return sym_class_series(order) * series_pow(ClassSeries::binomial(MotiveClass(-1), 1, order), points);
}

/// Quot class over the open curve: open Sym classes fed into the composition sum.
inline MotiveClass quot_open_class(unsigned n, unsigned rank, unsigned points) {
  if (rank == 0) {
    throw SpecError("rank must be >= 1");
  }
  const ClassSeries open = open_sym_series(points, n);
  return composition_sum(n, rank, [&](unsigned m) { return open[m]; });
}

struct StratificationCheck {
  bool holds = false;
  MotiveClass lhs;        // quot_class(n, r)
  MotiveClass rhs;        // sum over strata
  MotiveClass difference; // lhs - rhs
};

/*
  Checks  [Q^n] = sum_{|a| <= n} [Q^{n-|a|}_U] * prod_k [F_{a_k, r}]
  with U the curve minus `points` rational points, as an identity in the
  free class ring.
*/
inline StratificationCheck verify_stratification(unsigned n, unsigned rank, unsigned points) {
  if (rank == 0) {
    throw SpecError("rank must be >= 1");
  }
  std::vector<MotiveClass> open_classes;
  std::vector<MotiveClass> punctual;
  for (unsigned k = 0; k <= n; ++k) {
    open_classes.push_back(quot_open_class(k, rank, points));
    punctual.push_back(punctual_class(k, rank));
  }

  StratificationCheck check;
  check.lhs = quot_class(n, rank);
  for_each_stratum_index(points, n, [&](const StratumIndex& a) {
    unsigned concentrated = 0;
    MotiveClass term(1);
    for (unsigned a_k : a) {
      concentrated += a_k;
      term *= punctual[a_k];
    }
    check.rhs += open_classes[n - concentrated] * term;
  });
  check.difference = check.lhs - check.rhs;
  check.holds = check.difference.is_zero();
  return check;
}

/*
  Solves the one-point stratification identity for the punctual classes:
  F_0 = 1 and F_n = [Q^n] - sum_{j<n} [Q^{n-j}_U] F_j. The identity pins
  every F_n down uniquely, so this is an independent route to punctual_class.
*/
inline std::vector<MotiveClass> solve_punctual_classes(unsigned max_length, unsigned rank) {
  std::vector<MotiveClass> open_classes;
  for (unsigned k = 0; k <= max_length; ++k) {
    open_classes.push_back(quot_open_class(k, rank, 1));
  }
  std::vector<MotiveClass> fibers{MotiveClass(1)};
  for (unsigned n = 1; n <= max_length; ++n) {
    MotiveClass f = quot_class(n, rank);
    for (unsigned j = 0; j < n; ++j) {
      f -= open_classes[n - j] * fibers[j];
    }
    fibers.push_back(std::move(f));
  }
  return fibers;
}

} // namespace quotmotive::motive
