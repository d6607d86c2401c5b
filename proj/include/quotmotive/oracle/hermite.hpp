#pragma once

#include "quotmotive/oracle/budget.hpp"
#include "quotmotive/oracle/finite_field.hpp"
#include "quotmotive/oracle/linear_algebra.hpp"

#include <cstddef>
#include <vector>

namespace quotmotive::oracle {

enum class DiagonalKind {
  monic,      // any monic diagonal: submodules of F_q[x]^r
  power_of_x, // diagonals x^e: submodules supported at the origin
};

/*
  Column-style Hermite normal form of a full-rank submodule M of F_q[x]^r:
  the columns generate M, the matrix is upper triangular with monic
  diagonal entries, and entry (i, j) for i < j has degree below the degree
  of the i-th diagonal entry. Coefficient vectors are stored at fixed
  length during enumeration, so they may carry leading zeros.
*/
class HermiteForm {
public:
  explicit HermiteForm(unsigned rank) : rank_(rank), entries_(static_cast<std::size_t>(rank) * rank) {}

  unsigned rank() const { return rank_; }
  const FqPoly& entry(unsigned i, unsigned j) const { return entries_[i * rank_ + j]; }
  FqPoly& entry(unsigned i, unsigned j) { return entries_[i * rank_ + j]; }

  /// Degree of the i-th diagonal entry (its length minus one, leading 1 included).
  unsigned diagonal_degree(unsigned i) const { return static_cast<unsigned>(entry(i, i).size()) - 1; }

  /// dim_F F_q[x]^r / M = sum of diagonal degrees.
  unsigned colength() const {
    unsigned total = 0;
    for (unsigned i = 0; i < rank_; ++i) {
      total += diagonal_degree(i);
    }
    return total;
  }

  bool is_canonical() const {
    for (unsigned i = 0; i < rank_; ++i) {
      FqPoly d = entry(i, i);
      trim(d);
      if (d.empty() || d.back().index != 1 || d.size() != entry(i, i).size()) {
        return false;
      }
      for (unsigned j = 0; j < rank_; ++j) {
        if (j == i) {
          continue;
        }
        FqPoly e = entry(i, j);
        trim(e);
        if (j < i && !e.empty()) {
          return false;
        }
        if (j > i && degree(e) >= degree(d)) {
          return false;
        }
      }
    }
    return true;
  }

private:
  unsigned rank_;
  std::vector<FqPoly> entries_;
};

namespace detail {

template <class F>
void degree_tuples(std::vector<unsigned>& e, unsigned pos, unsigned remaining, F&& f) {
  if (pos + 1 == e.size()) {
    e[pos] = remaining;
    f(static_cast<const std::vector<unsigned>&>(e));
    return;
  }
  for (unsigned k = remaining + 1; k-- > 0;) {
    e[pos] = k;
    degree_tuples(e, pos + 1, remaining - k, f);
  }
}

} // namespace detail

/*
  Visits every Hermite form of the given rank and colength exactly once.
  The form passed to `visit` is reused between calls.
*/
template <class Visitor>
void for_each_hermite_form(const FqField& f, unsigned rank, unsigned colength, DiagonalKind kind,
                           OperationMeter& meter, Visitor&& visit) {
  if (rank == 0) {
    throw SpecError("rank must be >= 1");
  }
  std::vector<unsigned> degrees(rank, 0);
  detail::degree_tuples(degrees, 0, colength, [&](const std::vector<unsigned>& e) {
    HermiteForm form(rank);
    // Free coefficient slots as (entry pointer, coefficient index).
    std::vector<FqElement*> slots;
    for (unsigned i = 0; i < rank; ++i) {
      form.entry(i, i).assign(e[i] + 1, f.zero());
      form.entry(i, i)[e[i]] = f.one();
      for (unsigned j = i + 1; j < rank; ++j) {
        form.entry(i, j).assign(e[i], f.zero());
      }
    }
    for (unsigned i = 0; i < rank; ++i) {
      if (kind == DiagonalKind::monic) {
        for (unsigned k = 0; k < e[i]; ++k) {
          slots.push_back(&form.entry(i, i)[k]);
        }
      }
      for (unsigned j = i + 1; j < rank; ++j) {
        for (unsigned k = 0; k < e[i]; ++k) {
          slots.push_back(&form.entry(i, j)[k]);
        }
      }
    }
    const std::uint32_t q = f.size();
    while (true) {
      meter.charge(1 + slots.size(), "Hermite form enumeration");
      visit(static_cast<const HermiteForm&>(form));
      std::size_t s = 0;
      while (s < slots.size() && slots[s]->index + 1 == q) {
        slots[s]->index = 0;
        ++s;
      }
      if (s == slots.size()) {
        break;
      }
      ++slots[s]->index;
    }
  });
}

/*
  Image of the submodule generated by the columns of `form` in
  (F_q[x]/x^n)^r, as a canonical (row-reduced) basis. Coordinates are
  indexed by i * n + k for the coefficient of x^k in component i.
*/
inline FqMatrix local_image_basis(const FqField& f, const HermiteForm& form, unsigned n) {
  const unsigned r = form.rank();
  FqMatrix rows;
  for (unsigned j = 0; j < r; ++j) {
    for (unsigned shift = 0; shift < n; ++shift) {
      FqVector v(static_cast<std::size_t>(r) * n, f.zero());
      for (unsigned i = 0; i <= j; ++i) {
        const FqPoly& e = form.entry(i, j);
        for (unsigned d = 0; d < e.size() && d + shift < n; ++d) {
          v[i * n + d + shift] = e[d];
        }
      }
      rows.push_back(std::move(v));
    }
  }
  return row_reduce(f, std::move(rows));
}

} // namespace quotmotive::oracle
