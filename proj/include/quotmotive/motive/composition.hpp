#pragma once

#include "quotmotive/error.hpp"

#include <numeric>
#include <utility>
#include <vector>

namespace quotmotive::motive {

/// Ordered tuple (n_1, ..., n_r) of non-negative integers.
class Composition {
public:
  explicit Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) {
      throw SpecError("a composition needs rank >= 1");
    }
  }

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned rank() const { return static_cast<unsigned>(parts_.size()); }
  unsigned total() const { return std::accumulate(parts_.begin(), parts_.end(), 0U); }

  /// d = sum_i (i - 1) n_i with 1-based i: the exponent of L in the class formula.
  unsigned weighted_degree() const {
    unsigned d = 0;
    for (unsigned i = 0; i < parts_.size(); ++i) {
      d += i * parts_[i];
    }
    return d;
  }

private:
  std::vector<unsigned> parts_;
};

/// (a_1, ..., a_N): lengths of a quotient concentrated at N removed points.
using StratumIndex = std::vector<unsigned>;

namespace detail {

template <class F>
void compositions_rec(std::vector<unsigned>& parts, unsigned pos, unsigned remaining, F&& f) {
  if (pos + 1 == parts.size()) {
    parts[pos] = remaining;
    f(Composition(parts));
    return;
  }
  for (unsigned k = 0; k <= remaining; ++k) {
    parts[pos] = k;
    compositions_rec(parts, pos + 1, remaining - k, f);
  }
}

template <class F>
void bounded_tuples_rec(std::vector<unsigned>& parts, unsigned pos, unsigned remaining, F&& f) {
  if (pos == parts.size()) {
    f(static_cast<const StratumIndex&>(parts));
    return;
  }
  for (unsigned k = 0; k <= remaining; ++k) {
    parts[pos] = k;
    bounded_tuples_rec(parts, pos + 1, remaining - k, f);
  }
}

} // namespace detail

/// Visits all compositions of `total` into `rank` parts, lexicographically.
template <class F>
void for_each_composition(unsigned total, unsigned rank, F&& f) {
  if (rank == 0) {
    throw SpecError("a composition needs rank >= 1");
  }
  std::vector<unsigned> parts(rank, 0);
  detail::compositions_rec(parts, 0, total, f);
}

/// Stratum indices with a_1 + ... + a_N <= bound, lexicographically.
template <class F>
void for_each_stratum_index(unsigned points, unsigned bound, F&& f) {
  std::vector<unsigned> parts(points, 0);
  detail::bounded_tuples_rec(parts, 0, bound, f);
}

} // namespace quotmotive::motive
