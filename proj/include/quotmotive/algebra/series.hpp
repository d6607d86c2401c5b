#pragma once

#include "quotmotive/algebra/ring_traits.hpp"
#include "quotmotive/error.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace quotmotive {

/*
  Power series in u over a commutative ring R, truncated after u^order.
  Holds exactly order + 1 coefficients; no operation looks past them.
*/
template <CommutativeRing R>
class TruncatedSeries {
public:
  using Traits = RingTraits<R>;

  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, Traits::zero()) {}
  explicit TruncatedSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
      throw Error("truncated series needs at least one coefficient");
    }
  }

  static TruncatedSeries one(std::size_t order) { return monomial(Traits::one(), 0, order); }

  /// c * u^k, or zero when k > order.
  static TruncatedSeries monomial(const R& c, std::size_t k, std::size_t order) {
    TruncatedSeries out(order);
    if (k <= order) {
      out.coeffs_[k] = c;
    }
    return out;
  }

  /// 1 + c * u^k, the building block of every product formula.
  static TruncatedSeries binomial(const R& c, std::size_t k, std::size_t order) {
    TruncatedSeries out = one(order);
    if (k <= order) {
      out.coeffs_[k] = out.coeffs_[k] + c;
    }
    return out;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<R>& coefficients() const { return coeffs_; }
  const R& operator[](std::size_t k) const { return coeffs_.at(k); }
  void set(std::size_t k, R value) { coeffs_.at(k) = std::move(value); }

  TruncatedSeries truncated(std::size_t order) const {
    std::vector<R> out(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
    out.resize(order + 1, Traits::zero());
    return TruncatedSeries(std::move(out));
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= out.order(); ++k) {
      out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    }
    return out;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= out.order(); ++k) {
      out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    }
    return out;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// Cauchy product; the result has order min(order(a), order(b)).
  friend TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    TruncatedSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
      if (Traits::is_zero(a.coeffs_[i])) {
        continue;
      }
      for (std::size_t j = 0; i + j <= order; ++j) {
        if (!Traits::is_zero(b.coeffs_[j])) {
          out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
      }
    }
    return out;
  }

  friend TruncatedSeries series_inv(const TruncatedSeries& a) {
    if (!Traits::is_unit(a.coeffs_[0])) {
      throw NonUnitError("series inversion over " + Traits::name() + " needs a unit constant coefficient");
    }
    const R c0_inv = Traits::unit_inverse(a.coeffs_[0]);
    TruncatedSeries out(a.order());
    out.coeffs_[0] = c0_inv;
    for (std::size_t k = 1; k <= a.order(); ++k) {
      R acc = Traits::zero();
      for (std::size_t j = 1; j <= k; ++j) {
        if (!Traits::is_zero(a.coeffs_[j])) {
          acc = acc + a.coeffs_[j] * out.coeffs_[k - j];
        }
      }
      out.coeffs_[k] = -(c0_inv * acc);
    }
    return out;
  }

  /// a^e by binary powering; negative e inverts first.
  friend TruncatedSeries series_pow(const TruncatedSeries& a, long long e) {
    TruncatedSeries base = e < 0 ? series_inv(a) : a;
    unsigned long long remaining = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                         : static_cast<unsigned long long>(e);
    TruncatedSeries result = one(a.order());
    while (remaining != 0) {
      if (remaining & 1ULL) {
        result = series_mul(result, base);
      }
      remaining >>= 1ULL;
      if (remaining != 0) {
        base = series_mul(base, base);
      }
    }
    return result;
  }

private:
  std::vector<R> coeffs_;
};

} // namespace quotmotive
