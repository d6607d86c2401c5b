#pragma once

#include "quotmotive/algebra/integer.hpp"
#include "quotmotive/algebra/ring_traits.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace quotmotive {

/*
  Dense univariate polynomial with Integer coefficients, stored in
  ascending degree. The coefficient vector is always trimmed, so the
  zero polynomial has an empty vector and degree() == -1.
*/
class IntPoly {
public:
  IntPoly() = default;
  IntPoly(const Integer& constant) { // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) {
      coeffs_.push_back(constant);
    }
  }
  IntPoly(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) {
      coeffs_.emplace_back(c);
    }
    trim();
  }
  explicit IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static IntPoly monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> coeffs(degree + 1);
    coeffs[degree] = c;
    return IntPoly(std::move(coeffs));
  }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

  Integer evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  /// t^deg * P(1/t) == P(t); the zero polynomial counts as palindromic.
  bool is_palindromic() const {
    for (std::size_t i = 0, j = coeffs_.size(); i < j; ++i) {
      if (coeffs_[i] != coeffs_[--j]) {
        return false;
      }
    }
    return true;
  }

  IntPoly& operator+=(const IntPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) {
      coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
      coeffs_[k] += other.coeffs_[k];
    }
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) {
      coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
      coeffs_[k] -= other.coeffs_[k];
    }
    trim();
    return *this;
  }
  IntPoly& operator*=(const IntPoly& other) { return *this = *this * other; }

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(IntPoly a) {
    for (auto& c : a.coeffs_) {
      c = -c;
    }
    return a;
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) {
      return {};
    }
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return IntPoly(std::move(out));
  }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Ascending rendering such as "1 + 2*t + t^2"; "0" for the zero polynomial.
  std::string to_string(const std::string& variable = "t") const {
    if (coeffs_.empty()) {
      return "0";
    }
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Integer& c = coeffs_[k];
      if (c.is_zero()) {
        continue;
      }
      const bool negative = c < 0;
      const Integer magnitude = negative ? Integer(-c) : c;
      if (first) {
        out += negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (k == 0) {
        out += magnitude.str();
        continue;
      }
      if (magnitude != 1) {
        out += magnitude.str() + "*";
      }
      out += variable;
      if (k > 1) {
        out += "^" + std::to_string(k);
      }
    }
    return out;
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
      coeffs_.pop_back();
    }
  }

  std::vector<Integer> coeffs_;
};

template <>
struct RingTraits<IntPoly> {
  static IntPoly zero() { return {}; }
  static IntPoly one() { return IntPoly(Integer(1)); }
  static IntPoly from_integer(const Integer& c) { return IntPoly(c); }
  static bool is_zero(const IntPoly& a) { return a.is_zero(); }
  static bool is_unit(const IntPoly& a) { return a.degree() == 0 && RingTraits<Integer>::is_unit(a.coeff(0)); }
  static IntPoly unit_inverse(const IntPoly& a) { return a; }
  static std::string name() { return "Z[t]"; }
};

} // namespace quotmotive
