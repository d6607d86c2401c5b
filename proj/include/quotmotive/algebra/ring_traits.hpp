#pragma once

#include "quotmotive/algebra/integer.hpp"

#include <concepts>

namespace quotmotive {

// Specialized for every coefficient ring that series and substitution accept.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Integer> {
  static Integer zero() { return 0; }
  static Integer one() { return 1; }
  static Integer from_integer(const Integer& c) { return c; }
  static bool is_zero(const Integer& a) { return a.is_zero(); }
  static bool is_unit(const Integer& a) { return a == 1 || a == -1; }
  static Integer unit_inverse(const Integer& a) { return a; }
  static std::string name() { return "Z"; }
};

template <class R>
concept CommutativeRing = requires(const R& a, const R& b, const Integer& c) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { RingTraits<R>::zero() } -> std::convertible_to<R>;
  { RingTraits<R>::one() } -> std::convertible_to<R>;
  { RingTraits<R>::from_integer(c) } -> std::convertible_to<R>;
  { RingTraits<R>::is_zero(a) } -> std::convertible_to<bool>;
  { RingTraits<R>::is_unit(a) } -> std::convertible_to<bool>;
  { RingTraits<R>::unit_inverse(a) } -> std::convertible_to<R>;
};

} // namespace quotmotive
