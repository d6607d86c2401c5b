#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace quotmotive {

/// Arbitrary-precision signed integer used for every coefficient.
using Integer = boost::multiprecision::cpp_int;

inline Integer ipow(Integer base, unsigned exponent) {
  Integer result = 1;
  while (exponent != 0) {
    if (exponent & 1U) {
      result *= base;
    }
    exponent >>= 1U;
    if (exponent != 0) {
      base *= base;
    }
  }
  return result;
}

/// binom(top, k) = top (top-1) ... (top-k+1) / k!, valid for negative top.
inline Integer generalized_binomial(const Integer& top, unsigned k) {
  Integer numerator = 1;
  Integer denominator = 1;
  for (unsigned i = 0; i < k; ++i) {
    numerator *= top - i;
    denominator *= i + 1;
  }
  return numerator / denominator;
}

inline std::string to_string(const Integer& value) { return value.str(); }

} // namespace quotmotive
