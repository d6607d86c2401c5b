#pragma once

#include "quotmotive/error.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quotmotive::oracle {

/*
  Element of F_{p^d}, encoded as the integer sum c_k p^k whose base-p
  digits c_0, ..., c_{d-1} are the coordinates in the basis 1, a, ..., a^{d-1}
  (a a root of the field modulus). Indices below p form the prime field.
*/
struct FqElement {
  std::uint32_t index = 0;
  friend auto operator<=>(const FqElement&, const FqElement&) = default;
};

/// Univariate polynomial over a finite field, ascending, trimmed.
using FqPoly = std::vector<FqElement>;

inline bool is_prime(unsigned long long n) {
  if (n < 2) {
    return false;
  }
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

/// (p, k) with q = p^k, or nothing when q is not a prime power.
inline std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned long long q) {
  if (q < 2) {
    return std::nullopt;
  }
  unsigned long long p = 2;
  while (q % p != 0) {
    ++p;
  }
  unsigned k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) {
    return std::nullopt;
  }
  return std::make_pair(static_cast<unsigned>(p), k);
}

namespace detail {

// Dense polynomials over Z/p, ascending coefficients in [0, p).
using PrimePoly = std::vector<unsigned>;

inline void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) {
    a.pop_back();
  }
}

inline unsigned inverse_mod(unsigned a, unsigned p) {
  // p is prime, so a^{p-2} is the inverse.
  unsigned long long result = 1;
  unsigned long long base = a % p;
  unsigned e = p - 2;
  while (e != 0) {
    if (e & 1U) {
      result = result * base % p;
    }
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<unsigned>(result);
}

/// Remainder of a modulo a non-zero b over Z/p.
inline PrimePoly poly_mod(PrimePoly a, PrimePoly b, unsigned p) {
  trim(a);
  trim(b);
  const unsigned lead_inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const unsigned factor = static_cast<unsigned>(static_cast<unsigned long long>(a.back()) * lead_inv % p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) {
      const unsigned long long sub = static_cast<unsigned long long>(factor) * b[k] % p;
      a[shift + k] = static_cast<unsigned>((a[shift + k] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

/// Monic polynomial of degree d whose lower coefficients are the base-p digits of `code`.
inline PrimePoly monic_from_code(unsigned long long code, unsigned degree, unsigned p) {
  PrimePoly out(degree + 1, 0);
  for (unsigned k = 0; k < degree; ++k) {
    out[k] = static_cast<unsigned>(code % p);
    code /= p;
  }
  out[degree] = 1;
  return out;
}

inline unsigned long long upow(unsigned long long b, unsigned e) {
  unsigned long long r = 1;
  while (e-- != 0) {
    r *= b;
  }
  return r;
}

} // namespace detail

/// Trial division by every monic polynomial of degree 1 .. d-1.
inline bool is_irreducible(const std::vector<unsigned>& monic, unsigned p) {
  const unsigned degree = static_cast<unsigned>(monic.size()) - 1;
  if (degree == 0) {
    return false;
  }
  for (unsigned d = 1; d < degree; ++d) {
    const unsigned long long count = detail::upow(p, d);
    for (unsigned long long code = 0; code < count; ++code) {
      if (detail::poly_mod(monic, detail::monic_from_code(code, d, p), p).empty()) {
        return false;
      }
    }
  }
  return true;
}

/// First irreducible monic polynomial of the given degree in increasing code order.
inline std::vector<unsigned> find_irreducible_modulus(unsigned p, unsigned degree) {
  if (degree == 0) {
    throw SpecError("extension degree must be >= 1");
  }
  const unsigned long long count = detail::upow(p, degree);
  for (unsigned long long code = 0; code < count; ++code) {
    auto candidate = detail::monic_from_code(code, degree, p);
    if (is_irreducible(candidate, p)) {
      return candidate;
    }
  }
  throw Error("no irreducible polynomial of degree " + std::to_string(degree) + " over F_" + std::to_string(p));
}

/*
  F_{p^d} with full addition and multiplication tables. Tables are built
  once and shared between copies; the field is immutable afterwards.
*/
class FqField {
public:
  static constexpr std::uint32_t max_size = 1024;

  static FqField prime(unsigned p) { return FqField(p, {0, 1}); }
  static FqField extension(unsigned p, unsigned degree) {
    if (!is_prime(p)) {
      throw SpecError(std::to_string(p) + " is not prime");
    }
    return degree == 1 ? prime(p) : FqField(p, find_irreducible_modulus(p, degree));
  }
  /// Field with q elements for a prime power q.
  static FqField of_size(unsigned long long q) {
    const auto pk = prime_power(q);
    if (!pk) {
      throw SpecError(std::to_string(q) + " is not a prime power");
    }
    return extension(pk->first, pk->second);
  }

  /// Field defined by an explicit monic modulus, checked for irreducibility.
  FqField(unsigned p, std::vector<unsigned> modulus) {
    if (!is_prime(p)) {
      throw SpecError(std::to_string(p) + " is not prime");
    }
    detail::trim(modulus);
    if (modulus.size() < 2 || modulus.back() != 1) {
      throw SpecError("field modulus must be monic of degree >= 1");
    }
    for (auto& c : modulus) {
      if (c >= p) {
        throw SpecError("field modulus coefficients must lie in [0, p)");
      }
    }
    if (!is_irreducible(modulus, p)) {
      throw SpecError("field modulus is reducible");
    }
    const unsigned degree = static_cast<unsigned>(modulus.size()) - 1;
    const unsigned long long size = detail::upow(p, degree);
    if (size > max_size) {
      throw SpecError("field of size " + std::to_string(size) + " exceeds the table limit " +
                      std::to_string(max_size));
    }
    auto tables = std::make_shared<Tables>();
    tables->p = p;
    tables->degree = degree;
    tables->size = static_cast<std::uint32_t>(size);
    tables->modulus = std::move(modulus);
    build(*tables);
    tables_ = std::move(tables);
  }

  unsigned characteristic() const { return tables_->p; }
  unsigned degree() const { return tables_->degree; }
  std::uint32_t size() const { return tables_->size; }
  const std::vector<unsigned>& modulus() const { return tables_->modulus; }

  FqElement zero() const { return {0}; }
  FqElement one() const { return {1}; }
  FqElement element(std::uint32_t index) const {
    if (index >= size()) {
      throw SpecError("field element index out of range");
    }
    return {index};
  }
  /// Image of an integer in the prime field.
  FqElement from_integer(long long c) const {
    const long long p = characteristic();
    return {static_cast<std::uint32_t>(((c % p) + p) % p)};
  }

  FqElement add(FqElement a, FqElement b) const { return {tables_->add[a.index * size() + b.index]}; }
  FqElement mul(FqElement a, FqElement b) const { return {tables_->mul[a.index * size() + b.index]}; }
  FqElement neg(FqElement a) const { return {tables_->neg[a.index]}; }
  FqElement sub(FqElement a, FqElement b) const { return add(a, neg(b)); }
  FqElement inv(FqElement a) const {
    if (a.index == 0) {
      throw Error("division by zero in F_" + std::to_string(size()));
    }
    return {tables_->inv[a.index]};
  }
  FqElement pow(FqElement a, unsigned e) const {
    FqElement r = one();
    while (e-- != 0) {
      r = mul(r, a);
    }
    return r;
  }

  friend bool operator==(const FqField& a, const FqField& b) {
    return a.characteristic() == b.characteristic() && a.modulus() == b.modulus();
  }

private:
  struct Tables {
    unsigned p = 0;
    unsigned degree = 0;
    std::uint32_t size = 0;
    std::vector<unsigned> modulus;
    std::vector<std::uint16_t> add;
    std::vector<std::uint16_t> mul;
    std::vector<std::uint16_t> neg;
    std::vector<std::uint16_t> inv;
  };

  static std::vector<unsigned> digits(std::uint32_t index, const Tables& t) {
    std::vector<unsigned> out(t.degree);
    for (unsigned k = 0; k < t.degree; ++k) {
      out[k] = index % t.p;
      index /= t.p;
    }
    return out;
  }

  static std::uint32_t encode(const std::vector<unsigned>& coeffs, const Tables& t) {
    std::uint32_t index = 0;
    for (std::size_t k = t.degree; k-- > 0;) {
      index = index * t.p + (k < coeffs.size() ? coeffs[k] : 0);
    }
    return index;
  }

  static void build(Tables& t) {
    const std::uint32_t q = t.size;
    std::vector<std::vector<unsigned>> digit(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      digit[a] = digits(a, t);
    }
    t.add.resize(static_cast<std::size_t>(q) * q);
    t.mul.resize(static_cast<std::size_t>(q) * q);
    t.neg.resize(q);
    t.inv.resize(q);
    std::vector<unsigned> sum(t.degree);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        for (unsigned k = 0; k < t.degree; ++k) {
          sum[k] = (digit[a][k] + digit[b][k]) % t.p;
        }
        t.add[a * q + b] = static_cast<std::uint16_t>(encode(sum, t));

        std::vector<unsigned> product(2 * t.degree - 1, 0);
        for (unsigned i = 0; i < t.degree; ++i) {
          for (unsigned j = 0; j < t.degree; ++j) {
            product[i + j] = (product[i + j] + digit[a][i] * digit[b][j]) % t.p;
          }
        }
        t.mul[a * q + b] = static_cast<std::uint16_t>(encode(detail::poly_mod(product, t.modulus, t.p), t));
      }
    }
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        if (t.add[a * q + b] == 0) {
          t.neg[a] = static_cast<std::uint16_t>(b);
        }
        if (t.mul[a * q + b] == 1) {
          t.inv[a] = static_cast<std::uint16_t>(b);
        }
      }
    }
  }

  std::shared_ptr<const Tables> tables_;
};

inline void trim(FqPoly& a) {
  while (!a.empty() && a.back().index == 0) {
    a.pop_back();
  }
}

inline long degree(const FqPoly& a) { return static_cast<long>(a.size()) - 1; }

inline FqElement evaluate(const FqField& f, const FqPoly& a, FqElement x) {
  FqElement acc = f.zero();
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = f.add(f.mul(acc, x), *it);
  }
  return acc;
}

} // namespace quotmotive::oracle
