#pragma once

#include "quotmotive/algebra/integer.hpp"
#include "quotmotive/algebra/ring_traits.hpp"

#include <algorithm>
#include <compare>
#include <concepts>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace quotmotive {

enum class SymbolKind { lefschetz, t, sym };

/// One generator of the class ring: L, t, or S_m with m >= 1.
struct Symbol {
  SymbolKind kind = SymbolKind::lefschetz;
  unsigned index = 0;

  static Symbol L() { return {SymbolKind::lefschetz, 0}; }
  static Symbol T() { return {SymbolKind::t, 0}; }
  static Symbol S(unsigned m) { return {SymbolKind::sym, m}; }

  std::string name() const {
    switch (kind) {
    case SymbolKind::lefschetz:
      return "L";
    case SymbolKind::t:
      return "t";
    case SymbolKind::sym:
      return "S" + std::to_string(index);
    }
    return "?";
  }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/*
  A monomial L^a t^b S_{m_1}^{e_1} ... S_{m_k}^{e_k}. The S-part is kept
  as (index, exponent) pairs sorted by strictly increasing index with
  positive exponents; S_0 never appears.
*/
struct Monomial {
  unsigned l_exp = 0;
  unsigned t_exp = 0;
  std::vector<std::pair<unsigned, unsigned>> sym;

  /// Sum of index * exponent over the S-factors (the u-degree).
  unsigned sym_weight() const {
    unsigned w = 0;
    for (const auto& [m, e] : sym) {
      w += m * e;
    }
    return w;
  }

  unsigned sym_factor_count() const {
    unsigned c = 0;
    for (const auto& [m, e] : sym) {
      c += e;
    }
    return c;
  }

  bool is_one() const { return l_exp == 0 && t_exp == 0 && sym.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.l_exp = a.l_exp + b.l_exp;
    out.t_exp = a.t_exp + b.t_exp;
    out.sym.reserve(a.sym.size() + b.sym.size());
    auto i = a.sym.begin();
    auto j = b.sym.begin();
    while (i != a.sym.end() || j != b.sym.end()) {
      if (j == b.sym.end() || (i != a.sym.end() && i->first < j->first)) {
        out.sym.push_back(*i++);
      } else if (i == a.sym.end() || j->first < i->first) {
        out.sym.push_back(*j++);
      } else {
        out.sym.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/*
  Total order on monomials used for the canonical normal form:
    1. ascending exponent of L,
    2. ascending exponent of t,
    3. the S-multiset: ascending weight, then ascending number of factors,
       then the factor indices listed in descending order compared
       lexicographically with the larger list first.
  So "S2 + S1^2*L + S2*L^2" and "3 - 2*S1 + S2" are printed in this order.
*/
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.l_exp != b.l_exp) {
      return a.l_exp < b.l_exp;
    }
    if (a.t_exp != b.t_exp) {
      return a.t_exp < b.t_exp;
    }
    const unsigned wa = a.sym_weight();
    const unsigned wb = b.sym_weight();
    if (wa != wb) {
      return wa < wb;
    }
    const unsigned fa = a.sym_factor_count();
    const unsigned fb = b.sym_factor_count();
    if (fa != fb) {
      return fa < fb;
    }
    const auto da = descending_indices(a);
    const auto db = descending_indices(b);
    return std::lexicographical_compare(da.begin(), da.end(), db.begin(), db.end(), std::greater<>{});
  }

private:
  static std::vector<unsigned> descending_indices(const Monomial& m) {
    std::vector<unsigned> out;
    for (auto it = m.sym.rbegin(); it != m.sym.rend(); ++it) {
      out.insert(out.end(), it->second, it->first);
    }
    return out;
  }
};

/*
  Element of the free commutative ring Z[L, t, S_1, S_2, ...], used as the
  representative of a Grothendieck-ring class. S_m stands for [Sym^m(C)];
  the symbols are algebraically independent. Terms with a zero coefficient
  are never stored, so == is structural equality.
*/
class MotiveClass {
public:
  using TermMap = std::map<Monomial, Integer, MonomialOrder>;

  MotiveClass() = default;
  MotiveClass(const Integer& constant) { // NOLINT(google-explicit-constructor)
    add_term(Monomial{}, constant);
  }
  template <std::integral I>
  MotiveClass(I constant) : MotiveClass(Integer(constant)) {} // NOLINT(google-explicit-constructor)

  static MotiveClass term(const Integer& coeff, Monomial m) {
    MotiveClass out;
    out.add_term(std::move(m), coeff);
    return out;
  }
  static MotiveClass lefschetz(unsigned exponent = 1) {
    Monomial m;
    m.l_exp = exponent;
    return term(1, std::move(m));
  }
  static MotiveClass t(unsigned exponent = 1) {
    Monomial m;
    m.t_exp = exponent;
    return term(1, std::move(m));
  }
  /// S_m; S_0 is the unit.
  static MotiveClass sym(unsigned m, unsigned exponent = 1) {
    Monomial mono;
    if (m != 0 && exponent != 0) {
      mono.sym.emplace_back(m, exponent);
    }
    return term(1, std::move(mono));
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }
  Integer constant_term() const { return coefficient(Monomial{}); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  std::set<Symbol> symbols() const {
    std::set<Symbol> out;
    for (const auto& [m, c] : terms_) {
      if (m.l_exp != 0) {
        out.insert(Symbol::L());
      }
      if (m.t_exp != 0) {
        out.insert(Symbol::T());
      }
      for (const auto& [idx, e] : m.sym) {
        out.insert(Symbol::S(idx));
      }
    }
    return out;
  }

  /// Highest power of L occurring; 0 for constants and the zero class.
  unsigned lefschetz_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
      d = std::max(d, m.l_exp);
    }
    return d;
  }

  MotiveClass& operator+=(const MotiveClass& other) {
    for (const auto& [m, c] : other.terms_) {
      add_term(m, c);
    }
    return *this;
  }
  MotiveClass& operator-=(const MotiveClass& other) {
    for (const auto& [m, c] : other.terms_) {
      add_term(m, -c);
    }
    return *this;
  }
  MotiveClass& operator*=(const MotiveClass& other) { return *this = *this * other; }

  friend MotiveClass operator+(MotiveClass a, const MotiveClass& b) { return a += b; }
  friend MotiveClass operator-(MotiveClass a, const MotiveClass& b) { return a -= b; }
  friend MotiveClass operator-(MotiveClass a) {
    for (auto& [m, c] : a.terms_) {
      c = -c;
    }
    return a;
  }
  friend MotiveClass operator*(const MotiveClass& a, const MotiveClass& b) {
    MotiveClass out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        out.add_term(ma * mb, ca * cb);
      }
    }
    return out;
  }
  friend bool operator==(const MotiveClass&, const MotiveClass&) = default;

  /// Canonical text, e.g. "S2 + S1^2*L + S2*L^2"; "0" for the zero class.
  std::string to_string() const {
    if (terms_.empty()) {
      return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool negative = c < 0;
      const Integer magnitude = negative ? Integer(-c) : c;
      if (first) {
        out += negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      const std::string factors = render_monomial(m);
      if (factors.empty()) {
        out += magnitude.str();
      } else if (magnitude == 1) {
        out += factors;
      } else {
        out += magnitude.str() + "*" + factors;
      }
    }
    return out;
  }

private:
  void add_term(Monomial m, const Integer& c) {
    if (c.is_zero()) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    }
  }

  static std::string power(const std::string& base, unsigned e) {
    return e == 1 ? base : base + "^" + std::to_string(e);
  }

  static std::string render_monomial(const Monomial& m) {
    std::vector<std::string> parts;
    for (const auto& [idx, e] : m.sym) {
      parts.push_back(power("S" + std::to_string(idx), e));
    }
    if (m.l_exp != 0) {
      parts.push_back(power("L", m.l_exp));
    }
    if (m.t_exp != 0) {
      parts.push_back(power("t", m.t_exp));
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out += (i == 0 ? "" : "*") + parts[i];
    }
    return out;
  }

  TermMap terms_;
};

template <>
struct RingTraits<MotiveClass> {
  static MotiveClass zero() { return {}; }
  static MotiveClass one() { return MotiveClass(1); }
  static MotiveClass from_integer(const Integer& c) { return MotiveClass(c); }
  static bool is_zero(const MotiveClass& a) { return a.is_zero(); }
  static bool is_unit(const MotiveClass& a) {
    return a.is_constant() && RingTraits<Integer>::is_unit(a.constant_term());
  }
  static MotiveClass unit_inverse(const MotiveClass& a) { return a; }
  static std::string name() { return "Z[L,t,S]"; }
};

} // namespace quotmotive
