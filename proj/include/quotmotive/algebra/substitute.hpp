#pragma once

#include "quotmotive/algebra/motive_class.hpp"
#include "quotmotive/algebra/ring_traits.hpp"
#include "quotmotive/error.hpp"

#include <map>
#include <utility>
#include <vector>

namespace quotmotive {

/// Values for the generators L, t, S_m in a target ring R.
template <CommutativeRing R>
class Assignment {
public:
  Assignment& set(Symbol s, R value) {
    values_.insert_or_assign(s, std::move(value));
    return *this;
  }
  const R* find(const Symbol& s) const {
    auto it = values_.find(s);
    return it == values_.end() ? nullptr : &it->second;
  }
  const std::map<Symbol, R>& values() const { return values_; }

private:
  std::map<Symbol, R> values_;
};

/*
  Evaluates a class under the ring homomorphism fixed by `assignment`.
  Only the symbols that actually occur need to be assigned.
*/
template <CommutativeRing R>
R substitute(const MotiveClass& a, const Assignment<R>& assignment) {
  using Traits = RingTraits<R>;
  std::map<Symbol, std::vector<R>> powers;
  auto power_of = [&](const Symbol& s, unsigned e) -> const R& {
    auto it = powers.find(s);
    if (it == powers.end()) {
      const R* base = assignment.find(s);
      if (base == nullptr) {
        throw UnassignedSymbolError(s.name());
      }
      it = powers.emplace(s, std::vector<R>{Traits::one(), *base}).first;
    }
    auto& table = it->second;
    while (table.size() <= e) {
      table.push_back(table.back() * table[1]);
    }
    return table[e];
  };

  R result = Traits::zero();
  for (const auto& [m, c] : a.terms()) {
    R term = Traits::from_integer(c);
    if (m.l_exp != 0) {
      term = term * power_of(Symbol::L(), m.l_exp);
    }
    if (m.t_exp != 0) {
      term = term * power_of(Symbol::T(), m.t_exp);
    }
    for (const auto& [idx, e] : m.sym) {
      term = term * power_of(Symbol::S(idx), e);
    }
    result = result + term;
  }
  return result;
}

} // namespace quotmotive
