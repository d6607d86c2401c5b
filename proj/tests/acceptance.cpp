// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "quotmotive/cli/suite.hpp"
#include "quotmotive/quotmotive.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace quotmotive;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checked = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && pass) {
      pass = false;
      first_failure = what;
    }
  }
};

std::string cell(std::initializer_list<unsigned> v) {
  std::ostringstream s;
  s << '(';
  bool first = true;
  for (unsigned x : v) {
    s << (first ? "" : ",") << x;
    first = false;
  }
  s << ')';
  return s.str();
}

Integer at_q(const MotiveClass& c, const Integer& q) {
  Assignment<Integer> a;
  a.set(Symbol::L(), q);
  return substitute(c, a);
}

Integer signed_binomial(long long x, unsigned n) {
  Integer num = 1;
  Integer den = 1;
  for (unsigned i = 0; i < n; ++i) {
    num *= x - static_cast<long long>(i);
    den *= i + 1;
  }
  return (n % 2 == 0 ? 1 : -1) * num / den;
}

Outcome product_formula() {
  Outcome o;
  for (unsigned g = 0; g <= 3; ++g) {
    for (unsigned r = 1; r <= 4; ++r) {
      const auto series = motive::poincare_series_product(r, g, 6);
      for (unsigned n = 0; n <= 6; ++n) {
        o.expect(series[n] == motive::poincare_polynomial(n, r, g), "n,r,g=" + cell({n, r, g}));
      }
    }
  }
  return o;
}

Outcome poincare_shape() {
  Outcome o;
  for (unsigned g = 0; g <= 3; ++g) {
    for (unsigned r = 1; r <= 4; ++r) {
      for (unsigned n = 0; n <= 6; ++n) {
        const IntPoly p = motive::poincare_polynomial(n, r, g);
        o.expect(p.degree() == static_cast<long>(2 * n * r) && p.coeff(0) == 1 && p.is_palindromic(),
                 "n,r,g=" + cell({n, r, g}));
      }
    }
  }
  return o;
}

Outcome degenerate_cases() {
  Outcome o;
  for (unsigned n = 0; n <= 10; ++n) {
    o.expect(motive::quot_class(n, 1) == MotiveClass::sym(n), "rank one n=" + std::to_string(n));
  }
  MotiveClass geometric;
  for (unsigned r = 1; r <= 6; ++r) {
    geometric += MotiveClass::lefschetz(r - 1);
    o.expect(motive::quot_class(1, r) == MotiveClass::sym(1) * geometric, "length one r=" + std::to_string(r));
  }
  return o;
}

Outcome stratification() {
  Outcome o;
  for (unsigned n = 0; n <= 5; ++n) {
    for (unsigned r = 1; r <= 3; ++r) {
      for (unsigned points = 0; points <= 2; ++points) {
        o.expect(motive::verify_stratification(n, r, points).holds, "n,r,N=" + cell({n, r, points}));
      }
    }
  }
  return o;
}

Outcome punctual_oracle() {
  Outcome o;
  std::vector<std::array<unsigned, 3>> cells{{2, 2, 3}};
  for (unsigned q : {2U, 3U}) {
    for (unsigned r : {2U, 3U}) {
      for (unsigned n : {1U, 2U}) {
        cells.push_back({q, r, n});
      }
    }
  }
  for (const auto& [q, r, n] : cells) {
    const Integer count = oracle::count_punctual_quotients(oracle::FqField::prime(q), r, n);
    const Integer formula = at_q(motive::punctual_class(n, r), q);
    o.expect(count == formula, "q,r,n=" + cell({q, r, n}) + " oracle " + count.str() + " formula " + formula.str());
  }
  return o;
}

Outcome affine_oracle() {
  Outcome o;
  for (unsigned q : {2U, 3U}) {
    for (unsigned r = 1; r <= 3; ++r) {
      for (unsigned n = 1; n <= 3; ++n) {
        Assignment<Integer> a;
        a.set(Symbol::L(), q);
        for (unsigned m = 1; m <= n; ++m) {
          a.set(Symbol::S(m), ipow(Integer(q), m));
        }
        const Integer count = oracle::count_colength_submodules_affine(oracle::FqField::prime(q), r, n);
        o.expect(count == substitute(motive::quot_class(n, r), a), "q,r,n=" + cell({q, r, n}));
      }
    }
  }
  return o;
}

Outcome projective_line() {
  Outcome o;
  const CurveSpec p1 = CurveSpec::projective_line();
  for (unsigned q : {2U, 3U}) {
    for (unsigned r = 1; r <= 3; ++r) {
      for (unsigned n = 1; n <= 3; ++n) {
        const Integer count = oracle::quot_point_count_bruteforce_P1(oracle::FqField::prime(q), r, n);
        o.expect(count == motive::quot_point_count(n, r, p1, q), "q,r,n=" + cell({q, r, n}));
      }
    }
  }
  // (q=2, r=2, n=2) against the closed form (q^2+q+1)(1+q^2) + q(q+1)^2.
  const Integer q = 2;
  const Integer closed = (q * q + q + 1) * (1 + q * q) + q * (q + 1) * (q + 1);
  o.expect(oracle::quot_point_count_bruteforce_P1(oracle::FqField::prime(2), 2, 2) == closed, "closed form at q=2");
  return o;
}

Outcome curve_zeta() {
  Outcome o;
  for (const auto& [curve, q] : {std::pair{cli::supersingular_curve_f2(), 2U}, std::pair{cli::elliptic_curve_f3(), 3U}}) {
    const Integer n1 = oracle::curve_point_counts(*curve.equation, q, 1).front();
    const CurveSpec zeta = CurveSpec::genus_one(Integer(q) + 1 - n1, q);
    for (unsigned m = 0; m <= 4; ++m) {
      o.expect(oracle::sym_point_count_bruteforce(*curve.equation, q, m) == motive::sym_point_count(zeta, q, m),
               "q=" + std::to_string(q) + " m=" + std::to_string(m));
    }
  }
  return o;
}

Outcome euler_law() {
  Outcome o;
  for (unsigned g = 0; g <= 3; ++g) {
    for (unsigned r = 1; r <= 4; ++r) {
      for (unsigned n = 0; n <= 6; ++n) {
        const Integer chi = motive::euler_characteristic(n, r, g);
        const long long top = (2 * static_cast<long long>(g) - 2) * r;
        bool ok = chi == signed_binomial(top, n);
        if (g == 1 && n >= 1) {
          ok = ok && chi == 0;
        }
        if (g == 0 && r == 1) {
          ok = ok && chi == n + 1;
        }
        o.expect(ok, "n,r,g=" + cell({n, r, g}));
      }
    }
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto grid = cli::default_grid();
  const std::string first = cli::run_suite(grid).to_json().dump(2);
  const std::string second = cli::run_suite(grid).to_json().dump(2);
  const std::string serial = cli::run_suite(grid, {}, 1).to_json().dump(2);
  o.expect(first == second, "two runs differ");
  o.expect(first == serial, "threaded and serial runs differ");
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"product formula for Poincare series", product_formula},
      {"degree, constant term and palindromy of Poincare polynomials", poincare_shape},
      {"rank-one and length-one classes", degenerate_cases},
      {"stratification identity", stratification},
      {"punctual oracle agreement", punctual_oracle},
      {"affine oracle agreement", affine_oracle},
      {"projective-line Quot counts", projective_line},
      {"curve zeta consistency", curve_zeta},
      {"Euler characteristic law", euler_law},
      {"deterministic suite report", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.first_failure = std::string("error: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %2zu  %-62s  %5zu checks  %8.1f ms%s%s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.checked, ms, o.pass ? "" : "  first failure: ",
                o.first_failure.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
