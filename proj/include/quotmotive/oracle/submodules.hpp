#pragma once

#include "quotmotive/algebra/integer.hpp"
#include "quotmotive/oracle/budget.hpp"
#include "quotmotive/oracle/finite_field.hpp"
#include "quotmotive/oracle/hermite.hpp"
#include "quotmotive/oracle/linear_algebra.hpp"

#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <vector>

namespace quotmotive::oracle {

enum class PunctualMethod {
  automatic,     // both methods when the subspace walk fits the budget, else local Hermite forms
  subspace_walk, // x-stable subspaces of (F_q[x]/x^n)^r
  local_hermite, // Hermite forms with x-power diagonals
  both,          // run both and require agreement
};

/// Thrown when two enumeration routes that must agree do not.
class OracleDisagreementError : public Error {
public:
  using Error::Error;
};

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

inline std::uint64_t saturating_pow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e-- != 0) {
    r = saturating_mul(r, base);
  }
  return r;
}

inline std::uint64_t to_u64_saturating(const Integer& v) {
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return v.convert_to<std::uint64_t>();
}

/// Number of k-dimensional subspaces of F_q^d.
inline Integer gaussian_binomial(unsigned d, unsigned k, unsigned q) {
  if (k > d) {
    return 0;
  }
  Integer num = 1;
  Integer den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= quotmotive::ipow(Integer(q), d - i) - 1;
    den *= quotmotive::ipow(Integer(q), i + 1) - 1;
  }
  return num / den;
}

/// Visits every k-subset of {0, ..., total-1} as an increasing list.
template <class F>
void combinations_rec(std::vector<unsigned>& chosen, unsigned k, unsigned start, unsigned total, F&& f) {
  if (chosen.size() == k) {
    f(static_cast<const std::vector<unsigned>&>(chosen));
    return;
  }
  const unsigned need = k - static_cast<unsigned>(chosen.size());
  for (unsigned c = start; c + need <= total; ++c) {
    chosen.push_back(c);
    combinations_rec(chosen, k, c + 1, total, f);
    chosen.pop_back();
  }
}

} // namespace detail

/// Rough operation count of the subspace walk; saturates instead of overflowing.
inline std::uint64_t subspace_walk_cost(unsigned q, unsigned rank, unsigned n) {
  const unsigned dim = rank * n;
  return detail::saturating_mul(detail::to_u64_saturating(detail::gaussian_binomial(dim, n, q)),
                                static_cast<std::uint64_t>(n) * n * dim + dim + 1);
}

/*
  Counts x-stable subspaces of codimension n in V = (F_q[x]/x^n)^r. A
  subspace W is x-stable iff its annihilator U in V* is stable under
  u -> u o x, so the walk runs over all n-dimensional U in reduced row
  echelon form and tests that closure directly.
*/
inline Integer count_punctual_by_subspace_walk(const FqField& f, unsigned rank, unsigned n, OperationMeter& meter) {
  if (rank == 0) {
    throw SpecError("rank must be >= 1");
  }
  if (n == 0) {
    return 1;
  }
  meter.require(subspace_walk_cost(f.size(), rank, n), "punctual subspace walk");
  const unsigned dim = rank * n;
  const std::uint32_t q = f.size();
  Integer count = 0;

  std::vector<unsigned> pivots;
  detail::combinations_rec(pivots, n, 0, dim, [&](const std::vector<unsigned>& piv) {
    FqMatrix basis(n, FqVector(dim, f.zero()));
    std::vector<FqElement*> slots;
    std::vector<bool> is_pivot(dim, false);
    for (unsigned c : piv) {
      is_pivot[c] = true;
    }
    for (unsigned row = 0; row < n; ++row) {
      basis[row][piv[row]] = f.one();
      for (unsigned c = piv[row] + 1; c < dim; ++c) {
        if (!is_pivot[c]) {
          slots.push_back(&basis[row][c]);
        }
      }
    }
    FqVector image(dim);
    while (true) {
      meter.charge(static_cast<std::uint64_t>(n) * n * dim + 1, "punctual subspace walk");
      bool stable = true;
      for (unsigned row = 0; row < n && stable; ++row) {
        // (u o x)[i*n + k] = u[i*n + k + 1], zero in the top degree.
        for (unsigned i = 0; i < rank; ++i) {
          for (unsigned k = 0; k < n; ++k) {
            image[i * n + k] = k + 1 < n ? basis[row][i * n + k + 1] : f.zero();
          }
        }
        for (unsigned t = 0; t < n; ++t) {
          const FqElement c = image[piv[t]];
          if (c.index == 0) {
            continue;
          }
          for (unsigned k = 0; k < dim; ++k) {
            image[k] = f.sub(image[k], f.mul(c, basis[t][k]));
          }
        }
        for (const FqElement& x : image) {
          if (x.index != 0) {
            stable = false;
            break;
          }
        }
      }
      if (stable) {
        ++count;
      }
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
  return count;
}

inline Integer count_punctual_by_local_hermite(const FqField& f, unsigned rank, unsigned n, OperationMeter& meter) {
  Integer count = 0;
  for_each_hermite_form(f, rank, n, DiagonalKind::power_of_x, meter, [&](const HermiteForm&) { ++count; });
  return count;
}

/// F_q-points of the punctual fiber F_{n,r}: submodules of (F_q[x]/x^n)^r of codimension n.
inline Integer count_punctual_quotients(const FqField& f, unsigned rank, unsigned n, PunctualMethod method,
                                        OperationMeter& meter) {
  if (method == PunctualMethod::automatic) {
    method = meter.fits(subspace_walk_cost(f.size(), rank, n)) ? PunctualMethod::both : PunctualMethod::local_hermite;
  }
  switch (method) {
  case PunctualMethod::subspace_walk:
    return count_punctual_by_subspace_walk(f, rank, n, meter);
  case PunctualMethod::local_hermite:
    return count_punctual_by_local_hermite(f, rank, n, meter);
  default:
    break;
  }
  const Integer walk = count_punctual_by_subspace_walk(f, rank, n, meter);
  const Integer forms = count_punctual_by_local_hermite(f, rank, n, meter);
  if (walk != forms) {
    throw OracleDisagreementError("punctual counts disagree for q=" + std::to_string(f.size()) + " r=" +
                                  std::to_string(rank) + " n=" + std::to_string(n) + ": subspace walk " +
                                  walk.str() + ", local Hermite forms " + forms.str());
  }
  return walk;
}

inline Integer count_punctual_quotients(const FqField& f, unsigned rank, unsigned n,
                                        PunctualMethod method = PunctualMethod::automatic,
                                        const OracleConfig& config = {}) {
  OperationMeter meter(config.budget);
  return count_punctual_quotients(f, rank, n, method, meter);
}

struct LocalHermiteValidation {
  Integer forms = 0;          // local Hermite forms enumerated
  Integer distinct_images = 0; // distinct submodules they generate
  bool all_codimension_n = true;
  Integer subspace_walk = 0;  // independent count of x-stable codimension-n subspaces

  bool ok() const { return all_codimension_n && forms == distinct_images && forms == subspace_walk; }
};

/// Checks that distinct local Hermite forms give distinct codimension-n submodules.
inline LocalHermiteValidation validate_local_hermite_forms(const FqField& f, unsigned rank, unsigned n,
                                                           const OracleConfig& config = {}) {
  OperationMeter meter(config.budget);
  LocalHermiteValidation out;
  std::set<std::vector<std::uint32_t>> images;
  const std::size_t dim = static_cast<std::size_t>(rank) * n;
  for_each_hermite_form(f, rank, n, DiagonalKind::power_of_x, meter, [&](const HermiteForm& form) {
    ++out.forms;
    meter.charge(dim * dim * dim + 1, "local Hermite image");
    const FqMatrix basis = local_image_basis(f, form, n);
    if (basis.size() + n != dim) {
      out.all_codimension_n = false;
    }
    std::vector<std::uint32_t> key;
    for (const auto& row : basis) {
      for (const auto& x : row) {
        key.push_back(x.index);
      }
    }
    images.insert(std::move(key));
  });
  out.distinct_images = images.size();
  out.subspace_walk = count_punctual_by_subspace_walk(f, rank, n, meter);
  return out;
}

/// F_q-points of the Quot scheme of the trivial rank-r bundle on the affine line.
inline Integer count_colength_submodules_affine(const FqField& f, unsigned rank, unsigned n, OperationMeter& meter) {
  Integer count = 0;
  for_each_hermite_form(f, rank, n, DiagonalKind::monic, meter, [&](const HermiteForm&) { ++count; });
  return count;
}

inline Integer count_colength_submodules_affine(const FqField& f, unsigned rank, unsigned n,
                                                const OracleConfig& config = {}) {
  OperationMeter meter(config.budget);
  return count_colength_submodules_affine(f, rank, n, meter);
}

/*
  Same count without Hermite forms: a colength-n submodule is the kernel of
  F_q[x]^r -> Q with Q = F_q^n, x acting by a matrix T and e_j sent to
  vectors v_j that generate Q under T. GL_n(F_q) acts freely on such
  (T, v), so the count is #{generating (T, v)} / |GL_n(F_q)|.
*/
inline Integer count_colength_submodules_framed(const FqField& f, unsigned rank, unsigned n,
                                                const OracleConfig& config = {}) {
  if (rank == 0) {
    throw SpecError("rank must be >= 1");
  }
  if (n == 0) {
    return 1;
  }
  OperationMeter meter(config.budget);
  const std::uint32_t q = f.size();
  const unsigned digits = n * n + rank * n;
  const std::uint64_t per_pair = static_cast<std::uint64_t>(rank) * n * n * (n + 1);
  meter.require(detail::saturating_mul(detail::saturating_pow(q, digits), per_pair), "framed quotient enumeration");

  std::vector<FqElement> state(digits, f.zero());
  auto T = [&](unsigned i, unsigned j) { return state[i * n + j]; };
  auto v = [&](unsigned j, unsigned i) { return state[n * n + j * n + i]; };
  Integer generating = 0;
  FqMatrix krylov;
  while (true) {
    meter.charge(per_pair, "framed quotient enumeration");
    krylov.clear();
    for (unsigned j = 0; j < rank; ++j) {
      FqVector w(n);
      for (unsigned i = 0; i < n; ++i) {
        w[i] = v(j, i);
      }
      for (unsigned step = 0; step < n; ++step) {
        krylov.push_back(w);
        FqVector next(n, f.zero());
        for (unsigned i = 0; i < n; ++i) {
          for (unsigned k = 0; k < n; ++k) {
            next[i] = f.add(next[i], f.mul(T(i, k), w[k]));
          }
        }
        w = std::move(next);
      }
    }
    if (oracle::rank(f, krylov) == n) {
      ++generating;
    }
    std::size_t s = 0;
    while (s < digits && state[s].index + 1 == q) {
      state[s].index = 0;
      ++s;
    }
    if (s == digits) {
      break;
    }
    ++state[s].index;
  }
  Integer gl_order = 1;
  for (unsigned i = 0; i < n; ++i) {
    gl_order *= ipow(Integer(q), n) - ipow(Integer(q), i);
  }
  if (generating % gl_order != 0) {
    throw OracleDisagreementError("framed quotient count is not divisible by |GL_n|");
  }
  return generating / gl_order;
}

/*
  F_q-points of the Quot scheme of the trivial rank-r bundle on P^1, cut
  into the affine chart and the point at infinity: length n - j on A^1 and
  length j concentrated at infinity.
*/
inline Integer quot_point_count_bruteforce_P1(const FqField& f, unsigned rank, unsigned n,
                                              const OracleConfig& config = {}) {
  OperationMeter meter(config.budget);
  Integer total = 0;
  for (unsigned j = 0; j <= n; ++j) {
    total += count_colength_submodules_affine(f, rank, n - j, meter) *
             count_punctual_quotients(f, rank, j, PunctualMethod::automatic, meter);
  }
  return total;
}

} // namespace quotmotive::oracle
