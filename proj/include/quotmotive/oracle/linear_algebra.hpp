#pragma once

#include "quotmotive/oracle/finite_field.hpp"

#include <cstddef>
#include <vector>

namespace quotmotive::oracle {

using FqVector = std::vector<FqElement>;
using FqMatrix = std::vector<FqVector>; // list of rows

/// Reduced row echelon form with zero rows dropped: a canonical basis of the row span.
inline FqMatrix row_reduce(const FqField& f, FqMatrix rows) {
  if (rows.empty()) {
    return rows;
  }
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].index == 0) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    const FqElement scale = f.inv(rows[rank][c]);
    for (auto& x : rows[rank]) {
      x = f.mul(x, scale);
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].index == 0) {
        continue;
      }
      const FqElement factor = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = f.sub(rows[r][k], f.mul(factor, rows[rank][k]));
      }
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

inline std::size_t rank(const FqField& f, FqMatrix rows) { return row_reduce(f, std::move(rows)).size(); }

} // namespace quotmotive::oracle
