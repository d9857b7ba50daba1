#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evpoly/errors.hpp"
#include "evpoly/polynomial.hpp"

namespace evpoly::detail {

/// Solves rows * x = rhs exactly (rows may outnumber unknowns). Throws
/// FitError if the system is inconsistent or x is not unique.
template <class C>
std::vector<C> solve_exact(std::vector<std::vector<C>> rows, std::vector<C> rhs, std::size_t unknowns) {
  const std::size_t m = rows.size();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < unknowns && r < m; ++col) {
    std::size_t p = r;
    while (p < m && is_zero_coeff(rows[p][col])) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    const C inv = C(1) / rows[r][col];
    for (std::size_t j = col; j < unknowns; ++j) rows[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || is_zero_coeff(rows[i][col])) continue;
      const C f = rows[i][col];
      for (std::size_t j = col; j < unknowns; ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (!is_zero_coeff(rhs[i])) throw FitError("inconsistent samples: no exact fit exists");
  if (r < unknowns)
    throw FitError("underdetermined system: " + std::to_string(unknowns - r) + " free parameter(s)");
  std::vector<C> x(unknowns, C(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

}  // namespace evpoly::detail
