#include "evpoly/lp.hpp"

#include "evpoly/errors.hpp"

namespace evpoly {

std::optional<std::vector<Rational>> feasible_point(const RationalMatrix& a, std::span<const Rational> b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw ArityError("feasible_point: row count mismatch");
  const std::size_t n = m ? a[0].size() : 0;
  for (const auto& row : a)
    if (row.size() != n) throw ArityError("feasible_point: ragged matrix");

  // Tableau columns: n original, m artificial, then the right-hand side.
  const std::size_t cols = n + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][n + i] = 1;
    t[i][cols] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  // Reduced costs of minimizing the sum of artificials.
  std::vector<Rational> cost(cols + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) cost[cols] -= t[i][cols];

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for phase one
    const Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (cost[cols] != 0) return std::nullopt;
  std::vector<Rational> y(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) y[basis[i]] = t[i][cols];
  return y;
}

bool in_convex_hull(const std::vector<std::vector<Rational>>& points, std::span<const Rational> x) {
  if (points.empty()) return false;
  const std::size_t k = x.size();
  RationalMatrix a(k + 1, std::vector<Rational>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].size() != k) throw ArityError("in_convex_hull: dimension mismatch");
    for (std::size_t i = 0; i < k; ++i) a[i][j] = points[j][i];
    a[k][j] = 1;
  }
  std::vector<Rational> b(x.begin(), x.end());
  b.push_back(1);
  return feasible_point(a, b).has_value();
}

}  // namespace evpoly
