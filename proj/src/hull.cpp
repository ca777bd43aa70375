#include "alcove/hull.hpp"

#include <stdexcept>

namespace alcove {

bool in_convex_hull(const std::vector<std::vector<Rational>>& points, const std::vector<Rational>& p) {
  if (points.empty()) return false;
  for (const auto& q : points)
    if (q == p) return true;
  const std::size_t dim = p.size();
  const std::size_t m = points.size();
  const std::size_t rows = dim + 1;
  const std::size_t cols = m + rows;  // convex weights, then artificials

  // Tableau rows: Σ t_i q_i = p, Σ t_i = 1, scaled so the right-hand side is nonnegative.
  std::vector<std::vector<Rational>> tab(rows, std::vector<Rational>(cols + 1, Rational(0)));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < m; ++i) tab[r][i] = r < dim ? points[i][r] : Rational(1);
    tab[r][cols] = r < dim ? p[r] : Rational(1);
    if (tab[r][cols] < Rational(0)) {
      for (std::size_t i = 0; i <= cols; ++i) tab[r][i] = -tab[r][i];
    }
    tab[r][m + r] = 1;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = m + r;

  // Minimise the sum of artificials; reduced costs kept in `cost`.
  std::vector<Rational> cost(cols + 1, Rational(0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t i = 0; i <= cols; ++i)
      if (i < m || i == cols) cost[i] -= tab[r][i];

  for (int iter = 0; iter < 100000; ++iter) {
    std::size_t enter = cols;
    for (std::size_t i = 0; i < cols; ++i) {
      if (cost[i] < Rational(0)) {
        enter = i;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (!(tab[r][enter] > Rational(0))) continue;
      const Rational ratio = tab[r][cols] / tab[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) throw std::logic_error("hull LP unbounded");
    const Rational piv = tab[leave][enter];
    for (auto& x : tab[leave]) x /= piv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || tab[r][enter].is_zero()) continue;
      const Rational f = tab[r][enter];
      for (std::size_t i = 0; i <= cols; ++i) tab[r][i] -= f * tab[leave][i];
    }
    const Rational f = cost[enter];
    for (std::size_t i = 0; i <= cols; ++i) cost[i] -= f * tab[leave][i];
    basis[leave] = enter;
  }
  return cost[cols].is_zero();
}

}  // namespace alcove
