#include "rrc/linsolve.hpp"

#include <stdexcept>
#include <utility>

namespace rrc {

LinearSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw std::invalid_argument("solve_exact: row count mismatch");
  const std::size_t n = m == 0 ? 0 : a[0].size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("solve_exact: ragged matrix");
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  Rational f, t;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t p = r;
    while (p < m && sgn(a[p][col]) == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][col];
    for (std::size_t j = col; j < n; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(a[i][col]) == 0) continue;
      f = a[i][col];
      for (std::size_t j = col; j < n; ++j) {
        if (sgn(a[r][j]) == 0) continue;
        mpq_mul(t.get_mpq_t(), f.get_mpq_t(), a[r][j].get_mpq_t());
        a[i][j] -= t;
      }
      b[i] -= f * b[r];
    }
    pivot_cols.push_back(col);
    ++r;
  }

  LinearSolution out;
  out.rank = static_cast<int>(r);
  for (std::size_t i = r; i < m; ++i) {
    if (sgn(b[i]) != 0) return out;
  }
  out.consistent = true;
  out.x.assign(n, Rational(0));
  for (std::size_t j = 0; j < pivot_cols.size(); ++j) out.x[pivot_cols[j]] = b[j];
  return out;
}

}  // namespace rrc
