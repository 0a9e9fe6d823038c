#include "torivan/exact.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cstddef>
#include <utility>

namespace torivan {

Int det_bareiss(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& row : a)
    if (row.size() != n) throw DimensionMismatch("det_bareiss: matrix not square");

  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Fraction-free update: the division by the previous pivot is exact.
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<Int> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionMismatch("solve_integer: rhs size mismatch");
  const Int d = det_bareiss(a);
  if (d == 0) throw SingularSystem("solve_integer: singular generator matrix");

  // Cramer's rule with Bareiss determinants keeps every intermediate integral.
  std::vector<Int> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix aj = a;
    for (std::size_t i = 0; i < n; ++i) aj[i][j] = b[i];
    const Int dj = det_bareiss(std::move(aj));
    if (dj % d != 0)
      throw SingularSystem("solve_integer: system has no integral solution");
    x[j] = dj / d;
  }
  return x;
}

std::optional<std::vector<Rational>> solve_rational(QMatrix a, std::vector<Rational> b) {
  const std::size_t m = a.size();
  const std::size_t k = m == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != k) throw DimensionMismatch("solve_rational: ragged matrix");
  if (b.size() != m) throw DimensionMismatch("solve_rational: rhs size mismatch");

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < m; ++col) {
    std::size_t p = row;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[row], a[p]);
    std::swap(b[row], b[p]);
    const Rational piv = a[row][col];
    for (std::size_t j = col; j < k; ++j) a[row][j] /= piv;
    b[row] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < k; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (b[i] != 0) return std::nullopt;

  std::vector<Rational> x(k, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

bool nonneg_feasible(const QMatrix& a, const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw DimensionMismatch("nonneg_feasible: rhs size mismatch");
  if (m == 0) return true;
  const std::size_t k = a[0].size();

  // Phase-1 tableau: minimize the sum of artificial variables subject to
  // a*x + I*y = b with b >= 0. Feasible iff the optimum is zero.
  const std::size_t cols = k + m;
  QMatrix t(m + 1, std::vector<Rational>(cols + 1, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < k; ++j) t[i][j] = flip ? -a[i][j] : a[i][j];
    t[i][k + i] = 1;
    t[i][cols] = flip ? -b[i] : b[i];
  }
  // Reduced costs for the artificial basis: r_j = -sum of column j.
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < m; ++i) t[m][j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) t[m][cols] -= t[i][cols];

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;

  for (;;) {
    // Bland's rule: lowest-index improving column.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (t[m][j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded column cannot happen in phase 1

    const Rational piv = t[leave][enter];
    for (std::size_t j = 0; j <= cols; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  return t[m][cols] == 0;
}

std::size_t rank_rational(QMatrix a) {
  const std::size_t m = a.size();
  const std::size_t k = m == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != k) throw DimensionMismatch("rank_rational: ragged matrix");

  std::size_t rank = 0;
  for (std::size_t col = 0; col < k && rank < m; ++col) {
    std::size_t p = rank;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[rank], a[p]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      if (a[i][col] == 0) continue;
      const Rational f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < k; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

Int content(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g < 0 ? Int(-g) : g;
}

}  // namespace torivan
