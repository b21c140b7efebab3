#include "gbs/rational_lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace gbs {

std::optional<std::vector<Rational>> solve_equality_feasibility(
    std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  const std::size_t m = A.size();
  if (b.size() != m) throw std::invalid_argument("A/b size mismatch");
  const std::size_t n = m == 0 ? 0 : A[0].size();
  if (m == 0) return std::vector<Rational>(n, 0);

  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != n) throw std::invalid_argument("ragged A");
    if (b[i] < 0) {
      for (auto& v : A[i]) v = -v;
      b[i] = -b[i];
    }
  }

  // Tableau [A | I | b], basis starts at the artificial columns; Phase-I
  // objective minimizes the artificial sum.
  const std::size_t cols = n + m;
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols + 1, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][cols] = b[i];
    basis[i] = n + i;
  }
  std::vector<Rational> obj(cols + 1, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= cols; ++j) obj[j] += T[i][j];
  for (std::size_t j = n; j < cols; ++j) obj[j] -= 1;

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best_ratio = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][cols] / T[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m)
      throw std::logic_error("unbounded phase-I objective");

    Rational pivot = T[leave][enter];
    for (auto& v : T[leave]) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
    }
    if (obj[enter] != 0) {
      Rational f = obj[enter];
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  if (obj[cols] != 0) return std::nullopt;

  std::vector<Rational> x(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = T[i][cols];
  return x;
}

std::optional<std::vector<Rational>> nonneg_combination(
    const std::vector<std::vector<Rational>>& rows) {
  const std::size_t k = rows.size();
  if (k == 0) return std::nullopt;
  const std::size_t n = rows[0].size();
  if (n == 0) return std::nullopt;

  // Variables: y+ (k), y- (k), slacks (n).
  // Rows: B^T(y+ - y-) - s = 0 per coordinate, plus sum of coordinates = 1.
  const std::size_t vars = 2 * k + n;
  std::vector<std::vector<Rational>> A(n + 1,
                                       std::vector<Rational>(vars, 0));
  std::vector<Rational> b(n + 1, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      if (rows[i].size() != n) throw std::invalid_argument("ragged rows");
      A[j][i] = rows[i][j];
      A[j][k + i] = -rows[i][j];
    }
    A[j][2 * k + j] = -1;
  }
  for (std::size_t i = 0; i < k; ++i) {
    Rational sum = 0;
    for (std::size_t j = 0; j < n; ++j) sum += rows[i][j];
    A[n][i] = sum;
    A[n][k + i] = -sum;
  }
  b[n] = 1;

  auto sol = solve_equality_feasibility(std::move(A), std::move(b));
  if (!sol) return std::nullopt;
  std::vector<Rational> y(k);
  for (std::size_t i = 0; i < k; ++i) y[i] = (*sol)[i] - (*sol)[k + i];
  return y;
}

}  // namespace gbs
