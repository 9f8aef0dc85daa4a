#include "chordtim/linalg.hpp"

#include <stdexcept>

namespace chordtim {

namespace {

// Forward elimination in place; returns pivot columns per row used.
std::size_t eliminate(RationalMatrix& rows, RationalVector* rhs) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t pivot = r;
    while (pivot < m && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[pivot], rows[r]);
    if (rhs != nullptr) std::swap((*rhs)[pivot], (*rhs)[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (rows[i][col].is_zero()) continue;
      const Rational factor = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] -= factor * rows[r][j];
      if (rhs != nullptr) (*rhs)[i] -= factor * (*rhs)[r];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(RationalMatrix rows) { return eliminate(rows, nullptr); }

std::optional<RationalVector> solve_square(RationalMatrix a, RationalVector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve_square: dimension mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("solve_square: matrix is not square");
  }
  if (eliminate(a, &b) < n) return std::nullopt;
  // Full rank means row k pivots on column k after elimination.
  RationalVector x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc = b[k];
    for (std::size_t j = k + 1; j < n; ++j) acc -= a[k][j] * x[j];
    x[k] = acc / a[k][k];
  }
  return x;
}

LpSolution maximize(const RationalMatrix& a, const RationalVector& b, const RationalVector& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw std::invalid_argument("maximize: rhs size mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("maximize: row size mismatch");
  }
  for (const auto& v : b) {
    if (v.sign() < 0) throw std::invalid_argument("maximize: negative rhs, slack basis infeasible");
  }

  // Columns 0..n-1 structural, n..n+m-1 slack, n+m rhs.
  const std::size_t width = n + m + 1;
  RationalMatrix tab(m, RationalVector(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = a[i][j];
    tab[i][n + i] = Rational(1);
    tab[i][n + m] = b[i];
    basis[i] = n + i;
  }
  // Reduced costs; the rhs cell holds -z.
  RationalVector obj(width);
  for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];

  LpSolution sol;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (obj[j].sign() > 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][enter].sign() <= 0) continue;
      const Rational ratio = tab[i][n + m] / tab[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) {
      sol.status = LpSolution::Status::unbounded;
      return sol;
    }

    const Rational pivot = tab[leave][enter];
    for (auto& v : tab[leave]) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter].is_zero()) continue;
      const Rational factor = tab[i][enter];
      for (std::size_t j = 0; j < width; ++j) tab[i][j] -= factor * tab[leave][j];
    }
    if (!obj[enter].is_zero()) {
      const Rational factor = obj[enter];
      for (std::size_t j = 0; j < width; ++j) obj[j] -= factor * tab[leave][j];
    }
    basis[leave] = enter;
    ++sol.pivots;
  }

  sol.objective = -obj[n + m];
  sol.primal.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) sol.primal[basis[i]] = tab[i][n + m];
  }
  sol.dual.resize(m);
  for (std::size_t i = 0; i < m; ++i) sol.dual[i] = -obj[n + i];
  return sol;
}

}  // namespace chordtim
