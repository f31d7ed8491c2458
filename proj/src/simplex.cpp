#include "hardy/simplex.hpp"

#include <optional>
#include <stdexcept>

namespace hardy {

namespace {

struct Tableau {
  std::vector<std::vector<Rational>> rows;  // last entry of each row is the rhs
  std::vector<std::size_t> basis;
  std::size_t columns = 0;  // excluding rhs

  void pivot(std::size_t r, std::size_t col) {
    const Rational scale = rows[r][col];
    for (auto& entry : rows[r]) entry /= scale;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][col]) == 0) continue;
      const Rational factor = rows[i][col];
      for (std::size_t j = 0; j <= columns; ++j) rows[i][j] -= factor * rows[r][j];
    }
    basis[r] = col;
  }

  [[nodiscard]] Rational reduced_cost(const std::vector<Rational>& cost, std::size_t col) const {
    Rational value = cost[col];
    for (std::size_t i = 0; i < rows.size(); ++i) value -= cost[basis[i]] * rows[i][col];
    return value;
  }

  [[nodiscard]] Rational objective(const std::vector<Rational>& cost) const {
    Rational value = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) value += cost[basis[i]] * rows[i][columns];
    return value;
  }

  /// Bland's rule; returns false when the objective is unbounded below.
  bool optimize(const std::vector<Rational>& cost, std::size_t usableColumns) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < usableColumns; ++j) {
        if (sgn(reduced_cost(cost, j)) < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational bestRatio;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (sgn(rows[i][*entering]) <= 0) continue;
        Rational ratio = rows[i][columns] / rows[i][*entering];
        if (!leaving || ratio < bestRatio || (ratio == bestRatio && basis[i] < basis[*leaving])) {
          leaving = i;
          bestRatio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }
};

}  // namespace

LpResult minimize_exact(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                        const std::vector<Rational>& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw std::invalid_argument("minimize_exact: b size mismatch");
  for (const auto& row : A) {
    if (row.size() != n) throw std::invalid_argument("minimize_exact: A row size mismatch");
  }

  // Columns: x (n), surplus (m), artificial (m).
  Tableau t;
  t.columns = n + 2 * m;
  t.rows.assign(m, std::vector<Rational>(t.columns + 1, Rational(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
    t.rows[i][n + i] = flip ? 1 : -1;
    t.rows[i][t.columns] = flip ? Rational(-b[i]) : b[i];
    if (flip) {
      t.basis[i] = n + i;
    } else {
      t.rows[i][n + m + i] = 1;
      t.basis[i] = n + m + i;
    }
  }

  std::vector<Rational> phaseOne(t.columns, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phaseOne[n + m + i] = 1;
  t.optimize(phaseOne, t.columns);
  LpResult result;
  if (sgn(t.objective(phaseOne)) > 0) {
    result.status = LpStatus::infeasible;
    return result;
  }

  // Drive zero-level artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n + m) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (sgn(t.rows[i][j]) != 0) {
        col = j;
        break;
      }
    }
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  std::vector<Rational> phaseTwo(t.columns, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phaseTwo[j] = c[j];
  if (!t.optimize(phaseTwo, n + m)) {
    result.status = LpStatus::unbounded;
    return result;
  }
  result.status = LpStatus::optimal;
  result.objective = t.objective(phaseTwo);
  result.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] < n) result.x[t.basis[i]] = t.rows[i][t.columns];
  }
  return result;
}

}  // namespace hardy
