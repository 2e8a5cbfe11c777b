#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "secroute/error.hpp"

namespace secroute {

inline constexpr double kReducedCostTol = 1e-9;
inline constexpr double kDualityGapTol = 1e-8;

struct MatrixGameSolution {
  double value = 0.0;
  std::vector<double> row_mix;  // minimizing player, over rows
  std::vector<double> col_mix;  // maximizing player, over columns
  double duality_gap = 0.0;
};

namespace detail {

struct UnitLpResult {
  std::vector<double> primal;  // x
  std::vector<double> dual;    // one multiplier per constraint
  double objective = 0.0;      // sum of x
};

// Maximize 1'x subject to M x <= 1, x >= 0, for M with strictly positive
// entries. The all-slack basis is feasible, so a single phase suffices, and
// positivity of M makes the problem bounded. Pivoting uses Bland's rule
// (lowest-index entering and leaving variable), which cannot cycle.
inline UnitLpResult solve_unit_lp(const std::vector<std::vector<double>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m.front().size());
  const int total = cols + rows;  // structural variables then slacks

  // tableau[i] holds the constraint rows; the last row is the objective in
  // reduced-cost form (starts as -1 per structural variable).
  std::vector<std::vector<double>> t(static_cast<std::size_t>(rows) + 1,
                                     std::vector<double>(static_cast<std::size_t>(total) + 1, 0.0));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) t[i][j] = m[i][j];
    t[i][cols + i] = 1.0;
    t[i][total] = 1.0;
  }
  for (int j = 0; j < cols; ++j) t[rows][j] = -1.0;

  std::vector<int> basis(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) basis[static_cast<std::size_t>(i)] = cols + i;

  const int max_pivots = 2000 + 50 * total;
  for (int pivot_count = 0;; ++pivot_count) {
    if (pivot_count > max_pivots) {
      throw SolverFailure("solve_unit_lp: pivot limit exceeded");
    }
    int entering = -1;
    for (int j = 0; j < total; ++j) {
      if (t[rows][j] < -kReducedCostTol) {
        entering = j;
        break;
      }
    }
    if (entering < 0) break;  // optimal

    int leaving = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < rows; ++i) {
      if (t[i][entering] > kReducedCostTol) {
        const double ratio = t[i][total] / t[i][entering];
        if (ratio < best_ratio - 1e-15 ||
            (std::abs(ratio - best_ratio) <= 1e-15 &&
             (leaving < 0 || basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leaving)]))) {
          best_ratio = ratio;
          leaving = i;
        }
      }
    }
    if (leaving < 0) {
      throw SolverFailure("solve_unit_lp: unbounded (matrix not strictly positive?)");
    }

    const double inv = 1.0 / t[leaving][entering];
    for (int j = 0; j <= total; ++j) t[leaving][j] *= inv;
    t[leaving][entering] = 1.0;  // exact
    for (int i = 0; i <= rows; ++i) {
      if (i == leaving) continue;
      const double factor = t[i][entering];
      if (factor == 0.0) continue;
      for (int j = 0; j <= total; ++j) t[i][j] -= factor * t[leaving][j];
      t[i][entering] = 0.0;  // exact
    }
    basis[static_cast<std::size_t>(leaving)] = entering;
  }

  UnitLpResult out;
  out.primal.assign(static_cast<std::size_t>(cols), 0.0);
  for (int i = 0; i < rows; ++i) {
    const int var = basis[static_cast<std::size_t>(i)];
    if (var < cols) out.primal[static_cast<std::size_t>(var)] = std::max(0.0, t[i][total]);
  }
  out.dual.assign(static_cast<std::size_t>(rows), 0.0);
  for (int i = 0; i < rows; ++i) {
    out.dual[static_cast<std::size_t>(i)] = std::max(0.0, t[rows][cols + i]);
  }
  out.objective = t[rows][total];
  return out;
}

}  // namespace detail

// Value and mixed equilibrium of the zero-sum matrix game in which the row
// player minimizes and the column player maximizes:
//
//   value = min over row mixes of max over column mixes of y' W z.
//
// The matrix is shifted positive and normalized, the row player's program is
// solved by the dense simplex above, and the column player's mix is read off
// the dual multipliers. Both mixes are then certified against the original
// matrix; a certificate violation raises SolverFailure.
inline MatrixGameSolution solve_matrix_game(const std::vector<std::vector<double>>& w) {
  const int rows = static_cast<int>(w.size());
  if (rows == 0) throw InvariantViolation("solve_matrix_game: empty matrix");
  const int cols = static_cast<int>(w.front().size());
  if (cols == 0) throw InvariantViolation("solve_matrix_game: empty matrix");
  double min_entry = w[0][0];
  double max_abs = 0.0;
  for (const auto& row : w) {
    if (static_cast<int>(row.size()) != cols) {
      throw InvariantViolation("solve_matrix_game: ragged matrix");
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw InvariantViolation("solve_matrix_game: non-finite entry");
      min_entry = std::min(min_entry, v);
      max_abs = std::max(max_abs, std::abs(v));
    }
  }
  const double shift = 1.0 + std::abs(min_entry);
  const double scale = std::max(1.0, max_abs + shift);

  // Row player's program on the positive matrix, one constraint per column.
  std::vector<std::vector<double>> constraints(
      static_cast<std::size_t>(cols), std::vector<double>(static_cast<std::size_t>(rows), 0.0));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      constraints[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] + shift) / scale;
    }
  }
  const detail::UnitLpResult lp = detail::solve_unit_lp(constraints);

  const double sum_x = lp.objective;
  double sum_q = 0.0;
  for (double q : lp.dual) sum_q += q;
  if (!(sum_x > 0.0) || !(sum_q > 0.0)) {
    throw SolverFailure("solve_matrix_game: degenerate LP objective");
  }

  MatrixGameSolution out;
  out.value = scale / sum_x - shift;
  const double dual_value = scale / sum_q - shift;
  out.duality_gap = std::abs(out.value - dual_value);
  out.row_mix.assign(static_cast<std::size_t>(rows), 0.0);
  for (int i = 0; i < rows; ++i) out.row_mix[static_cast<std::size_t>(i)] = lp.primal[static_cast<std::size_t>(i)] / sum_x;
  out.col_mix.assign(static_cast<std::size_t>(cols), 0.0);
  for (int j = 0; j < cols; ++j) out.col_mix[static_cast<std::size_t>(j)] = lp.dual[static_cast<std::size_t>(j)] / sum_q;

  // Certify against the original matrix: the row mix must cap every column
  // at the value and the column mix must hold every row above it.
  double worst_col = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < cols; ++j) {
    double dot = 0.0;
    for (int i = 0; i < rows; ++i) dot += out.row_mix[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    worst_col = std::max(worst_col, dot);
  }
  double worst_row = std::numeric_limits<double>::infinity();
  for (int i = 0; i < rows; ++i) {
    double dot = 0.0;
    for (int j = 0; j < cols; ++j) dot += w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * out.col_mix[static_cast<std::size_t>(j)];
    worst_row = std::min(worst_row, dot);
  }
  if (worst_col > out.value + kDualityGapTol || worst_row < out.value - kDualityGapTol ||
      out.duality_gap > kDualityGapTol) {
    throw SolverFailure("solve_matrix_game: certificate violated (row residual " +
                        std::to_string(worst_col - out.value) + ", col residual " +
                        std::to_string(out.value - worst_row) + ", gap " +
                        std::to_string(out.duality_gap) + ")");
  }
  return out;
}

}  // namespace secroute
