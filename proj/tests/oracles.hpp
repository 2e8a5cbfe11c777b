#pragma once

// Test-only reference solvers, kept independent of the library code paths
// they check.

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace oracles {

struct Game2x2Solution {
  double value = 0.0;
  std::array<double, 2> row;  // minimizer
  std::array<double, 2> col;  // maximizer
  bool pure = false;
};

// Generic 2x2 zero-sum solution for a row minimizer and column maximizer:
// pure saddle if one exists, otherwise the equalizing mixed strategies with
// value det(A) / (a11 - a12 - a21 + a22).
inline Game2x2Solution minimax_2x2(const std::array<std::array<double, 2>, 2>& a) {
  // Pure saddle scan.
  int row_pick = std::max(a[0][0], a[0][1]) <= std::max(a[1][0], a[1][1]) ? 0 : 1;
  int col_pick = std::min(a[0][0], a[1][0]) >= std::min(a[0][1], a[1][1]) ? 0 : 1;
  const double ceiling = std::max(a[row_pick][0], a[row_pick][1]);
  const double floor = std::min(a[0][col_pick], a[1][col_pick]);
  if (ceiling == floor) {
    Game2x2Solution out;
    out.value = ceiling;
    out.row = row_pick == 0 ? std::array<double, 2>{1.0, 0.0} : std::array<double, 2>{0.0, 1.0};
    out.col = col_pick == 0 ? std::array<double, 2>{1.0, 0.0} : std::array<double, 2>{0.0, 1.0};
    out.pure = true;
    return out;
  }
  const double den = a[0][0] - a[0][1] - a[1][0] + a[1][1];
  Game2x2Solution out;
  out.value = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) / den;
  out.row = {(a[1][1] - a[1][0]) / den, (a[0][0] - a[0][1]) / den};
  out.col = {(a[1][1] - a[0][1]) / den, (a[0][0] - a[1][0]) / den};
  return out;
}

// Fine-grid search over the row-minimizer's simplex for matrices with at
// most 3 rows. Returns min over the grid of max over columns.
inline double grid_minimax(const std::vector<std::vector<double>>& w, int resolution = 1000) {
  const int rows = static_cast<int>(w.size());
  const int cols = static_cast<int>(w.front().size());
  auto row_value = [&](const std::vector<double>& y) {
    double worst = -1e300;
    for (int j = 0; j < cols; ++j) {
      double dot = 0.0;
      for (int i = 0; i < rows; ++i) dot += y[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      worst = std::max(worst, dot);
    }
    return worst;
  };
  double best = 1e300;
  if (rows == 1) {
    return row_value({1.0});
  }
  if (rows == 2) {
    for (int t = 0; t <= resolution; ++t) {
      const double p = static_cast<double>(t) / resolution;
      best = std::min(best, row_value({p, 1.0 - p}));
    }
    return best;
  }
  for (int t1 = 0; t1 <= resolution; ++t1) {
    for (int t2 = 0; t2 + t1 <= resolution; ++t2) {
      const double p1 = static_cast<double>(t1) / resolution;
      const double p2 = static_cast<double>(t2) / resolution;
      best = std::min(best, row_value({p1, p2, 1.0 - p1 - p2}));
    }
  }
  return best;
}

}  // namespace oracles
