#pragma once

#include <array>
#include <cmath>
#include <string>

#include "secroute/error.hpp"

namespace secroute {

// Tolerances used across the stage-game solver.
inline constexpr double kDenominatorTol = 1e-12;
inline constexpr double kSimplexTol = 1e-12;

using Matrix2 = std::array<std::array<double, 2>, 2>;

// Per-stage attacker payoff. The defender is the row player with actions
// {Defend, NoDefend}; the attacker is the column player with actions
// {Attack, NoAttack}.
//
//   s11: {Defend, Attack} cost of defense (detection happens here)
//   s12: {Defend, NoAttack}
//   s21: {NoDefend, Attack} security loss
//   s22: {NoDefend, NoAttack} mobility cost of advancing one stage
struct StageCostMatrix {
  double s11 = 0.0;
  double s12 = 0.0;
  double s21 = 0.0;
  double s22 = 0.0;

  // Ratio form S = s11 * [[1, 1], [r1, r2]] used throughout the sensitivity
  // studies: r1 scales the security loss, r2 the mobility cost.
  // Requires s11 > 0, r1 >= 1 and r2 < 1.
  static StageCostMatrix from_ratios(double s11, double r1, double r2) {
    if (!(s11 > 0.0)) {
      throw InvariantViolation("StageCostMatrix::from_ratios: s11 must be > 0");
    }
    if (!(r1 >= 1.0)) {
      throw InvariantViolation("StageCostMatrix::from_ratios: r1 must be >= 1");
    }
    if (!(r2 < 1.0)) {
      throw InvariantViolation("StageCostMatrix::from_ratios: r2 must be < 1");
    }
    return StageCostMatrix{s11, s11, r1 * s11, r2 * s11};
  }

  double det() const { return s11 * s22 - s12 * s21; }

  // Defined only for s11 != 0.
  double r1() const {
    require_nonzero_s11("r1");
    return s21 / s11;
  }
  double r2() const {
    require_nonzero_s11("r2");
    return s22 / s11;
  }

  bool finite() const {
    return std::isfinite(s11) && std::isfinite(s12) && std::isfinite(s21) &&
           std::isfinite(s22);
  }

  bool operator==(const StageCostMatrix&) const = default;

 private:
  void require_nonzero_s11(const char* what) const {
    if (s11 == 0.0) {
      throw InvariantViolation(std::string("StageCostMatrix::") + what +
                               ": undefined for s11 == 0");
    }
  }
};

// Continuation mask: detection ({Defend, Attack}) terminates the game, so
// the next-stage value does not flow through that cell.
inline constexpr Matrix2 kContinuationMask{{{0.0, 1.0}, {1.0, 1.0}}};

// One stage of the edge-game with the future folded into a scalar: the
// effective one-shot matrix is continuation_value * mask + stage_cost.
struct StageGame {
  StageCostMatrix stage_cost;
  double continuation_value = 0.0;

  Matrix2 effective_matrix() const {
    const double v = continuation_value;
    return Matrix2{{{v * kContinuationMask[0][0] + stage_cost.s11,
                     v * kContinuationMask[0][1] + stage_cost.s12},
                    {v * kContinuationMask[1][0] + stage_cost.s21,
                     v * kContinuationMask[1][1] + stage_cost.s22}}};
  }
};

// Mixed strategy over two actions. p_active is the probability of Defend
// (defender) or Attack (attacker).
struct MixedPolicy2 {
  double p_active = 0.0;
  double p_passive = 1.0;

  static MixedPolicy2 pure_active() { return {1.0, 0.0}; }
  static MixedPolicy2 pure_passive() { return {0.0, 1.0}; }

  bool in_simplex(double tol = kSimplexTol) const {
    return p_active >= -tol && p_passive >= -tol &&
           std::abs(p_active + p_passive - 1.0) <= tol;
  }

  // Snaps tiny negative components (within tol) onto the simplex boundary.
  MixedPolicy2 clamped() const {
    double a = p_active < 0.0 ? 0.0 : (p_active > 1.0 ? 1.0 : p_active);
    return {a, 1.0 - a};
  }

  bool operator==(const MixedPolicy2&) const = default;
};

enum class EquilibriumKind { mixed_interior, pure_saddle };

struct StageSolution {
  double value = 0.0;  // game value with the continuation folded in
  MixedPolicy2 defender;
  MixedPolicy2 attacker;
  EquilibriumKind kind = EquilibriumKind::mixed_interior;
};

namespace detail {

// Pure saddle of the effective matrix, if one exists: the defender's
// ceiling min_i max_j A[i][j] must meet the attacker's floor
// max_j min_i A[i][j]. Lowest index wins on ties.
inline StageSolution pure_saddle_solution(const Matrix2& a) {
  int best_row = 0;
  double ceiling = std::max(a[0][0], a[0][1]);
  for (int i = 1; i < 2; ++i) {
    const double row_max = std::max(a[i][0], a[i][1]);
    if (row_max < ceiling) {
      ceiling = row_max;
      best_row = i;
    }
  }
  int best_col = 0;
  double floor = std::min(a[0][0], a[1][0]);
  for (int j = 1; j < 2; ++j) {
    const double col_min = std::min(a[0][j], a[1][j]);
    if (col_min > floor) {
      floor = col_min;
      best_col = j;
    }
  }
  const double scale = std::max({1.0, std::abs(ceiling), std::abs(floor)});
  if (std::abs(ceiling - floor) > 1e-9 * scale) {
    throw PureSaddle("stage_solve: mixed formulas left the simplex and no pure saddle exists");
  }
  StageSolution out;
  out.value = ceiling;
  out.defender = best_row == 0 ? MixedPolicy2::pure_active() : MixedPolicy2::pure_passive();
  out.attacker = best_col == 0 ? MixedPolicy2::pure_active() : MixedPolicy2::pure_passive();
  out.kind = EquilibriumKind::pure_saddle;
  return out;
}

}  // namespace detail

// Solves one stage given the continuation value of the rest of the game:
// the closed-form mixed equilibrium of continuation * mask + stage_cost.
// Falls back to the pure saddle when the closed form leaves the simplex.
inline StageSolution stage_solve(const StageCostMatrix& s, double continuation_value) {
  if (!s.finite() || !std::isfinite(continuation_value)) {
    throw InvariantViolation("stage_solve: non-finite input");
  }
  const double v = continuation_value;
  const double den = s.s11 - s.s12 - s.s21 + s.s22 - v;
  if (std::abs(den) <= kDenominatorTol) {
    throw DegenerateDenominator("stage_solve: |s11 - s12 - s21 + s22 - V| <= 1e-12");
  }
  MixedPolicy2 y{(s.s22 - s.s21) / den, (s.s11 - s.s12 - v) / den};
  MixedPolicy2 z{(s.s22 - s.s12) / den, (s.s11 - s.s21 - v) / den};
  if (y.in_simplex() && z.in_simplex()) {
    StageSolution out;
    out.value = v + (s.det() - s.s22 * v) / den;
    out.defender = y.clamped();
    out.attacker = z.clamped();
    out.kind = EquilibriumKind::mixed_interior;
    return out;
  }
  return detail::pure_saddle_solution(StageGame{s, v}.effective_matrix());
}

}  // namespace secroute
