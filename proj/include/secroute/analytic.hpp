#pragma once

#include <cmath>
#include <string>

#include "secroute/edge_game.hpp"
#include "secroute/error.hpp"
#include "secroute/stage_game.hpp"

namespace secroute {

inline constexpr double kResidualTol = 1e-10;

namespace detail {

inline void check_ratio_args(double r1, double r2, int num_stages, int stage) {
  if (!(r1 >= 1.0)) throw InvariantViolation("value formulas require r1 >= 1");
  if (!(r2 >= 0.0 && r2 < 1.0)) throw InvariantViolation("value formulas require 0 <= r2 < 1");
  if (r1 == r2) throw InvariantViolation("value formulas are undefined for r1 == r2");
  if (num_stages < 1) throw InvariantViolation("num_stages must be >= 1");
  if (stage < 1 || stage > num_stages) throw InvariantViolation("stage must lie in [1, num_stages]");
}

inline double sqrt_growth_term(double r1, int num_stages, int stage) {
  return -r1 + std::sqrt(r1 * r1 + 2.0 * r1 * num_stages + 2.0 * r1 * (1.0 - stage) + 1.0);
}

}  // namespace detail

// Closed-form approximation of the continuum value: square-root growth from
// the security terms plus a linear mobility term. Defense cost is normalized
// to one. Stage counting follows the continuum convention, where the value
// at stage num_stages is one; stage k here matches the discrete recursion's
// values[k-1].
inline double approx_value(double r1, double r2, int num_stages, int stage) {
  detail::check_ratio_args(r1, r2, num_stages, stage);
  return detail::sqrt_growth_term(r1, num_stages, stage) + r2 * (num_stages - stage);
}

// Residual of the implicit continuum equation for r2 > 0. Strictly increasing
// in v for v >= 1, zero at the solution. The log argument |r2*v - c| / r1
// equals 1 + r2*(v - 1)/r1 exactly, so it is evaluated through log1p; the
// naive form loses up to nine digits near the boundary once the 1/r2^2
// prefactor amplifies the cancellation.
inline double analytic_residual(double r1, double r2, int num_stages, int stage, double v) {
  const double c = r2 - r1;
  const double shifted = r2 * (v - 1.0) / r1;
  const double log_term = shifted > -1.0 ? std::log1p(shifted)
                                         : std::log(std::abs(r2 * v - c) / r1);
  return (v - 1.0) / r2 + (1.0 - r2) * c * log_term / (r2 * r2) -
         static_cast<double>(num_stages - stage);
}

// Continuum-limit value of the stage recursion with defense cost normalized
// to one. For r2 == 0 the value is in closed form; otherwise it is the root
// of the implicit equation above, found by bisection. The bracket starts at
// the boundary value one and extends to the closed-form approximation plus a
// safety margin.
inline double analytic_value(double r1, double r2, int num_stages, int stage) {
  detail::check_ratio_args(r1, r2, num_stages, stage);
  if (r2 == 0.0) {
    return detail::sqrt_growth_term(r1, num_stages, stage);
  }
  const double target = 0.0;  // residual already subtracts (num_stages - stage)
  double lo = 1.0;
  double hi = approx_value(r1, r2, num_stages, stage) + 10.0 * r1;
  double f_lo = analytic_residual(r1, r2, num_stages, stage, lo);
  double f_hi = analytic_residual(r1, r2, num_stages, stage, hi);
  if (std::abs(f_lo) <= kResidualTol) return lo;
  if (!(f_lo < target && f_hi > target)) {
    throw NoBracket("analytic_value: residual does not change sign on [1, " +
                    std::to_string(hi) + "]");
  }
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval hit double resolution
    const double f_mid = analytic_residual(r1, r2, num_stages, stage, mid);
    if (f_mid < target) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  const double root = std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
  if (std::abs(analytic_residual(r1, r2, num_stages, stage, root)) > kResidualTol) {
    throw NoBracket("analytic_value: bisection stalled before reaching the residual tolerance");
  }
  return root;
}

// Percentage error of the closed-form approximation against the discrete
// recursion at the start of the game, with defense cost normalized to one.
inline double approximation_error(double r1, double r2, int num_stages) {
  const StageCostMatrix s = StageCostMatrix::from_ratios(1.0, r1, r2);
  const double recursive = solve_edge_game(s, num_stages).values.front();
  if (recursive == 0.0) {
    throw DivisionByZero("approximation_error: recursion value is zero");
  }
  const double approx = approx_value(r1, r2, num_stages, 1);
  return 100.0 * std::abs(approx - recursive) / std::abs(recursive);
}

}  // namespace secroute
