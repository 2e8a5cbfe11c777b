#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "secroute/random.hpp"
#include "secroute/stage_game.hpp"

namespace secroute {

// Solution of the multistage game played while traversing one edge: the
// backward value profile and the per-stage mixed policies. One detection
// permanently disables the attack, so the budget is fixed at one.
struct EdgeGameSolution {
  int num_stages = 0;       // K
  int detection_budget = 1;  // L
  std::vector<double> values;                   // V_0 .. V_K, values[K] = 0
  std::vector<MixedPolicy2> defender_policies;  // y_1 .. y_K at index k-1
  std::vector<MixedPolicy2> attacker_policies;  // z_1 .. z_K at index k-1

  // Value of the whole edge-game; used as the attacked edge weight.
  double value() const { return values.front(); }
};

// Backward induction over the stages: the final stage has zero continuation
// and each earlier stage folds the next value through stage_solve.
inline EdgeGameSolution solve_edge_game(const StageCostMatrix& s, int num_stages) {
  if (num_stages < 1) {
    throw InvariantViolation("solve_edge_game: num_stages must be >= 1");
  }
  EdgeGameSolution out;
  out.num_stages = num_stages;
  out.values.assign(static_cast<std::size_t>(num_stages) + 1, 0.0);
  out.defender_policies.resize(static_cast<std::size_t>(num_stages));
  out.attacker_policies.resize(static_cast<std::size_t>(num_stages));
  for (int k = num_stages; k >= 1; --k) {
    StageSolution sol;
    try {
      sol = stage_solve(s, out.values[static_cast<std::size_t>(k)]);
    } catch (const DegenerateDenominator& e) {
      throw DegenerateDenominator("stage " + std::to_string(k) + ": " + e.what());
    } catch (const PureSaddle& e) {
      throw PureSaddle("stage " + std::to_string(k) + ": " + e.what());
    }
    out.values[static_cast<std::size_t>(k) - 1] = sol.value;
    out.defender_policies[static_cast<std::size_t>(k) - 1] = sol.defender;
    out.attacker_policies[static_cast<std::size_t>(k) - 1] = sol.attacker;
  }
  return out;
}

// Expected attacker payoff of the stopping-state game under arbitrary
// behavioral policies, evaluated by the forward recursion over suffixes:
//
//   J_len = sum of mixed stage costs over the last `len` stages
//           - sum_b q_b * J_(stages after b)
//
// where q_b is the joint {Defend, Attack} probability at stage b. The
// correction removes exactly the cost that never accrues once the game has
// stopped. Serves as an independent check of the backward recursion: at the
// equilibrium policies the result equals values[0].
inline double forward_payoff(const StageCostMatrix& s,
                             std::span<const MixedPolicy2> defender,
                             std::span<const MixedPolicy2> attacker) {
  if (defender.size() != attacker.size()) {
    throw LengthMismatch("forward_payoff: policy sequences differ in length");
  }
  const std::size_t k = defender.size();
  std::vector<double> stage_cost(k);  // y' S z per stage
  std::vector<double> stop_prob(k);   // y_active * z_active per stage
  for (std::size_t i = 0; i < k; ++i) {
    const MixedPolicy2& y = defender[i];
    const MixedPolicy2& z = attacker[i];
    stage_cost[i] = y.p_active * (s.s11 * z.p_active + s.s12 * z.p_passive) +
                    y.p_passive * (s.s21 * z.p_active + s.s22 * z.p_passive);
    stop_prob[i] = y.p_active * z.p_active;
  }
  // payoff_by_len[len] is the payoff of the trailing `len` stages.
  std::vector<double> payoff_by_len(k + 1, 0.0);
  for (std::size_t len = 1; len <= k; ++len) {
    const std::size_t first = k - len;
    double total = 0.0;
    for (std::size_t i = first; i < k; ++i) total += stage_cost[i];
    for (std::size_t b = first; b + 1 < k; ++b) {
      total -= stop_prob[b] * payoff_by_len[k - 1 - b];
    }
    payoff_by_len[len] = total;
  }
  return payoff_by_len[k];
}

enum class DefenderAction { defend, no_defend };
enum class AttackerAction { attack, no_attack };

// One sampled play-through of an edge-game.
struct RolloutOutcome {
  std::vector<std::pair<DefenderAction, AttackerAction>> actions;
  std::optional<int> stop_stage;  // 1-indexed stage of the detection, if any
  double payoff = 0.0;
};

// Samples one play-through. On the first simultaneous {Defend, Attack} the
// game stops: the detection stage contributes its own stage cost and nothing
// accrues afterwards, which keeps the sampled mean consistent with the
// backward recursion.
inline RolloutOutcome roll_once(const StageCostMatrix& s,
                                std::span<const MixedPolicy2> defender,
                                std::span<const MixedPolicy2> attacker,
                                std::mt19937_64& rng) {
  if (defender.size() != attacker.size()) {
    throw LengthMismatch("roll_once: policy sequences differ in length");
  }
  RolloutOutcome out;
  for (std::size_t i = 0; i < defender.size(); ++i) {
    const bool defends = uniform_unit(rng) < defender[i].p_active;
    const bool attacks = uniform_unit(rng) < attacker[i].p_active;
    out.actions.emplace_back(defends ? DefenderAction::defend : DefenderAction::no_defend,
                             attacks ? AttackerAction::attack : AttackerAction::no_attack);
    if (defends) {
      out.payoff += attacks ? s.s11 : s.s12;
    } else {
      out.payoff += attacks ? s.s21 : s.s22;
    }
    if (defends && attacks) {
      out.stop_stage = static_cast<int>(i) + 1;
      break;
    }
  }
  return out;
}

struct RolloutStats {
  double mean_payoff = 0.0;
  double std_error = 0.0;
};

// Monte Carlo estimate of the expected attacker payoff under the given
// policies. Deterministic for a fixed seed.
inline RolloutStats simulate_rollouts(const StageCostMatrix& s,
                                      std::span<const MixedPolicy2> defender,
                                      std::span<const MixedPolicy2> attacker,
                                      int num_rollouts, std::uint64_t seed) {
  if (num_rollouts < 1) {
    throw InvariantViolation("simulate_rollouts: num_rollouts must be >= 1");
  }
  std::mt19937_64 rng(seed);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int r = 0; r < num_rollouts; ++r) {
    const double payoff = roll_once(s, defender, attacker, rng).payoff;
    sum += payoff;
    sum_sq += payoff * payoff;
  }
  const double n = static_cast<double>(num_rollouts);
  RolloutStats stats;
  stats.mean_payoff = sum / n;
  if (num_rollouts > 1) {
    const double var = (sum_sq - n * stats.mean_payoff * stats.mean_payoff) / (n - 1.0);
    stats.std_error = var > 0.0 ? std::sqrt(var / n) : 0.0;
  }
  return stats;
}

}  // namespace secroute
