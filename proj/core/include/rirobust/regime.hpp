#pragma once

#include <cstddef>
#include <vector>

#include "rirobust/game.hpp"

namespace rir {

/// n investors each attack (1) or not (0); the regime falls when at least
/// theta investors attack. Attackers earn 1 - k on success and -k otherwise;
/// non-attackers lose x on success.
struct RegimeParams {
  std::size_t n = 0;
  Rational k;
  Rational x;
  std::vector<long> states;
  std::vector<Rational> prior;
};

void validate_params(const RegimeParams& params);

/// Attacker-count distribution per state, Q[theta][m] for m = 0..n.
struct CountKernel {
  std::vector<std::vector<Rational>> Q;
};

enum class RegimeObjective { GrossWelfare, UninformedWelfare };

/// Full game; practical up to roughly 16 investors.
BaseGame build_regime_game(const RegimeParams& params);

/// -n x k / (1 + x).
Rational wlower_closed_form(const RegimeParams& params);

/// Whether w_lower < w_bar, from the cutoff-state inequality. For two states
/// the two-point criterion is evaluated as well and must agree.
bool gap_closed_form(const RegimeParams& params);

struct CountOptimum {
  Rational value;
  CountKernel kernel;
};

/// Optimum over symmetric BCEs with the attacker count as the only statistic.
CountOptimum reduced_symmetric_lp(const RegimeParams& params, RegimeObjective objective);

/// Total welfare of a kernel under the chosen notion.
Rational evaluate_kernel(const RegimeParams& params, const CountKernel& kernel,
                         RegimeObjective objective);

/// Obedience of the symmetric outcome generated by the kernel.
bool kernel_is_bce(const RegimeParams& params, const CountKernel& kernel);

/// No mass on counts in [theta - 1, theta] and success probability k / (1 + x).
bool check_optimality_conditions(const RegimeParams& params, const CountKernel& kernel);
bool check_optimality_conditions(const RegimeParams& params, const Outcome& p);

CountKernel kernel_from_outcome(const RegimeParams& params, const Outcome& p);
Outcome outcome_from_kernel(const RegimeParams& params, const CountKernel& kernel);

}  // namespace rir
