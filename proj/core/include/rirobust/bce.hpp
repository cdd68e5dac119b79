#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rirobust/game.hpp"
#include "rirobust/lp.hpp"

namespace rir {

/// Obedience system of a game. Variables 0..num_cells()-1 are the cell
/// probabilities; callers may append further variables and rows.
struct BcePolytope {
  LinearProgram lp;
  std::size_t num_cells = 0;
};

BcePolytope build_bce_polytope(const BaseGame& g);

/// Gain from following recommendation a_i rather than playing b_i, weighted by
/// the probability of the recommendation.
Rational obedience_slack(const BaseGame& g, const Outcome& p, std::size_t i, std::size_t a_i,
                         std::size_t b_i);

struct ObedienceViolation {
  std::size_t player;
  std::size_t recommended;
  std::size_t deviation;
  Rational slack;
};

struct BceCheck {
  bool ok = true;
  std::optional<ObedienceViolation> violation;
  explicit operator bool() const { return ok; }
};

/// Checks every obedience row; reports the first violation in (i, a_i, b_i) order.
BceCheck is_bce(const BaseGame& g, const Outcome& p);

struct LinearOptimum {
  Outcome outcome;
  Rational value;
};

/// Minimizes sum_c coef[c] * p[c] over the BCE set.
LinearOptimum minimize_linear_over_bce(const BaseGame& g, const std::vector<Rational>& coef);
LinearOptimum maximize_linear_over_bce(const BaseGame& g, const std::vector<Rational>& coef);

/// Equal-weight average of the maximizers of each cell probability over the
/// BCE set. Its support contains the support of every BCE.
Outcome max_support_point(const BaseGame& g);

/// Outcome read from the first num_cells entries of an LP point.
Outcome outcome_from_point(const BaseGame& g, const std::vector<Rational>& point);

}  // namespace rir
