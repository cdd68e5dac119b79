#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rirobust/game.hpp"

namespace rir {

/// Distribution of (a_{-i}, theta) given recommendation a_i, indexed by
/// opponent_index * num_states + theta, with its best-response set.
struct ConditionalBelief {
  std::size_t owner = 0;
  std::size_t recommendation = 0;
  Rational probability;
  std::vector<Rational> belief;
  std::vector<std::size_t> br_set;
};

/// Bayes update on a_i. With zero_convention set, an unrecommended action gets
/// the all-zeros vector instead of an error.
ConditionalBelief conditional_belief(const BaseGame& g, const Outcome& p, std::size_t i,
                                     std::size_t a_i, bool zero_convention = false);

/// Unnormalized slice p(a_i, ., .) in the same indexing as the belief.
std::vector<Rational> joint_slice(const BaseGame& g, const Outcome& p, std::size_t i,
                                  std::size_t a_i);

/// Argmax set of player i's expected payoff against nonnegative weights on
/// (a_{-i}, theta). Scale-invariant, so unnormalized slices are accepted.
std::vector<std::size_t> best_responses(const BaseGame& g, std::size_t i,
                                        const std::vector<Rational>& weights);

/// p_{a_i} = p_{b_i} via p(a_i) p(b_i, x) = p(b_i) p(a_i, x) for every x.
bool beliefs_equal(const BaseGame& g, const Outcome& p, std::size_t i, std::size_t a_i,
                   std::size_t b_i);

struct SeparationViolation {
  std::size_t player;
  std::size_t first;
  std::size_t second;
  std::size_t shared;
};

struct SeparationCheck {
  bool ok = true;
  std::optional<SeparationViolation> violation;
  explicit operator bool() const { return ok; }
};

/// Distinct beliefs must have disjoint best-response sets. Reports the
/// lexicographically first offending (i, a_i, b_i, shared action).
SeparationCheck is_separated(const BaseGame& g, const Outcome& p);

bool is_sbce(const BaseGame& g, const Outcome& p);

/// Every recommended action is the unique best response to its belief.
bool is_strict_bce(const BaseGame& g, const Outcome& p);

}  // namespace rir
