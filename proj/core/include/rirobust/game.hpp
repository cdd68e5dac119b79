#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rirobust/error.hpp"
#include "rirobust/rational.hpp"

namespace rir {

/// Finite game of incomplete information with a common prior.
///
/// Action profiles are coded in mixed radix with player 0 as the most
/// significant digit. A cell is a (profile, state) pair, coded as
/// profile * num_states() + state.
class BaseGame {
 public:
  BaseGame() = default;
  BaseGame(std::vector<std::string> players, std::vector<std::string> states,
           std::vector<Rational> prior,
           std::vector<std::vector<std::string>> actions);

  std::size_t num_players() const { return players_.size(); }
  std::size_t num_states() const { return states_.size(); }
  std::size_t num_actions(std::size_t i) const { return actions_[i].size(); }
  std::size_t num_profiles() const { return num_profiles_; }
  std::size_t num_cells() const { return num_profiles_ * states_.size(); }

  const std::vector<std::string>& players() const { return players_; }
  const std::vector<std::string>& states() const { return states_; }
  const std::vector<Rational>& prior() const { return prior_; }
  const std::vector<std::vector<std::string>>& actions() const { return actions_; }

  std::size_t cell(std::size_t profile, std::size_t theta) const {
    return profile * states_.size() + theta;
  }

  const Rational& u(std::size_t i, std::size_t profile, std::size_t theta) const {
    return utility_[i][cell(profile, theta)];
  }
  void set_u(std::size_t i, std::size_t profile, std::size_t theta, Rational v);

  /// Raw utility table of player i, indexed by cell. Size is checked by
  /// validate_game.
  const std::vector<Rational>& utility_table(std::size_t i) const { return utility_[i]; }
  std::vector<Rational>& utility_table(std::size_t i) { return utility_[i]; }

  std::size_t action_of(std::size_t profile, std::size_t i) const {
    return (profile / strides_[i]) % actions_[i].size();
  }
  std::size_t with_action(std::size_t profile, std::size_t i, std::size_t b) const {
    return profile + (b - action_of(profile, i)) * strides_[i];
  }
  std::vector<std::size_t> decode(std::size_t profile) const;
  std::size_t encode(const std::vector<std::size_t>& a) const;

  /// Number of opponent profiles a_{-i}.
  std::size_t num_opponent_profiles(std::size_t i) const {
    return num_profiles_ / actions_[i].size();
  }
  /// Mixed-radix index of a_{-i} within profile (same digit order, i removed).
  std::size_t opponent_index(std::size_t profile, std::size_t i) const;
  /// Profile (a_i, a_{-i}) from an opponent index.
  std::size_t join(std::size_t i, std::size_t a_i, std::size_t opponent) const;

  std::size_t find_player(const std::string& name) const;
  std::size_t find_action(std::size_t i, const std::string& name) const;
  std::size_t find_state(const std::string& name) const;

 private:
  std::vector<std::string> players_;
  std::vector<std::string> states_;
  std::vector<Rational> prior_;
  std::vector<std::vector<std::string>> actions_;
  std::vector<std::vector<Rational>> utility_;
  std::vector<std::size_t> strides_;
  std::size_t num_profiles_ = 0;
};

/// Joint distribution over cells (profile, state).
struct Outcome {
  std::vector<Rational> p;

  const Rational& at(std::size_t cell) const { return p[cell]; }
  bool operator==(const Outcome& o) const { return p == o.p; }
};

/// Bijection on players; a_phi assigns to player j the action a_{phi(j)}.
struct PermutationProfile {
  std::vector<std::size_t> phi;
};

struct DeviationValue {
  Rational value;
  std::size_t action = 0;
};

void validate_game(const BaseGame& g);
void validate_outcome(const BaseGame& g, const Outcome& p);

Outcome zero_outcome(const BaseGame& g);

/// p(a_i) marginal probability of a recommendation.
Rational action_probability(const BaseGame& g, const Outcome& p, std::size_t i,
                            std::size_t a_i);
bool is_supported(const BaseGame& g, const Outcome& p, std::size_t i, std::size_t a_i);

Rational gross_value(const BaseGame& g, const Outcome& p, std::size_t i);

/// Expected payoff of always playing b_i against p.
Rational deviation_payoff(const BaseGame& g, const Outcome& p, std::size_t i,
                          std::size_t b_i);

/// Best constant action against p; lowest index on ties.
DeviationValue uninformed_value(const BaseGame& g, const Outcome& p, std::size_t i);

Rational gross_welfare(const BaseGame& g, const Outcome& p);
Rational uninformed_welfare(const BaseGame& g, const Outcome& p);

std::size_t permute_profile(const BaseGame& g, std::size_t profile,
                            const PermutationProfile& phi);
/// p_phi(a, theta) = p(a_phi, theta).
Outcome permute_outcome(const BaseGame& g, const Outcome& p, const PermutationProfile& phi);

bool has_common_actions(const BaseGame& g);
bool is_symmetric_game(const BaseGame& g);
bool is_symmetric_outcome(const BaseGame& g, const Outcome& p);

/// Average of p_phi over all permutations of the players (at most 8 players).
Outcome symmetrize(const BaseGame& g, const Outcome& p);

}  // namespace rir
