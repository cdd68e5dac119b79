#include "rirobust/game.hpp"

#include <algorithm>
#include <numeric>

namespace rir {

BaseGame::BaseGame(std::vector<std::string> players, std::vector<std::string> states,
                   std::vector<Rational> prior,
                   std::vector<std::vector<std::string>> actions)
    : players_(std::move(players)),
      states_(std::move(states)),
      prior_(std::move(prior)),
      actions_(std::move(actions)) {
  if (actions_.size() != players_.size())
    throw Error(ErrorCode::DimensionMismatch, "one action set per player is required");
  if (prior_.size() != states_.size())
    throw Error(ErrorCode::DimensionMismatch, "one prior entry per state is required");
  strides_.assign(players_.size(), 1);
  num_profiles_ = 1;
  for (std::size_t i = players_.size(); i-- > 0;) {
    if (actions_[i].empty())
      throw Error(ErrorCode::DimensionMismatch, "player '" + players_[i] + "' has no actions");
    strides_[i] = num_profiles_;
    num_profiles_ *= actions_[i].size();
  }
  utility_.assign(players_.size(), std::vector<Rational>(num_cells()));
}

void BaseGame::set_u(std::size_t i, std::size_t profile, std::size_t theta, Rational v) {
  utility_[i][cell(profile, theta)] = std::move(v);
}

std::vector<std::size_t> BaseGame::decode(std::size_t profile) const {
  std::vector<std::size_t> a(players_.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = action_of(profile, i);
  return a;
}

std::size_t BaseGame::encode(const std::vector<std::size_t>& a) const {
  std::size_t profile = 0;
  for (std::size_t i = 0; i < a.size(); ++i) profile += a[i] * strides_[i];
  return profile;
}

std::size_t BaseGame::opponent_index(std::size_t profile, std::size_t i) const {
  std::size_t s = strides_[i];
  std::size_t high = profile / (s * actions_[i].size());
  return high * s + profile % s;
}

std::size_t BaseGame::join(std::size_t i, std::size_t a_i, std::size_t opponent) const {
  std::size_t s = strides_[i];
  return (opponent / s) * s * actions_[i].size() + a_i * s + opponent % s;
}

std::size_t BaseGame::find_player(const std::string& name) const {
  auto it = std::find(players_.begin(), players_.end(), name);
  if (it == players_.end()) throw Error(ErrorCode::UnknownAction, "unknown player '" + name + "'");
  return static_cast<std::size_t>(it - players_.begin());
}

std::size_t BaseGame::find_action(std::size_t i, const std::string& name) const {
  const auto& acts = actions_.at(i);
  auto it = std::find(acts.begin(), acts.end(), name);
  if (it == acts.end())
    throw Error(ErrorCode::UnknownAction,
                "unknown action '" + name + "' for player '" + players_[i] + "'");
  return static_cast<std::size_t>(it - acts.begin());
}

std::size_t BaseGame::find_state(const std::string& name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) throw Error(ErrorCode::UnknownAction, "unknown state '" + name + "'");
  return static_cast<std::size_t>(it - states_.begin());
}

void validate_game(const BaseGame& g) {
  if (g.num_players() == 0) throw Error(ErrorCode::DimensionMismatch, "game has no players");
  if (g.num_states() == 0) throw Error(ErrorCode::DimensionMismatch, "game has no states");
  Rational total = 0;
  for (std::size_t t = 0; t < g.num_states(); ++t) {
    if (sgn(g.prior()[t]) <= 0)
      throw Error(ErrorCode::PriorNotFullSupport,
                  "prior has no positive mass on state '" + g.states()[t] + "'");
    total += g.prior()[t];
  }
  if (total != 1)
    throw Error(ErrorCode::PriorNotNormalized, "prior sums to " + to_string(total));
  for (std::size_t i = 0; i < g.num_players(); ++i)
    if (g.utility_table(i).size() != g.num_cells())
      throw Error(ErrorCode::MissingUtilityEntry,
                  "utility table of player '" + g.players()[i] + "' is incomplete");
}

void validate_outcome(const BaseGame& g, const Outcome& p) {
  if (p.p.size() != g.num_cells())
    throw Error(ErrorCode::DimensionMismatch, "outcome has " + std::to_string(p.p.size()) +
                                                  " cells, game has " +
                                                  std::to_string(g.num_cells()));
  std::vector<Rational> marginal(g.num_states());
  for (std::size_t a = 0; a < g.num_profiles(); ++a)
    for (std::size_t t = 0; t < g.num_states(); ++t) {
      const Rational& v = p.p[g.cell(a, t)];
      if (sgn(v) < 0) throw Error(ErrorCode::InvalidOutcome, "outcome has a negative entry");
      marginal[t] += v;
    }
  for (std::size_t t = 0; t < g.num_states(); ++t)
    if (marginal[t] != g.prior()[t])
      throw Error(ErrorCode::InvalidOutcome, "state marginal of '" + g.states()[t] +
                                                 "' is " + to_string(marginal[t]) +
                                                 ", prior is " + to_string(g.prior()[t]));
}

namespace {

void check_dims(const BaseGame& g, const Outcome& p, std::size_t i) {
  if (p.p.size() != g.num_cells() || i >= g.num_players())
    throw Error(ErrorCode::DimensionMismatch, "outcome or player index does not match game");
}

}  // namespace

Outcome zero_outcome(const BaseGame& g) { return Outcome{std::vector<Rational>(g.num_cells())}; }

Rational action_probability(const BaseGame& g, const Outcome& p, std::size_t i,
                            std::size_t a_i) {
  check_dims(g, p, i);
  Rational s = 0;
  for (std::size_t o = 0; o < g.num_opponent_profiles(i); ++o) {
    std::size_t a = g.join(i, a_i, o);
    for (std::size_t t = 0; t < g.num_states(); ++t) s += p.p[g.cell(a, t)];
  }
  return s;
}

bool is_supported(const BaseGame& g, const Outcome& p, std::size_t i, std::size_t a_i) {
  return sgn(action_probability(g, p, i, a_i)) > 0;
}

Rational gross_value(const BaseGame& g, const Outcome& p, std::size_t i) {
  check_dims(g, p, i);
  Rational s = 0;
  const auto& u = g.utility_table(i);
  for (std::size_t c = 0; c < g.num_cells(); ++c)
    if (sgn(p.p[c]) != 0) s += u[c] * p.p[c];
  return s;
}

Rational deviation_payoff(const BaseGame& g, const Outcome& p, std::size_t i,
                          std::size_t b_i) {
  check_dims(g, p, i);
  if (b_i >= g.num_actions(i)) throw Error(ErrorCode::UnknownAction, "action index out of range");
  Rational s = 0;
  for (std::size_t a = 0; a < g.num_profiles(); ++a) {
    std::size_t dev = g.with_action(a, i, b_i);
    for (std::size_t t = 0; t < g.num_states(); ++t) {
      const Rational& w = p.p[g.cell(a, t)];
      if (sgn(w) != 0) s += g.u(i, dev, t) * w;
    }
  }
  return s;
}

DeviationValue uninformed_value(const BaseGame& g, const Outcome& p, std::size_t i) {
  DeviationValue best{deviation_payoff(g, p, i, 0), 0};
  for (std::size_t b = 1; b < g.num_actions(i); ++b) {
    Rational v = deviation_payoff(g, p, i, b);
    if (v > best.value) best = {v, b};
  }
  return best;
}

Rational gross_welfare(const BaseGame& g, const Outcome& p) {
  Rational s = 0;
  for (std::size_t i = 0; i < g.num_players(); ++i) s += gross_value(g, p, i);
  return s;
}

Rational uninformed_welfare(const BaseGame& g, const Outcome& p) {
  Rational s = 0;
  for (std::size_t i = 0; i < g.num_players(); ++i) s += uninformed_value(g, p, i).value;
  return s;
}

std::size_t permute_profile(const BaseGame& g, std::size_t profile,
                            const PermutationProfile& phi) {
  auto a = g.decode(profile);
  std::vector<std::size_t> b(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) b[j] = a[phi.phi[j]];
  return g.encode(b);
}

Outcome permute_outcome(const BaseGame& g, const Outcome& p, const PermutationProfile& phi) {
  Outcome q = zero_outcome(g);
  for (std::size_t a = 0; a < g.num_profiles(); ++a) {
    std::size_t b = permute_profile(g, a, phi);
    for (std::size_t t = 0; t < g.num_states(); ++t) q.p[g.cell(a, t)] = p.p[g.cell(b, t)];
  }
  return q;
}

bool has_common_actions(const BaseGame& g) {
  for (std::size_t i = 1; i < g.num_players(); ++i)
    if (g.num_actions(i) != g.num_actions(0)) return false;
  return true;
}

namespace {

PermutationProfile transposition(std::size_t n, std::size_t i) {
  PermutationProfile phi{std::vector<std::size_t>(n)};
  std::iota(phi.phi.begin(), phi.phi.end(), 0);
  std::swap(phi.phi[i], phi.phi[i + 1]);
  return phi;
}

}  // namespace

bool is_symmetric_game(const BaseGame& g) {
  if (!has_common_actions(g)) return false;
  std::size_t n = g.num_players();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    auto tau = transposition(n, k);
    for (std::size_t a = 0; a < g.num_profiles(); ++a) {
      std::size_t at = permute_profile(g, a, tau);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t t = 0; t < g.num_states(); ++t)
          if (g.u(j, at, t) != g.u(tau.phi[j], a, t)) return false;
    }
  }
  return true;
}

bool is_symmetric_outcome(const BaseGame& g, const Outcome& p) {
  if (!has_common_actions(g) || p.p.size() != g.num_cells()) return false;
  std::size_t n = g.num_players();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    auto tau = transposition(n, k);
    for (std::size_t a = 0; a < g.num_profiles(); ++a) {
      std::size_t at = permute_profile(g, a, tau);
      for (std::size_t t = 0; t < g.num_states(); ++t)
        if (p.p[g.cell(a, t)] != p.p[g.cell(at, t)]) return false;
    }
  }
  return true;
}

Outcome symmetrize(const BaseGame& g, const Outcome& p) {
  if (!is_symmetric_game(g)) throw Error(ErrorCode::GameNotSymmetric, "game is not symmetric");
  std::size_t n = g.num_players();
  if (n > 8) throw Error(ErrorCode::TooManyPlayers, "symmetrize supports at most 8 players");
  if (p.p.size() != g.num_cells()) throw Error(ErrorCode::DimensionMismatch, "outcome size");
  PermutationProfile phi{std::vector<std::size_t>(n)};
  std::iota(phi.phi.begin(), phi.phi.end(), 0);
  Outcome q = zero_outcome(g);
  std::size_t count = 0;
  do {
    for (std::size_t a = 0; a < g.num_profiles(); ++a) {
      std::size_t b = permute_profile(g, a, phi);
      for (std::size_t t = 0; t < g.num_states(); ++t) q.p[g.cell(a, t)] += p.p[g.cell(b, t)];
    }
    ++count;
  } while (std::next_permutation(phi.phi.begin(), phi.phi.end()));
  for (auto& v : q.p) v /= count;
  return q;
}

}  // namespace rir
