#include "rirobust/separation.hpp"

#include <algorithm>

#include "rirobust/bce.hpp"

namespace rir {

std::vector<Rational> joint_slice(const BaseGame& g, const Outcome& p, std::size_t i,
                                  std::size_t a_i) {
  if (i >= g.num_players() || a_i >= g.num_actions(i))
    throw Error(ErrorCode::UnknownAction, "player or action index out of range");
  if (p.p.size() != g.num_cells()) throw Error(ErrorCode::DimensionMismatch, "outcome size");
  std::size_t S = g.num_states();
  std::vector<Rational> w(g.num_opponent_profiles(i) * S);
  for (std::size_t o = 0; o < g.num_opponent_profiles(i); ++o) {
    std::size_t a = g.join(i, a_i, o);
    for (std::size_t t = 0; t < S; ++t) w[o * S + t] = p.p[g.cell(a, t)];
  }
  return w;
}

std::vector<std::size_t> best_responses(const BaseGame& g, std::size_t i,
                                        const std::vector<Rational>& weights) {
  std::size_t S = g.num_states();
  std::vector<std::size_t> br;
  Rational best;
  for (std::size_t b = 0; b < g.num_actions(i); ++b) {
    Rational v = 0;
    for (std::size_t o = 0; o < g.num_opponent_profiles(i); ++o) {
      std::size_t a = g.join(i, b, o);
      for (std::size_t t = 0; t < S; ++t) {
        const Rational& w = weights[o * S + t];
        if (sgn(w) != 0) v += g.u(i, a, t) * w;
      }
    }
    if (br.empty() || v > best) {
      br.assign(1, b);
      best = v;
    } else if (v == best) {
      br.push_back(b);
    }
  }
  return br;
}

ConditionalBelief conditional_belief(const BaseGame& g, const Outcome& p, std::size_t i,
                                     std::size_t a_i, bool zero_convention) {
  ConditionalBelief cb;
  cb.owner = i;
  cb.recommendation = a_i;
  cb.belief = joint_slice(g, p, i, a_i);
  cb.probability = sum(cb.belief);
  if (sgn(cb.probability) == 0) {
    if (!zero_convention)
      throw Error(ErrorCode::ZeroProbabilityRecommendation,
                  "action '" + g.actions()[i][a_i] + "' of player '" + g.players()[i] +
                      "' is never recommended");
  } else {
    for (auto& v : cb.belief) v /= cb.probability;
  }
  cb.br_set = best_responses(g, i, cb.belief);
  return cb;
}

bool beliefs_equal(const BaseGame& g, const Outcome& p, std::size_t i, std::size_t a_i,
                   std::size_t b_i) {
  auto x = joint_slice(g, p, i, a_i);
  auto y = joint_slice(g, p, i, b_i);
  Rational px = sum(x), py = sum(y);
  for (std::size_t k = 0; k < x.size(); ++k)
    if (px * y[k] != py * x[k]) return false;
  return true;
}

SeparationCheck is_separated(const BaseGame& g, const Outcome& p) {
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    std::size_t n = g.num_actions(i);
    std::vector<std::vector<Rational>> slices(n);
    std::vector<Rational> mass(n);
    std::vector<std::vector<std::size_t>> br(n);
    for (std::size_t a = 0; a < n; ++a) {
      slices[a] = joint_slice(g, p, i, a);
      mass[a] = sum(slices[a]);
      if (sgn(mass[a]) > 0) br[a] = best_responses(g, i, slices[a]);
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (sgn(mass[a]) == 0) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (sgn(mass[b]) == 0) continue;
        bool equal = true;
        for (std::size_t k = 0; k < slices[a].size() && equal; ++k)
          equal = mass[a] * slices[b][k] == mass[b] * slices[a][k];
        if (equal) continue;
        for (std::size_t c : br[a])
          if (std::find(br[b].begin(), br[b].end(), c) != br[b].end())
            return {false, SeparationViolation{i, a, b, c}};
      }
    }
  }
  return {};
}

bool is_sbce(const BaseGame& g, const Outcome& p) {
  return static_cast<bool>(is_bce(g, p)) && static_cast<bool>(is_separated(g, p));
}

bool is_strict_bce(const BaseGame& g, const Outcome& p) {
  for (std::size_t i = 0; i < g.num_players(); ++i)
    for (std::size_t a = 0; a < g.num_actions(i); ++a) {
      auto w = joint_slice(g, p, i, a);
      if (sgn(sum(w)) == 0) continue;
      auto br = best_responses(g, i, w);
      if (br.size() != 1 || br[0] != a) return false;
    }
  return true;
}

}  // namespace rir
