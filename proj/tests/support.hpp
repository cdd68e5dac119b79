#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rirobust/game.hpp"

namespace fixture {

using rir::BaseGame;
using rir::Outcome;
using rir::Rational;

/// Two investors pick project A, project B or the market; the better project
/// pays 2 under coordination and the worse one 1. The market pays -eps.
inline BaseGame intro_game(const Rational& eps = 0) {
  BaseGame g({"Ann", "Bob"}, {"thA", "thB"}, {Rational(1, 2), Rational(1, 2)},
             {{"A", "B", "M"}, {"A", "B", "M"}});
  for (std::size_t a = 0; a < g.num_profiles(); ++a) {
    auto x = g.decode(a);
    for (std::size_t t = 0; t < 2; ++t)
      for (std::size_t i = 0; i < 2; ++i) {
        Rational v = 0;
        if (x[i] == 2)
          v = -eps;
        else if (x[0] == x[1])
          v = x[i] == t ? 2 : 1;
        g.set_u(i, a, t, v);
      }
  }
  return g;
}

/// 3x3 game with one state, indexed [row action][column action].
inline BaseGame game3x3() {
  BaseGame g({"1", "2"}, {"s"}, {Rational(1)}, {{"a", "b", "c"}, {"a", "b", "c"}});
  const int u1[3][3] = {{8, 3, 2}, {7, 5, 0}, {6, 1, 4}};
  const int u2[3][3] = {{8, 7, 6}, {3, 1, 5}, {2, 4, 0}};
  for (std::size_t a = 0; a < g.num_profiles(); ++a) {
    auto x = g.decode(a);
    g.set_u(0, a, 0, u1[x[0]][x[1]]);
    g.set_u(1, a, 0, u2[x[0]][x[1]]);
  }
  return g;
}

/// Symmetric 3x3 game: u_2(x, y) = u_1(y, x) with the row payoffs of game3x3.
inline BaseGame symmetric3x3() {
  BaseGame g({"1", "2"}, {"s"}, {Rational(1)}, {{"a", "b", "c"}, {"a", "b", "c"}});
  const int row[3][3] = {{8, 3, 2}, {7, 5, 0}, {6, 1, 4}};
  for (std::size_t a = 0; a < g.num_profiles(); ++a) {
    auto x = g.decode(a);
    g.set_u(0, a, 0, row[x[0]][x[1]]);
    g.set_u(1, a, 0, row[x[1]][x[0]]);
  }
  return g;
}

inline BaseGame matching_pennies() {
  BaseGame g({"1", "2"}, {"s"}, {Rational(1)}, {{"H", "T"}, {"H", "T"}});
  for (std::size_t a = 0; a < g.num_profiles(); ++a) {
    auto x = g.decode(a);
    int v = x[0] == x[1] ? 1 : -1;
    g.set_u(0, a, 0, v);
    g.set_u(1, a, 0, -v);
  }
  return g;
}

/// Outcome from a per-profile distribution in the single state of g.
inline Outcome one_state(const BaseGame& g, const std::vector<Rational>& dist) {
  Outcome p = rir::zero_outcome(g);
  for (std::size_t a = 0; a < dist.size(); ++a) p.p[g.cell(a, 0)] = dist[a];
  return p;
}

/// p^t = t (a,a) + (1 - t) (b/2 + c/2, b/2 + c/2) in the 3x3 game.
inline Outcome p3x3(const BaseGame& g, const Rational& t) {
  std::vector<Rational> d(9, 0);
  d[0] = t;
  for (std::size_t x : {1u, 2u})
    for (std::size_t y : {1u, 2u}) d[x * 3 + y] = (1 - t) / 4;
  return one_state(g, d);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational rational(long lo, long hi, long den) { return Rational(integer(lo * den, hi * den), den); }
  bool coin(unsigned percent) { return gen_() % 100 < percent; }

 private:
  std::mt19937_64 gen_;
};

inline std::vector<std::string> names(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(stem + std::to_string(k + 1));
  return out;
}

inline std::vector<Rational> random_prior(Rng& rng, std::size_t states) {
  std::vector<Rational> w;
  Rational total = 0;
  for (std::size_t t = 0; t < states; ++t) {
    w.push_back(rng.integer(1, 4));
    total += w.back();
  }
  for (auto& q : w) q /= total;
  return w;
}

/// Random game with integer payoffs in [-5, 5] (half-integers when fine).
inline BaseGame random_game(Rng& rng, std::size_t players, std::vector<std::size_t> sizes,
                            std::size_t states, bool fine = false) {
  std::vector<std::vector<std::string>> acts;
  for (auto s : sizes) acts.push_back(names("a", s));
  BaseGame g(names("p", players), names("s", states), random_prior(rng, states), acts);
  for (std::size_t i = 0; i < players; ++i)
    for (std::size_t a = 0; a < g.num_profiles(); ++a)
      for (std::size_t t = 0; t < states; ++t) g.set_u(i, a, t, rng.rational(-5, 5, fine ? 7 : 1));
  return g;
}

/// Two-player game with u_2(x, y) = u_1(y, x).
inline BaseGame random_symmetric_pair(Rng& rng, std::size_t actions, std::size_t states) {
  BaseGame g(names("p", 2), names("s", states), random_prior(rng, states),
             {names("a", actions), names("a", actions)});
  for (std::size_t x = 0; x < actions; ++x)
    for (std::size_t y = 0; y < actions; ++y)
      for (std::size_t t = 0; t < states; ++t) {
        Rational v = rng.integer(-5, 5);
        g.set_u(0, g.encode({x, y}), t, v);
        g.set_u(1, g.encode({y, x}), t, v);
      }
  return g;
}

/// Symmetric binary-action game: payoff depends on own action, the number of
/// opponents playing 1, and the state.
inline BaseGame random_symmetric_binary(Rng& rng, std::size_t players, std::size_t states) {
  std::vector<std::vector<std::string>> acts(players, {"0", "1"});
  BaseGame g(names("p", players), names("s", states), random_prior(rng, states), acts);
  std::vector<Rational> f(2 * players * states);
  for (auto& v : f) v = rng.integer(-4, 4);
  for (std::size_t a = 0; a < g.num_profiles(); ++a) {
    auto x = g.decode(a);
    std::size_t ones = 0;
    for (auto v : x) ones += v;
    for (std::size_t i = 0; i < players; ++i)
      for (std::size_t t = 0; t < states; ++t)
        g.set_u(i, a, t, f[(x[i] * players + (ones - x[i])) * states + t]);
  }
  return g;
}

/// Random outcome with a random zero pattern and occasionally repeated
/// conditional slices, so that belief partitions have nontrivial cells.
inline Outcome random_outcome(Rng& rng, const BaseGame& g) {
  Outcome p = rir::zero_outcome(g);
  for (std::size_t t = 0; t < g.num_states(); ++t) {
    std::vector<Rational> w(g.num_profiles());
    Rational total = 0;
    for (std::size_t a = 0; a < g.num_profiles(); ++a) {
      w[a] = rng.coin(30) ? 0 : rng.integer(1, 3);
      total += w[a];
    }
    if (total == 0) {
      w[0] = 1;
      total = 1;
    }
    if (rng.coin(40) && g.num_actions(0) > 1) {
      // Copy player 0's slice of action 0 onto action 1, rescaled.
      for (std::size_t a = 0; a < g.num_profiles(); ++a)
        if (g.action_of(a, 0) == 1) {
          total -= w[a];
          w[a] = 2 * w[g.with_action(a, 0, 0)];
          total += w[a];
        }
      if (total == 0) {
        w[0] = 1;
        total = 1;
      }
    }
    for (std::size_t a = 0; a < g.num_profiles(); ++a) p.p[g.cell(a, t)] = g.prior()[t] * w[a] / total;
  }
  return p;
}

// Strict pure Nash profile per state, if each state has one.
inline std::optional<Outcome> strict_pure_nash(const BaseGame& g) {
  Outcome p = zero_outcome(g);
  for (std::size_t t = 0; t < g.num_states(); ++t) {
    bool found = false;
    for (std::size_t a = 0; a < g.num_profiles() && !found; ++a) {
      bool strict = true;
      for (std::size_t i = 0; i < g.num_players() && strict; ++i)
        for (std::size_t b = 0; b < g.num_actions(i) && strict; ++b)
          if (b != g.action_of(a, i)) strict = g.u(i, a, t) > g.u(i, g.with_action(a, i, b), t);
      if (strict) {
        p.p[g.cell(a, t)] = g.prior()[t];
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return p;
}

// Independent oracles: direct sums over decoded profiles, without the
// library's indexing helpers or LP machinery.

inline Rational oracle_gross(const BaseGame& g, const Outcome& p, std::size_t i) {
  Rational v = 0;
  for (std::size_t a = 0; a < g.num_profiles(); ++a)
    for (std::size_t t = 0; t < g.num_states(); ++t) v += g.u(i, a, t) * p.p[a * g.num_states() + t];
  return v;
}

/// Payoff of always playing b against p.
inline Rational oracle_blind(const BaseGame& g, const Outcome& p, std::size_t i, std::size_t b) {
  Rational v = 0;
  for (std::size_t a = 0; a < g.num_profiles(); ++a) {
    auto x = g.decode(a);
    x[i] = b;
    std::size_t dev = g.encode(x);
    for (std::size_t t = 0; t < g.num_states(); ++t) v += g.u(i, dev, t) * p.p[a * g.num_states() + t];
  }
  return v;
}

inline Rational oracle_uninformed(const BaseGame& g, const Outcome& p, std::size_t i) {
  Rational best = oracle_blind(g, p, i, 0);
  for (std::size_t b = 1; b < g.num_actions(i); ++b) {
    Rational v = oracle_blind(g, p, i, b);
    if (v > best) best = v;
  }
  return best;
}

/// Obedience gain of following rec rather than playing dev, weighted by p(rec).
inline Rational oracle_slack(const BaseGame& g, const Outcome& p, std::size_t i, std::size_t rec,
                             std::size_t dev) {
  Rational s = 0;
  for (std::size_t a = 0; a < g.num_profiles(); ++a) {
    auto x = g.decode(a);
    if (x[i] != rec) continue;
    x[i] = dev;
    std::size_t d = g.encode(x);
    for (std::size_t t = 0; t < g.num_states(); ++t)
      s += (g.u(i, a, t) - g.u(i, d, t)) * p.p[a * g.num_states() + t];
  }
  return s;
}

inline bool oracle_is_bce(const BaseGame& g, const Outcome& p) {
  for (const auto& q : p.p)
    if (sgn(q) < 0) return false;
  for (std::size_t t = 0; t < g.num_states(); ++t) {
    Rational m = 0;
    for (std::size_t a = 0; a < g.num_profiles(); ++a) m += p.p[a * g.num_states() + t];
    if (m != g.prior()[t]) return false;
  }
  for (std::size_t i = 0; i < g.num_players(); ++i)
    for (std::size_t r = 0; r < g.num_actions(i); ++r)
      for (std::size_t d = 0; d < g.num_actions(i); ++d)
        if (r != d && sgn(oracle_slack(g, p, i, r, d)) < 0) return false;
  return true;
}

/// Rank of a rational matrix by Gaussian elimination.
inline std::size_t oracle_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0, cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// A BCE is a vertex of the BCE polytope iff the constraints tight at it have
/// full column rank.
inline bool oracle_is_bce_vertex(const BaseGame& g, const Outcome& p) {
  if (!oracle_is_bce(g, p)) return false;
  std::size_t S = g.num_states(), n = g.num_cells();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t t = 0; t < S; ++t) {
    std::vector<Rational> r(n);
    for (std::size_t a = 0; a < g.num_profiles(); ++a) r[a * S + t] = 1;
    rows.push_back(r);
  }
  for (std::size_t c = 0; c < n; ++c)
    if (sgn(p.p[c]) == 0) {
      std::vector<Rational> r(n);
      r[c] = 1;
      rows.push_back(r);
    }
  for (std::size_t i = 0; i < g.num_players(); ++i)
    for (std::size_t rec = 0; rec < g.num_actions(i); ++rec)
      for (std::size_t dev = 0; dev < g.num_actions(i); ++dev) {
        if (rec == dev || sgn(oracle_slack(g, p, i, rec, dev)) != 0) continue;
        std::vector<Rational> r(n);
        for (std::size_t a = 0; a < g.num_profiles(); ++a) {
          auto x = g.decode(a);
          if (x[i] != rec) continue;
          x[i] = dev;
          std::size_t d = g.encode(x);
          for (std::size_t t = 0; t < S; ++t) r[a * S + t] = g.u(i, a, t) - g.u(i, d, t);
        }
        rows.push_back(r);
      }
  return oracle_rank(rows) == n;
}

/// Whether beliefs of rec a and rec b coincide, by normalizing both slices.
inline bool oracle_beliefs_equal(const BaseGame& g, const Outcome& p, std::size_t i, std::size_t a,
                                 std::size_t b) {
  std::vector<Rational> sa, sb;
  Rational ma = 0, mb = 0;
  for (std::size_t x = 0; x < g.num_profiles(); ++x) {
    auto prof = g.decode(x);
    if (prof[i] != a) continue;
    for (std::size_t t = 0; t < g.num_states(); ++t) {
      prof[i] = a;
      sa.push_back(p.p[g.encode(prof) * g.num_states() + t]);
      prof[i] = b;
      sb.push_back(p.p[g.encode(prof) * g.num_states() + t]);
      ma += sa.back();
      mb += sb.back();
    }
  }
  for (auto& q : sa) q /= ma;
  for (auto& q : sb) q /= mb;
  return sa == sb;
}

}  // namespace fixture
