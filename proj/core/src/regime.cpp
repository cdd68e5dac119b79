#include "rirobust/regime.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rirobust/lp.hpp"

namespace rir {

void validate_params(const RegimeParams& params) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidParams, why); };
  if (params.states.empty()) fail("at least one state is required");
  if (params.states.size() != params.prior.size()) fail("one prior entry per state is required");
  if (!(sgn(params.k) > 0 && params.k < 1)) fail("k must lie in (0, 1)");
  if (sgn(params.x) <= 0) fail("x must be positive");
  std::set<long> seen(params.states.begin(), params.states.end());
  if (seen.size() != params.states.size()) fail("states must be distinct");
  long n = static_cast<long>(params.n);
  if (*seen.begin() <= 1) fail("every threshold must exceed 1");
  if (*seen.rbegin() >= n - 1) fail("every threshold must be below n - 1");
  Rational total = 0;
  for (const auto& q : params.prior) {
    if (sgn(q) <= 0) fail("prior must have full support");
    total += q;
  }
  if (total != 1) fail("prior must sum to 1");
}

BaseGame build_regime_game(const RegimeParams& params) {
  validate_params(params);
  if (params.n > 16) throw Error(ErrorCode::InvalidParams, "full game limited to 16 investors");
  std::vector<std::string> players, states;
  for (std::size_t i = 0; i < params.n; ++i) players.push_back(std::to_string(i + 1));
  for (long th : params.states) states.push_back(std::to_string(th));
  std::vector<std::vector<std::string>> actions(params.n, {"0", "1"});
  BaseGame g(players, states, params.prior, actions);
  Rational win = 1 - params.k, lose = -params.k, hurt = -params.x;
  for (std::size_t a = 0; a < g.num_profiles(); ++a) {
    long m = 0;
    for (std::size_t i = 0; i < params.n; ++i) m += static_cast<long>(g.action_of(a, i));
    for (std::size_t t = 0; t < params.states.size(); ++t) {
      bool success = m >= params.states[t];
      for (std::size_t i = 0; i < params.n; ++i) {
        if (g.action_of(a, i) == 1)
          g.set_u(i, a, t, success ? win : lose);
        else
          g.set_u(i, a, t, success ? hurt : Rational(0));
      }
    }
  }
  return g;
}

Rational wlower_closed_form(const RegimeParams& params) {
  validate_params(params);
  return -Rational(static_cast<unsigned long>(params.n)) * params.x * params.k / (1 + params.x);
}

bool gap_closed_form(const RegimeParams& params) {
  validate_params(params);
  std::vector<std::size_t> order(params.states.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return params.states[a] < params.states[b]; });
  Rational r = params.k / (1 + params.x);
  Rational mean = 0;
  for (std::size_t t = 0; t < params.states.size(); ++t) mean += params.prior[t] * params.states[t];
  Rational F = 0, partial = 0;
  long cutoff = 0;
  for (std::size_t t : order) {
    F += params.prior[t];
    partial += params.prior[t] * params.states[t];
    if (F >= r) {
      cutoff = params.states[t];
      break;
    }
  }
  Rational lhs = F * (cutoff - partial / F);
  Rational rhs = r * (3 - 3 * r + cutoff - mean);
  bool gap = lhs < rhs;

  if (params.states.size() == 2) {
    std::size_t lo = order[0], hi = order[1];
    Rational spread = params.states[hi] - params.states[lo];
    const Rational& top = params.prior[hi];
    bool equal = spread >= 3 && 1 - spread * top / 3 <= r && r <= spread * (1 - top) / 3;
    if (equal == gap) throw std::logic_error("two-state criterion disagrees with cutoff inequality");
  }
  return gap;
}

namespace {

struct CountRows {
  // Per (theta, m): payoffs integrated against Q(m|theta) pi(theta).
  std::vector<std::vector<Rational>> gross, dev1, dev0, obey1, obey0;
};

Rational indicator(bool b) { return b ? Rational(1) : Rational(0); }

CountRows count_rows(const RegimeParams& P) {
  std::size_t n = P.n, S = P.states.size();
  Rational N = static_cast<unsigned long>(n);
  CountRows rows;
  auto shape = std::vector<std::vector<Rational>>(S, std::vector<Rational>(n + 1));
  rows.gross = rows.dev1 = rows.dev0 = rows.obey1 = rows.obey0 = shape;
  for (std::size_t t = 0; t < S; ++t) {
    long th = P.states[t];
    for (std::size_t m = 0; m <= n; ++m) {
      long M = static_cast<long>(m);
      Rational up = Rational(M) / N, down = Rational(static_cast<long>(n) - M) / N;
      Rational w = P.prior[t];
      Rational att = indicator(M >= th) - P.k;          // attacker's payoff at count m
      Rational att_extra = indicator(M + 1 >= th) - P.k;  // a non-attacker switching in
      Rational stay = -P.x * indicator(M >= th);          // non-attacker at count m
      Rational stay_less = -P.x * indicator(M - 1 >= th); // an attacker switching out
      // Total welfare for the count: m attackers, n - m non-attackers.
      rows.gross[t][m] = w * (M * att + (static_cast<long>(n) - M) * stay);
      rows.dev1[t][m] = w * (up * att + down * att_extra);
      rows.dev0[t][m] = w * (up * stay_less + down * stay);
      rows.obey1[t][m] = w * up * (att - stay_less);
      rows.obey0[t][m] = w * down * (stay - att_extra);
    }
  }
  return rows;
}

Rational integrate(const std::vector<std::vector<Rational>>& row, const CountKernel& K) {
  Rational s = 0;
  for (std::size_t t = 0; t < row.size(); ++t)
    for (std::size_t m = 0; m < row[t].size(); ++m) s += row[t][m] * K.Q[t][m];
  return s;
}

void check_kernel(const RegimeParams& P, const CountKernel& K) {
  if (K.Q.size() != P.states.size())
    throw Error(ErrorCode::DimensionMismatch, "kernel needs one distribution per state");
  for (const auto& q : K.Q) {
    if (q.size() != P.n + 1)
      throw Error(ErrorCode::DimensionMismatch, "kernel rows need n + 1 entries");
    for (const auto& v : q)
      if (sgn(v) < 0) throw Error(ErrorCode::InvalidOutcome, "kernel has a negative entry");
    if (sum(q) != 1) throw Error(ErrorCode::InvalidOutcome, "kernel row does not sum to 1");
  }
}

}  // namespace

Rational evaluate_kernel(const RegimeParams& params, const CountKernel& kernel,
                         RegimeObjective objective) {
  validate_params(params);
  check_kernel(params, kernel);
  auto rows = count_rows(params);
  Rational N = static_cast<unsigned long>(params.n);
  if (objective == RegimeObjective::GrossWelfare) return integrate(rows.gross, kernel);
  Rational v1 = integrate(rows.dev1, kernel), v0 = integrate(rows.dev0, kernel);
  return N * std::max(v1, v0);
}

bool kernel_is_bce(const RegimeParams& params, const CountKernel& kernel) {
  validate_params(params);
  check_kernel(params, kernel);
  auto rows = count_rows(params);
  return sgn(integrate(rows.obey1, kernel)) >= 0 && sgn(integrate(rows.obey0, kernel)) >= 0;
}

CountOptimum reduced_symmetric_lp(const RegimeParams& params, RegimeObjective objective) {
  validate_params(params);
  std::size_t n = params.n, S = params.states.size();
  auto rows = count_rows(params);
  LinearProgram lp;
  auto var = [&](std::size_t t, std::size_t m) { return t * (n + 1) + m; };
  for (std::size_t t = 0; t < S; ++t)
    for (std::size_t m = 0; m <= n; ++m)
      lp.add_variable("Q[" + std::to_string(m) + "|" + std::to_string(params.states[t]) + "]");
  auto linear = [&](const std::vector<std::vector<Rational>>& row, Rational scale) {
    std::vector<Term> terms;
    for (std::size_t t = 0; t < S; ++t)
      for (std::size_t m = 0; m <= n; ++m)
        if (sgn(row[t][m]) != 0) terms.push_back({var(t, m), scale * row[t][m]});
    return terms;
  };
  for (std::size_t t = 0; t < S; ++t) {
    std::vector<Term> row;
    for (std::size_t m = 0; m <= n; ++m) row.push_back({var(t, m), 1});
    lp.add_constraint(std::move(row), Relation::Equal, 1);
  }
  lp.add_constraint(linear(rows.obey1, 1), Relation::GreaterEqual, 0);
  lp.add_constraint(linear(rows.obey0, 1), Relation::GreaterEqual, 0);
  if (objective == RegimeObjective::GrossWelfare) {
    lp.set_objective(Sense::Minimize, linear(rows.gross, 1));
  } else {
    std::size_t tv = lp.add_variable("t", std::nullopt);
    for (const auto* row : {&rows.dev1, &rows.dev0}) {
      auto terms = linear(*row, -1);
      terms.push_back({tv, 1});
      lp.add_constraint(std::move(terms), Relation::GreaterEqual, 0);
    }
    lp.set_objective(Sense::Minimize, {{tv, Rational(static_cast<unsigned long>(n))}});
  }
  auto sol = solve(lp);
  if (sol.status != LpStatus::Optimal) throw std::logic_error("count program is not solvable");
  CountOptimum out;
  out.value = sol.value;
  out.kernel.Q.assign(S, std::vector<Rational>(n + 1));
  for (std::size_t t = 0; t < S; ++t)
    for (std::size_t m = 0; m <= n; ++m) out.kernel.Q[t][m] = sol.point[var(t, m)];
  if (evaluate_kernel(params, out.kernel, objective) != out.value ||
      !kernel_is_bce(params, out.kernel))
    throw std::logic_error("count program optimum fails re-evaluation");
  return out;
}

bool check_optimality_conditions(const RegimeParams& params, const CountKernel& kernel) {
  validate_params(params);
  check_kernel(params, kernel);
  Rational success = 0;
  for (std::size_t t = 0; t < params.states.size(); ++t) {
    long th = params.states[t];
    for (std::size_t m = 0; m <= params.n; ++m) {
      long M = static_cast<long>(m);
      if (M >= th - 1 && M <= th && sgn(kernel.Q[t][m]) != 0) return false;
      if (M > th) success += params.prior[t] * kernel.Q[t][m];
    }
  }
  return success == params.k / (1 + params.x);
}

CountKernel kernel_from_outcome(const RegimeParams& params, const Outcome& p) {
  BaseGame g = build_regime_game(params);
  validate_outcome(g, p);
  if (!is_symmetric_outcome(g, p))
    throw Error(ErrorCode::NotSymmetricOutcome, "outcome is not symmetric");
  CountKernel K;
  K.Q.assign(params.states.size(), std::vector<Rational>(params.n + 1));
  for (std::size_t a = 0; a < g.num_profiles(); ++a) {
    std::size_t m = 0;
    for (std::size_t i = 0; i < params.n; ++i) m += g.action_of(a, i);
    for (std::size_t t = 0; t < params.states.size(); ++t)
      K.Q[t][m] += p.p[g.cell(a, t)] / params.prior[t];
  }
  return K;
}

Outcome outcome_from_kernel(const RegimeParams& params, const CountKernel& kernel) {
  BaseGame g = build_regime_game(params);
  check_kernel(params, kernel);
  Outcome p = zero_outcome(g);
  for (std::size_t a = 0; a < g.num_profiles(); ++a) {
    unsigned long m = 0;
    for (std::size_t i = 0; i < params.n; ++i) m += g.action_of(a, i);
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), params.n, m);
    for (std::size_t t = 0; t < params.states.size(); ++t)
      p.p[g.cell(a, t)] = params.prior[t] * kernel.Q[t][m] / Rational(binom);
  }
  return p;
}

bool check_optimality_conditions(const RegimeParams& params, const Outcome& p) {
  return check_optimality_conditions(params, kernel_from_outcome(params, p));
}

}  // namespace rir
