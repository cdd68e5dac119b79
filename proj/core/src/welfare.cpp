#include "rirobust/welfare.hpp"

#include <map>
#include <stdexcept>

#include "rirobust/bce.hpp"
#include "rirobust/lp.hpp"

namespace rir {

ValueInterval value_interval(const BaseGame& g, const Outcome& p, ValueMode mode) {
  validate_outcome(g, p);
  if (!is_bce(g, p)) throw Error(ErrorCode::NotABce, "value intervals need a BCE");
  ValueInterval vi;
  vi.mode = mode;
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    PlayerInterval pi;
    auto dev = uninformed_value(g, p, i);
    pi.lower = dev.value;
    pi.deviation_action = dev.action;
    pi.upper = gross_value(g, p, i);
    if (pi.lower == pi.upper)
      pi.kind = Attainability::PointOnly;
    else
      pi.kind = mode == ValueMode::RationalInattention ? Attainability::HalfOpen
                                                       : Attainability::Closed;
    vi.players.push_back(std::move(pi));
  }
  return vi;
}

namespace {

// Sums cell coefficients into LP variables through var_of_cell.
std::vector<Term> collapse(const std::vector<Rational>& coef,
                           const std::vector<std::size_t>& var_of_cell) {
  std::map<std::size_t, Rational> acc;
  for (std::size_t c = 0; c < coef.size(); ++c)
    if (sgn(coef[c]) != 0) acc[var_of_cell[c]] += coef[c];
  std::vector<Term> out;
  for (auto& [v, q] : acc)
    if (sgn(q) != 0) out.push_back({v, q});
  return out;
}

std::vector<Rational> deviation_coefficients(const BaseGame& g, std::size_t i, std::size_t b) {
  std::vector<Rational> coef(g.num_cells());
  for (std::size_t a = 0; a < g.num_profiles(); ++a) {
    std::size_t dev = g.with_action(a, i, b);
    for (std::size_t t = 0; t < g.num_states(); ++t) coef[g.cell(a, t)] = g.u(i, dev, t);
  }
  return coef;
}

// Appends t_i >= deviation payoff rows and returns the t variables.
std::vector<std::size_t> add_epigraph(LinearProgram& lp, const BaseGame& g,
                                      const std::vector<std::size_t>& var_of_cell) {
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    t.push_back(lp.add_variable("t[" + g.players()[i] + "]", std::nullopt));
    for (std::size_t b = 0; b < g.num_actions(i); ++b) {
      auto row = collapse(deviation_coefficients(g, i, b), var_of_cell);
      for (auto& term : row) term.coef = -term.coef;
      row.push_back({t.back(), 1});
      lp.add_constraint(std::move(row), Relation::GreaterEqual, 0);
    }
  }
  return t;
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t k = 0; k < n; ++k) m[k] = k;
  return m;
}

}  // namespace

WelfareMin worst_case_exogenous(const BaseGame& g) {
  std::vector<Rational> coef(g.num_cells());
  for (std::size_t i = 0; i < g.num_players(); ++i)
    for (std::size_t c = 0; c < g.num_cells(); ++c) coef[c] += g.utility_table(i)[c];
  auto opt = minimize_linear_over_bce(g, coef);
  return {opt.value, std::move(opt.outcome)};
}

WelfareMin worst_case_rational_inattention(const BaseGame& g) {
  auto poly = build_bce_polytope(g);
  auto t = add_epigraph(poly.lp, g, identity_map(g.num_cells()));
  std::vector<Term> obj;
  for (auto v : t) obj.push_back({v, 1});
  poly.lp.set_objective(Sense::Minimize, std::move(obj));
  auto sol = solve(poly.lp);
  if (sol.status != LpStatus::Optimal) throw std::logic_error("epigraph program is not solvable");
  Outcome p = outcome_from_point(g, sol.point);
  if (!is_bce(g, p)) throw std::logic_error("epigraph minimizer is not a BCE");
  for (std::size_t i = 0; i < g.num_players(); ++i)
    if (sol.point[t[i]] != uninformed_value(g, p, i).value)
      throw std::logic_error("epigraph variable is not tight at the optimum");
  return {sol.value, std::move(p)};
}

WelfareReport welfare_report(const BaseGame& g) {
  WelfareReport r{worst_case_exogenous(g), worst_case_rational_inattention(g), 0};
  r.gap = r.w_bar.value - r.w_lower.value;
  if (sgn(r.gap) < 0) throw std::logic_error("uninformed welfare exceeds gross welfare");
  return r;
}

GapTestResult binary_symmetric_gap_test(const BaseGame& g) {
  if (!is_symmetric_game(g)) throw Error(ErrorCode::GameNotSymmetric, "game is not symmetric");
  for (std::size_t i = 0; i < g.num_players(); ++i)
    if (g.num_actions(i) != 2) throw Error(ErrorCode::NotBinaryAction, "actions must be binary");

  // Symmetric outcomes are constant on (attacker-count orbit, state) pairs.
  std::size_t n = g.num_players(), S = g.num_states();
  std::vector<std::size_t> ones(g.num_profiles());
  for (std::size_t a = 0; a < g.num_profiles(); ++a)
    for (std::size_t i = 0; i < n; ++i) ones[a] += g.action_of(a, i);
  std::vector<std::size_t> orbit_size(n + 1, 0);
  for (auto k : ones) ++orbit_size[k];
  std::vector<std::size_t> var_of_cell(g.num_cells());
  for (std::size_t a = 0; a < g.num_profiles(); ++a)
    for (std::size_t t = 0; t < S; ++t) var_of_cell[g.cell(a, t)] = ones[a] * S + t;

  LinearProgram lp;
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t t = 0; t < S; ++t)
      lp.add_variable("y[" + std::to_string(k) + "," + g.states()[t] + "]");
  for (std::size_t t = 0; t < S; ++t) {
    std::vector<Term> row;
    for (std::size_t k = 0; k <= n; ++k) row.push_back({k * S + t, orbit_size[k]});
    lp.add_constraint(std::move(row), Relation::Equal, g.prior()[t]);
  }
  auto tv = add_epigraph(lp, g, var_of_cell);
  std::vector<Term> obj;
  for (auto v : tv) obj.push_back({v, 1});
  lp.set_objective(Sense::Minimize, obj);
  auto relaxed = solve(lp);
  if (relaxed.status != LpStatus::Optimal)
    throw std::logic_error("relaxed symmetric program is not solvable");

  GapTestResult res;
  auto& diag = res.diagnostic;
  diag.relaxed_value = relaxed.value;
  diag.relaxed_minimizer = zero_outcome(g);
  for (std::size_t c = 0; c < g.num_cells(); ++c)
    diag.relaxed_minimizer.p[c] = relaxed.point[var_of_cell[c]];

  lp.add_constraint(obj, Relation::Equal, relaxed.value);
  res.gap = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < 2; ++a) {
      GapCondition cond{i, a, 0, 0};
      std::vector<Rational> prob(g.num_cells()), slack(g.num_cells());
      for (std::size_t o = 0; o < g.num_opponent_profiles(i); ++o) {
        std::size_t x = g.join(i, a, o), y = g.join(i, 1 - a, o);
        for (std::size_t t = 0; t < S; ++t) {
          prob[g.cell(x, t)] = 1;
          slack[g.cell(x, t)] = g.u(i, x, t) - g.u(i, y, t);
        }
      }
      lp.set_objective(Sense::Minimize, collapse(prob, var_of_cell));
      cond.min_probability = solve(lp).value;
      lp.set_objective(Sense::Minimize, collapse(slack, var_of_cell));
      cond.min_strict_slack = solve(lp).value;
      if (sgn(cond.min_probability) <= 0 || sgn(cond.min_strict_slack) <= 0) res.gap = false;
      diag.conditions.push_back(std::move(cond));
    }

  diag.w_bar = worst_case_exogenous(g).value;
  diag.w_lower = worst_case_rational_inattention(g).value;
  diag.agrees = res.gap == (diag.w_lower < diag.w_bar);
  return res;
}

}  // namespace rir
