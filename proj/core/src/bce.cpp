#include "rirobust/bce.hpp"

#include <stdexcept>

namespace rir {

BcePolytope build_bce_polytope(const BaseGame& g) {
  BcePolytope poly;
  poly.num_cells = g.num_cells();
  auto& lp = poly.lp;
  for (std::size_t a = 0; a < g.num_profiles(); ++a)
    for (std::size_t t = 0; t < g.num_states(); ++t)
      lp.add_variable("p[" + std::to_string(a) + "," + g.states()[t] + "]");
  for (std::size_t t = 0; t < g.num_states(); ++t) {
    std::vector<Term> row;
    for (std::size_t a = 0; a < g.num_profiles(); ++a) row.push_back({g.cell(a, t), 1});
    lp.add_constraint(std::move(row), Relation::Equal, g.prior()[t]);
  }
  for (std::size_t i = 0; i < g.num_players(); ++i)
    for (std::size_t ai = 0; ai < g.num_actions(i); ++ai)
      for (std::size_t bi = 0; bi < g.num_actions(i); ++bi) {
        if (ai == bi) continue;
        std::vector<Term> row;
        for (std::size_t o = 0; o < g.num_opponent_profiles(i); ++o) {
          std::size_t a = g.join(i, ai, o), b = g.join(i, bi, o);
          for (std::size_t t = 0; t < g.num_states(); ++t) {
            Rational diff = g.u(i, a, t) - g.u(i, b, t);
            if (sgn(diff) != 0) row.push_back({g.cell(a, t), std::move(diff)});
          }
        }
        lp.add_constraint(std::move(row), Relation::GreaterEqual, 0);
      }
  return poly;
}

Rational obedience_slack(const BaseGame& g, const Outcome& p, std::size_t i, std::size_t a_i,
                         std::size_t b_i) {
  if (i >= g.num_players() || a_i >= g.num_actions(i) || b_i >= g.num_actions(i))
    throw Error(ErrorCode::UnknownAction, "player or action index out of range");
  if (p.p.size() != g.num_cells()) throw Error(ErrorCode::DimensionMismatch, "outcome size");
  Rational s = 0;
  for (std::size_t o = 0; o < g.num_opponent_profiles(i); ++o) {
    std::size_t a = g.join(i, a_i, o), b = g.join(i, b_i, o);
    for (std::size_t t = 0; t < g.num_states(); ++t) {
      const Rational& w = p.p[g.cell(a, t)];
      if (sgn(w) != 0) s += (g.u(i, a, t) - g.u(i, b, t)) * w;
    }
  }
  return s;
}

BceCheck is_bce(const BaseGame& g, const Outcome& p) {
  for (std::size_t i = 0; i < g.num_players(); ++i)
    for (std::size_t ai = 0; ai < g.num_actions(i); ++ai)
      for (std::size_t bi = 0; bi < g.num_actions(i); ++bi) {
        if (ai == bi) continue;
        Rational s = obedience_slack(g, p, i, ai, bi);
        if (sgn(s) < 0) return {false, ObedienceViolation{i, ai, bi, s}};
      }
  return {};
}

Outcome outcome_from_point(const BaseGame& g, const std::vector<Rational>& point) {
  return Outcome{std::vector<Rational>(point.begin(),
                                       point.begin() + static_cast<std::ptrdiff_t>(g.num_cells()))};
}

namespace {

LinearOptimum optimize(const BaseGame& g, const std::vector<Rational>& coef, Sense sense) {
  if (coef.size() != g.num_cells()) throw Error(ErrorCode::DimensionMismatch, "objective size");
  auto poly = build_bce_polytope(g);
  std::vector<Term> obj;
  for (std::size_t c = 0; c < coef.size(); ++c)
    if (sgn(coef[c]) != 0) obj.push_back({c, coef[c]});
  poly.lp.set_objective(sense, std::move(obj));
  auto sol = solve(poly.lp);
  if (sol.status != LpStatus::Optimal) throw std::logic_error("BCE program is not solvable");
  Outcome p = outcome_from_point(g, sol.point);
  if (!is_bce(g, p)) throw std::logic_error("BCE optimizer returned a non-BCE outcome");
  return {std::move(p), sol.value};
}

}  // namespace

LinearOptimum minimize_linear_over_bce(const BaseGame& g, const std::vector<Rational>& coef) {
  return optimize(g, coef, Sense::Minimize);
}

LinearOptimum maximize_linear_over_bce(const BaseGame& g, const std::vector<Rational>& coef) {
  return optimize(g, coef, Sense::Maximize);
}

Outcome max_support_point(const BaseGame& g) {
  auto poly = build_bce_polytope(g);
  Outcome avg = zero_outcome(g);
  std::size_t n = g.num_cells();
  for (std::size_t c = 0; c < n; ++c) {
    poly.lp.set_objective(Sense::Maximize, {{c, 1}});
    auto sol = solve(poly.lp);
    if (sol.status != LpStatus::Optimal) throw std::logic_error("BCE program is not solvable");
    for (std::size_t k = 0; k < n; ++k) avg.p[k] += sol.point[k];
  }
  for (auto& v : avg.p) v /= static_cast<unsigned long>(n);
  if (!is_bce(g, avg)) throw std::logic_error("support point is not a BCE");
  return avg;
}

}  // namespace rir
