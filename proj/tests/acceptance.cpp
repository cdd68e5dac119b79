// Acceptance checks: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rirobust/bce.hpp"
#include "rirobust/regime.hpp"
#include "rirobust/representation.hpp"
#include "rirobust/separation.hpp"
#include "rirobust/structure.hpp"
#include "rirobust/vanishing.hpp"
#include "rirobust/welfare.hpp"
#include "support.hpp"

using namespace rir;
using fixture::Rng;

namespace {

struct Check {
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

bool criterion1(Check& c) {
  auto g = fixture::intro_game(Rational(1, 10));
  auto bar = worst_case_exogenous(g);
  auto low = worst_case_rational_inattention(g);
  c.require(bar.value == Rational(6, 5), "w_bar = " + bar.value.get_str());
  c.require(low.value == 1, "w_lower = " + low.value.get_str());
  c.require(fixture::oracle_is_bce(g, bar.outcome) && fixture::oracle_is_bce(g, low.outcome), "minimizers obedient");
  c.require(fixture::oracle_gross(g, bar.outcome, 0) + fixture::oracle_gross(g, bar.outcome, 1) == bar.value,
            "w_bar attained");
  c.require(fixture::oracle_uninformed(g, low.outcome, 0) + fixture::oracle_uninformed(g, low.outcome, 1) ==
                low.value,
            "w_lower attained");
  return c.failures.empty();
}

bool criterion2(Check& c) {
  auto g = fixture::game3x3();
  auto verts = bce_vertices(g);
  c.require(verts.size() == 2, "vertex count " + std::to_string(verts.size()));
  std::vector<Outcome> nash{fixture::p3x3(g, 0), fixture::p3x3(g, 1)};
  for (const auto& v : verts) {
    c.require(v == nash[0] || v == nash[1], "vertex is a Nash outcome");
    c.require(fixture::oracle_is_bce_vertex(g, v), "vertex rank");
    c.require(is_sbce(g, v), "sBCE at vertex");
  }
  c.require(!is_sbce(g, fixture::p3x3(g, Rational(1, 2))), "p^{1/2} not separated");
  for (int k = 1; k < 8; ++k) {
    auto q = fixture::p3x3(g, Rational(k, 8));
    c.require(fixture::oracle_is_bce(g, q) && !is_sbce(g, q), "interior of the edge not separated");
  }
  auto d = classify_density(g, SearchOptions{DensityMode::Exact});
  c.require(d.verdict == Density::NowhereDense, "verdict");
  c.require(d.witness.has_value(), "witness present");
  c.require(verify_density_verdict(g, d), "witness re-verifies");
  return c.failures.empty();
}

std::vector<RegimeParams> regime_cases() {
  return {{4, Rational(1, 2), 1, {2}, {1}},
          {5, Rational(1, 2), 1, {2, 3}, {Rational(1, 2), Rational(1, 2)}},
          {8, Rational(3, 5), Rational(1, 5), {2, 5}, {Rational(1, 2), Rational(1, 2)}}};
}

bool criterion3(Check& c) {
  for (const auto& p : regime_cases()) {
    std::string tag = "n=" + std::to_string(p.n) + ": ";
    Rational expected = -Rational(static_cast<long>(p.n)) * p.x * p.k / (1 + p.x);
    auto lp = reduced_symmetric_lp(p, RegimeObjective::UninformedWelfare);
    c.require(lp.value == expected, tag + "reduced LP " + lp.value.get_str());
    c.require(wlower_closed_form(p) == expected, tag + "closed form");
    c.require(kernel_is_bce(p, lp.kernel), tag + "kernel obedient");
    auto g = build_regime_game(p);
    auto full = worst_case_rational_inattention(g);
    c.require(full.value == expected, tag + "full game " + full.value.get_str());
    c.require(fixture::oracle_is_bce(g, full.outcome), tag + "full minimizer obedient");
  }
  return c.failures.empty();
}

bool criterion4(Check& c) {
  auto cases = regime_cases();
  const auto& b = cases[2];
  c.require(!gap_closed_form(b), "boundary closed-form gap");
  auto gb = build_regime_game(b);
  c.require(worst_case_exogenous(gb).value == Rational(-4, 5), "boundary w_bar");
  c.require(worst_case_rational_inattention(gb).value == Rational(-4, 5), "boundary w_lower");
  const auto& s = cases[0];
  c.require(gap_closed_form(s), "deterministic closed-form gap");
  auto gs = build_regime_game(s);
  c.require(worst_case_exogenous(gs).value > worst_case_rational_inattention(gs).value, "deterministic LP gap");
  return c.failures.empty();
}

bool criterion5(Check& c) {
  Rng rng(2024);
  std::size_t strict_found = 0;
  auto strict_is_separated = [&](const BaseGame& g, const Outcome& p) {
    if (!is_strict_bce(g, p)) return;
    ++strict_found;
    c.require(static_cast<bool>(is_separated(g, p)), "(d) strict BCE separated");
  };

  // (a) optimizer outputs on random games.
  for (int k = 0; k < 200; ++k) {
    auto g = fixture::random_game(rng, 2, {2 + static_cast<std::size_t>(k % 2), 2 + static_cast<std::size_t>(k / 2 % 2)}, 2);
    std::vector<Outcome> found;
    auto r = welfare_report(g);
    found.push_back(r.w_bar.outcome);
    found.push_back(r.w_lower.outcome);
    found.push_back(max_support_point(g));
    std::vector<Rational> coef(g.num_cells());
    for (auto& v : coef) v = rng.integer(-3, 3);
    found.push_back(minimize_linear_over_bce(g, coef).outcome);
    found.push_back(maximize_linear_over_bce(g, coef).outcome);
    for (const auto& p : found) {
      c.require(fixture::oracle_is_bce(g, p) && is_bce(g, p), "(a) optimizer output obedient");
      for (std::size_t i = 0; i < 2; ++i)
        c.require(fixture::oracle_uninformed(g, p, i) <= fixture::oracle_gross(g, p, i), "(a) v_lower <= v_bar");
      strict_is_separated(g, p);
    }
  }
  for (int k = 0; k < 60; ++k) {
    auto g = fixture::random_symmetric_pair(rng, 2 + static_cast<std::size_t>(k % 2), 2);
    auto p = minimize_linear_over_bce(g, std::vector<Rational>(g.num_cells(), 0)).outcome;
    std::vector<Rational> coef(g.num_cells());
    for (auto& v : coef) v = rng.integer(-3, 3);
    for (const auto& q : {p, minimize_linear_over_bce(g, coef).outcome, fixture::random_outcome(rng, g)}) {
      auto s = symmetrize(g, q);
      c.require(is_symmetric_outcome(g, s), "(a) symmetrized outcome symmetric");
      c.require(gross_welfare(g, s) == gross_welfare(g, q), "(a) symmetrize keeps gross welfare");
      c.require(uninformed_welfare(g, s) <= uninformed_welfare(g, q), "(a) symmetrize lowers uninformed welfare");
    }
  }

  // (b) separating perturbations.
  Rational eps(1, 20);
  for (int k = 0; k < 50; ++k) {
    auto g = fixture::random_game(rng, 2, {2, 3}, 2);
    std::vector<Rational> coef(g.num_cells());
    for (auto& v : coef) v = rng.integer(-3, 3);
    auto lo = minimize_linear_over_bce(g, coef).outcome;
    auto hi = max_support_point(g);
    Outcome p = zero_outcome(g);
    Rational w(rng.integer(0, 4), 4);
    for (std::size_t x = 0; x < p.p.size(); ++x) p.p[x] = w * lo.p[x] + (1 - w) * hi.p[x];
    auto h = separating_perturbation(g, p, eps);
    c.require(utility_distance(g, h) <= eps, "(b) perturbation within eps");
    c.require(is_sbce(h, p), "(b) separated in perturbed game");
    c.require(fixture::oracle_is_bce(h, p), "(b) obedient in perturbed game (oracle)");
  }

  // (c) canonical round trips.
  for (int k = 0; k < 100; ++k) {
    auto g = fixture::random_game(rng, 2, {2 + static_cast<std::size_t>(k % 2), 2}, 2);
    auto p = fixture::random_outcome(rng, g);
    auto rep = build_canonical(g, p);
    c.require(induced_outcome(rep, g) == p, "(c) canonical round trip");
    strict_is_separated(g, p);
  }

  // (d) strict BCEs among random vertices.
  for (int k = 0; k < 30; ++k) {
    auto g = fixture::random_game(rng, 2, {2, 2}, 2, true);
    for (const auto& v : bce_vertices(g)) strict_is_separated(g, v);
  }
  c.require(strict_found > 0, "(d) some strict BCE encountered");

  // (e) vanishing cost equilibria.
  auto g33 = fixture::game3x3();
  auto mixed = check_vce(g33, fixture::p3x3(g33, 0));
  c.require(mixed.kind == VceVerdict::Kind::IsVce, "(e) mixed Nash of the 3x3 game");
  c.require(mixed.certificate && !verify_vce_certificate(g33, fixture::p3x3(g33, 0), *mixed.certificate),
            "(e) mixed Nash certificate");
  std::size_t pure_found = 0;
  for (int k = 0; k < 60; ++k) {
    auto g = fixture::random_game(rng, 2, {2, 2}, 2, true);
    auto p = fixture::strict_pure_nash(g);
    if (!p) continue;
    ++pure_found;
    auto v = check_vce(g, *p);
    c.require(v.kind == VceVerdict::Kind::IsVce, "(e) strict pure Nash");
    c.require(v.certificate && !verify_vce_certificate(g, *p, *v.certificate), "(e) pure Nash certificate");
  }
  c.require(pure_found >= 10, "(e) enough strict pure Nash instances");
  return c.failures.empty();
}

bool criterion6(Check& c) {
  Rng rng(606);
  for (int k = 0; k < 50; ++k) {
    auto g = fixture::random_symmetric_binary(rng, 2 + static_cast<std::size_t>(k % 2), 2);
    auto r = binary_symmetric_gap_test(g);
    c.require(r.diagnostic.agrees, "instance " + std::to_string(k) + " disagrees");
    bool direct = worst_case_exogenous(g).value > worst_case_rational_inattention(g).value;
    c.require(r.gap == direct, "instance " + std::to_string(k) + " direct comparison");
  }
  return c.failures.empty();
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<bool(Check&)>>> criteria{
      {"1 investment game worst-case welfare", criterion1},
      {"2 3x3 game vertices and density", criterion2},
      {"3 regime closed form vs LP", criterion3},
      {"4 regime gap boundary", criterion4},
      {"5 property suites", criterion5},
      {"6 dual-route gap consistency", criterion6},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %s (%.2fs)\n", ok ? "PASS" : "FAIL", name.c_str(), secs);
    for (std::size_t k = 0; k < c.failures.size() && k < 5; ++k) std::printf("  %s\n", c.failures[k].c_str());
    failed += ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
