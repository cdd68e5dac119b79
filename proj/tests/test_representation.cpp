#include <doctest.h>

#include "rirobust/bce.hpp"
#include "rirobust/representation.hpp"
#include "rirobust/separation.hpp"
#include "support.hpp"

using namespace rir;
using fixture::Rng;

namespace {

using Cells = std::vector<std::vector<std::size_t>>;

// Direct marginalization of the representation over z and signals.
Outcome oracle_induced(const CanonicalRepresentation& rep, const BaseGame& g) {
  Outcome p = zero_outcome(g);
  std::size_t n = g.num_players();
  for (std::size_t t = 0; t < g.num_states(); ++t)
    for (std::size_t z = 0; z < rep.zs.size(); ++z)
      for (std::size_t a = 0; a < g.num_profiles(); ++a) {
        auto x = g.decode(a);
        Rational prob = g.prior()[t] * rep.zeta[t][z];
        for (std::size_t i = 0; i < n; ++i) {
          Rational f = 0;
          for (std::size_t s = 0; s < rep.num_signals[i]; ++s) f += rep.xi[i][z][t][s] * rep.sigma[i][s][x[i]];
          prob *= f;
        }
        p.p[g.cell(a, t)] += prob;
      }
  return p;
}

}  // namespace

TEST_CASE("belief partitions") {
  auto g = fixture::game3x3();
  auto part = belief_partition(g, fixture::p3x3(g, Rational(1, 2)));
  for (std::size_t i = 0; i < 2; ++i) CHECK(part.cells[i] == Cells{{0}, {1, 2}});
  CHECK_FALSE(part.off_support[0]);

  auto pure = belief_partition(g, fixture::p3x3(g, 1));
  CHECK(pure.cells[0] == Cells{{0}, {1, 2}});
  REQUIRE(pure.off_support[0]);
  CHECK(*pure.off_support[0] == 1);

  std::vector<Rational> d(9, Rational(1, 9));
  auto product = belief_partition(g, fixture::one_state(g, d));
  CHECK(product.cells[0] == Cells{{0, 1, 2}});

  CHECK(same_partition(part, pure));
  CHECK_FALSE(same_partition(part, product));
}

TEST_CASE("strict fully supported BCE has singleton cells") {
  BaseGame g({"1"}, {"x", "y"}, {Rational(1, 2), Rational(1, 2)}, {{"l", "r"}});
  g.set_u(0, 0, 0, 1);
  g.set_u(0, 1, 1, 1);
  Outcome p = zero_outcome(g);
  p.p[g.cell(0, 0)] = Rational(1, 2);
  p.p[g.cell(1, 1)] = Rational(1, 2);
  CHECK(is_strict_bce(g, p));
  CHECK(belief_partition(g, p).cells[0] == Cells{{0}, {1}});
}

TEST_CASE("canonical representation of the 3x3 midpoint") {
  auto g = fixture::game3x3();
  auto p = fixture::p3x3(g, Rational(1, 2));
  auto rep = build_canonical(g, p);
  CHECK(rep.zs.size() == 4);
  CHECK(induced_outcome(rep, g) == p);
  CHECK(oracle_induced(rep, g) == p);
  for (std::size_t i = 0; i < 2; ++i) CHECK(rep.num_signals[i] > 4);
}

TEST_CASE("canonical representation of deterministic outcomes") {
  auto g = fixture::intro_game();
  Outcome fb = zero_outcome(g);
  fb.p[g.cell(g.encode({0, 0}), 0)] = Rational(1, 2);
  fb.p[g.cell(g.encode({1, 1}), 1)] = Rational(1, 2);
  auto rep = build_canonical(g, fb);
  CHECK(induced_outcome(rep, g) == fb);
  for (std::size_t t = 0; t < 2; ++t) {
    std::size_t support = 0;
    for (const auto& q : rep.zeta[t]) {
      CHECK((q == 0 || q == 1));
      support += q == 1;
    }
    CHECK(support == 1);
  }
}

TEST_CASE("canonical round trip on random outcomes") {
  Rng rng(9);
  for (int k = 0; k < 30; ++k) {
    auto g = fixture::random_game(rng, 2, {3, 2}, 2);
    auto p = fixture::random_outcome(rng, g);
    auto rep = build_canonical(g, p);
    CHECK(induced_outcome(rep, g) == p);
    CHECK(oracle_induced(rep, g) == p);
  }
}

TEST_CASE("cost certificates") {
  auto pg = fixture::intro_game(Rational(1, 10));
  Outcome inf = zero_outcome(pg);
  inf.p[pg.cell(pg.encode({1, 1}), 0)] = Rational(1, 2);
  inf.p[pg.cell(pg.encode({0, 0}), 1)] = Rational(1, 2);
  auto cert = cost_certificate(pg, inf, {1, 1});
  for (const auto& c : cert.players) {
    CHECK(c.equilibrium_cost == Rational(1, 2));
    CHECK(c.upper_bound >= c.equilibrium_cost);
    CHECK(c.informed_value >= 1);
  }
  auto half = cost_certificate(pg, inf, {Rational(1, 2), Rational(1, 4)});
  CHECK(half.players[0].equilibrium_cost == Rational(1, 4));
  CHECK(half.players[1].equilibrium_cost == Rational(1, 8));

  auto g = fixture::game3x3();
  auto pure = cost_certificate(g, fixture::p3x3(g, 1), {1, 1});
  CHECK(pure.players[0].equilibrium_cost == 0);

  CHECK_THROWS_AS(cost_certificate(g, fixture::p3x3(g, Rational(1, 2)), {1, 1}), Error);
  CHECK_THROWS_AS(cost_certificate(g, fixture::p3x3(g, 1), {0, 1}), Error);
}

TEST_CASE("Blackwell order through garbling") {
  // One correlation state, two equally likely states, two signals.
  std::vector<std::vector<Rational>> zeta{{1}, {1}};
  std::vector<Rational> prior{Rational(1, 2), Rational(1, 2)};
  Experiment full{1, 2, 2, {{1, 0}, {0, 1}}};
  Experiment noisy{1, 2, 2, {{Rational(3, 4), Rational(1, 4)}, {Rational(1, 3), Rational(2, 3)}}};
  Experiment blank{1, 2, 2, {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}}};
  CHECK(blackwell_dominates(noisy, noisy, zeta, prior));
  CHECK(blackwell_dominates(full, noisy, zeta, prior));
  CHECK(blackwell_dominates(noisy, blank, zeta, prior));
  CHECK_FALSE(blackwell_dominates(blank, noisy, zeta, prior));
  CHECK_FALSE(blackwell_dominates(noisy, full, zeta, prior));

  auto gb = find_garbling(full, noisy, zeta, prior);
  REQUIRE(gb);
  CHECK(gb->kernel[0] == noisy.kernel[0]);

  Experiment other{1, 3, 2, {{1, 0}, {0, 1}, {1, 0}}};
  CHECK_THROWS_AS(blackwell_dominates(full, other, zeta, prior), Error);
}

TEST_CASE("experiments of canonical representations") {
  auto g = fixture::game3x3();
  auto rep = build_canonical(g, fixture::p3x3(g, Rational(1, 3)));
  auto e = experiment_of(rep, 0);
  CHECK(e.num_z == rep.zs.size());
  CHECK(e.kernel.size() == e.num_z * e.num_states);
  CHECK(blackwell_dominates(e, e, rep.zeta, g.prior()));
}
