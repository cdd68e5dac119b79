#include <doctest.h>

#include "rirobust/representation.hpp"
#include "rirobust/separation.hpp"
#include "rirobust/vanishing.hpp"
#include "support.hpp"

using namespace rir;
using fixture::Rng;

namespace {

Outcome first_best(const BaseGame& g) {
  Outcome p = zero_outcome(g);
  p.p[g.cell(g.encode({0, 0}), 0)] = Rational(1, 2);
  p.p[g.cell(g.encode({1, 1}), 1)] = Rational(1, 2);
  return p;
}

}  // namespace

TEST_CASE("complete-information Nash detection") {
  auto ig = fixture::intro_game();
  auto fb = is_complete_info_nash(ig, first_best(ig));
  CHECK(fb);
  REQUIRE(fb.profile);
  CHECK(fb.profile->alpha[0][0][0] == 1);

  auto g = fixture::game3x3();
  CHECK_FALSE(is_complete_info_nash(g, fixture::p3x3(g, Rational(1, 2))));
  auto mixed = is_complete_info_nash(g, fixture::p3x3(g, 0));
  CHECK(mixed);
  CHECK(mixed.profile->alpha[0][1][1] == Rational(1, 2));
  CHECK(is_complete_info_nash(g, fixture::p3x3(g, 1)));

  // Product measure that is not a Nash equilibrium.
  std::vector<Rational> d(9, Rational(1, 9));
  CHECK_FALSE(is_complete_info_nash(g, fixture::one_state(g, d)));
}

TEST_CASE("measurability and decomposability") {
  auto g = fixture::game3x3();
  auto half = fixture::p3x3(g, Rational(1, 2));
  auto part = belief_partition(g, half);
  CHECK(is_measurable(g, half, part));
  PartitionProfile finest{{{{0}, {1}, {2}}, {{0}, {1}, {2}}}, {std::nullopt, std::nullopt}};
  CHECK(is_measurable(g, half, finest));
  PartitionProfile coarsest{{{{0, 1, 2}}, {{0, 1, 2}}}, {std::nullopt, std::nullopt}};
  CHECK_FALSE(is_measurable(g, half, coarsest));

  CHECK(is_decomposable(g, half, part, half));
  // Skews the b:c ratio inside the {b, c} cell.
  std::vector<Rational> d(9, 0);
  d[0] = Rational(1, 2);
  d[4] = Rational(1, 4);
  d[8] = Rational(1, 4);
  CHECK_FALSE(is_decomposable(g, fixture::one_state(g, d), coarsest, half));
  std::vector<Rational> e(9, 0);
  e[0] = Rational(1, 2);
  e[1 * 3 + 1] = Rational(1, 4);
  e[1 * 3 + 2] = Rational(1, 4);
  CHECK_FALSE(is_decomposable(g, fixture::one_state(g, e), part, half));
}

TEST_CASE("vanishing cost equilibria of the 3x3 game") {
  auto g = fixture::game3x3();
  auto mixed = check_vce(g, fixture::p3x3(g, 0));
  CHECK(mixed.kind == VceVerdict::Kind::IsVce);
  REQUIRE(mixed.certificate);
  CHECK_FALSE(verify_vce_certificate(g, fixture::p3x3(g, 0), *mixed.certificate));
  CHECK(check_vce(g, fixture::p3x3(g, 1)).kind == VceVerdict::Kind::IsVce);

  auto half = check_vce(g, fixture::p3x3(g, Rational(1, 2)));
  CHECK(half.kind == VceVerdict::Kind::NotVce);
  REQUIRE(half.density_witness);

  std::vector<Rational> d(9, Rational(1, 9));
  auto bad = check_vce(g, fixture::one_state(g, d));
  CHECK(bad.kind == VceVerdict::Kind::NotVce);
  CHECK(bad.obedience_witness);
}

TEST_CASE("strict pure Nash of random games are vanishing cost equilibria") {
  Rng rng(77);
  int tested = 0;
  for (int k = 0; k < 40; ++k) {
    auto g = fixture::random_game(rng, 2, {2, 2}, 2, true);
    auto p = fixture::strict_pure_nash(g);
    if (!p) continue;
    ++tested;
    auto v = check_vce(g, *p);
    CHECK(v.kind == VceVerdict::Kind::IsVce);
    REQUIRE(v.certificate);
    CHECK_FALSE(verify_vce_certificate(g, *p, *v.certificate));
  }
  CHECK(tested > 5);
}

TEST_CASE("dense games certify nearby separated BCEs") {
  auto mp = fixture::matching_pennies();
  auto q = fixture::one_state(mp, std::vector<Rational>(4, Rational(1, 4)));
  auto v = check_vce(mp, q);
  CHECK(v.kind == VceVerdict::Kind::IsVce);
}

TEST_CASE("caller certificates") {
  auto g = fixture::game3x3();
  auto p = fixture::p3x3(g, 0);
  VceCertificate cert{belief_partition(g, p), {1}, {p}, p, 0};
  VceOptions opts;
  opts.certificate = cert;
  CHECK(check_vce(g, p, opts).kind == VceVerdict::Kind::IsVce);

  cert.weights = {Rational(9, 10)};
  opts.certificate = cert;
  auto rejected = check_vce(g, p, opts);
  CHECK(rejected.kind == VceVerdict::Kind::Undetermined);
  CHECK(rejected.reason.find("certificate rejected") == 0);

  // Evidence outside the allowed distance.
  VceCertificate far{belief_partition(g, p), {1}, {p}, p, 0};
  auto pure = fixture::p3x3(g, 1);
  far.evidence = pure;
  opts.certificate = far;
  CHECK(check_vce(g, p, opts).kind == VceVerdict::Kind::Undetermined);

  CHECK(verify_vce_certificate(g, p, VceCertificate{belief_partition(g, p), {1}, {fixture::p3x3(g, Rational(1, 2))}, p, 0}));
}

TEST_CASE("separated BCEs are never rejected") {
  Rng rng(5);
  for (int k = 0; k < 15; ++k) {
    auto g = fixture::random_game(rng, 2, {2, 2}, 2);
    auto p = classify_density(g);
    if (!p.dense_certificate) continue;
    CHECK(check_vce(g, *p.dense_certificate).kind != VceVerdict::Kind::NotVce);
  }
}
