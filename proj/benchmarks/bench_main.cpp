#include <benchmark/benchmark.h>

#include "rirobust/bce.hpp"
#include "rirobust/regime.hpp"
#include "rirobust/representation.hpp"
#include "rirobust/structure.hpp"
#include "rirobust/welfare.hpp"

using namespace rir;

namespace {

BaseGame game3x3() {
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

RegimeParams regime(std::size_t n) { return {n, Rational(1, 2), 1, {2, 3}, {Rational(1, 2), Rational(1, 2)}}; }

void BM_WelfareRegime(benchmark::State& state) {
  auto g = build_regime_game(regime(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(welfare_report(g));
}
BENCHMARK(BM_WelfareRegime)->DenseRange(5, 6);

void BM_ReducedRegimeLp(benchmark::State& state) {
  auto p = regime(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_symmetric_lp(p, RegimeObjective::UninformedWelfare));
}
BENCHMARK(BM_ReducedRegimeLp)->Arg(8)->Arg(16)->Arg(32);

void BM_Vertices3x3(benchmark::State& state) {
  auto g = game3x3();
  for (auto _ : state) benchmark::DoNotOptimize(bce_vertices(g));
}
BENCHMARK(BM_Vertices3x3);

void BM_Density3x3(benchmark::State& state) {
  auto g = game3x3();
  for (auto _ : state) benchmark::DoNotOptimize(classify_density(g, SearchOptions{DensityMode::Exact}));
}
BENCHMARK(BM_Density3x3);

void BM_Canonical3x3(benchmark::State& state) {
  auto g = game3x3();
  Outcome p = zero_outcome(g);
  p.p[g.cell(g.encode({0, 0}), 0)] = Rational(1, 2);
  for (std::size_t x = 1; x < 3; ++x)
    for (std::size_t y = 1; y < 3; ++y) p.p[g.cell(g.encode({x, y}), 0)] = Rational(1, 8);
  for (auto _ : state) benchmark::DoNotOptimize(build_canonical(g, p));
}
BENCHMARK(BM_Canonical3x3);

}  // namespace
BENCHMARK_MAIN();
