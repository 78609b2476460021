#include <benchmark/benchmark.h>

#include "asdim/cayley.hpp"
#include "asdim/constructions.hpp"
#include "asdim/cover.hpp"
#include "asdim/error.hpp"
#include "asdim/estimator.hpp"
#include "asdim/fixtures.hpp"
#include "asdim/fuzz.hpp"
#include "asdim/transport.hpp"

using namespace asdim;

static void BM_CayleyWindow(benchmark::State& state) {
  const auto group = make_group("f:2");
  for (auto _ : state) benchmark::DoNotOptimize(cayley_window(group, state.range(0)).size());
}
BENCHMARK(BM_CayleyWindow)->DenseRange(3, 6);

static void BM_CayleyWindowBfs(benchmark::State& state) {
  const auto group = make_group("lamplighter");
  for (auto _ : state) benchmark::DoNotOptimize(cayley_window(group, state.range(0)).size());
}
BENCHMARK(BM_CayleyWindowBfs)->DenseRange(3, 5);

static void BM_LebesgueNumber(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto grid = std::make_shared<FiniteMetricSpace>(grid_space(n, n));
  const Cover c = ball_cover(grid, 1, 4, PointSet::all(n * n));
  for (auto _ : state) benchmark::DoNotOptimize(lebesgue_number(c));
  state.counters["points"] = static_cast<double>(n * n);
}
BENCHMARK(BM_LebesgueNumber)->Arg(6)->Arg(10)->Arg(14);

static void BM_AdExactPath(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto path = std::make_shared<FiniteMetricSpace>(path_space(n));
  for (auto _ : state) benchmark::DoNotOptimize(ad_exact(path, 2, 8, PointSet::all(n)).ad);
}
BENCHMARK(BM_AdExactPath)->Arg(20)->Arg(60)->Arg(120);

static void BM_AdExactGrid(benchmark::State& state) {
  auto grid = std::make_shared<FiniteMetricSpace>(grid_space(7, 7));
  std::vector<Index> inner;
  for (Index y = 1; y <= 5; ++y)
    for (Index x = 1; x <= 5; ++x) inner.push_back(y * 7 + x);
  const PointSet window(inner);
  for (auto _ : state) benchmark::DoNotOptimize(ad_exact(grid, state.range(0), 4, window).ad);
}
BENCHMARK(BM_AdExactGrid)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_Shrink(benchmark::State& state) {
  Rng rng(1);
  std::vector<Cover> covers;
  for (int i = 0; i < 32; ++i) covers.push_back(random_shrinkable_cover(rng, 1, 10, 20));
  std::size_t i = 0;
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(shrink(covers[i++ % covers.size()], 1).certificate.pass());
    } catch (const Error&) {
    }
  }
}
BENCHMARK(BM_Shrink);

static void BM_ActionTransport(benchmark::State& state) {
  const auto f = free_product_tree_fixture(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(action_transport(f.action, f.input).certificate.pass());
}
BENCHMARK(BM_ActionTransport)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
