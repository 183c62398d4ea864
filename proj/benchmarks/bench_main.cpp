#include <vector>

#include <benchmark/benchmark.h>

#include "weylgrid/grids.hpp"
#include "weylgrid/orbitfn.hpp"
#include "weylgrid/transform.hpp"
#include "weylgrid/weyl.hpp"

using namespace weylgrid;

namespace {

void BM_CountF_E8(benchmark::State& state) {
  const auto e8 = build(Series::E, 8);
  const int M = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_F(e8, M));
}
BENCHMARK(BM_CountF_E8)->Arg(30)->Arg(210)->Arg(1000);

void BM_GenerateR(benchmark::State& state) {
  const auto data = build(state.range(0) == 8 ? Series::E : Series::F, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(generate_R(data));
}
BENCHMARK(BM_GenerateR)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EnumerateF(benchmark::State& state) {
  const auto b3 = build(Series::B, 3);
  const int M = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_F(b3, M));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(enumerate_F(b3, M).size()));
}
BENCHMARK(BM_EnumerateF)->Arg(8)->Arg(24);

void BM_Orbit(benchmark::State& state) {
  const auto data = build(state.range(0) == 6 ? Series::E : Series::F, static_cast<int>(state.range(0)));
  const std::vector<int> seed(data.n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(orbit(data, seed, OrbitBasis::Weight));
}
BENCHMARK(BM_Orbit)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_PlanBuild(benchmark::State& state) {
  const auto b3 = build(Series::B, 3);
  const int M = static_cast<int>(state.range(0));
  for (auto _ : state) TransformPlan plan(b3, M, GridKind::C);
}
BENCHMARK(BM_PlanBuild)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Forward(benchmark::State& state) {
  const auto b3 = build(Series::B, 3);
  const int M = static_cast<int>(state.range(0));
  const TransformPlan plan(b3, M, GridKind::C);
  const auto f = sample(b3, M, GridKind::C, [](const GridPoint& x) { return Complex(x.s[0], x.s[1]); });
  for (auto _ : state) benchmark::DoNotOptimize(plan.forward(f));
}
BENCHMARK(BM_Forward)->Arg(6)->Arg(10)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
