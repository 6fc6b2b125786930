#include <benchmark/benchmark.h>

#include "bichroma/gen.hpp"
#include "bichroma/hampath.hpp"
#include "bichroma/matching.hpp"
#include "bichroma/mst.hpp"
#include "bichroma/tsp_circle.hpp"

using namespace bichroma;

namespace {

CollinearInstance random_line(std::size_t size) {
  return generate_collinear({Family::RandomBalanced, size, 1, 1, Spacing::RandomPositive});
}

void hampath_linear_bench(benchmark::State& state) {
  const auto inst = random_line(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hampath_linear_edges(inst));
  state.SetComplexityN(state.range(0));
}

void matching_bench(benchmark::State& state) {
  const auto inst = random_line(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(matching_min_edges(inst));
  state.SetComplexityN(state.range(0));
}

void mst_crossing_bench(benchmark::State& state) {
  const auto inst = random_line(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mst_crossing_edges(inst));
  state.SetComplexityN(state.range(0));
}

void mst_noncrossing_bench(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const auto inst = generate_collinear({Family::Chunked, size, size / 4, 1, Spacing::RandomPositive});
  for (auto _ : state) benchmark::DoNotOptimize(mst_noncrossing_edges(inst));
  state.SetComplexityN(state.range(0));
}

void tsp_bench(benchmark::State& state) {
  const CircleInstance inst(static_cast<std::size_t>(state.range(0)) / 2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(tsp_tour_edges(inst));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(hampath_linear_bench)->RangeMultiplier(2)->Range(1 << 14, 1 << 20)->Complexity(benchmark::oN);
BENCHMARK(matching_bench)->RangeMultiplier(2)->Range(1 << 14, 1 << 20)->Complexity(benchmark::oN);
BENCHMARK(mst_crossing_bench)->RangeMultiplier(2)->Range(1 << 14, 1 << 20)->Complexity(benchmark::oN);
BENCHMARK(tsp_bench)->RangeMultiplier(2)->Range(1 << 14, 1 << 20)->Complexity(benchmark::oN);
BENCHMARK(mst_noncrossing_bench)->RangeMultiplier(2)->Range(1 << 7, 1 << 12)->Complexity(benchmark::oNSquared);
BENCHMARK_MAIN();
