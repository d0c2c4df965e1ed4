#include <benchmark/benchmark.h>

#include "atmp/exact.hpp"
#include "atmp/heuristic.hpp"
#include "atmp/pareto.hpp"

namespace {

using namespace atmp;

Instance mid_instance() { return generate({.orders = 20, .locations = 8, .modes = 2, .seed = 3}); }

void BM_BestAssignment(benchmark::State& state) {
  const Instance inst = mid_instance();
  Configuration c = Configuration::all_closed(inst.location_count());
  for (std::size_t j = 0; j < c.facilities.size(); ++j) {
    c.facilities[j] = j % 3 == 0 ? FacilityState::cryo() : FacilityState::manufacturing(static_cast<int>(j % 2));
  }
  EpsilonConstraint e;
  e.min_coverage = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(best_assignment(inst, c, e));
}
BENCHMARK(BM_BestAssignment)->Arg(0)->Arg(10);

void BM_ExactSolve(benchmark::State& state) {
  const Instance inst = generate({.orders = static_cast<std::size_t>(state.range(0)), .locations = 5, .modes = 2, .seed = 7});
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst, WeightedSum{1.0, 1.0, 3000.0}));
}
BENCHMARK(BM_ExactSolve)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_LocalSearch(benchmark::State& state) {
  const Instance inst = mid_instance();
  for (auto _ : state) benchmark::DoNotOptimize(local_search(inst, WeightedSum{1.0, 1.0, 3000.0}, {}));
}
BENCHMARK(BM_LocalSearch)->Unit(benchmark::kMillisecond);

void BM_FrontExact(benchmark::State& state) {
  const Instance inst = generate({.orders = 4, .locations = 3, .modes = 2, .seed = 11});
  for (auto _ : state) benchmark::DoNotOptimize(front_exact(inst, {.threads = 1}));
}
BENCHMARK(BM_FrontExact)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
