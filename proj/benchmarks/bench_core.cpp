#include <benchmark/benchmark.h>

#include "robinf/identified_set.hpp"
#include "robinf/linalg.hpp"
#include "robinf/maxmin.hpp"
#include "robinf/orders.hpp"

using namespace robinf;

namespace {

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto e = random_experiment(n, n + 2, 42, 20).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(rref(e));
}
BENCHMARK(BM_Rref)->DenseRange(2, 8, 2);

void BM_Vertices(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto e = random_experiment(2, n, 7, 20);
  const auto mu = Prior::uniform(n);
  for (auto _ : state) {
    IdentifiedSet s(e, mu);
    benchmark::DoNotOptimize(s.vertices().size());
  }
}
BENCHMARK(BM_Vertices)->DenseRange(3, 7);

void BM_GarblingLp(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto e = random_experiment(m, 4, 3, 20);
  const auto ep = validate_experiment(random_garbling(m, m, 5, StochasticityConvention::ColumnStochastic) * e.matrix());
  for (auto _ : state) {
    benchmark::DoNotOptimize(blackwell_garbling(e, ep, StochasticityConvention::ColumnStochastic).feasible);
  }
}
BENCHMARK(BM_GarblingLp)->DenseRange(2, 5);

void BM_RobustComparison(benchmark::State& state) {
  const auto e = random_experiment(2, 4, 11, 20);
  const auto ep = random_experiment(3, 4, 12, 20);
  for (auto _ : state) benchmark::DoNotOptimize(robustly_more_informative(e, ep).robustly_more_informative);
}
BENCHMARK(BM_RobustComparison);

void BM_Maxmin(benchmark::State& state) {
  const auto e = random_experiment(2, 4, 13, 20);
  std::vector<Action> actions;
  for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(state.range(0)); ++k)
    actions.push_back(random_action(4, k, 9));
  const DecisionProblem problem(Prior::uniform(4), actions);
  for (auto _ : state) benchmark::DoNotOptimize(maxmin(e, problem).value);
}
BENCHMARK(BM_Maxmin)->RangeMultiplier(4)->Range(1, 64);

}  // namespace

BENCHMARK_MAIN();
