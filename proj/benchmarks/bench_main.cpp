#include <benchmark/benchmark.h>

#include "dagsim/attack.hpp"
#include "dagsim/confirmation_delay.hpp"
#include "dagsim/h2lr_chain.hpp"
#include "dagsim/race.hpp"
#include "dagsim/simulator.hpp"

namespace {

using namespace dagsim;

const NetworkParams kRef = validate({50.0, 0.5, 1.0});

void BM_HighLoadSimulation(benchmark::State& state) {
  const double horizon = static_cast<double>(state.range(0));
  std::uint64_t rep = 0;
  for (auto _ : state) {
    SeededStream rng(1, rep++);
    auto trace = sim::run_weight_experiment(
        kRef, LoadRegime::high, ConfirmationThreshold{2}, horizon, rng);
    benchmark::DoNotOptimize(trace.samples.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long>(horizon * kRef.lambda_high));
}
BENCHMARK(BM_HighLoadSimulation)->Arg(10)->Arg(50)->Arg(100);

void BM_ChainForwardPass(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto dist = analytic::h2lr_distribution(k, 100);
    benchmark::DoNotOptimize(dist.expected_weight());
  }
}
BENCHMARK(BM_ChainForwardPass)->Arg(50)->Arg(100)->Arg(500);

void BM_H2lrFirstPassageDelay(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic::confirmation_delay_h2lr(m, kRef));
  }
}
BENCHMARK(BM_H2lrFirstPassageDelay)->Arg(50)->Arg(150)->Arg(300);

void BM_AttackFormula(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(attack::attack_success_regime(
        m, LoadRegime::high_to_low, kRef, 0.25));
  }
}
BENCHMARK(BM_AttackFormula)->Arg(50)->Arg(150)->Arg(300);

void BM_MonteCarloRace(benchmark::State& state) {
  const long reps = state.range(0);
  attack::AttackScenario sc{0.7, 0.3, 2, 1};
  std::uint64_t block = 0;
  for (auto _ : state) {
    auto est = attack::monte_carlo_race(sc, reps, 200,
                                        SeededStream(2, block));
    block += static_cast<std::uint64_t>(reps);
    benchmark::DoNotOptimize(est.probability);
  }
  state.SetItemsProcessed(state.iterations() * reps);
}
BENCHMARK(BM_MonteCarloRace)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
