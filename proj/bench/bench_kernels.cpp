#include <benchmark/benchmark.h>

#include <vector>

#include "desargues/boolean_lattice.hpp"
#include "desargues/desargues.hpp"
#include "desargues/measurement.hpp"

using namespace desargues;

static void BM_ScanSerial(benchmark::State& state) {
  const boolean::GroundSet g(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(boolean::scan_serial(g));
}
BENCHMARK(BM_ScanSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_ScanParallel(benchmark::State& state) {
  const boolean::GroundSet g(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(boolean::scan_parallel(g, 0));
}
BENCHMARK(BM_ScanParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static std::vector<StateVector> batch_states(std::size_t d, std::size_t n) {
  Rng rng(42);
  std::vector<StateVector> states;
  for (std::size_t i = 0; i < n; ++i) states.push_back(random_state(d, rng));
  return states;
}

static void BM_BatchSerial(benchmark::State& state) {
  const std::size_t d = 7;
  const auto setup = ExperimentSetup::from_config(generate_desarguesian(1, d));
  const auto states = batch_states(d, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_batch_serial(setup, states));
}
BENCHMARK(BM_BatchSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_BatchParallel(benchmark::State& state) {
  const std::size_t d = 7;
  const auto setup = ExperimentSetup::from_config(generate_desarguesian(1, d));
  const auto states = batch_states(d, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_batch_parallel(setup, states, 0));
}
BENCHMARK(BM_BatchParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
