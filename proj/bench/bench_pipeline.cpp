#include <random>
#include <string>

#include <benchmark/benchmark.h>

#include "ordvga/matrix.hpp"
#include "ordvga/pipeline.hpp"

namespace {

using ordvga::ExecutionPolicy;

const ordvga::DecisionMatrix& provinces() {
  static const auto m = ordvga::load_matrix(std::string(ORDVGA_DATA_DIR) + "/provinces.csv");
  return m;
}

// Cardinal matrix with 3 inputs, 3 outputs and n DMUs.
ordvga::DecisionMatrix synthetic(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> value(1.0, 100.0);
  ordvga::DecisionMatrix m;
  for (int k = 0; k < 6; ++k) {
    m.metrics.push_back({"M" + std::to_string(k), k < 3 ? ordvga::Direction::Input : ordvga::Direction::Output,
                         std::nullopt, ""});
    m.values.emplace_back();
    for (std::size_t j = 0; j < n; ++j) m.values.back().push_back(value(rng));
  }
  for (std::size_t j = 0; j < n; ++j) m.dmu_names.push_back("D" + std::to_string(j));
  return ordvga::validate_matrix(m);
}

void run_assess(benchmark::State& state, const ordvga::DecisionMatrix& m, ExecutionPolicy policy) {
  ordvga::PipelineOptions options;
  options.policy = policy;
  for (auto _ : state) benchmark::DoNotOptimize(ordvga::assess(m, options));
  state.counters["dmus"] = static_cast<double>(m.num_dmus());
  state.counters["threads"] = policy == ExecutionPolicy::Parallel ? ordvga::parallel_threads() : 1;
}

void BM_ProvincesSerial(benchmark::State& state) { run_assess(state, provinces(), ExecutionPolicy::Serial); }
void BM_ProvincesParallel(benchmark::State& state) { run_assess(state, provinces(), ExecutionPolicy::Parallel); }

void BM_SyntheticSerial(benchmark::State& state) {
  run_assess(state, synthetic(static_cast<std::size_t>(state.range(0))), ExecutionPolicy::Serial);
}
void BM_SyntheticParallel(benchmark::State& state) {
  run_assess(state, synthetic(static_cast<std::size_t>(state.range(0))), ExecutionPolicy::Parallel);
}

void BM_ProvincesRanking(benchmark::State& state) {
  ordvga::PipelineOptions options;
  options.policy = state.range(0) == 0 ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel;
  for (auto _ : state) benchmark::DoNotOptimize(ordvga::rank_all(provinces(), 5, options));
}

}  // namespace

BENCHMARK(BM_ProvincesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProvincesParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SyntheticSerial)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SyntheticParallel)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProvincesRanking)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
