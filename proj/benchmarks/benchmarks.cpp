#include <benchmark/benchmark.h>

#include "herd/criteria.hpp"
#include "herd/generators.hpp"
#include "herd/matrix.hpp"
#include "herd/positivity.hpp"
#include "herd/system.hpp"

namespace {

herd::SystemPair bench_pair(int n, int m) {
  herd::Rng rng(90001 + n * 13 + m);
  return herd::random_pair(rng, n, m, herd::default_weight_pool(), 60);
}

void BM_ControllabilityMatrix(benchmark::State& state) {
  const auto pair = bench_pair(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(herd::controllability_matrix(pair));
  }
}
BENCHMARK(BM_ControllabilityMatrix)->Arg(4)->Arg(8)->Arg(12);

void BM_DecideHerdability(benchmark::State& state) {
  const auto pair = bench_pair(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(herd::decide_herdability(pair));
  }
}
BENCHMARK(BM_DecideHerdability)->Arg(4)->Arg(6)->Arg(8);

void BM_CriteriaPipeline(benchmark::State& state) {
  herd::Rng rng(70007);
  const int m2 = static_cast<int>(state.range(0));
  const auto pair = herd::depth2_tree_instance(rng, 3, m2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(herd::run_all_criteria(pair));
  }
}
BENCHMARK(BM_CriteriaPipeline)->Arg(2)->Arg(5);

void BM_Rank(benchmark::State& state) {
  herd::Rng rng(50005);
  const int n = static_cast<int>(state.range(0));
  const auto m = herd::random_rational_matrix(rng, n, n, herd::default_weight_pool(), 70);
  for (auto _ : state) {
    benchmark::DoNotOptimize(herd::rank(m));
  }
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
