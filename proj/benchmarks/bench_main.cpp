#include <benchmark/benchmark.h>

#include "gnslab/constructions.hpp"
#include "gnslab/enumeration.hpp"
#include "gnslab/gns.hpp"
#include "gnslab/numerical_semigroup.hpp"

namespace {

using gnslab::NumericalSemigroup;

void BM_NsInvariants(benchmark::State& state) {
  const auto m = state.range(0);
  std::vector<std::int64_t> gens;
  for (std::int64_t k = m; k < 2 * m; k += 3) gens.push_back(k);
  gens.push_back(2 * m + 1);
  for (auto _ : state) {
    const auto s = NumericalSemigroup::from_generators(gens);
    benchmark::DoNotOptimize(gnslab::invariants(s));
  }
}
BENCHMARK(BM_NsInvariants)->Arg(10)->Arg(40)->Arg(160);

void BM_StripeGenerators(benchmark::State& state) {
  const auto base = NumericalSemigroup::from_generators({5, 6, 13});
  const auto s = gnslab::build_stripe({base, static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(gnslab::minimal_generators(s));
}
BENCHMARK(BM_StripeGenerators)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_GradedAnalyze(benchmark::State& state) {
  const auto base = NumericalSemigroup::from_generators({2, state.range(0)});
  const auto s = gnslab::build_graded({base, 3});
  for (auto _ : state) benchmark::DoNotOptimize(gnslab::analyze(s));
}
BENCHMARK(BM_GradedAnalyze)->Arg(11)->Arg(21)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_GenusTree(benchmark::State& state) {
  gnslab::EnumOptions options;
  options.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gnslab::enumerate_by_genus(static_cast<int>(state.range(0)), options));
  }
}
BENCHMARK(BM_GenusTree)
    ->Args({20, 1})
    ->Args({20, 4})
    ->Args({24, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
