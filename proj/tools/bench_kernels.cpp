// Serial vs OpenMP timings for the exhaustive kernels. Arg 0 = serial, 1 = OpenMP.

#include <benchmark/benchmark.h>

#include "streamcode/search.hpp"
#include "streamcode/sweeps.hpp"

using namespace sc;

static void BM_VerifyBursts(benchmark::State& state) {
  const auto code = build_multi_burst(6, 3, 2, Field::of_order(16));
  const auto family = burst_family(12, 3, 2);
  for (auto _ : state) {
    auto r = state.range(0) ? verify_delay_decodable(code, code.n() - 1, family)
                            : verify_delay_decodable_serial(code, code.n() - 1, family);
    benchmark::DoNotOptimize(r);
  }
  state.counters["patterns"] = static_cast<double>(family.size());
}
BENCHMARK(BM_VerifyBursts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_ErasureSweep(benchmark::State& state) {
  const auto code = build_mds(5, 3, Field::of_order(8));
  for (auto _ : state) {
    auto r = erasure_sweep(code, 4, ChannelModel::sw(2, 5), {.horizon = 15, .parallel = state.range(0) != 0});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ErasureSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_ErrorSweep(benchmark::State& state) {
  const auto code = build_mds(5, 3, Field::of_order(8));
  for (auto _ : state) {
    auto r = error_sweep(code, 4, ChannelModel::sw_err(1, 5), {.horizon = 8, .parallel = state.range(0) != 0});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ErrorSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_CandidateSearch(benchmark::State& state) {
  const auto field = Field::of_order(3);
  for (auto _ : state) {
    auto r = search_nonexistence(7, 3, 2, 2, 5, field, {.parallel = state.range(0) != 0});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CandidateSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
