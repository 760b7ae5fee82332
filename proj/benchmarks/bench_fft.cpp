#include <benchmark/benchmark.h>

#include "fmafft/analysis.hpp"
#include "fmafft/fft.hpp"

using namespace fmafft;

namespace {

SampleBuffer random_buffer(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  SampleBuffer x(n);
  for (ComplexSample& c : x) {
    c.re = rng.uniform_pm1();
    c.im = rng.uniform_pm1();
  }
  return x;
}

void BM_TableBuild(benchmark::State& state, Strategy s) {
  const std::size_t n = std::size_t(state.range(0));
  for (auto _ : state) {
    TwiddleTable t = build_table(n, s);
    benchmark::DoNotOptimize(t.entries.data());
  }
  state.SetItemsProcessed(state.iterations() * int64_t(n / 2));
}

void BM_Forward(benchmark::State& state, Strategy s, Precision p) {
  const std::size_t n = std::size_t(state.range(0));
  const FftPlan plan = make_plan(n, s, p);
  const SampleBuffer x = random_buffer(n, 42);
  for (auto _ : state) {
    ArithmeticContext ctx(p);
    SampleBuffer out = forward(plan, x, ctx);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * int64_t(n));
}

void BM_DftOracle(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  const SampleBuffer x = random_buffer(n, 7);
  for (auto _ : state) {
    SampleBuffer out = dft_oracle(x);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_TableBuild, dual, Strategy::dual_select)->Arg(1024)->Arg(65536);
BENCHMARK_CAPTURE(BM_TableBuild, lf, Strategy::linzer_feig)->Arg(1024)->Arg(65536);

BENCHMARK_CAPTURE(BM_Forward, standard_fp64, Strategy::standard, Precision::fp64)
    ->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK_CAPTURE(BM_Forward, lf_fp64, Strategy::linzer_feig, Precision::fp64)
    ->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK_CAPTURE(BM_Forward, cosine_fp64, Strategy::cosine, Precision::fp64)
    ->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK_CAPTURE(BM_Forward, dual_fp64, Strategy::dual_select, Precision::fp64)
    ->RangeMultiplier(4)->Range(64, 4096);

BENCHMARK_CAPTURE(BM_Forward, dual_fp32, Strategy::dual_select, Precision::fp32)
    ->Arg(1024);
BENCHMARK_CAPTURE(BM_Forward, dual_fp16, Strategy::dual_select, Precision::fp16)
    ->Arg(1024);
BENCHMARK_CAPTURE(BM_Forward, lf_fp16, Strategy::linzer_feig, Precision::fp16)
    ->Arg(1024);

BENCHMARK(BM_DftOracle)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
