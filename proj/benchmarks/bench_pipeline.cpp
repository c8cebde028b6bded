// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <benchmark/benchmark.h>

#include "binaura/harness.hpp"
#include "binaura/metrics.hpp"
#include "fixtures.hpp"

using namespace binaura;

namespace {

void BM_Binauralize10s(benchmark::State& state) {
  const StftConfig cfg;
  const StereoWaveform truth =
      fixtures::dense_panned_fixture(160000, 16000, 11);
  const Waveform mono = mix_to_mono(truth);
  OracleMaskProvider provider(truth, cfg);
  for (auto _ : state)
    benchmark::DoNotOptimize(binauralize(mono, provider, cfg));
}
BENCHMARK(BM_Binauralize10s)->Unit(benchmark::kMillisecond);

void BM_BinauralizeZero10s(benchmark::State& state) {
  const StftConfig cfg;
  const Waveform mono = fixtures::random_waveform(160000, 16000, 12);
  ZeroDifferenceMaskProvider provider;
  for (auto _ : state)
    benchmark::DoNotOptimize(binauralize(mono, provider, cfg));
}
BENCHMARK(BM_BinauralizeZero10s)->Unit(benchmark::kMillisecond);

void BM_EvaluateAll1s(benchmark::State& state) {
  const StftConfig cfg;
  const StereoWaveform real = fixtures::dense_panned_fixture(16000, 16000, 13);
  const StereoWaveform pred = fixtures::dense_panned_fixture(16000, 16000, 14);
  for (auto _ : state)
    benchmark::DoNotOptimize(evaluate_all(real, pred, cfg));
}
BENCHMARK(BM_EvaluateAll1s)->Unit(benchmark::kMillisecond);

void BM_SplCurve10s(benchmark::State& state) {
  const StereoWaveform s = fixtures::dense_panned_fixture(160000, 16000, 15);
  for (auto _ : state) benchmark::DoNotOptimize(spl_curve(s));
}
BENCHMARK(BM_SplCurve10s);

}  // namespace
