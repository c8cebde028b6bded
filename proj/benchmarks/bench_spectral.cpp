// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <benchmark/benchmark.h>

#include "binaura/metrics.hpp"
#include "binaura/spectral.hpp"
#include "fixtures.hpp"

using namespace binaura;

namespace {

void BM_Stft1s(benchmark::State& state) {
  const StftConfig cfg;
  const Waveform x = fixtures::random_waveform(16000, 16000, 1);
  for (auto _ : state) benchmark::DoNotOptimize(stft(x, cfg));
}
BENCHMARK(BM_Stft1s);

void BM_Istft1s(benchmark::State& state) {
  const StftConfig cfg;
  const Waveform x = fixtures::random_waveform(16000, 16000, 2);
  const ComplexSpectrogram s = stft(x, cfg);
  for (auto _ : state) benchmark::DoNotOptimize(istft(s, 16000));
}
BENCHMARK(BM_Istft1s);

void BM_Roundtrip1s(benchmark::State& state) {
  const StftConfig cfg;
  const Waveform x = fixtures::random_waveform(16000, 16000, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(istft(stft(x, cfg), 16000));
}
BENCHMARK(BM_Roundtrip1s);

void BM_Envelope1s(benchmark::State& state) {
  const Waveform x = fixtures::random_waveform(16000, 16000, 4);
  for (auto _ : state) benchmark::DoNotOptimize(envelope(x));
}
BENCHMARK(BM_Envelope1s);

void BM_ResampleTo48k(benchmark::State& state) {
  const Waveform x = fixtures::random_waveform(16000, 16000, 5);
  for (auto _ : state) benchmark::DoNotOptimize(resample(x, 48000));
}
BENCHMARK(BM_ResampleTo48k);

}  // namespace
