// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "binaura/harness.hpp"

#include <cmath>
#include <random>

#include <doctest.h>

#include "binaura/metrics.hpp"
#include "fixtures.hpp"
#include "oracle_dsp.hpp"
#include "test_util.hpp"

using namespace binaura;

TEST_CASE("plan_windows covers the reference geometry") {
  const WindowPlan plan = plan_windows(160000, 1.0, 0.1, 16000);
  CHECK(plan.count() == 91);
  CHECK_FALSE(plan.has_tail);
  CHECK(plan.window_len == 16000);
  CHECK(plan.hop == 1600);
  for (std::size_t k = 0; k < plan.count(); ++k)
    CHECK(plan.starts[k] == k * 1600);
}

TEST_CASE("plan_windows single window and tail placement") {
  const WindowPlan single = plan_windows(16000, 1.0, 0.1, 16000);
  CHECK(single.count() == 1);
  CHECK(single.starts[0] == 0);
  CHECK_FALSE(single.has_tail);

  // 1.05 s: one full window plus a tail flush against the end.
  const WindowPlan tail = plan_windows(16800, 1.0, 0.1, 16000);
  CHECK(tail.count() == 2);
  CHECK(tail.starts[0] == 0);
  CHECK(tail.starts[1] == 800);
  CHECK(tail.has_tail);
}

TEST_CASE("plan_windows rejects bad parameters") {
  CHECK_THROWS_AS(plan_windows(15999, 1.0, 0.1, 16000),
                  std::invalid_argument);
  CHECK_THROWS_AS(plan_windows(16000, 0.0, 0.1, 16000),
                  std::invalid_argument);
  CHECK_THROWS_AS(plan_windows(16000, 1.0, -0.1, 16000),
                  std::invalid_argument);
  CHECK_THROWS_AS(plan_windows(32000, 0.5, 1.0, 16000),
                  std::invalid_argument);  // hop > window leaves gaps
  CHECK_THROWS_AS(plan_windows(16000, 1.0, 0.1, 0), std::invalid_argument);
}

TEST_CASE("window coverage matches the interval oracle") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<std::size_t> len(5000, 50000);
  std::uniform_real_distribution<double> hop_s(0.02, 0.3);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t total = len(rng);
    const double hop = hop_s(rng);
    if (total < 4800) continue;
    const WindowPlan plan = plan_windows(total, 0.3, hop, 16000);
    const auto counts = oracle::coverage(plan);
    for (std::size_t n = 0; n < counts.size(); ++n) CHECK(counts[n] >= 1);
  }
}

TEST_CASE("stitch averages overlap and concatenates non-overlap") {
  WindowPlan plan;
  plan.window_len = 4;
  plan.hop = 2;
  plan.total_len = 6;
  plan.starts = {0, 2};

  Waveform a{{1.0, 1.0, 1.0, 1.0}, 16000};
  Waveform b{{1.0, 1.0, 1.0, 1.0}, 16000};
  std::vector<Waveform> same{a, b};
  const Waveform constant = stitch(same, plan);
  for (double v : constant.samples) CHECK(v == 1.0);

  Waveform zeros{{0.0, 0.0, 0.0, 0.0}, 16000};
  Waveform ones{{1.0, 1.0, 1.0, 1.0}, 16000};
  std::vector<Waveform> halves{zeros, ones};
  const Waveform blended = stitch(halves, plan);
  CHECK(blended.samples == std::vector<double>{0.0, 0.0, 0.5, 0.5, 1.0, 1.0});

  WindowPlan butted;
  butted.window_len = 2;
  butted.hop = 2;
  butted.total_len = 4;
  butted.starts = {0, 2};
  Waveform first{{1.0, 2.0}, 16000};
  Waveform second{{3.0, 4.0}, 16000};
  std::vector<Waveform> concat{first, second};
  CHECK(stitch(concat, butted).samples ==
        std::vector<double>{1.0, 2.0, 3.0, 4.0});
}

TEST_CASE("stitch rejects mismatched segments") {
  WindowPlan plan;
  plan.window_len = 4;
  plan.hop = 2;
  plan.total_len = 6;
  plan.starts = {0, 2};
  std::vector<Waveform> wrong_count{Waveform{{1, 1, 1, 1}, 16000}};
  CHECK_THROWS_AS(stitch(wrong_count, plan), std::invalid_argument);
  std::vector<Waveform> wrong_len{Waveform{{1, 1, 1, 1}, 16000},
                                  Waveform{{1, 1}, 16000}};
  CHECK_THROWS_AS(stitch(wrong_len, plan), std::invalid_argument);
}

TEST_CASE("zero provider yields two equal half-mono channels") {
  const StftConfig cfg;
  const Waveform mono = fixtures::random_waveform(24000, 16000, 61, 0.8);
  ZeroDifferenceMaskProvider provider;
  const StereoWaveform out = binauralize(mono, provider, cfg);

  REQUIRE(out.size() == mono.samples.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    CHECK(out.left.samples[i] == out.right.samples[i]);
    CHECK(out.left.samples[i] == mono.samples[i] / 2.0);
  }

  const Waveform remixed = mix_to_mono(out);
  for (std::size_t i = 0; i < remixed.samples.size(); ++i)
    CHECK(std::abs(remixed.samples[i] - mono.samples[i]) <= 1e-12);
}

TEST_CASE("oracle provider reproduces the ground truth") {
  const StftConfig cfg;
  const StereoWaveform truth =
      fixtures::dense_panned_fixture(32000, 16000, 62);
  const Waveform mono = mix_to_mono(truth);
  OracleMaskProvider provider(truth, cfg);
  const StereoWaveform out = binauralize(mono, provider, cfg);

  double err = 0.0, sig = 0.0;
  for (std::size_t i = 400; i + 400 < truth.size(); ++i) {
    const double dl = truth.left.samples[i] - out.left.samples[i];
    const double dr = truth.right.samples[i] - out.right.samples[i];
    err += dl * dl + dr * dr;
    sig += truth.left.samples[i] * truth.left.samples[i] +
           truth.right.samples[i] * truth.right.samples[i];
  }
  CHECK(std::sqrt(err / sig) < 1e-4);
}

TEST_CASE("single-window input passes straight through") {
  const StftConfig cfg;
  const StereoWaveform truth =
      fixtures::dense_panned_fixture(16000, 16000, 63);
  const Waveform mono = mix_to_mono(truth);
  OracleMaskProvider provider(truth, cfg);
  const StereoWaveform out = binauralize(mono, provider, cfg);
  REQUIRE(out.size() == 16000);

  double max_err = 0.0;
  for (std::size_t i = 1; i < out.size(); ++i)
    max_err = std::max(max_err,
                       std::abs(out.left.samples[i] - truth.left.samples[i]));
  CHECK(max_err < 1e-9);
}

TEST_CASE("binauralize is deterministic") {
  const StftConfig cfg;
  const StereoWaveform truth =
      fixtures::dense_panned_fixture(24000, 16000, 64);
  const Waveform mono = mix_to_mono(truth);
  OracleMaskProvider p1(truth, cfg);
  OracleMaskProvider p2(truth, cfg);
  const StereoWaveform a = binauralize(mono, p1, cfg);
  const StereoWaveform b = binauralize(mono, p2, cfg);
  CHECK(a.left.samples == b.left.samples);
  CHECK(a.right.samples == b.right.samples);
}

TEST_CASE("provider failures carry the window index") {
  const StftConfig cfg;
  const StereoWaveform truth =
      fixtures::dense_panned_fixture(32000, 16000, 65);
  const Waveform mono = mix_to_mono(truth);

  // A mask file holding only the first window.
  testutil::TempDir dir;
  OracleMaskProvider oracle_provider(truth, cfg);
  Waveform head;
  head.sample_rate = 16000;
  head.samples.assign(mono.samples.begin(), mono.samples.begin() + 16000);
  MaskFile file;
  file.config = cfg;
  file.segment_samples = 16000;
  file.hop_samples = 1600;
  file.total_samples = mono.samples.size();
  file.masks.push_back(oracle_provider.mask_for(0, stft(head, cfg)));
  const std::string path = dir.file("partial.bmask");
  write_mask_file(path, file);

  FileMaskProvider provider(path);
  try {
    binauralize(mono, provider, cfg);
    FAIL("expected a provider error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("window 1") != std::string::npos);
  }
}

TEST_CASE("binauralize rejects rate mismatch and too-short input") {
  const StftConfig cfg;
  ZeroDifferenceMaskProvider provider;
  Waveform wrong_rate = fixtures::random_waveform(32000, 8000, 66);
  CHECK_THROWS_AS(binauralize(wrong_rate, provider, cfg),
                  std::invalid_argument);
  Waveform too_short = fixtures::random_waveform(8000, 16000, 67);
  CHECK_THROWS_AS(binauralize(too_short, provider, cfg),
                  std::invalid_argument);
}
