// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "binaura/audio.hpp"

#include <cmath>
#include <limits>

#include <doctest.h>

#include "fixtures.hpp"

using namespace binaura;

namespace {

StereoWaveform make_stereo(std::vector<double> l, std::vector<double> r) {
  StereoWaveform s;
  s.left.sample_rate = s.right.sample_rate = 16000;
  s.left.samples = std::move(l);
  s.right.samples = std::move(r);
  return s;
}

}  // namespace

TEST_CASE("mix_to_mono sums the channels") {
  const auto s = make_stereo({1.0, 2.0}, {3.0, 4.0});
  CHECK(mix_to_mono(s).samples == std::vector<double>{4.0, 6.0});

  const auto opposite = make_stereo({0.5, -0.25}, {-0.5, 0.25});
  const Waveform cancelled = mix_to_mono(opposite);
  for (double v : cancelled.samples) CHECK(v == 0.0);

  const auto doubled = make_stereo({0.1, 0.2}, {0.1, 0.2});
  CHECK(mix_to_mono(doubled).samples == std::vector<double>{0.2, 0.4});
}

TEST_CASE("channel_difference subtracts right from left") {
  const auto s = make_stereo({1.0, 2.0}, {3.0, 4.0});
  CHECK(channel_difference(s).samples == std::vector<double>{-2.0, -2.0});

  const auto equal = make_stereo({0.3, 0.7}, {0.3, 0.7});
  const Waveform flat = channel_difference(equal);
  for (double v : flat.samples) CHECK(v == 0.0);

  const auto left_only = make_stereo({0.3, 0.7}, {0.0, 0.0});
  CHECK(channel_difference(left_only).samples ==
        std::vector<double>{0.3, 0.7});
}

TEST_CASE("reconstruct_stereo inverts the mix/difference pair") {
  Waveform mono{{4.0, 6.0}, 16000};
  Waveform diff{{-2.0, -2.0}, 16000};
  const StereoWaveform s = reconstruct_stereo(mono, diff);
  CHECK(s.left.samples == std::vector<double>{1.0, 2.0});
  CHECK(s.right.samples == std::vector<double>{3.0, 4.0});

  Waveform zero{{0.0, 0.0}, 16000};
  const StereoWaveform halves = reconstruct_stereo(mono, zero);
  CHECK(halves.left.samples == std::vector<double>{2.0, 3.0});
  CHECK(halves.right.samples == halves.left.samples);
}

TEST_CASE("round trip through mix and difference is bit-exact on file-"
          "precision samples") {
  // Samples read from WAV files carry float32 (or PCM16) precision, so the
  // sum and difference are exact in double and the round trip is lossless.
  StereoWaveform s = fixtures::random_stereo(4096, 16000, 2024);
  for (auto& v : s.left.samples) v = static_cast<float>(v);
  for (auto& v : s.right.samples) v = static_cast<float>(v);

  const StereoWaveform back =
      reconstruct_stereo(mix_to_mono(s), channel_difference(s));
  CHECK(back.left.samples == s.left.samples);
  CHECK(back.right.samples == s.right.samples);
}

TEST_CASE("round trip on full-precision samples stays within an ulp") {
  // With arbitrary doubles the mix and difference each round once, so the
  // reconstruction can be off in the last bit; it cannot drift further.
  const StereoWaveform s = fixtures::random_stereo(4096, 16000, 2025);
  const StereoWaveform back =
      reconstruct_stereo(mix_to_mono(s), channel_difference(s));
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(std::abs(back.left.samples[i] - s.left.samples[i]) <=
          2.0 * std::numeric_limits<double>::epsilon());
    CHECK(std::abs(back.right.samples[i] - s.right.samples[i]) <=
          2.0 * std::numeric_limits<double>::epsilon());
  }
}

TEST_CASE("reconstruct_stereo rejects misaligned inputs") {
  Waveform mono{{1.0, 2.0}, 16000};
  Waveform diff{{1.0}, 16000};
  CHECK_THROWS_AS(reconstruct_stereo(mono, diff), std::invalid_argument);

  Waveform wrong_rate{{1.0, 2.0}, 8000};
  CHECK_THROWS_AS(reconstruct_stereo(mono, wrong_rate), std::invalid_argument);
}

TEST_CASE("check_aligned flags mismatched stereo") {
  auto s = make_stereo({1.0, 2.0}, {3.0});
  CHECK_THROWS_AS(check_aligned(s), std::invalid_argument);
  s = make_stereo({1.0}, {3.0});
  s.right.sample_rate = 8000;
  CHECK_THROWS_AS(check_aligned(s), std::invalid_argument);
}
