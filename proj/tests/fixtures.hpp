// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

// Deterministic synthetic signals shared by the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "binaura/audio.hpp"

namespace fixtures {

inline binaura::Waveform random_waveform(std::size_t n, int rate,
                                         std::uint64_t seed,
                                         double amplitude = 0.5) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-amplitude, amplitude);
  binaura::Waveform w;
  w.sample_rate = rate;
  w.samples.resize(n);
  for (auto& s : w.samples) s = dist(rng);
  return w;
}

inline binaura::StereoWaveform random_stereo(std::size_t n, int rate,
                                             std::uint64_t seed,
                                             double amplitude = 0.5) {
  binaura::StereoWaveform s;
  s.left = random_waveform(n, rate, seed, amplitude);
  s.right = random_waveform(n, rate, seed ^ 0x9e3779b97f4a7c15ull, amplitude);
  return s;
}

// Panned sine mixture over a broadband bed, built so the mono spectrum of
// every analysis frame stays well away from zero:
//
//  - The bed is a fixed-phase multisine with one tooth on every
//    fft_size-grid bin (DC and Nyquist included). It is exactly periodic in
//    fft_size samples and is added identically to both channels, so it
//    cancels in the channel difference. The phase sequence was picked by an
//    offline search maximizing the worst-case windowed-spectrum magnitude
//    over all cyclic frame offsets (floor ~1.7 per unit tooth amplitude).
//  - The panned content is a handful of strong bin-centered sines with
//    per-channel gains. Pure sines make the difference vanish at t = 0,
//    which keeps the one synthesis-envelope-degenerate sample exact.
inline binaura::StereoWaveform dense_panned_fixture(std::size_t num_samples,
                                                    int rate,
                                                    std::uint64_t seed,
                                                    int fft_size = 448) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> gain(0.3, 1.0);

  const int bins = fft_size / 2 + 1;
  const double two_pi = 2.0 * std::numbers::pi;

  std::vector<double> bed(static_cast<std::size_t>(fft_size), 0.0);
  const double bed_amp = 0.005;
  std::mt19937_64 phase_rng(60);  // do not change: picked by the search
  std::vector<double> tooth_phase(static_cast<std::size_t>(bins));
  for (auto& p : tooth_phase)
    p = two_pi * static_cast<double>(phase_rng() >> 11) / 9007199254740992.0;
  for (int n = 0; n < fft_size; ++n) {
    double v = 0.0;
    for (int k = 0; k < bins; ++k)
      v += bed_amp * std::cos(two_pi * k * n / fft_size +
                              tooth_phase[static_cast<std::size_t>(k)]);
    bed[static_cast<std::size_t>(n)] = v;
  }

  struct Source {
    double freq, amp, left_gain, right_gain;
  };
  const int source_bins[6] = {11, 28, 47, 83, 131, 190};
  std::vector<Source> sources;
  for (int i = 0; i < 6; ++i) {
    Source c;
    c.freq = static_cast<double>(source_bins[i]) * rate / fft_size;
    c.amp = 0.04;
    c.left_gain = i % 2 == 0 ? gain(rng) + 0.7 : gain(rng) * 0.5;
    c.right_gain = i % 2 == 0 ? gain(rng) * 0.5 : gain(rng) + 0.7;
    sources.push_back(c);
  }

  binaura::StereoWaveform s;
  s.left.sample_rate = s.right.sample_rate = rate;
  s.left.samples.resize(num_samples);
  s.right.samples.resize(num_samples);
  for (std::size_t n = 0; n < num_samples; ++n) {
    const double t = static_cast<double>(n) / rate;
    double l = bed[n % static_cast<std::size_t>(fft_size)];
    double r = l;
    for (const Source& c : sources) {
      const double v = c.amp * std::sin(two_pi * c.freq * t);
      l += c.left_gain * v;
      r += c.right_gain * v;
    }
    s.left.samples[n] = l;
    s.right.samples[n] = r;
  }

  // Keep the mono mixdown inside (-0.9, 0.9) so WAV round trips never clip.
  double mono_peak = 0.0;
  for (std::size_t n = 0; n < num_samples; ++n)
    mono_peak = std::max(mono_peak,
                         std::abs(s.left.samples[n] + s.right.samples[n]));
  if (mono_peak > 0.9) {
    const double scale = 0.9 / mono_peak;
    for (auto& v : s.left.samples) v *= scale;
    for (auto& v : s.right.samples) v *= scale;
  }
  return s;
}

}  // namespace fixtures
