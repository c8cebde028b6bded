// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "binaura/audio.hpp"

#include <stdexcept>

namespace binaura {

void check_aligned(const StereoWaveform& s) {
  if (s.left.samples.size() != s.right.samples.size())
    throw std::invalid_argument("stereo channels differ in length");
  if (s.left.sample_rate != s.right.sample_rate)
    throw std::invalid_argument("stereo channels differ in sample rate");
}

void check_aligned(const StereoWaveform& a, const StereoWaveform& b) {
  check_aligned(a);
  check_aligned(b);
  if (a.size() != b.size())
    throw std::invalid_argument("stereo signals differ in length");
  if (a.sample_rate() != b.sample_rate())
    throw std::invalid_argument("stereo signals differ in sample rate");
}

Waveform mix_to_mono(const StereoWaveform& s) {
  check_aligned(s);
  Waveform out;
  out.sample_rate = s.left.sample_rate;
  out.samples.resize(s.size());
  for (std::size_t i = 0; i < out.samples.size(); ++i)
    out.samples[i] = s.left.samples[i] + s.right.samples[i];
  return out;
}

Waveform channel_difference(const StereoWaveform& s) {
  check_aligned(s);
  Waveform out;
  out.sample_rate = s.left.sample_rate;
  out.samples.resize(s.size());
  for (std::size_t i = 0; i < out.samples.size(); ++i)
    out.samples[i] = s.left.samples[i] - s.right.samples[i];
  return out;
}

StereoWaveform reconstruct_stereo(const Waveform& mono, const Waveform& diff) {
  if (mono.samples.size() != diff.samples.size())
    throw std::invalid_argument("reconstruct_stereo: length mismatch");
  if (mono.sample_rate != diff.sample_rate)
    throw std::invalid_argument("reconstruct_stereo: sample-rate mismatch");
  StereoWaveform out;
  out.left.sample_rate = out.right.sample_rate = mono.sample_rate;
  out.left.samples.resize(mono.samples.size());
  out.right.samples.resize(mono.samples.size());
  for (std::size_t i = 0; i < mono.samples.size(); ++i) {
    out.left.samples[i] = (mono.samples[i] + diff.samples[i]) / 2.0;
    out.right.samples[i] = (mono.samples[i] - diff.samples[i]) / 2.0;
  }
  return out;
}

}  // namespace binaura
