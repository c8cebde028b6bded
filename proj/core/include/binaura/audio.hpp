// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstddef>
#include <vector>

namespace binaura {

// Single-channel audio. Samples are dimensionless amplitudes, nominally in
// [-1, 1), and are expected to be finite; file readers enforce this.
struct Waveform {
  std::vector<double> samples;
  int sample_rate = 0;

  std::size_t size() const { return samples.size(); }
  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

// Left/right channel pair of equal length and rate.
struct StereoWaveform {
  Waveform left;
  Waveform right;

  std::size_t size() const { return left.samples.size(); }
  int sample_rate() const { return left.sample_rate; }
};

// Throws std::invalid_argument if the channels differ in length or rate.
void check_aligned(const StereoWaveform& s);

// Throws std::invalid_argument if the two stereo signals are not mutually
// aligned (or not internally consistent).
void check_aligned(const StereoWaveform& a, const StereoWaveform& b);

// Mono mixdown: out[i] = left[i] + right[i]. Note this doubles full-scale
// amplitude; it is not a mean.
Waveform mix_to_mono(const StereoWaveform& s);

// Channel difference: out[i] = left[i] - right[i].
Waveform channel_difference(const StereoWaveform& s);

// Inverse of the (mix, difference) pair:
//   left  = (mono + diff) / 2
//   right = (mono - diff) / 2
// reconstruct_stereo(mix_to_mono(s), channel_difference(s)) == s bit-exactly.
StereoWaveform reconstruct_stereo(const Waveform& mono, const Waveform& diff);

}  // namespace binaura
