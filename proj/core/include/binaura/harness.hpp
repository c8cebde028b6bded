// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "binaura/audio.hpp"
#include "binaura/mask.hpp"
#include "binaura/mask_file.hpp"
#include "binaura/spectral.hpp"

namespace binaura {

// Sliding-window segmentation of a clip. Full windows start at k*hop; when
// they do not reach the end of the clip, one extra tail window is placed
// flush against the end (has_tail), so every sample is covered.
struct WindowPlan {
  std::vector<std::size_t> starts;
  std::size_t window_len = 0;
  std::size_t hop = 0;
  std::size_t total_len = 0;
  bool has_tail = false;

  std::size_t count() const { return starts.size(); }
};

// Defaults: 1 s windows with a 0.1 s hop. Throws std::invalid_argument when
// the clip is shorter than one window, the parameters are non-positive, or
// hop exceeds the window (which would leave gaps).
WindowPlan plan_windows(std::size_t total_len, double window_s, double hop_s,
                        int rate);

// Source of complex masks for the sliding-window pipeline: given the mono
// segment spectrogram of one planned window, yields a mask of the same shape.
class MaskProvider {
 public:
  virtual ~MaskProvider() = default;
  virtual ComplexMask mask_for(std::size_t window_index,
                               const ComplexSpectrogram& mono_spec) = 0;
};

// Ground-truth inversion: masks are diff/mono computed from the reference
// stereo, so the pipeline reproduces it wherever the mono spectrum is
// non-degenerate.
class OracleMaskProvider : public MaskProvider {
 public:
  OracleMaskProvider(const StereoWaveform& truth, const StftConfig& cfg,
                     double window_s = 1.0, double hop_s = 0.1,
                     double eps = 1e-8);

  ComplexMask mask_for(std::size_t window_index,
                       const ComplexSpectrogram& mono_spec) override;

 private:
  Waveform diff_;
  StftConfig cfg_;
  WindowPlan plan_;
  double eps_;
};

// All-zero masks: the difference signal vanishes and both output channels
// equal mono/2.
class ZeroDifferenceMaskProvider : public MaskProvider {
 public:
  ComplexMask mask_for(std::size_t window_index,
                       const ComplexSpectrogram& mono_spec) override;
};

// Masks loaded from a mask container file; the file header and each record
// are validated against the querying spectrogram.
class FileMaskProvider : public MaskProvider {
 public:
  explicit FileMaskProvider(const std::string& path);

  ComplexMask mask_for(std::size_t window_index,
                       const ComplexSpectrogram& mono_spec) override;

  const MaskFile& file() const { return file_; }

 private:
  MaskFile file_;
};

// Sample-wise sum of overlapping segments divided by the number of windows
// covering each sample. Requires one segment per planned window, each of
// plan.window_len samples.
Waveform stitch(std::span<const Waveform> segments, const WindowPlan& plan);

// Full mono-to-stereo pipeline: per planned window, STFT of the mono
// segment, provider mask, mask application and inverse STFT produce a
// difference segment; segments are combined by coverage-weighted averaging
// (samples the inverse STFT flagged as unnormalized are left out of the
// average) and the stereo pair is rebuilt from (mono, difference).
// Provider failures are rethrown with the offending window index.
StereoWaveform binauralize(const Waveform& mono, MaskProvider& provider,
                           const StftConfig& cfg, double window_s = 1.0,
                           double hop_s = 0.1);

}  // namespace binaura
