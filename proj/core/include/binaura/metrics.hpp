// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <vector>

#include "binaura/audio.hpp"
#include "binaura/spectral.hpp"

namespace binaura {

// Per-frame left-minus-right sound pressure level, in dB.
struct SpatialCurve {
  std::vector<double> frame_times;  // seconds, k * hop
  std::vector<double> values;       // SPL(left) - SPL(right), dB

  std::size_t size() const { return values.size(); }
};

struct MetricReport {
  double stft_distance = 0.0;
  double env_distance = 0.0;
  double wave_l2 = 0.0;
  double mrstft = 0.0;
  double snr_db = 0.0;
  double spl_distance = 0.0;
  // Set when a silent reference channel forced the spectral-convergence term
  // of some multi-resolution STFT resolution to be skipped.
  bool mrstft_sc_skipped = false;
};

enum class SpectralDistanceKind { Complex, Magnitude };

enum class Direction { Left, Middle, Right };

const char* to_string(Direction d);

// Frobenius distance between two spectrograms of equal shape; on the complex
// difference by default, on magnitude spectra otherwise.
double spectrogram_distance(const ComplexSpectrogram& real,
                            const ComplexSpectrogram& pred,
                            SpectralDistanceKind kind);

// Sum over both channels of the Frobenius distance between real and
// predicted spectrograms.
double stft_distance(const StereoWaveform& real, const StereoWaveform& pred,
                     const StftConfig& cfg,
                     SpectralDistanceKind kind = SpectralDistanceKind::Complex);

// Magnitude of the analytic signal (frequency-domain Hilbert transform over
// the full signal length). Values are >= 0.
Waveform envelope(const Waveform& w);

// Sum over both channels of the Euclidean distance between envelopes.
double env_distance(const StereoWaveform& real, const StereoWaveform& pred);

// Mean squared sample error over both channels.
double wave_l2(const StereoWaveform& real, const StereoWaveform& pred);

// Multi-resolution STFT loss, averaged over both channels and the
// (fft, hop, window) resolutions (512,128,512), (1024,256,1024),
// (2048,512,2048). Each term is spectral convergence + L1 log-magnitude +
// L1 linear-magnitude. Resolutions longer than the signal are skipped; a
// silent reference channel skips that resolution's spectral-convergence term
// and reports it via sc_skipped.
double mrstft(const StereoWaveform& real, const StereoWaveform& pred,
              bool* sc_skipped = nullptr);

// 10*log10(signal power / error power), error power floored at 1e-12 times
// the signal power (capping the result at 120 dB). Throws if the reference
// is all-silent.
double snr(const StereoWaveform& real, const StereoWaveform& pred);

// Sound pressure level of a segment: 20*log10(max(||x||_2, 1e-10) / 2e-5),
// where ||x||_2 is the Euclidean norm of the sample vector. Silence floors
// at 20*log10(1e-10 / 2e-5).
double spl(const Waveform& segment);

// Frame-wise SPL(left) - SPL(right) at the given framing (seconds). Frames
// start at k*hop with no tail frame; requires at least one full frame.
SpatialCurve spl_curve(const StereoWaveform& s, double frame_s = 0.1,
                       double hop_s = 0.1);

// Euclidean norm of the element-wise curve difference. Requires equal frame
// counts and times.
double spl_distance(const SpatialCurve& real_curve,
                    const SpatialCurve& pred_curve);

// Perceived direction of an SPL difference: Left for positive, Right for
// negative, Middle within +/- 1e-9 of zero.
Direction direction(double sd_value_db);

// Perceived magnitude: |sd_value_db|.
double magnitude(double sd_value_db);

// Runs all six metrics with default parameters.
MetricReport evaluate_all(const StereoWaveform& real,
                          const StereoWaveform& pred, const StftConfig& cfg);

}  // namespace binaura
