// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "binaura/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fft.hpp"

namespace binaura {

std::size_t StftConfig::frames_for(std::size_t num_samples) const {
  if (num_samples < static_cast<std::size_t>(window_len)) return 0;
  return 1 + (num_samples - static_cast<std::size_t>(window_len)) /
                 static_cast<std::size_t>(hop_len);
}

void StftConfig::validate() const {
  if (sample_rate <= 0)
    throw std::invalid_argument("StftConfig: sample_rate must be positive");
  if (window_len <= 0)
    throw std::invalid_argument("StftConfig: window_len must be positive");
  if (hop_len <= 0 || hop_len > window_len)
    throw std::invalid_argument(
        "StftConfig: hop_len must satisfy 0 < hop_len <= window_len");
  if (fft_size < window_len)
    throw std::invalid_argument("StftConfig: fft_size must be >= window_len");
}

std::vector<double> hann_window(int window_len) {
  if (window_len < 1)
    throw std::invalid_argument("hann_window: length must be >= 1");
  std::vector<double> w(static_cast<std::size_t>(window_len));
  const double step = 2.0 * std::numbers::pi / window_len;
  for (int n = 0; n < window_len; ++n)
    w[static_cast<std::size_t>(n)] = 0.5 - 0.5 * std::cos(step * n);
  return w;
}

ComplexSpectrogram stft(const Waveform& w, const StftConfig& cfg) {
  cfg.validate();
  if (w.sample_rate != cfg.sample_rate)
    throw std::invalid_argument("stft: waveform rate does not match config");
  if (w.samples.size() < static_cast<std::size_t>(cfg.window_len))
    throw std::invalid_argument("stft: signal shorter than one window");

  const std::size_t frames = cfg.frames_for(w.samples.size());
  const std::size_t bins = static_cast<std::size_t>(cfg.bins());
  const std::vector<double> window = hann_window(cfg.window_len);

  ComplexSpectrogram out;
  out.config = cfg;
  out.data = ComplexMatrix(bins, frames);

  detail::RealFft transform(cfg.fft_size);
  std::vector<double> frame(static_cast<std::size_t>(cfg.fft_size), 0.0);
  for (std::size_t f = 0; f < frames; ++f) {
    const std::size_t offset = f * static_cast<std::size_t>(cfg.hop_len);
    for (int n = 0; n < cfg.window_len; ++n)
      frame[static_cast<std::size_t>(n)] =
          w.samples[offset + static_cast<std::size_t>(n)] *
          window[static_cast<std::size_t>(n)];
    // frame[window_len..fft_size) stays zero (zero padding)
    transform.forward(frame.data(), out.data.col(f));
  }
  return out;
}

IstftResult istft(const ComplexSpectrogram& s, std::size_t out_len) {
  const StftConfig& cfg = s.config;
  cfg.validate();
  if (s.bins() != static_cast<std::size_t>(cfg.bins()))
    throw std::invalid_argument("istft: bin count does not match config");
  if (s.frames() == 0)
    throw std::invalid_argument("istft: spectrogram has no frames");

  const std::size_t coverage =
      (s.frames() - 1) * static_cast<std::size_t>(cfg.hop_len) +
      static_cast<std::size_t>(cfg.window_len);
  if (out_len > coverage)
    throw std::invalid_argument(
        "istft: out_len exceeds the span covered by the frames");

  const std::vector<double> window = hann_window(cfg.window_len);

  std::vector<double> acc(coverage, 0.0);
  std::vector<double> envelope(coverage, 0.0);
  detail::RealFft transform(cfg.fft_size);
  std::vector<double> frame(static_cast<std::size_t>(cfg.fft_size));
  for (std::size_t f = 0; f < s.frames(); ++f) {
    transform.inverse(s.data.col(f), frame.data());
    const std::size_t offset = f * static_cast<std::size_t>(cfg.hop_len);
    // Synthesis window matches the analysis window; the zero-padded tail of
    // the inverse transform is discarded.
    for (int n = 0; n < cfg.window_len; ++n) {
      const double wn = window[static_cast<std::size_t>(n)];
      acc[offset + static_cast<std::size_t>(n)] +=
          wn * frame[static_cast<std::size_t>(n)];
      envelope[offset + static_cast<std::size_t>(n)] += wn * wn;
    }
  }

  constexpr double kEnvelopeFloor = 1e-12;
  IstftResult result;
  result.audio.sample_rate = cfg.sample_rate;
  result.audio.samples.resize(out_len);
  for (std::size_t i = 0; i < out_len; ++i) {
    if (envelope[i] >= kEnvelopeFloor) {
      result.audio.samples[i] = acc[i] / envelope[i];
    } else {
      result.audio.samples[i] = acc[i];
      if (!result.raw_edges.empty() && result.raw_edges.back().end == i)
        ++result.raw_edges.back().end;
      else
        result.raw_edges.push_back({i, i + 1});
    }
  }
  return result;
}

namespace {

constexpr double kKaiserBeta = 8.6;
constexpr int kResampleHalfTaps = 32;

// Modified Bessel function of the first kind, order zero, by its power
// series. Converges quickly for the argument range a Kaiser window uses.
double bessel_i0(double x) {
  const double y = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 64; ++k) {
    term *= y / (static_cast<double>(k) * k);
    sum += term;
    if (term < sum * 1e-16) break;
  }
  return sum;
}

double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

}  // namespace

Waveform resample(const Waveform& w, int target_rate) {
  if (target_rate < 1)
    throw std::invalid_argument("resample: target rate must be >= 1");
  if (w.sample_rate <= 0)
    throw std::invalid_argument("resample: source rate must be positive");
  if (target_rate == w.sample_rate) return w;

  const double ratio =
      static_cast<double>(target_rate) / static_cast<double>(w.sample_rate);
  const std::size_t out_len = static_cast<std::size_t>(
      std::llround(static_cast<double>(w.samples.size()) * ratio));

  // When downsampling the kernel is stretched to cut off at the target
  // Nyquist, keeping the nominal 64-tap design at unit rate.
  const double cutoff = std::min(1.0, ratio);
  const double half_width = kResampleHalfTaps / cutoff;
  const double inv_i0_beta = 1.0 / bessel_i0(kKaiserBeta);

  Waveform out;
  out.sample_rate = target_rate;
  out.samples.resize(out_len);
  const auto& x = w.samples;
  const auto n_src = static_cast<long long>(x.size());
  for (std::size_t j = 0; j < out_len; ++j) {
    const double t = static_cast<double>(j) / ratio;  // source-time position
    const auto lo = static_cast<long long>(std::ceil(t - half_width));
    const auto hi = static_cast<long long>(std::floor(t + half_width));
    double sum = 0.0;
    double norm = 0.0;
    for (long long n = lo; n <= hi; ++n) {
      const double u = (static_cast<double>(n) - t) * cutoff;
      const double v = u / kResampleHalfTaps;
      if (v <= -1.0 || v >= 1.0) continue;
      const double tap = cutoff * sinc(u) *
                         bessel_i0(kKaiserBeta * std::sqrt(1.0 - v * v)) *
                         inv_i0_beta;
      norm += tap;
      if (n >= 0 && n < n_src) sum += tap * x[static_cast<std::size_t>(n)];
    }
    out.samples[j] = norm != 0.0 ? sum / norm : 0.0;
  }
  return out;
}

}  // namespace binaura
