// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "binaura/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <stdexcept>

#include "fft.hpp"

namespace binaura {

namespace {

constexpr double kSplReferencePressure = 2e-5;
constexpr double kSplNormFloor = 1e-10;
constexpr double kSnrErrorFloorRatio = 1e-12;  // caps SNR at 120 dB
constexpr double kLogMagnitudeEps = 1e-7;
constexpr double kDirectionTolerance = 1e-9;

double euclidean_norm(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

}  // namespace

const char* to_string(Direction d) {
  switch (d) {
    case Direction::Left:
      return "Left";
    case Direction::Middle:
      return "Middle";
    case Direction::Right:
      return "Right";
  }
  return "Middle";
}

double spectrogram_distance(const ComplexSpectrogram& real,
                            const ComplexSpectrogram& pred,
                            SpectralDistanceKind kind) {
  if (!real.data.same_shape(pred.data))
    throw std::invalid_argument("spectrogram_distance: shape mismatch");
  const auto& a = real.data.flat();
  const auto& b = pred.data.flat();
  double sum = 0.0;
  if (kind == SpectralDistanceKind::Complex) {
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::norm(a[i] - b[i]);
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double d = std::abs(a[i]) - std::abs(b[i]);
      sum += d * d;
    }
  }
  return std::sqrt(sum);
}

double stft_distance(const StereoWaveform& real, const StereoWaveform& pred,
                     const StftConfig& cfg, SpectralDistanceKind kind) {
  check_aligned(real, pred);
  return spectrogram_distance(stft(real.left, cfg), stft(pred.left, cfg),
                              kind) +
         spectrogram_distance(stft(real.right, cfg), stft(pred.right, cfg),
                              kind);
}

Waveform envelope(const Waveform& w) {
  if (w.samples.empty()) throw std::invalid_argument("envelope: empty signal");
  const std::size_t n = w.samples.size();
  std::vector<std::complex<double>> spec(n);
  for (std::size_t i = 0; i < n; ++i) spec[i] = w.samples[i];
  spec = detail::fft(spec);

  // Analytic-signal multiplier: keep DC (and Nyquist for even lengths),
  // double the positive frequencies, zero the negative ones.
  const std::size_t half = n / 2;
  for (std::size_t k = 1; k < n; ++k) {
    if (n % 2 == 0 && k == half) continue;
    if (k < half || (n % 2 == 1 && k == half)) {
      spec[k] *= 2.0;
    } else {
      spec[k] = 0.0;
    }
  }
  const std::vector<std::complex<double>> analytic = detail::ifft(spec);

  Waveform out;
  out.sample_rate = w.sample_rate;
  out.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.samples[i] = std::abs(analytic[i]);
  return out;
}

double env_distance(const StereoWaveform& real, const StereoWaveform& pred) {
  check_aligned(real, pred);
  double total = 0.0;
  for (int ch = 0; ch < 2; ++ch) {
    const Waveform& a = ch == 0 ? real.left : real.right;
    const Waveform& b = ch == 0 ? pred.left : pred.right;
    const Waveform ea = envelope(a);
    const Waveform eb = envelope(b);
    double sum = 0.0;
    for (std::size_t i = 0; i < ea.samples.size(); ++i) {
      const double d = ea.samples[i] - eb.samples[i];
      sum += d * d;
    }
    total += std::sqrt(sum);
  }
  return total;
}

double wave_l2(const StereoWaveform& real, const StereoWaveform& pred) {
  check_aligned(real, pred);
  if (real.size() == 0) throw std::invalid_argument("wave_l2: empty signals");
  double sum = 0.0;
  for (std::size_t i = 0; i < real.size(); ++i) {
    const double dl = real.left.samples[i] - pred.left.samples[i];
    const double dr = real.right.samples[i] - pred.right.samples[i];
    sum += dl * dl + dr * dr;
  }
  return sum / (2.0 * static_cast<double>(real.size()));
}

namespace {

struct MrStftResolution {
  int fft;
  int hop;
  int window;
};

constexpr std::array<MrStftResolution, 3> kMrStftResolutions = {
    MrStftResolution{512, 128, 512}, MrStftResolution{1024, 256, 1024},
    MrStftResolution{2048, 512, 2048}};

}  // namespace

double mrstft(const StereoWaveform& real, const StereoWaveform& pred,
              bool* sc_skipped) {
  check_aligned(real, pred);
  if (sc_skipped) *sc_skipped = false;

  double total = 0.0;
  std::size_t terms = 0;
  for (const auto& res : kMrStftResolutions) {
    if (real.size() < static_cast<std::size_t>(res.window)) continue;
    StftConfig cfg{real.sample_rate(), res.window, res.hop, res.fft};
    double channel_value[2] = {0.0, 0.0};
    for (int ch = 0; ch < 2; ++ch) {
      const Waveform& a = ch == 0 ? real.left : real.right;
      const Waveform& b = ch == 0 ? pred.left : pred.right;
      const ComplexSpectrogram sa = stft(a, cfg);
      const ComplexSpectrogram sb = stft(b, cfg);
      const auto& fa = sa.data.flat();
      const auto& fb = sb.data.flat();

      double ref_sq = 0.0, diff_sq = 0.0, log_l1 = 0.0, lin_l1 = 0.0;
      for (std::size_t i = 0; i < fa.size(); ++i) {
        const double ma = std::abs(fa[i]);
        const double mb = std::abs(fb[i]);
        ref_sq += ma * ma;
        const double d = ma - mb;
        diff_sq += d * d;
        log_l1 += std::abs(std::log(ma + kLogMagnitudeEps) -
                           std::log(mb + kLogMagnitudeEps));
        lin_l1 += std::abs(d);
      }
      const auto count = static_cast<double>(fa.size());
      double value = log_l1 / count + lin_l1 / count;
      if (ref_sq > 0.0) {
        value += std::sqrt(diff_sq) / std::sqrt(ref_sq);
      } else if (sc_skipped) {
        *sc_skipped = true;
      }
      channel_value[ch] = value;
    }
    // Channels combine with one commutative addition so that swapping left
    // and right in both inputs leaves the result bit-identical.
    total += channel_value[0] + channel_value[1];
    terms += 2;
  }
  if (terms == 0)
    throw std::invalid_argument(
        "mrstft: signal shorter than every resolution window");
  return total / static_cast<double>(terms);
}

double snr(const StereoWaveform& real, const StereoWaveform& pred) {
  check_aligned(real, pred);
  double signal = 0.0, error = 0.0;
  for (std::size_t i = 0; i < real.size(); ++i) {
    const double l = real.left.samples[i];
    const double r = real.right.samples[i];
    signal += l * l + r * r;
    const double dl = l - pred.left.samples[i];
    const double dr = r - pred.right.samples[i];
    error += dl * dl + dr * dr;
  }
  if (signal <= 0.0)
    throw std::invalid_argument("snr: reference signal is all-silent");
  error = std::max(error, kSnrErrorFloorRatio * signal);
  return 10.0 * std::log10(signal / error);
}

double spl(const Waveform& segment) {
  if (segment.samples.empty())
    throw std::invalid_argument("spl: empty segment");
  const double norm =
      std::max(euclidean_norm(segment.samples), kSplNormFloor);
  return 20.0 * std::log10(norm / kSplReferencePressure);
}

SpatialCurve spl_curve(const StereoWaveform& s, double frame_s, double hop_s) {
  check_aligned(s);
  if (!(frame_s > 0.0) || !(hop_s > 0.0))
    throw std::invalid_argument("spl_curve: frame and hop must be positive");
  const auto frame_len =
      static_cast<std::size_t>(std::llround(frame_s * s.sample_rate()));
  const auto hop_len =
      static_cast<std::size_t>(std::llround(hop_s * s.sample_rate()));
  if (frame_len == 0 || hop_len == 0)
    throw std::invalid_argument("spl_curve: framing shorter than one sample");
  if (s.size() < frame_len)
    throw std::invalid_argument("spl_curve: signal shorter than one frame");

  const std::size_t frames = 1 + (s.size() - frame_len) / hop_len;
  SpatialCurve curve;
  curve.frame_times.resize(frames);
  curve.values.resize(frames);
  for (std::size_t k = 0; k < frames; ++k) {
    const std::size_t off = k * hop_len;
    const double left_norm = std::max(
        euclidean_norm({s.left.samples.data() + off, frame_len}),
        kSplNormFloor);
    const double right_norm = std::max(
        euclidean_norm({s.right.samples.data() + off, frame_len}),
        kSplNormFloor);
    curve.frame_times[k] = static_cast<double>(k) * hop_s;
    curve.values[k] = 20.0 * std::log10(left_norm / kSplReferencePressure) -
                      20.0 * std::log10(right_norm / kSplReferencePressure);
  }
  return curve;
}

double spl_distance(const SpatialCurve& real_curve,
                    const SpatialCurve& pred_curve) {
  if (real_curve.values.size() != pred_curve.values.size())
    throw std::invalid_argument("spl_distance: frame count mismatch");
  for (std::size_t i = 0; i < real_curve.frame_times.size(); ++i)
    if (real_curve.frame_times[i] != pred_curve.frame_times[i])
      throw std::invalid_argument("spl_distance: frame times differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < real_curve.values.size(); ++i) {
    const double d = real_curve.values[i] - pred_curve.values[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

Direction direction(double sd_value_db) {
  if (sd_value_db < -kDirectionTolerance) return Direction::Right;
  if (sd_value_db > kDirectionTolerance) return Direction::Left;
  return Direction::Middle;
}

double magnitude(double sd_value_db) { return std::abs(sd_value_db); }

MetricReport evaluate_all(const StereoWaveform& real,
                          const StereoWaveform& pred, const StftConfig& cfg) {
  check_aligned(real, pred);
  MetricReport report;
  report.stft_distance = stft_distance(real, pred, cfg);
  report.env_distance = env_distance(real, pred);
  report.wave_l2 = wave_l2(real, pred);
  report.mrstft = mrstft(real, pred, &report.mrstft_sc_skipped);
  report.snr_db = snr(real, pred);
  report.spl_distance = spl_distance(spl_curve(real), spl_curve(pred));
  return report;
}

}  // namespace binaura
