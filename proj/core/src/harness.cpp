// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "binaura/harness.hpp"

#include <cmath>
#include <stdexcept>

namespace binaura {

WindowPlan plan_windows(std::size_t total_len, double window_s, double hop_s,
                        int rate) {
  if (rate <= 0) throw std::invalid_argument("plan_windows: invalid rate");
  if (!(window_s > 0.0) || !(hop_s > 0.0))
    throw std::invalid_argument(
        "plan_windows: window and hop must be positive");
  const auto window_len =
      static_cast<std::size_t>(std::llround(window_s * rate));
  const auto hop = static_cast<std::size_t>(std::llround(hop_s * rate));
  if (window_len == 0 || hop == 0)
    throw std::invalid_argument("plan_windows: window or hop below 1 sample");
  if (hop > window_len)
    throw std::invalid_argument(
        "plan_windows: hop larger than window would leave gaps");
  if (total_len < window_len)
    throw std::invalid_argument("plan_windows: audio shorter than one window");

  WindowPlan plan;
  plan.window_len = window_len;
  plan.hop = hop;
  plan.total_len = total_len;
  const std::size_t full = 1 + (total_len - window_len) / hop;
  plan.starts.reserve(full + 1);
  for (std::size_t k = 0; k < full; ++k) plan.starts.push_back(k * hop);
  if (plan.starts.back() + window_len < total_len) {
    plan.starts.push_back(total_len - window_len);
    plan.has_tail = true;
  }
  return plan;
}

OracleMaskProvider::OracleMaskProvider(const StereoWaveform& truth,
                                       const StftConfig& cfg, double window_s,
                                       double hop_s, double eps)
    : diff_(channel_difference(truth)),
      cfg_(cfg),
      plan_(plan_windows(diff_.samples.size(), window_s, hop_s,
                         cfg.sample_rate)),
      eps_(eps) {
  cfg_.validate();
  if (truth.sample_rate() != cfg.sample_rate)
    throw std::invalid_argument(
        "OracleMaskProvider: truth rate does not match config");
}

ComplexMask OracleMaskProvider::mask_for(std::size_t window_index,
                                         const ComplexSpectrogram& mono_spec) {
  if (window_index >= plan_.count())
    throw std::runtime_error("oracle provider has no window " +
                             std::to_string(window_index));
  if (!(mono_spec.config == cfg_))
    throw std::runtime_error(
        "oracle provider queried with a mismatched transform configuration");
  const std::size_t start = plan_.starts[window_index];
  Waveform segment;
  segment.sample_rate = cfg_.sample_rate;
  segment.samples.assign(diff_.samples.begin() + static_cast<long>(start),
                         diff_.samples.begin() +
                             static_cast<long>(start + plan_.window_len));
  return oracle_mask(mono_spec, stft(segment, cfg_), eps_);
}

ComplexMask ZeroDifferenceMaskProvider::mask_for(
    std::size_t /*window_index*/, const ComplexSpectrogram& mono_spec) {
  ComplexMask mask;
  mask.bounded = true;
  mask.data = ComplexMatrix(mono_spec.bins(), mono_spec.frames());
  return mask;
}

FileMaskProvider::FileMaskProvider(const std::string& path)
    : file_(read_mask_file(path)) {}

ComplexMask FileMaskProvider::mask_for(std::size_t window_index,
                                       const ComplexSpectrogram& mono_spec) {
  if (window_index >= file_.masks.size())
    throw std::runtime_error("mask file has no window " +
                             std::to_string(window_index) + " (contains " +
                             std::to_string(file_.masks.size()) + ")");
  if (!(file_.config == mono_spec.config))
    throw std::runtime_error(
        "mask file transform configuration does not match window " +
        std::to_string(window_index));
  const ComplexMask& mask = file_.masks[window_index];
  if (!mask.data.same_shape(mono_spec.data))
    throw std::runtime_error("mask shape mismatch at window " +
                             std::to_string(window_index));
  return mask;
}

Waveform stitch(std::span<const Waveform> segments, const WindowPlan& plan) {
  if (segments.size() != plan.count())
    throw std::invalid_argument("stitch: segment count does not match plan");
  for (const Waveform& seg : segments) {
    if (seg.samples.size() != plan.window_len)
      throw std::invalid_argument("stitch: segment length mismatch");
    if (seg.sample_rate != segments.front().sample_rate)
      throw std::invalid_argument("stitch: segment sample-rate mismatch");
  }

  std::vector<double> acc(plan.total_len, 0.0);
  std::vector<std::uint32_t> coverage(plan.total_len, 0);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const std::size_t start = plan.starts[i];
    const auto& samples = segments[i].samples;
    for (std::size_t j = 0; j < samples.size(); ++j) {
      acc[start + j] += samples[j];
      ++coverage[start + j];
    }
  }

  Waveform out;
  out.sample_rate = segments.empty() ? 0 : segments.front().sample_rate;
  out.samples.resize(plan.total_len);
  for (std::size_t n = 0; n < plan.total_len; ++n)
    out.samples[n] = coverage[n] > 0 ? acc[n] / coverage[n] : 0.0;
  return out;
}

StereoWaveform binauralize(const Waveform& mono, MaskProvider& provider,
                           const StftConfig& cfg, double window_s,
                           double hop_s) {
  cfg.validate();
  if (mono.sample_rate != cfg.sample_rate)
    throw std::invalid_argument("binauralize: mono rate does not match config");
  const WindowPlan plan =
      plan_windows(mono.samples.size(), window_s, hop_s, cfg.sample_rate);
  if (plan.window_len < static_cast<std::size_t>(cfg.window_len))
    throw std::invalid_argument(
        "binauralize: sliding window shorter than the analysis window");

  // Coverage-weighted average of the per-window difference segments.
  // Samples the inverse transform could not normalize (zero synthesis
  // envelope, e.g. the first sample of every segment under a periodic Hann
  // window) are excluded; they fall back to the raw synthesis values only
  // where no window provides a normalized sample.
  std::vector<double> acc(plan.total_len, 0.0);
  std::vector<std::uint32_t> coverage(plan.total_len, 0);
  std::vector<double> raw_acc(plan.total_len, 0.0);
  std::vector<std::uint32_t> raw_count(plan.total_len, 0);

  Waveform segment;
  segment.sample_rate = cfg.sample_rate;
  for (std::size_t i = 0; i < plan.count(); ++i) {
    const std::size_t start = plan.starts[i];
    segment.samples.assign(
        mono.samples.begin() + static_cast<long>(start),
        mono.samples.begin() + static_cast<long>(start + plan.window_len));
    const ComplexSpectrogram mono_spec = stft(segment, cfg);

    ComplexMask mask;
    try {
      mask = provider.mask_for(i, mono_spec);
    } catch (const std::exception& e) {
      throw std::runtime_error("mask provider failed at window " +
                               std::to_string(i) + ": " + e.what());
    }

    const ComplexSpectrogram masked = apply_mask(mono_spec, mask);
    const std::size_t covered =
        (masked.frames() - 1) * static_cast<std::size_t>(cfg.hop_len) +
        static_cast<std::size_t>(cfg.window_len);
    const IstftResult synth = istft(masked, covered);

    std::size_t edge = 0;
    for (std::size_t j = 0; j < covered; ++j) {
      while (edge < synth.raw_edges.size() && synth.raw_edges[edge].end <= j)
        ++edge;
      const bool flagged = edge < synth.raw_edges.size() &&
                           synth.raw_edges[edge].begin <= j &&
                           j < synth.raw_edges[edge].end;
      if (flagged) {
        raw_acc[start + j] += synth.audio.samples[j];
        ++raw_count[start + j];
      } else {
        acc[start + j] += synth.audio.samples[j];
        ++coverage[start + j];
      }
    }
  }

  Waveform diff;
  diff.sample_rate = cfg.sample_rate;
  diff.samples.resize(plan.total_len);
  for (std::size_t n = 0; n < plan.total_len; ++n) {
    if (coverage[n] > 0)
      diff.samples[n] = acc[n] / coverage[n];
    else if (raw_count[n] > 0)
      diff.samples[n] = raw_acc[n] / raw_count[n];
    else
      diff.samples[n] = 0.0;
  }
  return reconstruct_stereo(mono, diff);
}

}  // namespace binaura
