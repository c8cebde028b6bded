// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "binaura/audio.hpp"

namespace binaura {

// Dense complex matrix, column-contiguous with one column per STFT frame.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  std::complex<double>& at(std::size_t row, std::size_t col) {
    return data_[col * rows_ + row];
  }
  const std::complex<double>& at(std::size_t row, std::size_t col) const {
    return data_[col * rows_ + row];
  }

  std::complex<double>* col(std::size_t c) { return data_.data() + c * rows_; }
  const std::complex<double>* col(std::size_t c) const {
    return data_.data() + c * rows_;
  }

  std::vector<std::complex<double>>& flat() { return data_; }
  const std::vector<std::complex<double>>& flat() const { return data_; }

  bool same_shape(const ComplexMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::complex<double>> data_;
};

// Short-time Fourier transform parameters. The defaults are a 25 ms Hann
// window with a 15 ms hop and a 448-point FFT at 16 kHz, giving 225 bins.
struct StftConfig {
  int sample_rate = 16000;
  int window_len = 400;
  int hop_len = 240;
  int fft_size = 448;

  int bins() const { return fft_size / 2 + 1; }

  // Frame count for a signal of the given length under this configuration:
  // frames start at k*hop_len with no center padding.
  std::size_t frames_for(std::size_t num_samples) const;

  // Throws std::invalid_argument unless
  // 0 < hop_len <= window_len <= fft_size and sample_rate > 0.
  void validate() const;

  bool operator==(const StftConfig&) const = default;
};

// One-sided complex spectrogram, bins x frames, together with the transform
// configuration that produced it.
struct ComplexSpectrogram {
  ComplexMatrix data;
  StftConfig config;

  std::size_t bins() const { return data.rows(); }
  std::size_t frames() const { return data.cols(); }
};

// Periodic Hann window: w[n] = 0.5 - 0.5*cos(2*pi*n / window_len).
// Throws std::invalid_argument for window_len < 1.
std::vector<double> hann_window(int window_len);

// Frames at offsets k*hop_len (no center padding), each windowed by the
// periodic Hann window, zero-padded to fft_size and transformed. The result
// is one-sided (fft_size/2 + 1 bins) and unnormalized.
// Requires w.sample_rate == cfg.sample_rate and w.size() >= window_len.
ComplexSpectrogram stft(const Waveform& w, const StftConfig& cfg);

struct SampleRange {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive

  bool operator==(const SampleRange&) const = default;
};

struct IstftResult {
  Waveform audio;
  // Samples where the summed squared-window envelope fell below 1e-12 and the
  // raw (unnormalized) overlap-add sum was kept instead. With the default
  // configuration this is the very first sample only.
  std::vector<SampleRange> raw_edges;
};

// Weighted overlap-add synthesis: each frame's inverse transform is windowed
// again with the Hann synthesis window, summed, and divided by the summed
// squared-window envelope. Requires
// out_len <= (frames - 1) * hop_len + window_len.
// istft(stft(x)) reconstructs x to floating tolerance wherever the envelope
// is nonzero.
IstftResult istft(const ComplexSpectrogram& s, std::size_t out_len);

// Windowed-sinc resampler (64-tap Kaiser window, beta = 8.6). Output length
// is round(len * target_rate / source_rate). Identity (bit-exact copy) when
// the rates already match.
Waveform resample(const Waveform& w, int target_rate);

}  // namespace binaura
