// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace binaura::detail {

// FFTW-backed real transform of a fixed size. Instances own their buffers
// and plans, so a single instance must not be shared across threads;
// constructing one is thread-safe (planning is serialized internally).
class RealFft {
 public:
  explicit RealFft(int n);
  ~RealFft();

  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  int size() const { return n_; }
  int bins() const { return n_ / 2 + 1; }

  // Unnormalized forward transform; `out` receives n/2 + 1 bins.
  void forward(const double* in, std::complex<double>* out);

  // Inverse transform normalized by 1/n; `out` receives n samples.
  void inverse(const std::complex<double>* in, double* out);

 private:
  int n_;
  double* real_buf_;
  void* complex_buf_;  // fftw_complex[n/2 + 1]
  void* fwd_plan_;
  void* inv_plan_;
};

// One-shot complex transforms of arbitrary length. Forward is unnormalized;
// the inverse divides by n.
std::vector<std::complex<double>> fft(
    const std::vector<std::complex<double>>& x);
std::vector<std::complex<double>> ifft(
    const std::vector<std::complex<double>>& x);

}  // namespace binaura::detail
