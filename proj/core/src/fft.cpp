// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <stdexcept>

namespace binaura::detail {

namespace {

// FFTW's planner is not thread-safe; plan creation/destruction is serialized.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

RealFft::RealFft(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("RealFft: size must be positive");
  real_buf_ = fftw_alloc_real(static_cast<std::size_t>(n));
  fftw_complex* cbuf = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
  complex_buf_ = cbuf;
  std::lock_guard lock(planner_mutex());
  fwd_plan_ = fftw_plan_dft_r2c_1d(n, real_buf_, cbuf, FFTW_ESTIMATE);
  inv_plan_ = fftw_plan_dft_c2r_1d(n, cbuf, real_buf_, FFTW_ESTIMATE);
}

RealFft::~RealFft() {
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(fwd_plan_));
    fftw_destroy_plan(static_cast<fftw_plan>(inv_plan_));
  }
  fftw_free(real_buf_);
  fftw_free(complex_buf_);
}

void RealFft::forward(const double* in, std::complex<double>* out) {
  std::memcpy(real_buf_, in, sizeof(double) * static_cast<std::size_t>(n_));
  fftw_execute(static_cast<fftw_plan>(fwd_plan_));
  std::memcpy(out, complex_buf_,
              sizeof(std::complex<double>) * static_cast<std::size_t>(bins()));
}

void RealFft::inverse(const std::complex<double>* in, double* out) {
  std::memcpy(complex_buf_, in,
              sizeof(std::complex<double>) * static_cast<std::size_t>(bins()));
  fftw_execute(static_cast<fftw_plan>(inv_plan_));
  const double scale = 1.0 / n_;
  for (int i = 0; i < n_; ++i) out[i] = real_buf_[i] * scale;
}

namespace {

std::vector<std::complex<double>> complex_transform(
    const std::vector<std::complex<double>>& x, int sign) {
  if (x.empty()) return {};
  const int n = static_cast<int>(x.size());
  fftw_complex* in = fftw_alloc_complex(x.size());
  fftw_complex* out = fftw_alloc_complex(x.size());
  std::memcpy(in, x.data(), sizeof(std::complex<double>) * x.size());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(n, in, out, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::vector<std::complex<double>> result(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) result[i] = {out[i][0], out[i][1]};
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(in);
  fftw_free(out);
  if (sign == FFTW_BACKWARD) {
    const double scale = 1.0 / n;
    for (auto& v : result) v *= scale;
  }
  return result;
}

}  // namespace

std::vector<std::complex<double>> fft(
    const std::vector<std::complex<double>>& x) {
  return complex_transform(x, FFTW_FORWARD);
}

std::vector<std::complex<double>> ifft(
    const std::vector<std::complex<double>>& x) {
  return complex_transform(x, FFTW_BACKWARD);
}

}  // namespace binaura::detail
