// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "binaura/mask.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace binaura {

ComplexSpectrogram apply_mask(const ComplexSpectrogram& mono_spec,
                              const ComplexMask& m) {
  if (!mono_spec.data.same_shape(m.data))
    throw std::invalid_argument("apply_mask: shape mismatch");
  ComplexSpectrogram out;
  out.config = mono_spec.config;
  out.data = ComplexMatrix(mono_spec.bins(), mono_spec.frames());
  const auto& a = mono_spec.data.flat();
  const auto& b = m.data.flat();
  auto& o = out.data.flat();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = a[i] * b[i];
  return out;
}

ComplexMask oracle_mask(const ComplexSpectrogram& mono_spec,
                        const ComplexSpectrogram& diff_spec, double eps) {
  if (!mono_spec.data.same_shape(diff_spec.data))
    throw std::invalid_argument("oracle_mask: shape mismatch");
  if (!(eps > 0.0)) throw std::invalid_argument("oracle_mask: eps must be > 0");
  ComplexMask out;
  out.bounded = false;
  out.data = ComplexMatrix(mono_spec.bins(), mono_spec.frames());
  const auto& mono = mono_spec.data.flat();
  const auto& diff = diff_spec.data.flat();
  auto& o = out.data.flat();
  for (std::size_t i = 0; i < o.size(); ++i) {
    // Silent mono bins get a zero mask so they stay silent in the output.
    o[i] = std::abs(mono[i]) >= eps ? diff[i] / mono[i]
                                    : std::complex<double>(0.0, 0.0);
  }
  return out;
}

ComplexMask bound_mask(const ComplexMask& m, double limit) {
  if (!(limit > 0.0) || limit > 1.0)
    throw std::invalid_argument("bound_mask: limit must be in (0, 1]");
  constexpr double kMargin = 1e-6;
  const double hi = limit - kMargin;
  const double lo = -limit + kMargin;
  ComplexMask out;
  out.bounded = true;
  out.data = ComplexMatrix(m.bins(), m.frames());
  const auto& in = m.data.flat();
  auto& o = out.data.flat();
  for (std::size_t i = 0; i < o.size(); ++i)
    o[i] = {std::clamp(in[i].real(), lo, hi), std::clamp(in[i].imag(), lo, hi)};
  return out;
}

}  // namespace binaura
