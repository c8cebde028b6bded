// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include "binaura/spectral.hpp"

namespace binaura {

// Complex ratio mask. When `bounded` is set every real and imaginary
// component lies strictly inside (-1, 1), mirroring a tanh-activated mask.
struct ComplexMask {
  ComplexMatrix data;
  bool bounded = false;

  std::size_t bins() const { return data.rows(); }
  std::size_t frames() const { return data.cols(); }
};

// Element-wise complex product: out = mono_spec * m. The spectrogram
// configuration is carried through. Throws on shape mismatch.
ComplexSpectrogram apply_mask(const ComplexSpectrogram& mono_spec,
                              const ComplexMask& m);

// Exact mask from ground truth: M = diff / mono wherever |mono| >= eps,
// zero elsewhere. The result is not clamped (bounded = false), so
// apply_mask(mono, oracle_mask(mono, diff)) == diff on all regular bins.
ComplexMask oracle_mask(const ComplexSpectrogram& mono_spec,
                        const ComplexSpectrogram& diff_spec,
                        double eps = 1e-8);

// Clamps each real/imaginary component to [-limit + 1e-6, limit - 1e-6] and
// sets the bounded flag. Idempotent and order-preserving per component.
// Requires 0 < limit <= 1.
ComplexMask bound_mask(const ComplexMask& m, double limit = 1.0);

}  // namespace binaura
