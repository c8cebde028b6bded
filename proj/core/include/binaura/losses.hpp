// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <span>
#include <vector>

#include "binaura/spectral.hpp"

namespace binaura {

// Discriminator outputs on independent real and generated batches.
// All entries must lie in [0, 1]; the batches may differ in length.
struct DiscriminatorScores {
  std::vector<double> on_real;
  std::vector<double> on_fake;
};

// GAN value function: mean log D(real) + mean log(1 - D(fake)), with
// probabilities clamped to [1e-7, 1 - 1e-7] before the logs.
// Throws on an empty batch or out-of-range probabilities.
double adversarial_value(const DiscriminatorScores& scores);

// Mean of -[t*log(p) + (1-t)*log(1-p)] with the same probability clamp.
// Targets must be exactly 0 or 1. Throws on empty or mismatched inputs.
double bce_loss(std::span<const double> predicted,
                std::span<const double> targets);

// Mean absolute difference over real and imaginary components jointly.
double l1_spectrogram_loss(const ComplexSpectrogram& pred,
                           const ComplexSpectrogram& target);

}  // namespace binaura
