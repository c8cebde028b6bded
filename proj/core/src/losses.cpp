// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "binaura/losses.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace binaura {

namespace {

constexpr double kProbabilityClamp = 1e-7;

double clamp_probability(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("probability outside [0, 1]");
  return std::clamp(p, kProbabilityClamp, 1.0 - kProbabilityClamp);
}

}  // namespace

double adversarial_value(const DiscriminatorScores& scores) {
  if (scores.on_real.empty() || scores.on_fake.empty())
    throw std::invalid_argument("adversarial_value: empty batch");
  double real_sum = 0.0;
  for (double p : scores.on_real) real_sum += std::log(clamp_probability(p));
  double fake_sum = 0.0;
  for (double p : scores.on_fake)
    fake_sum += std::log(1.0 - clamp_probability(p));
  return real_sum / static_cast<double>(scores.on_real.size()) +
         fake_sum / static_cast<double>(scores.on_fake.size());
}

double bce_loss(std::span<const double> predicted,
                std::span<const double> targets) {
  if (predicted.empty()) throw std::invalid_argument("bce_loss: empty batch");
  if (predicted.size() != targets.size())
    throw std::invalid_argument("bce_loss: batch length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const double t = targets[i];
    if (t != 0.0 && t != 1.0)
      throw std::invalid_argument("bce_loss: targets must be 0 or 1");
    const double p = clamp_probability(predicted[i]);
    sum -= t * std::log(p) + (1.0 - t) * std::log(1.0 - p);
  }
  return sum / static_cast<double>(predicted.size());
}

double l1_spectrogram_loss(const ComplexSpectrogram& pred,
                           const ComplexSpectrogram& target) {
  if (!pred.data.same_shape(target.data))
    throw std::invalid_argument("l1_spectrogram_loss: shape mismatch");
  const auto& a = pred.data.flat();
  const auto& b = target.data.flat();
  if (a.empty()) throw std::invalid_argument("l1_spectrogram_loss: empty");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += std::abs(a[i].real() - b[i].real());
    sum += std::abs(a[i].imag() - b[i].imag());
  }
  // Real and imaginary parts count as separate components.
  return sum / (2.0 * static_cast<double>(a.size()));
}

}  // namespace binaura
