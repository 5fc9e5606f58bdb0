#pragma once

#include <array>

#include "geomaug/core/image.hpp"
#include "geomaug/pipeline/rng.hpp"
#include "geomaug/pipeline/stage.hpp"

namespace geomaug::pipeline {

/// Rotation by an angle drawn uniformly from [-max_deg, +max_deg].
ImageU8 random_rotate(const ImageU8& img, double max_deg, SeededRng& rng);

/// Integer shift with dx uniform in {-round(fx*W), ..., +round(fx*W)}, likewise dy.
ImageU8 random_shift(const ImageU8& img, double fx, double fy, SeededRng& rng);

/// Mirror columns when a uniform draw falls below p.
ImageU8 horizontal_flip(const ImageU8& img, SeededRng& rng, double p);

/// Concrete color adjustment: multiplicative factors around 1, an additive hue
/// shift (fraction of the full circle) and the order in which the four
/// adjustments run (0 brightness, 1 contrast, 2 saturation, 3 hue).
struct JitterFactors {
  double brightness = 1.0;
  double contrast = 1.0;
  double saturation = 1.0;
  double hue = 0.0;
  std::array<int, 4> order{0, 1, 2, 3};
};

JitterFactors sample_jitter(const JitterParams& params, SeededRng& rng);

/// Apply fixed factors to an RGB image (gray input is replicated to RGB).
/// Intermediate values are clamped to [0, 255] after every adjustment.
ImageU8 apply_jitter(const ImageU8& img, const JitterFactors& factors);

ImageU8 color_jitter(const ImageU8& img, const JitterParams& params, SeededRng& rng);

/// (v / 255 - mean[c]) / std[c]. A gray image is replicated when three
/// channel statistics are given.
ImageF normalize(const ImageU8& img, const NormalizeParams& params);

}  // namespace geomaug::pipeline
