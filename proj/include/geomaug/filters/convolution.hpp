#pragma once

#include <array>

#include "geomaug/core/image.hpp"

namespace geomaug::filters {

/// 3x3 weights in row-major order, applied without flipping (correlation).
class Kernel3x3 {
 public:
  explicit Kernel3x3(const std::array<float, 9>& weights);

  float operator()(int row, int col) const noexcept { return weights_[row * 3 + col]; }
  const std::array<float, 9>& weights() const noexcept { return weights_; }

  static Kernel3x3 identity();
  /// Horizontal-derivative Scharr kernel, rows [-3 0 3; -10 0 10; -3 0 3].
  static Kernel3x3 scharr_x();
  /// Vertical-derivative Scharr kernel, rows [-3 -10 -3; 0 0 0; 3 10 3].
  static Kernel3x3 scharr_y();

 private:
  std::array<float, 9> weights_;
};

/// Correlate a single-channel image with `k` using reflect-101 borders.
/// Requires at least 3x3 pixels.
ImageF convolve3x3(const ImageF& img, const Kernel3x3& k);

/// Horizontal and vertical Scharr responses plus their Euclidean magnitude.
/// All three images share the input dimensions.
struct GradientField {
  ImageF gx;
  ImageF gy;
  ImageF magnitude;
};

/// Unnormalized Scharr gradient of a grayscale image. RGB input is converted
/// with to_grayscale first.
GradientField scharr_gradient(const ImageU8& img);
GradientField scharr_gradient(const ImageF& gray);

}  // namespace geomaug::filters
