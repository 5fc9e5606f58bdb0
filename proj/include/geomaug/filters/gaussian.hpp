#pragma once

#include <vector>

#include "geomaug/core/image.hpp"

namespace geomaug::filters {

/// Standard deviation implied by a kernel size when none is given:
/// 0.3 * ((ksize - 1) * 0.5 - 1) + 0.8, i.e. 3.5 for ksize 21.
double gaussian_sigma_for(int ksize);

/// Sampled 1-D Gaussian of odd length `ksize`, normalized to unit sum.
/// A non-positive sigma selects gaussian_sigma_for(ksize).
std::vector<float> gaussian_kernel(int ksize, double sigma = 0.0);

/// Separable Gaussian blur of a single-channel image with reflect-101 borders.
ImageF gaussian_blur(const ImageF& gray, int ksize, double sigma = 0.0);
ImageF gaussian_blur(const ImageU8& gray, int ksize, double sigma = 0.0);

}  // namespace geomaug::filters
