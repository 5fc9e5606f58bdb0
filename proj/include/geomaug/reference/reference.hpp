#pragma once

// Serial nested-loop implementations of the filter kernels. They share no code
// with the optimized paths in geomaug::filters and exist to cross-check them in
// tests and to serve as the baseline in benchmarks. Not part of the installed
// library.

#include <array>

#include "geomaug/core/image.hpp"

namespace geomaug::reference {

ImageU8 gray(const ImageU8& img);

ImageF convolve3x3(const ImageF& img, const std::array<float, 9>& weights);

/// Scharr magnitude sqrt(gx^2 + gy^2) per pixel, computed pixel by pixel.
ImageF scharr_magnitude(const ImageF& gray);
ImageU8 tenengrad(const ImageU8& img);

/// Direct 2-D Gaussian (outer-product weights, double accumulation).
ImageF gaussian_blur(const ImageF& gray, int ksize);

ImageU8 erode(const ImageU8& img, int w, int h);
ImageU8 dilate(const ImageU8& img, int w, int h);
ImageU8 morph_open(const ImageU8& img, int w, int h);

ImageU8 equalize_hist(const ImageU8& gray);
ImageU8 divide_sketch(const ImageU8& gray, const ImageF& smoothed);

ImageU8 image_to_sketch(const ImageU8& img, int blur_ksize = 21, int open_size = 1, int dilate_size = 2);

}  // namespace geomaug::reference
