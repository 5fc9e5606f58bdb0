#include "geomaug/filters/gaussian.hpp"

#include <cmath>

#include "geomaug/filters/border.hpp"

namespace geomaug::filters {

namespace {

constexpr long kParallelMinPixels = 64L * 64L;

void check_ksize(int ksize) {
  if (ksize < 3 || ksize % 2 == 0) {
    throw InvalidArgument("gaussian kernel size must be odd and >= 3, got " + std::to_string(ksize));
  }
}

}  // namespace

double gaussian_sigma_for(int ksize) {
  check_ksize(ksize);
  return 0.3 * ((ksize - 1) * 0.5 - 1.0) + 0.8;
}

std::vector<float> gaussian_kernel(int ksize, double sigma) {
  check_ksize(ksize);
  if (!(sigma > 0.0)) sigma = gaussian_sigma_for(ksize);

  const int radius = ksize / 2;
  std::vector<double> taps(static_cast<std::size_t>(ksize));
  double sum = 0.0;
  for (int i = 0; i < ksize; ++i) {
    const double d = i - radius;
    taps[i] = std::exp(-(d * d) / (2.0 * sigma * sigma));
    sum += taps[i];
  }
  std::vector<float> kernel(taps.size());
  for (std::size_t i = 0; i < taps.size(); ++i) kernel[i] = static_cast<float>(taps[i] / sum);
  return kernel;
}

ImageF gaussian_blur(const ImageF& gray, int ksize, double sigma) {
  if (gray.empty()) throw InvalidArgument("gaussian_blur: empty image");
  if (gray.channels() != 1) {
    throw InvalidArgument("gaussian_blur: expected a single-channel image, got " + describe_shape(gray));
  }
  const auto kernel = gaussian_kernel(ksize, sigma);
  const int radius = ksize / 2;
  const int w = gray.width();
  const int h = gray.height();
  const bool parallel = static_cast<long>(w) * h >= kParallelMinPixels;

  // Column offsets for the horizontal pass are shared by every row.
  std::vector<int> col_index(static_cast<std::size_t>(w) * ksize);
  for (int x = 0; x < w; ++x) {
    for (int k = 0; k < ksize; ++k) col_index[static_cast<std::size_t>(x) * ksize + k] = reflect101(x + k - radius, w);
  }

  ImageF tmp(w, h, 1);
  const float* src = gray.data();
  float* mid = tmp.data();
#pragma omp parallel for schedule(static) if (parallel)
  for (int y = 0; y < h; ++y) {
    const float* in = src + static_cast<std::size_t>(y) * w;
    float* out = mid + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      const int* idx = col_index.data() + static_cast<std::size_t>(x) * ksize;
      float acc = 0.0F;
      for (int k = 0; k < ksize; ++k) acc += kernel[k] * in[idx[k]];
      out[x] = acc;
    }
  }

  ImageF result(w, h, 1);
  float* dst = result.data();
#pragma omp parallel for schedule(static) if (parallel)
  for (int y = 0; y < h; ++y) {
    float* out = dst + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) out[x] = 0.0F;
    for (int k = 0; k < ksize; ++k) {
      const float wk = kernel[k];
      const float* in = mid + static_cast<std::size_t>(reflect101(y + k - radius, h)) * w;
      for (int x = 0; x < w; ++x) out[x] += wk * in[x];
    }
  }
  return result;
}

ImageF gaussian_blur(const ImageU8& gray, int ksize, double sigma) {
  return gaussian_blur(to_float(gray), ksize, sigma);
}

}  // namespace geomaug::filters
