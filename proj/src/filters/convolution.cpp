#include "geomaug/filters/convolution.hpp"

#include <cmath>

#include "geomaug/core/color.hpp"
#include "geomaug/filters/border.hpp"

namespace geomaug::filters {

namespace {

// Below this many pixels thread start-up costs more than the loop itself.
constexpr long kParallelMinPixels = 64L * 64L;

void require_single_channel(const ImageF& img, const char* op) {
  if (img.empty()) throw InvalidArgument(std::string(op) + ": empty image");
  if (img.channels() != 1) {
    throw InvalidArgument(std::string(op) + ": expected a single-channel image, got " +
                          describe_shape(img));
  }
}

}  // namespace

Kernel3x3::Kernel3x3(const std::array<float, 9>& weights) : weights_(weights) {
  for (float w : weights_) {
    if (!std::isfinite(w)) throw InvalidArgument("Kernel3x3: non-finite weight");
  }
}

Kernel3x3 Kernel3x3::identity() { return Kernel3x3({0, 0, 0, 0, 1, 0, 0, 0, 0}); }

Kernel3x3 Kernel3x3::scharr_x() { return Kernel3x3({-3, 0, 3, -10, 0, 10, -3, 0, 3}); }

Kernel3x3 Kernel3x3::scharr_y() { return Kernel3x3({-3, -10, -3, 0, 0, 0, 3, 10, 3}); }

ImageF convolve3x3(const ImageF& img, const Kernel3x3& k) {
  require_single_channel(img, "convolve3x3");
  const int w = img.width();
  const int h = img.height();
  if (w < 3 || h < 3) {
    throw InvalidArgument("convolve3x3: image must be at least 3x3, got " + describe_shape(img));
  }

  ImageF out(w, h, 1);
  const float* src = img.data();
  float* dst = out.data();
  const auto& kw = k.weights();

#pragma omp parallel for schedule(static) if (static_cast<long>(w) * h >= kParallelMinPixels)
  for (int y = 0; y < h; ++y) {
    const float* rows[3] = {src + static_cast<std::size_t>(reflect101(y - 1, h)) * w,
                            src + static_cast<std::size_t>(y) * w,
                            src + static_cast<std::size_t>(reflect101(y + 1, h)) * w};
    float* out_row = dst + static_cast<std::size_t>(y) * w;

    auto at_border = [&](int x) {
      const int cols[3] = {reflect101(x - 1, w), x, reflect101(x + 1, w)};
      float acc = 0.0F;
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) acc += kw[r * 3 + c] * rows[r][cols[c]];
      }
      return acc;
    };

    out_row[0] = at_border(0);
    for (int x = 1; x < w - 1; ++x) {
      float acc = 0.0F;
      for (int r = 0; r < 3; ++r) {
        const float* p = rows[r] + x - 1;
        acc += kw[r * 3 + 0] * p[0];
        acc += kw[r * 3 + 1] * p[1];
        acc += kw[r * 3 + 2] * p[2];
      }
      out_row[x] = acc;
    }
    out_row[w - 1] = at_border(w - 1);
  }
  return out;
}

GradientField scharr_gradient(const ImageF& gray) {
  require_single_channel(gray, "scharr_gradient");
  GradientField g{convolve3x3(gray, Kernel3x3::scharr_x()), convolve3x3(gray, Kernel3x3::scharr_y()),
                  ImageF(gray.width(), gray.height(), 1)};
  const auto gx = g.gx.samples();
  const auto gy = g.gy.samples();
  auto mag = g.magnitude.samples();
  const auto n = static_cast<long>(mag.size());

#pragma omp parallel for schedule(static) if (n >= kParallelMinPixels)
  for (long i = 0; i < n; ++i) {
    mag[i] = std::sqrt(gx[i] * gx[i] + gy[i] * gy[i]);
  }
  return g;
}

GradientField scharr_gradient(const ImageU8& img) { return scharr_gradient(to_float(to_grayscale(img))); }

}  // namespace geomaug::filters
