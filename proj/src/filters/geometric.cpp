#include "geomaug/filters/geometric.hpp"

#include <algorithm>
#include <cmath>

#include "geomaug/core/color.hpp"
#include "geomaug/filters/convolution.hpp"
#include "geomaug/filters/gaussian.hpp"
#include "geomaug/filters/histogram.hpp"

namespace geomaug::filters {

ImageU8 tenengrad(const ImageU8& img) { return normalize_to_u8(scharr_gradient(img).magnitude); }

ImageU8 divide_sketch(const ImageU8& gray, const ImageF& smoothed) {
  if (gray.empty() || smoothed.empty()) throw InvalidArgument("divide_sketch: empty image");
  if (!gray.same_extent(smoothed) || gray.channels() != smoothed.channels()) {
    throw InvalidArgument("divide_sketch: dimension mismatch " + describe_shape(gray) + " vs " +
                          describe_shape(smoothed));
  }
  ImageU8 out(gray.width(), gray.height(), gray.channels());
  const auto num = gray.samples();
  const auto den = smoothed.samples();
  auto dst = out.samples();
  const auto n = static_cast<long>(dst.size());

#pragma omp parallel for schedule(static) if (n >= 64L * 64L)
  for (long i = 0; i < n; ++i) {
    const double d = std::max(static_cast<double>(den[i]), static_cast<double>(kSketchEpsilon));
    const double scaled = std::clamp(255.0 * num[i] / d, 0.0, 255.0);
    dst[i] = static_cast<std::uint8_t>(std::lround(scaled));
  }
  return out;
}

void SketchParams::validate() const {
  if (blur_ksize < 3 || blur_ksize % 2 == 0) {
    throw InvalidArgument("sketch blur kernel size must be odd and >= 3, got " + std::to_string(blur_ksize));
  }
  if (open_size < 1 || dilate_size < 1) {
    throw InvalidArgument("sketch morphology kernel sizes must be >= 1");
  }
}

SketchStages image_to_sketch_stages(const ImageU8& img, const SketchParams& params) {
  params.validate();
  SketchStages s;
  s.gray = to_grayscale(img);
  s.smoothed = gaussian_blur(s.gray, params.blur_ksize);
  s.divided = divide_sketch(s.gray, s.smoothed);
  s.equalized = equalize_hist(s.divided);
  s.opened = morph_open(s.equalized, StructuringElement::square(params.open_size));
  s.dilated = dilate(s.opened, StructuringElement::square(params.dilate_size));
  return s;
}

ImageU8 image_to_sketch(const ImageU8& img, const SketchParams& params) {
  return image_to_sketch_stages(img, params).dilated;
}

}  // namespace geomaug::filters
