#include "geomaug/filters/histogram.hpp"

#include <algorithm>

namespace geomaug::filters {

Histogram histogram(const ImageU8& gray) {
  if (gray.channels() != 1) {
    throw InvalidArgument("histogram: expected a single-channel image, got " + describe_shape(gray));
  }
  Histogram hist{};
  for (std::uint8_t v : gray.samples()) ++hist[v];
  return hist;
}

ImageU8 equalize_hist(const ImageU8& gray) {
  if (gray.empty()) throw InvalidArgument("equalize_hist: empty image");
  const Histogram hist = histogram(gray);
  const std::uint64_t total = gray.size();

  std::uint64_t cdf_min = 0;
  for (std::uint64_t count : hist) {
    if (count != 0) {
      cdf_min = count;
      break;
    }
  }
  if (cdf_min == total) return gray;

  // Integer rounding, half up: floor((2 * 255 * num + den) / (2 * den)).
  const std::uint64_t den = total - cdf_min;
  std::array<std::uint8_t, 256> lut{};
  std::uint64_t cdf = 0;
  for (int v = 0; v < 256; ++v) {
    cdf += hist[v];
    const std::uint64_t num = cdf > cdf_min ? cdf - cdf_min : 0;
    lut[v] = static_cast<std::uint8_t>(std::min<std::uint64_t>(255, (2 * 255 * num + den) / (2 * den)));
  }

  ImageU8 out(gray.width(), gray.height(), 1);
  std::transform(gray.samples().begin(), gray.samples().end(), out.samples().begin(),
                 [&lut](std::uint8_t v) { return lut[v]; });
  return out;
}

}  // namespace geomaug::filters
