#include "geomaug/core/image.hpp"

#include <algorithm>
#include <cmath>

namespace geomaug {

ImageF to_float(const ImageU8& img) {
  if (img.empty()) return {};
  ImageF out(img.width(), img.height(), img.channels());
  std::transform(img.samples().begin(), img.samples().end(), out.samples().begin(),
                 [](std::uint8_t v) { return static_cast<float>(v); });
  return out;
}

ImageU8 to_u8_clamped(const ImageF& img) {
  if (img.empty()) return {};
  ImageU8 out(img.width(), img.height(), img.channels());
  std::transform(img.samples().begin(), img.samples().end(), out.samples().begin(),
                 [](float v) {
                   const double c = std::clamp(static_cast<double>(v), 0.0, 255.0);
                   return static_cast<std::uint8_t>(std::lround(c));
                 });
  return out;
}

}  // namespace geomaug
