#include "geomaug/core/color.hpp"

#include <algorithm>
#include <cmath>

namespace geomaug {

namespace {

constexpr double kWeightR = 0.299;
constexpr double kWeightG = 0.587;
constexpr double kWeightB = 0.114;

void require_gray_or_rgb(int channels) {
  if (channels != 1 && channels != 3) {
    throw InvalidArgument("expected 1 or 3 channels, got " + std::to_string(channels));
  }
}

}  // namespace

ImageU8 to_grayscale(const ImageU8& img) {
  if (img.empty()) throw InvalidArgument("to_grayscale: empty image");
  require_gray_or_rgb(img.channels());
  if (img.channels() == 1) return img;

  ImageU8 out(img.width(), img.height(), 1);
  const auto src = img.samples();
  auto dst = out.samples();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    const double y = kWeightR * src[3 * i] + kWeightG * src[3 * i + 1] + kWeightB * src[3 * i + 2];
    dst[i] = static_cast<std::uint8_t>(std::min(255L, std::lround(y)));
  }
  return out;
}

ImageF to_grayscale(const ImageF& img) {
  if (img.empty()) throw InvalidArgument("to_grayscale: empty image");
  require_gray_or_rgb(img.channels());
  if (img.channels() == 1) return img;

  ImageF out(img.width(), img.height(), 1);
  const auto src = img.samples();
  auto dst = out.samples();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = static_cast<float>(kWeightR * src[3 * i] + kWeightG * src[3 * i + 1] +
                                kWeightB * src[3 * i + 2]);
  }
  return out;
}

ImageU8 gray_to_rgb(const ImageU8& img) {
  if (img.empty()) throw InvalidArgument("gray_to_rgb: empty image");
  if (img.channels() == 3) return img;
  ImageU8 out(img.width(), img.height(), 3);
  const auto src = img.samples();
  auto dst = out.samples();
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[3 * i] = dst[3 * i + 1] = dst[3 * i + 2] = src[i];
  }
  return out;
}

ImageU8 normalize_to_u8(const ImageF& img) {
  if (img.empty()) throw InvalidArgument("normalize_to_u8: empty image");
  const auto src = img.samples();
  for (float v : src) {
    if (!std::isfinite(v)) throw InvalidArgument("normalize_to_u8: non-finite sample");
  }
  const auto [lo_it, hi_it] = std::minmax_element(src.begin(), src.end());
  const double lo = *lo_it;
  const double hi = *hi_it;

  ImageU8 out(img.width(), img.height(), img.channels(), std::uint8_t{0});
  if (hi == lo) return out;

  const double range = hi - lo;
  auto dst = out.samples();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const double scaled = 255.0 * (static_cast<double>(src[i]) - lo) / range;
    dst[i] = static_cast<std::uint8_t>(std::lround(std::clamp(scaled, 0.0, 255.0)));
  }
  return out;
}

}  // namespace geomaug
