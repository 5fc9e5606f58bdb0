#include "geomaug/filters/morphology.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "geomaug/filters/border.hpp"

namespace geomaug::filters {

namespace {

constexpr long kParallelMinPixels = 64L * 64L;

int anchor_for(int extent) { return extent % 2 == 1 ? extent / 2 : 0; }

void require_gray(const ImageU8& img, const char* op) {
  if (img.empty()) throw InvalidArgument(std::string(op) + ": empty image");
  if (img.channels() != 1) {
    throw InvalidArgument(std::string(op) + ": expected a single-channel image, got " +
                          describe_shape(img));
  }
}

// Rectangular windows are separable: a row pass followed by a column pass
// gives the same extremum as the full 2-D scan.
template <typename Pick>
ImageU8 window_extremum(const ImageU8& img, int w, int h, int ax, int ay, Pick pick) {
  const int width = img.width();
  const int height = img.height();
  const bool parallel = static_cast<long>(width) * height >= kParallelMinPixels;

  ImageU8 rows(width, height, 1);
#pragma omp parallel for schedule(static) if (parallel)
  for (int y = 0; y < height; ++y) {
    const auto in = img.row(y);
    auto out = rows.row(y);
    for (int x = 0; x < width; ++x) {
      std::uint8_t v = in[replicate(x - ax, width)];
      for (int k = 1; k < w; ++k) v = pick(v, in[replicate(x - ax + k, width)]);
      out[x] = v;
    }
  }

  ImageU8 out(width, height, 1);
#pragma omp parallel for schedule(static) if (parallel)
  for (int y = 0; y < height; ++y) {
    auto dst = out.row(y);
    const auto first = rows.row(replicate(y - ay, height));
    std::copy(first.begin(), first.end(), dst.begin());
    for (int k = 1; k < h; ++k) {
      const auto src = rows.row(replicate(y - ay + k, height));
      for (int x = 0; x < width; ++x) dst[x] = pick(dst[x], src[x]);
    }
  }
  return out;
}

constexpr auto kMin = [](std::uint8_t a, std::uint8_t b) { return std::min(a, b); };
constexpr auto kMax = [](std::uint8_t a, std::uint8_t b) { return std::max(a, b); };

}  // namespace

StructuringElement::StructuringElement(int w, int h) : w_(w), h_(h), ax_(anchor_for(w)), ay_(anchor_for(h)) {
  if (w < 1 || h < 1) {
    throw InvalidArgument("structuring element extents must be >= 1, got " + std::to_string(w) +
                          "x" + std::to_string(h));
  }
}

StructuringElement StructuringElement::reflected() const noexcept {
  StructuringElement r = *this;
  r.ax_ = w_ - 1 - ax_;
  r.ay_ = h_ - 1 - ay_;
  return r;
}

ImageU8 erode(const ImageU8& img, const StructuringElement& se) {
  require_gray(img, "erode");
  return window_extremum(img, se.width(), se.height(), se.anchor_x(), se.anchor_y(), kMin);
}

ImageU8 dilate(const ImageU8& img, const StructuringElement& se) {
  require_gray(img, "dilate");
  return window_extremum(img, se.width(), se.height(), se.anchor_x(), se.anchor_y(), kMax);
}

ImageU8 morph_open(const ImageU8& img, const StructuringElement& se) {
  return dilate(erode(img, se), se.reflected());
}

}  // namespace geomaug::filters
