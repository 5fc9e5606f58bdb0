#pragma once

#include "geomaug/core/image.hpp"

namespace geomaug::filters {

/// All-ones rectangular window. The anchor is the window cell aligned with the
/// output pixel: the center along odd extents, the first (top/left) cell along
/// even extents.
class StructuringElement {
 public:
  StructuringElement(int w, int h);
  static StructuringElement square(int size) { return {size, size}; }

  int width() const noexcept { return w_; }
  int height() const noexcept { return h_; }
  int anchor_x() const noexcept { return ax_; }
  int anchor_y() const noexcept { return ay_; }

  /// Point-reflected element (same extents, anchor mirrored). Odd sizes are
  /// symmetric and reflect to themselves.
  StructuringElement reflected() const noexcept;

 private:
  int w_;
  int h_;
  int ax_;
  int ay_;
};

/// Window minimum / maximum over a single-channel image, replicate borders.
ImageU8 erode(const ImageU8& img, const StructuringElement& se);
ImageU8 dilate(const ImageU8& img, const StructuringElement& se);

/// Erosion by `se` followed by dilation by its reflection, so the result never
/// exceeds the input.
ImageU8 morph_open(const ImageU8& img, const StructuringElement& se);

}  // namespace geomaug::filters
