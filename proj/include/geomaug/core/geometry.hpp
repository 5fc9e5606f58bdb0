#pragma once

#include "geomaug/core/image.hpp"

namespace geomaug {

/// Bilinear resize to exact target dimensions (aspect ratio is not kept).
/// Pixel centers sit at half-integer coordinates; source coordinates are
/// clamped to the image.
ImageU8 resize(const ImageU8& img, int out_w, int out_h);

/// Centered crop rectangle; odd margins put the extra pixel on the right/bottom.
PixelRect center_rect(int width, int height, int out_w, int out_h);

ImageU8 crop(const ImageU8& img, const PixelRect& rect);
ImageU8 center_crop(const ImageU8& img, int out_w, int out_h);

ImageU8 flip_horizontal(const ImageU8& img);

/// Rotate counter-clockwise by `degrees` about the image center with bilinear
/// sampling. Samples that fall outside the frame read as `fill`.
ImageU8 rotate(const ImageU8& img, double degrees, std::uint8_t fill = 0);

/// Integer translation; vacated pixels take `fill`.
ImageU8 shift(const ImageU8& img, int dx, int dy, std::uint8_t fill = 0);

}  // namespace geomaug
