#pragma once

#include "geomaug/core/image.hpp"

namespace geomaug {

/// BT.601 luminance, rounded to nearest. A 1-channel input is returned as a copy.
ImageU8 to_grayscale(const ImageU8& img);

/// Float variant without quantization; used by color adjustments.
ImageF to_grayscale(const ImageF& img);

/// Replicate a gray image into three identical channels. RGB input is copied.
ImageU8 gray_to_rgb(const ImageU8& img);

/// Linear map [min, max] -> [0, 255], rounded to nearest.
/// A flat image maps to all zeros. Throws InvalidArgument on non-finite samples.
ImageU8 normalize_to_u8(const ImageF& img);

}  // namespace geomaug
