#pragma once

#include "geomaug/core/image.hpp"
#include "geomaug/filters/morphology.hpp"

namespace geomaug::filters {

/// Scharr gradient magnitude stretched to [0, 255]. RGB input is converted to
/// gray first; a flat image yields all zeros.
ImageU8 tenengrad(const ImageU8& img);

/// clamp(round(255 * gray / max(smoothed, 1e-6)), 0, 255).
ImageU8 divide_sketch(const ImageU8& gray, const ImageF& smoothed);

inline constexpr float kSketchEpsilon = 1e-6F;

struct SketchParams {
  int blur_ksize = 21;
  int open_size = 1;
  int dilate_size = 2;

  /// Throws InvalidArgument unless blur_ksize is odd and >= 3 and both
  /// morphology sizes are >= 1.
  void validate() const;
};

/// Intermediate results of the sketch filter, in order of computation.
struct SketchStages {
  ImageU8 gray;
  ImageF smoothed;
  ImageU8 divided;
  ImageU8 equalized;
  ImageU8 opened;
  ImageU8 dilated;
};

/// gray -> Gaussian blur -> divide -> equalize -> open -> dilate.
ImageU8 image_to_sketch(const ImageU8& img, const SketchParams& params = {});
SketchStages image_to_sketch_stages(const ImageU8& img, const SketchParams& params = {});

}  // namespace geomaug::filters
