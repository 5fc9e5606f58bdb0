#pragma once

#include <array>
#include <cstdint>

#include "geomaug/core/image.hpp"

namespace geomaug::filters {

using Histogram = std::array<std::uint64_t, 256>;

Histogram histogram(const ImageU8& gray);

/// CDF remap v -> round(255 * (cdf(v) - cdf_min) / (N - cdf_min)), cdf_min being
/// the smallest nonzero CDF value. Constant images are returned unchanged.
ImageU8 equalize_hist(const ImageU8& gray);

}  // namespace geomaug::filters
