#pragma once

#include <algorithm>
#include <cstdlib>

namespace geomaug::filters {

/// Mirror index without repeating the edge sample: for n = 5, -1 -> 1, 5 -> 3.
/// Valid for any offset, including ones larger than the image.
inline int reflect101(int i, int n) noexcept {
  if (n == 1) return 0;
  const int period = 2 * (n - 1);
  int p = std::abs(i) % period;
  return p < n ? p : period - p;
}

/// Clamp index to the valid range (edge replication).
inline int replicate(int i, int n) noexcept { return std::clamp(i, 0, n - 1); }

}  // namespace geomaug::filters
