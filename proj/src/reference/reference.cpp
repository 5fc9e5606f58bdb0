#include "geomaug/reference/reference.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace geomaug::reference {

namespace {

int mirror(int i, int n) {
  // Walk back and forth until the index lands inside [0, n).
  if (n == 1) return 0;
  while (i < 0 || i >= n) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * (n - 1) - i;
  }
  return i;
}

int clamp_index(int i, int n) { return i < 0 ? 0 : (i >= n ? n - 1 : i); }

// Offset of the first window cell relative to the output pixel.
int window_start(int extent) { return extent % 2 == 1 ? -(extent / 2) : 0; }

template <typename Pick>
ImageU8 window_scan(const ImageU8& img, int w, int h, int x_start, int y_start, Pick pick) {
  ImageU8 out(img.width(), img.height(), 1);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      std::uint8_t v = img.at(clamp_index(x + x_start, img.width()), clamp_index(y + y_start, img.height()));
      for (int j = 0; j < h; ++j) {
        for (int i = 0; i < w; ++i) {
          v = pick(v, img.at(clamp_index(x + x_start + i, img.width()),
                             clamp_index(y + y_start + j, img.height())));
        }
      }
      out.at(x, y) = v;
    }
  }
  return out;
}

std::uint8_t pick_min(std::uint8_t a, std::uint8_t b) { return a < b ? a : b; }
std::uint8_t pick_max(std::uint8_t a, std::uint8_t b) { return a > b ? a : b; }

}  // namespace

ImageU8 gray(const ImageU8& img) {
  if (img.channels() == 1) return img;
  ImageU8 out(img.width(), img.height(), 1);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const double v = 0.299 * img.at(x, y, 0) + 0.587 * img.at(x, y, 1) + 0.114 * img.at(x, y, 2);
      out.at(x, y) = static_cast<std::uint8_t>(std::min(255L, std::lround(v)));
    }
  }
  return out;
}

ImageF convolve3x3(const ImageF& img, const std::array<float, 9>& weights) {
  ImageF out(img.width(), img.height(), 1);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      float acc = 0.0F;
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          acc += weights[r * 3 + c] * img.at(mirror(x + c - 1, img.width()), mirror(y + r - 1, img.height()));
        }
      }
      out.at(x, y) = acc;
    }
  }
  return out;
}

ImageF scharr_magnitude(const ImageF& g) {
  const std::array<float, 9> sx{-3, 0, 3, -10, 0, 10, -3, 0, 3};
  const std::array<float, 9> sy{-3, -10, -3, 0, 0, 0, 3, 10, 3};
  const ImageF gx = convolve3x3(g, sx);
  const ImageF gy = convolve3x3(g, sy);
  ImageF out(g.width(), g.height(), 1);
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      const float a = gx.at(x, y);
      const float b = gy.at(x, y);
      out.at(x, y) = std::sqrt(a * a + b * b);
    }
  }
  return out;
}

ImageU8 tenengrad(const ImageU8& img) {
  const ImageU8 g8 = gray(img);
  ImageF g(g8.width(), g8.height(), 1);
  for (int y = 0; y < g8.height(); ++y) {
    for (int x = 0; x < g8.width(); ++x) g.at(x, y) = g8.at(x, y);
  }
  const ImageF mag = scharr_magnitude(g);

  float lo = mag.at(0, 0);
  float hi = mag.at(0, 0);
  for (int y = 0; y < mag.height(); ++y) {
    for (int x = 0; x < mag.width(); ++x) {
      lo = std::min(lo, mag.at(x, y));
      hi = std::max(hi, mag.at(x, y));
    }
  }
  ImageU8 out(mag.width(), mag.height(), 1, std::uint8_t{0});
  if (hi == lo) return out;
  for (int y = 0; y < mag.height(); ++y) {
    for (int x = 0; x < mag.width(); ++x) {
      const double v = 255.0 * (static_cast<double>(mag.at(x, y)) - lo) /
                       (static_cast<double>(hi) - static_cast<double>(lo));
      out.at(x, y) = static_cast<std::uint8_t>(std::lround(v));
    }
  }
  return out;
}

ImageF gaussian_blur(const ImageF& g, int ksize) {
  const double sigma = 0.3 * ((ksize - 1) * 0.5 - 1.0) + 0.8;
  const int r = ksize / 2;
  std::vector<double> k(static_cast<std::size_t>(ksize));
  double sum = 0.0;
  for (int i = -r; i <= r; ++i) {
    k[i + r] = std::exp(-static_cast<double>(i * i) / (2.0 * sigma * sigma));
    sum += k[i + r];
  }
  for (double& v : k) v /= sum;

  ImageF out(g.width(), g.height(), 1);
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      double acc = 0.0;
      for (int j = -r; j <= r; ++j) {
        for (int i = -r; i <= r; ++i) {
          acc += k[j + r] * k[i + r] * g.at(mirror(x + i, g.width()), mirror(y + j, g.height()));
        }
      }
      out.at(x, y) = static_cast<float>(acc);
    }
  }
  return out;
}

ImageU8 erode(const ImageU8& img, int w, int h) {
  return window_scan(img, w, h, window_start(w), window_start(h), pick_min);
}

ImageU8 dilate(const ImageU8& img, int w, int h) {
  return window_scan(img, w, h, window_start(w), window_start(h), pick_max);
}

ImageU8 morph_open(const ImageU8& img, int w, int h) {
  // Dilation by the reflected window: start offsets mirror around the anchor.
  const ImageU8 eroded = erode(img, w, h);
  return window_scan(eroded, w, h, -(w - 1) - window_start(w), -(h - 1) - window_start(h), pick_max);
}

ImageU8 equalize_hist(const ImageU8& g) {
  const auto n = static_cast<double>(g.size());
  // cdf(v) by direct counting of samples <= v.
  std::vector<double> cdf(256, 0.0);
  for (int v = 0; v < 256; ++v) {
    for (std::uint8_t s : g.samples()) {
      if (s <= v) cdf[v] += 1.0;
    }
  }
  double cdf_min = 0.0;
  for (double c : cdf) {
    if (c > 0.0) {
      cdf_min = c;
      break;
    }
  }
  if (cdf_min == n) return g;
  ImageU8 out(g.width(), g.height(), 1);
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      const double v = 255.0 * (cdf[g.at(x, y)] - cdf_min) / (n - cdf_min);
      out.at(x, y) = static_cast<std::uint8_t>(std::floor(v + 0.5));
    }
  }
  return out;
}

ImageU8 divide_sketch(const ImageU8& g, const ImageF& smoothed) {
  ImageU8 out(g.width(), g.height(), 1);
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      double d = smoothed.at(x, y);
      if (d < 1e-6) d = static_cast<double>(1e-6F);
      double v = 255.0 * g.at(x, y) / d;
      v = v < 0.0 ? 0.0 : (v > 255.0 ? 255.0 : v);
      out.at(x, y) = static_cast<std::uint8_t>(std::floor(v + 0.5));
    }
  }
  return out;
}

ImageU8 image_to_sketch(const ImageU8& img, int blur_ksize, int open_size, int dilate_size) {
  const ImageU8 g8 = gray(img);
  ImageF g(g8.width(), g8.height(), 1);
  for (int y = 0; y < g8.height(); ++y) {
    for (int x = 0; x < g8.width(); ++x) g.at(x, y) = g8.at(x, y);
  }
  const ImageF smoothed = gaussian_blur(g, blur_ksize);
  const ImageU8 eq = equalize_hist(divide_sketch(g8, smoothed));
  return dilate(morph_open(eq, open_size, open_size), dilate_size, dilate_size);
}

}  // namespace geomaug::reference
