#include "geomaug/core/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace geomaug {

namespace {

std::uint8_t quantize(double v) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
}

}  // namespace

ImageU8 resize(const ImageU8& img, int out_w, int out_h) {
  if (img.empty()) throw InvalidArgument("resize: empty image");
  if (out_w <= 0 || out_h <= 0) {
    throw InvalidArgument("resize: target extents must be positive");
  }
  if (out_w == img.width() && out_h == img.height()) return img;

  const int w = img.width();
  const int h = img.height();
  const int ch = img.channels();
  const double scale_x = static_cast<double>(w) / out_w;
  const double scale_y = static_cast<double>(h) / out_h;

  struct Tap {
    int i0, i1;
    double frac;
  };
  auto taps = [](int n_out, int n_in, double scale) {
    std::vector<Tap> t(n_out);
    for (int d = 0; d < n_out; ++d) {
      const double s = std::clamp((d + 0.5) * scale - 0.5, 0.0, static_cast<double>(n_in - 1));
      const int i0 = static_cast<int>(std::floor(s));
      t[d] = {i0, std::min(i0 + 1, n_in - 1), s - i0};
    }
    return t;
  };
  const auto tx = taps(out_w, w, scale_x);
  const auto ty = taps(out_h, h, scale_y);

  ImageU8 out(out_w, out_h, ch);
  for (int y = 0; y < out_h; ++y) {
    const auto [y0, y1, fy] = ty[y];
    for (int x = 0; x < out_w; ++x) {
      const auto [x0, x1, fx] = tx[x];
      for (int c = 0; c < ch; ++c) {
        const double top = img.at(x0, y0, c) * (1.0 - fx) + img.at(x1, y0, c) * fx;
        const double bottom = img.at(x0, y1, c) * (1.0 - fx) + img.at(x1, y1, c) * fx;
        out.at(x, y, c) = quantize(top * (1.0 - fy) + bottom * fy);
      }
    }
  }
  return out;
}

PixelRect center_rect(int width, int height, int out_w, int out_h) {
  if (out_w <= 0 || out_h <= 0 || out_w > width || out_h > height) {
    throw InvalidArgument("center_crop: " + std::to_string(out_w) + "x" + std::to_string(out_h) +
                          " does not fit in " + std::to_string(width) + "x" +
                          std::to_string(height));
  }
  return {(width - out_w) / 2, (height - out_h) / 2, out_w, out_h};
}

ImageU8 crop(const ImageU8& img, const PixelRect& rect) {
  if (rect.w <= 0 || rect.h <= 0 || rect.x0 < 0 || rect.y0 < 0 ||
      rect.x0 + rect.w > img.width() || rect.y0 + rect.h > img.height()) {
    throw InvalidArgument("crop: rectangle outside image " + describe_shape(img));
  }
  ImageU8 out(rect.w, rect.h, img.channels());
  const auto stride = static_cast<std::size_t>(rect.w) * img.channels();
  for (int y = 0; y < rect.h; ++y) {
    const auto src = img.row(rect.y0 + y).subspan(static_cast<std::size_t>(rect.x0) * img.channels(), stride);
    std::copy(src.begin(), src.end(), out.row(y).begin());
  }
  return out;
}

ImageU8 center_crop(const ImageU8& img, int out_w, int out_h) {
  if (img.empty()) throw InvalidArgument("center_crop: empty image");
  return crop(img, center_rect(img.width(), img.height(), out_w, out_h));
}

ImageU8 flip_horizontal(const ImageU8& img) {
  if (img.empty()) return img;
  ImageU8 out(img.width(), img.height(), img.channels());
  const int w = img.width();
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < img.channels(); ++c) out.at(x, y, c) = img.at(w - 1 - x, y, c);
    }
  }
  return out;
}

ImageU8 rotate(const ImageU8& img, double degrees, std::uint8_t fill) {
  if (img.empty()) throw InvalidArgument("rotate: empty image");
  if (!std::isfinite(degrees)) throw InvalidArgument("rotate: non-finite angle");
  if (degrees == 0.0) return img;

  const int w = img.width();
  const int h = img.height();
  const int ch = img.channels();
  const double theta = degrees * std::numbers::pi / 180.0;
  const double cs = std::cos(theta);
  const double sn = std::sin(theta);
  const double cx = (w - 1) * 0.5;
  const double cy = (h - 1) * 0.5;

  auto sample = [&](int x, int y, int c) -> double {
    if (x < 0 || y < 0 || x >= w || y >= h) return fill;
    return img.at(x, y, c);
  };

  ImageU8 out(w, h, ch);
  for (int y = 0; y < h; ++y) {
    const double ry = y - cy;
    for (int x = 0; x < w; ++x) {
      const double rx = x - cx;
      // Inverse map: destination pixel reads from the source rotated back by theta.
      const double sx = cs * rx - sn * ry + cx;
      const double sy = sn * rx + cs * ry + cy;
      const double fx0 = std::floor(sx);
      const double fy0 = std::floor(sy);
      const double fx = sx - fx0;
      const double fy = sy - fy0;
      const int x0 = static_cast<int>(fx0);
      const int y0 = static_cast<int>(fy0);
      if (x0 < -1 || y0 < -1 || x0 >= w || y0 >= h) {
        for (int c = 0; c < ch; ++c) out.at(x, y, c) = fill;
        continue;
      }
      for (int c = 0; c < ch; ++c) {
        const double top = sample(x0, y0, c) * (1.0 - fx) + sample(x0 + 1, y0, c) * fx;
        const double bottom = sample(x0, y0 + 1, c) * (1.0 - fx) + sample(x0 + 1, y0 + 1, c) * fx;
        out.at(x, y, c) = quantize(top * (1.0 - fy) + bottom * fy);
      }
    }
  }
  return out;
}

ImageU8 shift(const ImageU8& img, int dx, int dy, std::uint8_t fill) {
  if (img.empty()) throw InvalidArgument("shift: empty image");
  ImageU8 out(img.width(), img.height(), img.channels(), fill);
  for (int y = 0; y < img.height(); ++y) {
    const int sy = y - dy;
    if (sy < 0 || sy >= img.height()) continue;
    for (int x = 0; x < img.width(); ++x) {
      const int sx = x - dx;
      if (sx < 0 || sx >= img.width()) continue;
      for (int c = 0; c < img.channels(); ++c) out.at(x, y, c) = img.at(sx, sy, c);
    }
  }
  return out;
}

}  // namespace geomaug
