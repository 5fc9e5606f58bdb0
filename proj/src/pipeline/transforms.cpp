#include "geomaug/pipeline/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "geomaug/core/color.hpp"
#include "geomaug/core/geometry.hpp"

namespace geomaug::pipeline {

namespace {

// Working buffer for color adjustments: RGB triplets on the 0..255 scale.
struct Rgb {
  float r, g, b;
};

float clamp255(float v) { return std::clamp(v, 0.0F, 255.0F); }

float luma(const Rgb& p) {
  return static_cast<float>(0.299 * p.r + 0.587 * p.g + 0.114 * p.b);
}

void adjust_brightness(std::vector<Rgb>& px, double factor) {
  const auto f = static_cast<float>(factor);
  for (auto& p : px) p = {clamp255(p.r * f), clamp255(p.g * f), clamp255(p.b * f)};
}

void adjust_contrast(std::vector<Rgb>& px, double factor) {
  double sum = 0.0;
  for (const auto& p : px) sum += luma(p);
  const auto mean = static_cast<float>(sum / static_cast<double>(px.size()));
  const auto f = static_cast<float>(factor);
  for (auto& p : px) {
    p = {clamp255(f * (p.r - mean) + mean), clamp255(f * (p.g - mean) + mean), clamp255(f * (p.b - mean) + mean)};
  }
}

void adjust_saturation(std::vector<Rgb>& px, double factor) {
  const auto f = static_cast<float>(factor);
  for (auto& p : px) {
    const float y = luma(p);
    p = {clamp255(f * p.r + (1.0F - f) * y), clamp255(f * p.g + (1.0F - f) * y),
         clamp255(f * p.b + (1.0F - f) * y)};
  }
}

// HSV on [0, 1]; hue is a fraction of the full circle.
void adjust_hue(std::vector<Rgb>& px, double shift) {
  for (auto& p : px) {
    const double r = p.r / 255.0;
    const double g = p.g / 255.0;
    const double b = p.b / 255.0;
    const double mx = std::max({r, g, b});
    const double mn = std::min({r, g, b});
    const double delta = mx - mn;
    if (delta <= 0.0) continue;  // achromatic pixels have no hue to rotate

    double h;
    if (mx == r) {
      h = (g - b) / delta;
    } else if (mx == g) {
      h = 2.0 + (b - r) / delta;
    } else {
      h = 4.0 + (r - g) / delta;
    }
    h = h / 6.0 + shift;
    h -= std::floor(h);
    const double s = delta / mx;
    const double v = mx;

    const double h6 = h * 6.0;
    const int sector = static_cast<int>(std::floor(h6)) % 6;
    const double frac = h6 - std::floor(h6);
    const double pp = v * (1.0 - s);
    const double q = v * (1.0 - s * frac);
    const double t = v * (1.0 - s * (1.0 - frac));
    double rr, gg, bb;
    switch (sector) {
      case 0: rr = v; gg = t; bb = pp; break;
      case 1: rr = q; gg = v; bb = pp; break;
      case 2: rr = pp; gg = v; bb = t; break;
      case 3: rr = pp; gg = q; bb = v; break;
      case 4: rr = t; gg = pp; bb = v; break;
      default: rr = v; gg = pp; bb = q; break;
    }
    p = {clamp255(static_cast<float>(rr * 255.0)), clamp255(static_cast<float>(gg * 255.0)),
         clamp255(static_cast<float>(bb * 255.0))};
  }
}

}  // namespace

ImageU8 random_rotate(const ImageU8& img, double max_deg, SeededRng& rng) {
  if (!(max_deg >= 0.0)) throw InvalidArgument("random_rotate: max_deg must be >= 0");
  const double theta = rng.uniform(-max_deg, max_deg);
  return rotate(img, theta, 0);
}

ImageU8 random_shift(const ImageU8& img, double fx, double fy, SeededRng& rng) {
  if (!(fx >= 0.0 && fx < 1.0 && fy >= 0.0 && fy < 1.0)) {
    throw InvalidArgument("random_shift: fractions must lie in [0, 1)");
  }
  const long max_dx = std::lround(fx * img.width());
  const long max_dy = std::lround(fy * img.height());
  const auto dx = rng.uniform_int(-max_dx, max_dx);
  const auto dy = rng.uniform_int(-max_dy, max_dy);
  return shift(img, static_cast<int>(dx), static_cast<int>(dy), 0);
}

ImageU8 horizontal_flip(const ImageU8& img, SeededRng& rng, double p) {
  return rng.uniform() < p ? flip_horizontal(img) : img;
}

JitterFactors sample_jitter(const JitterParams& params, SeededRng& rng) {
  JitterFactors f;
  f.brightness = rng.uniform(std::max(0.0, 1.0 - params.brightness), 1.0 + params.brightness);
  f.contrast = rng.uniform(std::max(0.0, 1.0 - params.contrast), 1.0 + params.contrast);
  f.saturation = rng.uniform(std::max(0.0, 1.0 - params.saturation), 1.0 + params.saturation);
  f.hue = rng.uniform(-params.hue, params.hue);
  // Fisher-Yates over the four adjustments.
  for (int i = 3; i > 0; --i) {
    const auto j = static_cast<int>(rng.uniform_int(0, i));
    std::swap(f.order[i], f.order[j]);
  }
  return f;
}

ImageU8 apply_jitter(const ImageU8& img, const JitterFactors& factors) {
  if (img.empty()) throw InvalidArgument("color_jitter: empty image");
  const ImageU8 rgb = gray_to_rgb(img);
  std::vector<Rgb> px(static_cast<std::size_t>(rgb.width()) * rgb.height());
  const auto src = rgb.samples();
  for (std::size_t i = 0; i < px.size(); ++i) {
    px[i] = {static_cast<float>(src[3 * i]), static_cast<float>(src[3 * i + 1]), static_cast<float>(src[3 * i + 2])};
  }

  for (int step : factors.order) {
    switch (step) {
      case 0:
        if (factors.brightness != 1.0) adjust_brightness(px, factors.brightness);
        break;
      case 1:
        if (factors.contrast != 1.0) adjust_contrast(px, factors.contrast);
        break;
      case 2:
        if (factors.saturation != 1.0) adjust_saturation(px, factors.saturation);
        break;
      case 3:
        if (factors.hue != 0.0) adjust_hue(px, factors.hue);
        break;
      default:
        throw InvalidArgument("color_jitter: adjustment order must be a permutation of 0..3");
    }
  }

  ImageU8 out(rgb.width(), rgb.height(), 3);
  auto dst = out.samples();
  for (std::size_t i = 0; i < px.size(); ++i) {
    dst[3 * i] = static_cast<std::uint8_t>(std::lround(px[i].r));
    dst[3 * i + 1] = static_cast<std::uint8_t>(std::lround(px[i].g));
    dst[3 * i + 2] = static_cast<std::uint8_t>(std::lround(px[i].b));
  }
  return out;
}

ImageU8 color_jitter(const ImageU8& img, const JitterParams& params, SeededRng& rng) {
  return apply_jitter(img, sample_jitter(params, rng));
}

ImageF normalize(const ImageU8& img, const NormalizeParams& params) {
  if (img.empty()) throw InvalidArgument("normalize: empty image");
  if (params.mean.size() != params.std.size() || params.mean.empty()) {
    throw InvalidArgument("normalize: mean and std must have matching, non-zero length");
  }
  const std::size_t stats = params.mean.size();
  const ImageU8 src = (stats == 3 && img.channels() == 1) ? gray_to_rgb(img) : img;
  if (stats != 1 && static_cast<int>(stats) != src.channels()) {
    throw InvalidArgument("normalize: " + std::to_string(stats) + " channel statistics for a " +
                          describe_shape(src) + " image");
  }
  ImageF out(src.width(), src.height(), src.channels());
  const auto in = src.samples();
  auto dst = out.samples();
  const auto ch = static_cast<std::size_t>(src.channels());
  for (std::size_t i = 0; i < in.size(); ++i) {
    const std::size_t c = stats == 1 ? 0 : i % ch;
    dst[i] = static_cast<float>((in[i] / 255.0 - params.mean[c]) / params.std[c]);
  }
  return out;
}

}  // namespace geomaug::pipeline
