// Writes the golden input/output pairs used by the regression tests.
//
//   geomaug_make_fixtures <dir>
//
// Inputs are synthetic and fully determined by this file. Outputs come from the
// library as built; regenerate only when a filter is changed on purpose.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>

#include "geomaug/core/codec.hpp"
#include "geomaug/filters/geometric.hpp"
#include "geomaug/pipeline/pipeline.hpp"
#include "geomaug/pipeline/presets.hpp"

namespace fs = std::filesystem;
using namespace geomaug;

namespace {

ImageU8 step_edge_8x8() {
  ImageU8 img(8, 8, 1);
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) img.at(x, y) = x < 4 ? 40 : 200;
  }
  return img;
}

// A textured elliptical grain with three pores on a dark, slightly uneven
// background.
ImageU8 pollen_224() {
  constexpr int n = 224;
  std::mt19937 noise(20240101u);
  ImageU8 img(n, n, 3);
  const double cx = 111.0, cy = 115.0, rx = 72.0, ry = 61.0;
  const double pores[3][2] = {{80, 90}, {145, 100}, {112, 160}};
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      const double dx = (x - cx) / rx;
      const double dy = (y - cy) / ry;
      const double r = std::sqrt(dx * dx + dy * dy);
      double base[3] = {28.0 + 0.05 * x, 30.0 + 0.04 * y, 34.0};
      if (r < 1.0) {
        const double texture = 12.0 * std::sin(x * 0.45) * std::cos(y * 0.38);
        base[0] = 188 + texture;
        base[1] = 158 + texture;
        base[2] = 112 + 0.5 * texture;
        if (r > 0.86) {
          for (double& b : base) b *= 0.62;  // exine
        }
        for (const auto& p : pores) {
          const double d = std::hypot(x - p[0], y - p[1]);
          if (d < 7.0) {
            for (double& b : base) b *= 0.5 + 0.07 * d;
          }
        }
      }
      for (int c = 0; c < 3; ++c) {
        const double v = base[c] + static_cast<int>(noise() % 9) - 4;
        img.at(x, y, c) = static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
      }
    }
  }
  return img;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: geomaug_make_fixtures <dir>\n";
    return 2;
  }
  const fs::path dir = argv[1];
  fs::create_directories(dir);

  const ImageU8 step = step_edge_8x8();
  encode(step, dir / "step8_input.png");
  encode(filters::tenengrad(step), dir / "step8_tenengrad.png");
  encode(filters::image_to_sketch(step), dir / "step8_sketch.png");

  const ImageU8 pollen = pollen_224();
  encode(pollen, dir / "pollen224_input.png");
  encode(filters::tenengrad(pollen), dir / "pollen224_tenengrad.png");
  encode(filters::image_to_sketch(pollen), dir / "pollen224_sketch.png");

  const auto preview = pipeline::apply(pipeline::preset("tenengrad", 7), pollen, 3);
  encode(preview.image, dir / "pollen224_preview_tenengrad_seed7_index3.png");
  std::cout << "preview trace: " << preview.trace_string() << '\n';
  return 0;
}
