#include "geomaug/pipeline/stage.hpp"

#include <array>
#include <cmath>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "geomaug/core/error.hpp"

namespace geomaug::pipeline {

namespace {

constexpr std::array<std::string_view, 10> kKindNames{
    "Resize",        "CenterCrop", "HorizontalFlip", "RandomRotate",      "RandomShift",
    "ColorJitter",   "Tenengrad",  "ImageToSketch",  "TenengradOrSketch", "Normalize",
};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string with_p(std::string_view name, double p) {
  return p < 1.0 ? fmt::format("{}(p)", name) : std::string(name);
}

[[noreturn]] void fail(std::size_t i, std::string_view field, std::string_view msg) {
  throw ConfigError(fmt::format("stages[{}].{}: {}", i, field, msg));
}

void check_sketch(std::size_t i, const filters::SketchParams& s) {
  if (s.blur_ksize < 3 || s.blur_ksize % 2 == 0) fail(i, "blur_ksize", "must be odd and >= 3");
  if (s.open_size < 1) fail(i, "open_size", "must be >= 1");
  if (s.dilate_size < 1) fail(i, "dilate_size", "must be >= 1");
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

std::string_view kind_name(StageKind kind) noexcept { return kKindNames[static_cast<std::size_t>(kind)]; }

StageKind kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<StageKind>(i);
  }
  throw ConfigError(fmt::format("unknown stage kind '{}'; valid kinds: {}", name, fmt::join(kKindNames, ", ")));
}

std::string Stage::token() const {
  if (!label.empty()) return label;
  return std::visit(
      Overloaded{
          [](const ResizeParams&) -> std::string { return "Resize"; },
          [](const CenterCropParams&) -> std::string { return "CenterCrop"; },
          [this](const FlipParams&) { return with_p("HorizontalFlip", p); },
          [](const RotateParams& r) { return fmt::format("RandomRotate({:g}°)", r.max_degrees); },
          [](const ShiftParams& s) { return fmt::format("RandomShift(x={:g}, y={:g})", s.fx, s.fy); },
          [](const JitterParams& j) {
            return fmt::format("ColorJitter(brightness={:g}, contrast={:g}, saturation={:g}, hue={:g})",
                               j.brightness, j.contrast, j.saturation, j.hue);
          },
          [this](const TenengradParams&) { return with_p("Tenengrad", p); },
          [this](const SketchStageParams&) { return with_p("ImageToSketch", p); },
          [this](const CombinatorParams&) { return with_p("Tenengrad+ImageToSketch", p); },
          [](const NormalizeParams&) -> std::string { return "Normalize"; },
      },
      params);
}

void PipelineSpec::validate() const {
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const Stage& st = stages[i];
    if (!(st.p >= 0.0 && st.p <= 1.0)) fail(i, "p", "must lie in [0, 1]");
    std::visit(Overloaded{
                   [i](const ResizeParams& r) {
                     if (r.width <= 0) fail(i, "width", "must be > 0");
                     if (r.height <= 0) fail(i, "height", "must be > 0");
                   },
                   [i](const CenterCropParams& c) {
                     if (c.width <= 0) fail(i, "width", "must be > 0");
                     if (c.height <= 0) fail(i, "height", "must be > 0");
                   },
                   [](const FlipParams&) {},
                   [i](const RotateParams& r) {
                     if (!finite_nonneg(r.max_degrees)) fail(i, "degrees", "must be >= 0");
                   },
                   [i](const ShiftParams& s) {
                     if (!(finite_nonneg(s.fx) && s.fx < 1.0)) fail(i, "x", "must lie in [0, 1)");
                     if (!(finite_nonneg(s.fy) && s.fy < 1.0)) fail(i, "y", "must lie in [0, 1)");
                   },
                   [i](const JitterParams& j) {
                     if (!finite_nonneg(j.brightness)) fail(i, "brightness", "must be >= 0");
                     if (!finite_nonneg(j.contrast)) fail(i, "contrast", "must be >= 0");
                     if (!finite_nonneg(j.saturation)) fail(i, "saturation", "must be >= 0");
                     if (!(finite_nonneg(j.hue) && j.hue <= 0.5)) fail(i, "hue", "must lie in [0, 0.5]");
                   },
                   [](const TenengradParams&) {},
                   [i](const SketchStageParams& s) { check_sketch(i, s.sketch); },
                   [i](const CombinatorParams& c) { check_sketch(i, c.sketch); },
                   [this, i](const NormalizeParams& n) {
                     if (i + 1 != stages.size()) fail(i, "kind", "Normalize must be the last stage");
                     if (n.mean.size() != n.std.size() || (n.mean.size() != 1 && n.mean.size() != 3)) {
                       fail(i, "mean", "mean and std need 1 or 3 matching entries");
                     }
                     for (double s : n.std) {
                       if (!(std::isfinite(s) && s > 0.0)) fail(i, "std", "every entry must be > 0");
                     }
                     for (double m : n.mean) {
                       if (!std::isfinite(m)) fail(i, "mean", "entries must be finite");
                     }
                   },
               },
               st.params);
  }
}

std::string PipelineSpec::describe() const {
  std::vector<std::string> tokens;
  tokens.reserve(stages.size());
  for (const auto& st : stages) tokens.push_back(st.token());
  return fmt::format("{}", fmt::join(tokens, " + "));
}

}  // namespace geomaug::pipeline
