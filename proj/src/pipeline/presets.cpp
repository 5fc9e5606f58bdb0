#include "geomaug/pipeline/presets.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "geomaug/core/error.hpp"

namespace geomaug::pipeline {

namespace {

constexpr double kP = kDefaultStageProbability;

Stage always(StageParams params) { return Stage{std::move(params), 1.0, {}}; }
Stage sometimes(StageParams params, double p, std::string label = {}) {
  return Stage{std::move(params), p, std::move(label)};
}

// Resize + CenterCrop + HorizontalFlip(p) + RandomRotate(10°) + <filter> +
// RandomShift(p, percent) + ColorJitter(...) + Normalize
PipelineSpec geometric(std::string name, Stage filter, std::uint64_t seed) {
  PipelineSpec spec{std::move(name), seed, {}};
  spec.stages = {
      always(ResizeParams{kPreCropSize, kPreCropSize}),
      always(CenterCropParams{kInputSize, kInputSize}),
      sometimes(FlipParams{}, kP),
      sometimes(RotateParams{10.0}, kP),
      std::move(filter),
      sometimes(ShiftParams{0.05, 0.05}, kP, "RandomShift(p, percent)"),
      sometimes(JitterParams{}, kP),
      always(NormalizeParams{}),
  };
  return spec;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"conventional", "tenengrad", "imagetosketch",
                                              "tenengrad+imagetosketch", "rotate-and-flip"};
  return names;
}

PipelineSpec preset(std::string_view name, std::uint64_t seed) {
  if (name == "conventional") {
    PipelineSpec spec{"conventional", seed, {}};
    spec.stages = {
        always(ResizeParams{kInputSize, kInputSize}),
        sometimes(RotateParams{10.0}, kP),
        sometimes(ShiftParams{0.05, 0.05}, kP),
        sometimes(JitterParams{}, kP),
        always(NormalizeParams{}),
    };
    return spec;
  }
  if (name == "tenengrad") return geometric("tenengrad", sometimes(TenengradParams{}, kP), seed);
  if (name == "imagetosketch") return geometric("imagetosketch", sometimes(SketchStageParams{}, kP), seed);
  if (name == "tenengrad+imagetosketch") {
    return geometric("tenengrad+imagetosketch", sometimes(CombinatorParams{}, kCombinatorProbability), seed);
  }
  if (name == "rotate-and-flip") {
    // The affinity/diversity runs do not use the shared step probability; the
    // flip keeps the usual fair-coin default.
    PipelineSpec spec{"rotate-and-flip", seed, {}};
    spec.stages = {
        always(ResizeParams{kPreCropSize, kPreCropSize}),
        always(CenterCropParams{kInputSize, kInputSize}),
        always(RotateParams{90.0}),
        sometimes(FlipParams{}, 0.5, "RandomHorizontalFlip"),
        always(NormalizeParams{}),
    };
    return spec;
  }
  throw ConfigError(fmt::format("unknown preset '{}'; valid presets: {}", name, fmt::join(preset_names(), ", ")));
}

}  // namespace geomaug::pipeline
