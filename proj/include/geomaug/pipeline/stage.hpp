#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "geomaug/filters/geometric.hpp"

namespace geomaug::pipeline {

enum class StageKind {
  Resize,
  CenterCrop,
  HorizontalFlip,
  RandomRotate,
  RandomShift,
  ColorJitter,
  Tenengrad,
  ImageToSketch,
  TenengradOrSketch,
  Normalize,
};

std::string_view kind_name(StageKind kind) noexcept;
/// Throws ConfigError listing the valid names.
StageKind kind_from_name(std::string_view name);

struct ResizeParams {
  int width = 224;
  int height = 224;
};

struct CenterCropParams {
  int width = 224;
  int height = 224;
};

struct FlipParams {};

struct RotateParams {
  double max_degrees = 10.0;
};

struct ShiftParams {
  double fx = 0.05;
  double fy = 0.05;
};

/// What ColorJitter does with a single-channel input.
enum class GrayPolicy { Replicate, Skip };

struct JitterParams {
  double brightness = 0.2;
  double contrast = 0.3;
  double saturation = 0.3;
  double hue = 0.3;
  GrayPolicy on_gray = GrayPolicy::Replicate;
};

struct TenengradParams {};

struct SketchStageParams {
  filters::SketchParams sketch;
};

/// How the Tenengrad/ImageToSketch combinator chooses a filter when it fires.
enum class AlternationMode {
  Alternate,  ///< Tenengrad on the 1st, 3rd, ... activation; ImageToSketch on the others.
  Coin,       ///< Independent fair coin per activation.
};

struct CombinatorParams {
  AlternationMode mode = AlternationMode::Alternate;
  filters::SketchParams sketch;
};

/// ImageNet statistics on the [0, 1] scale unless configured otherwise.
struct NormalizeParams {
  std::vector<double> mean{0.485, 0.456, 0.406};
  std::vector<double> std{0.229, 0.224, 0.225};
};

using StageParams = std::variant<ResizeParams, CenterCropParams, FlipParams, RotateParams, ShiftParams,
                                 JitterParams, TenengradParams, SketchStageParams, CombinatorParams,
                                 NormalizeParams>;

/// One step of a pipeline. The variant alternative determines the kind; the
/// order of alternatives matches StageKind.
struct Stage {
  StageParams params;
  double p = 1.0;
  /// Overrides the generated trace token when non-empty.
  std::string label;

  StageKind kind() const noexcept { return static_cast<StageKind>(params.index()); }
  /// Token used in stage strings and traces, e.g. "RandomRotate(10°)".
  std::string token() const;
};

struct PipelineSpec {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<Stage> stages;

  /// Throws ConfigError with a "stages[i].field: ..." diagnostic on the first
  /// violated constraint.
  void validate() const;

  /// Stage tokens joined with " + ".
  std::string describe() const;
};

}  // namespace geomaug::pipeline
