#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geomaug/core/image.hpp"
#include "geomaug/pipeline/stage.hpp"

namespace geomaug::pipeline {

/// A stage that fired while processing one image.
struct TraceEntry {
  std::size_t position = 0;
  std::string token;
  /// Filter picked by the combinator ("Tenengrad" / "ImageToSketch"), or
  /// "skip" for a ColorJitter that left a gray image alone. Empty otherwise.
  std::string choice;

  std::string render() const;
};

struct Sample {
  /// Last 8-bit raster; the final output unless a Normalize stage ran.
  ImageU8 image;
  /// Set when the pipeline ends with Normalize.
  std::optional<ImageF> normalized;
  std::vector<TraceEntry> trace;

  /// Rendered trace entries joined with " + ".
  std::string trace_string() const;
};

/// Raised when a stage fails; carries the stage and the image index.
class StageError : public Error {
 public:
  StageError(const std::string& stage, std::uint64_t index, const std::string& what);
};

/// Run `spec` on `img`. A pure function of (spec incl. seed, img, index):
/// stage i fires when firing_draw(seed, i, index) < p and draws its parameters
/// from SeededRng(seed, i, index).
Sample apply(const PipelineSpec& spec, const ImageU8& img, std::uint64_t index);

/// 1-based count of activations of the stage at `position` up to and including
/// `index`, assuming it fires at `index`. Determines the combinator's filter.
std::uint64_t activation_number(const PipelineSpec& spec, std::size_t position, std::uint64_t index);

}  // namespace geomaug::pipeline
