#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "geomaug/pipeline/stage.hpp"

namespace geomaug::pipeline {

/// Step probability shared by the stochastic stages of the fine-tuning pipelines.
inline constexpr double kDefaultStageProbability = 0.4;
/// Activation probability of the Tenengrad+ImageToSketch combinator.
inline constexpr double kCombinatorProbability = 0.5;
/// Network input size.
inline constexpr int kInputSize = 224;
/// Resize target ahead of CenterCrop.
inline constexpr int kPreCropSize = 256;

/// Valid preset names in listing order.
const std::vector<std::string>& preset_names();

/// Build a named preset. Throws ConfigError listing valid names when unknown.
///
/// Stage probabilities:
///   conventional       Resize, Normalize p=1; RandomRotate, RandomShift,
///                      ColorJitter p=0.4.
///   tenengrad,         Resize(256), CenterCrop(224), Normalize p=1; every other
///   imagetosketch      stage p=0.4.
///   tenengrad+imagetosketch
///                      as above with the filter replaced by the alternating
///                      combinator at p=0.5.
///   rotate-and-flip    Resize(256), CenterCrop(224), RandomRotate(90), Normalize
///                      p=1; RandomHorizontalFlip p=0.5.
PipelineSpec preset(std::string_view name, std::uint64_t seed = 0);

}  // namespace geomaug::pipeline
