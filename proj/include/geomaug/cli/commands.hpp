#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geomaug/metrics/metrics.hpp"
#include "geomaug/pipeline/stage.hpp"

namespace geomaug::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitIo = 1, kExitConfig = 2 };

/// Where the pipeline comes from plus flag overrides. Exactly one of
/// `config` / `preset` must be set.
struct PipelineSource {
  std::optional<std::filesystem::path> config;
  std::optional<std::string> preset;
  std::optional<std::uint64_t> seed;
  std::optional<int> open_size;
  std::optional<int> dilate_size;
};

/// Resolve the effective pipeline. Throws ConfigError / IoError.
pipeline::PipelineSpec resolve_pipeline(const PipelineSource& source);

struct AugmentOptions {
  PipelineSource pipeline;
  std::filesystem::path in;
  std::filesystem::path out;
  int multiplier = 1;
  int jobs = 0;  ///< 0 = all available threads
};

struct AugmentSummary {
  std::size_t processed = 0;
  std::size_t skipped = 0;
  std::size_t emitted = 0;
};

/// Write k augmented PNG variants per source image under out/<class>/, plus
/// out/manifest.csv and out/effective_config.json. Variant v of the source with
/// ordinal i uses image index i * k + v. Undecodable files are skipped.
AugmentSummary run_augment(const AugmentOptions& opts);

struct PreviewOptions {
  PipelineSource pipeline;
  std::filesystem::path in;
  std::filesystem::path out;
  std::uint64_t index = 0;
};

/// Augment a single image and return its stage trace.
std::string run_preview(const PreviewOptions& opts);

struct MetricsOptions {
  std::filesystem::path logs;
  std::string baseline;
  std::filesystem::path out;
  std::optional<std::filesystem::path> plot;
  std::size_t window = metrics::kDefaultLossWindow;
};

std::vector<metrics::MetricPoint> run_metrics(const MetricsOptions& opts);

/// "name: Stage + Stage + ..." per preset.
void list_presets(std::ostream& out);

}  // namespace geomaug::cli
