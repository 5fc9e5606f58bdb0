// geomaug: batch front-end for the geometric augmentation library.
//
//   geomaug presets
//   geomaug preview --preset tenengrad --in img.png --out out.png --seed 1 --index 3
//   geomaug augment --preset tenengrad --in dataset/ --out augmented/ --multiplier 2
//   geomaug metrics --logs runs.csv --baseline none --out metrics.csv --plot metrics.svg
//
// Exit codes: 0 success, 1 I/O error, 2 configuration error.

#include <cstdlib>
#include <iostream>

#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "geomaug/cli/commands.hpp"
#include "geomaug/core/error.hpp"

namespace {

using namespace geomaug;

void add_pipeline_options(CLI::App* cmd, cli::PipelineSource& src) {
  auto* config = cmd->add_option("--config", src.config, "Pipeline config (JSON)");
  auto* preset = cmd->add_option("--preset", src.preset, "Built-in pipeline; see `geomaug presets`");
  config->excludes(preset);
  cmd->add_option("--seed", src.seed, "Override the pipeline seed");
  cmd->add_option("--open-size", src.open_size, "ImageToSketch opening kernel size (default 1)");
  cmd->add_option("--dilate-size", src.dilate_size, "ImageToSketch dilation kernel size (default 2)");
}

void configure_logging() {
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("GEOMAUG_LOG")) {
    spdlog::set_level(spdlog::level::from_str(env));
  }
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();

  CLI::App app{"Geometric image augmentation: Tenengrad and ImageToSketch filters, presets, metrics"};
  app.require_subcommand(1);

  cli::AugmentOptions augment;
  auto* augment_cmd = app.add_subcommand("augment", "Apply a pipeline to a class-per-directory dataset");
  add_pipeline_options(augment_cmd, augment.pipeline);
  augment_cmd->add_option("--in", augment.in, "Dataset root (one subdirectory per class)")->required();
  augment_cmd->add_option("--out", augment.out, "Output root")->required();
  augment_cmd->add_option("--multiplier", augment.multiplier, "Augmented variants per source image")
      ->check(CLI::PositiveNumber);
  augment_cmd->add_option("--jobs", augment.jobs, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);

  cli::PreviewOptions preview;
  auto* preview_cmd = app.add_subcommand("preview", "Augment a single image and print the stage trace");
  add_pipeline_options(preview_cmd, preview.pipeline);
  preview_cmd->add_option("--in", preview.in, "Input image")->required();
  preview_cmd->add_option("--out", preview.out, "Output image (.png or .jpg)")->required();
  preview_cmd->add_option("--index", preview.index, "Image index selecting the random streams");

  cli::MetricsOptions metrics_opts;
  auto* metrics_cmd = app.add_subcommand("metrics", "Affinity and diversity from training logs");
  metrics_cmd->add_option("--logs", metrics_opts.logs, "CSV: augmentation,replicate,epoch,train_loss,acc_val,acc_field")
      ->required();
  metrics_cmd->add_option("--baseline", metrics_opts.baseline, "Augmentation name of the un-augmented runs")
      ->required();
  metrics_cmd->add_option("--out", metrics_opts.out, "Output CSV")->required();
  metrics_cmd->add_option("--plot", metrics_opts.plot, "Optional SVG scatter plot");
  metrics_cmd->add_option("--window", metrics_opts.window, "Trailing epochs averaged per loss series")
      ->check(CLI::PositiveNumber);

  auto* presets_cmd = app.add_subcommand("presets", "List built-in pipelines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitConfig;
  }

  try {
    if (*augment_cmd) {
      const auto s = cli::run_augment(augment);
      std::cout << "processed " << s.processed << ", skipped " << s.skipped << ", emitted " << s.emitted << '\n';
    } else if (*preview_cmd) {
      std::cout << cli::run_preview(preview) << '\n';
    } else if (*metrics_cmd) {
      for (const auto& p : cli::run_metrics(metrics_opts)) {
        std::cout << p.augmentation << ": affinity " << p.affinity << " (sd " << p.affinity_std << "), diversity "
                  << p.diversity << " (sd " << p.diversity_std << "), n=" << p.n_replicates << '\n';
      }
    } else if (*presets_cmd) {
      cli::list_presets(std::cout);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return cli::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitIo;
  }
  return cli::kExitOk;
}
