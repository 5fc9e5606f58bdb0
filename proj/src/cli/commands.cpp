#include "geomaug/cli/commands.hpp"

#include <exception>
#include <fstream>
#include <map>
#include <ostream>

#include <fmt/format.h>
#include <omp.h>
#include <spdlog/spdlog.h>

#include "geomaug/cli/dataset.hpp"
#include "geomaug/cli/manifest.hpp"
#include "geomaug/core/codec.hpp"
#include "geomaug/metrics/log_csv.hpp"
#include "geomaug/pipeline/config.hpp"
#include "geomaug/pipeline/pipeline.hpp"
#include "geomaug/pipeline/presets.hpp"

namespace geomaug::cli {

namespace fs = std::filesystem;

namespace {

void apply_sketch_overrides(filters::SketchParams& s, const PipelineSource& src) {
  if (src.open_size) s.open_size = *src.open_size;
  if (src.dilate_size) s.dilate_size = *src.dilate_size;
}

// Output stems per class. Sources sharing a stem (a.png, a.jpg) keep their
// extension in the name so outputs never collide.
std::vector<std::string> output_stems(const std::vector<fs::path>& files) {
  std::map<std::string, int> stem_count;
  for (const auto& f : files) ++stem_count[f.stem().string()];
  std::vector<std::string> stems;
  stems.reserve(files.size());
  for (const auto& f : files) {
    std::string stem = f.stem().string();
    if (stem_count[stem] > 1) {
      std::string ext = f.extension().string();
      if (!ext.empty()) ext.erase(0, 1);
      stem += "_" + ext;
    }
    stems.push_back(std::move(stem));
  }
  return stems;
}

std::string generic(const fs::path& p) { return p.generic_string(); }

}  // namespace

pipeline::PipelineSpec resolve_pipeline(const PipelineSource& source) {
  if (source.config && source.preset) throw ConfigError("--preset and --config are mutually exclusive");
  if (!source.config && !source.preset) throw ConfigError("one of --preset or --config is required");

  pipeline::PipelineSpec spec =
      source.config ? pipeline::load_spec(*source.config) : pipeline::preset(*source.preset);
  if (source.seed) spec.seed = *source.seed;
  for (auto& stage : spec.stages) {
    if (auto* s = std::get_if<pipeline::SketchStageParams>(&stage.params)) apply_sketch_overrides(s->sketch, source);
    if (auto* c = std::get_if<pipeline::CombinatorParams>(&stage.params)) apply_sketch_overrides(c->sketch, source);
  }
  spec.validate();
  return spec;
}

AugmentSummary run_augment(const AugmentOptions& opts) {
  if (opts.multiplier < 1) throw ConfigError("--multiplier must be >= 1");
  const pipeline::PipelineSpec spec = resolve_pipeline(opts.pipeline);
  const DatasetLayout layout = scan_dataset(opts.in);

  struct Job {
    const DatasetLayout::ClassDir* cls;
    fs::path rel;
    std::string stem;
  };
  std::vector<Job> jobs;
  fs::create_directories(opts.out);
  for (const auto& cls : layout.classes) {
    fs::create_directories(opts.out / cls.name);
    const auto stems = output_stems(cls.files);
    for (std::size_t i = 0; i < cls.files.size(); ++i) jobs.push_back({&cls, cls.files[i], stems[i]});
  }

  struct Result {
    bool skipped = false;
    std::string warning;
    std::exception_ptr error;
    std::vector<ManifestRow> rows;
  };
  std::vector<Result> results(jobs.size());
  const auto k = static_cast<std::uint64_t>(opts.multiplier);
  const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
  const auto n_jobs = static_cast<long>(jobs.size());

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < n_jobs; ++i) {
    const Job& job = jobs[i];
    Result& res = results[i];
    ImageU8 img;
    try {
      img = decode(layout.root / job.rel);
    } catch (const IoError& ex) {
      res.skipped = true;
      res.warning = ex.what();
      continue;
    }
    try {
      for (std::uint64_t v = 0; v < k; ++v) {
        const std::uint64_t index = static_cast<std::uint64_t>(i) * k + v;
        const pipeline::Sample sample = pipeline::apply(spec, img, index);
        const fs::path rel_out = fs::path(job.cls->name) / fmt::format("{}_{}.png", job.stem, v);
        encode(sample.image, opts.out / rel_out, ImageFormat::Png);
        res.rows.push_back({generic(job.rel), generic(rel_out), job.cls->name, sample.trace_string(), spec.seed, index});
      }
    } catch (...) {
      res.error = std::current_exception();
    }
  }

  AugmentSummary summary;
  std::vector<ManifestRow> rows;
  for (const Result& res : results) {
    if (res.error) std::rethrow_exception(res.error);
    if (res.skipped) {
      spdlog::warn("skipping undecodable file: {}", res.warning);
      ++summary.skipped;
      continue;
    }
    ++summary.processed;
    summary.emitted += res.rows.size();
    rows.insert(rows.end(), res.rows.begin(), res.rows.end());
  }
  write_manifest(opts.out / "manifest.csv", rows);
  pipeline::save_spec(spec, opts.out / "effective_config.json");
  spdlog::info("{}: processed {}, skipped {}, emitted {}", spec.name, summary.processed, summary.skipped,
               summary.emitted);
  return summary;
}

std::string run_preview(const PreviewOptions& opts) {
  const pipeline::PipelineSpec spec = resolve_pipeline(opts.pipeline);
  if (!fs::exists(opts.in)) throw IoError("input file not found: " + opts.in.string());
  const ImageU8 img = decode(opts.in);
  const pipeline::Sample sample = pipeline::apply(spec, img, opts.index);
  if (opts.out.has_parent_path()) fs::create_directories(opts.out.parent_path());
  encode(sample.image, opts.out);
  spdlog::debug("{} seed={} index={}: {}", spec.name, spec.seed, opts.index, sample.trace_string());
  return sample.trace_string();
}

std::vector<metrics::MetricPoint> run_metrics(const MetricsOptions& opts) {
  std::ifstream in(opts.logs);
  if (!in) throw IoError("cannot open training log " + opts.logs.string());
  const auto records = metrics::read_run_log(in);
  const auto base = metrics::baseline_from(records, opts.baseline);
  std::vector<metrics::MetricPoint> points;
  try {
    points = metrics::aggregate(records, base, opts.window);
  } catch (const InvalidArgument& ex) {
    throw ConfigError(ex.what());
  }

  std::ofstream out(opts.out, std::ios::binary);
  if (!out) throw IoError("cannot write " + opts.out.string());
  metrics::write_metrics_csv(out, points);
  if (opts.plot) {
    std::ofstream svg(*opts.plot, std::ios::binary);
    if (!svg) throw IoError("cannot write " + opts.plot->string());
    svg << metrics::scatter_svg(points);
  }
  return points;
}

void list_presets(std::ostream& out) {
  for (const auto& name : pipeline::preset_names()) {
    out << name << ": " << pipeline::preset(name).describe() << '\n';
  }
}

}  // namespace geomaug::cli
