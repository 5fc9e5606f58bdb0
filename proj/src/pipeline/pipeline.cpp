#include "geomaug/pipeline/pipeline.hpp"

#include <fmt/format.h>

#include "geomaug/core/geometry.hpp"
#include "geomaug/filters/geometric.hpp"
#include "geomaug/pipeline/rng.hpp"
#include "geomaug/pipeline/transforms.hpp"

namespace geomaug::pipeline {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool fires(const PipelineSpec& spec, std::size_t position, std::uint64_t index) {
  return firing_draw(spec.seed, position, index) < spec.stages[position].p;
}

}  // namespace

std::string TraceEntry::render() const { return choice.empty() ? token : fmt::format("{}[{}]", token, choice); }

std::string Sample::trace_string() const {
  std::string out;
  for (const auto& e : trace) {
    if (!out.empty()) out += " + ";
    out += e.render();
  }
  return out;
}

StageError::StageError(const std::string& stage, std::uint64_t index, const std::string& what)
    : Error(fmt::format("stage {} failed on image {}: {}", stage, index, what)) {}

std::uint64_t activation_number(const PipelineSpec& spec, std::size_t position, std::uint64_t index) {
  if (position >= spec.stages.size()) throw InvalidArgument("activation_number: no such stage");
  std::uint64_t count = 1;
  for (std::uint64_t j = 0; j < index; ++j) {
    if (fires(spec, position, j)) ++count;
  }
  return count;
}

Sample apply(const PipelineSpec& spec, const ImageU8& img, std::uint64_t index) {
  Sample sample{img, std::nullopt, {}};

  for (std::size_t pos = 0; pos < spec.stages.size(); ++pos) {
    const Stage& stage = spec.stages[pos];
    if (!fires(spec, pos, index)) continue;

    SeededRng rng(spec.seed, pos, index);
    TraceEntry entry{pos, stage.token(), {}};
    ImageU8& cur = sample.image;
    try {
      std::visit(Overloaded{
                     [&](const ResizeParams& r) { cur = resize(cur, r.width, r.height); },
                     [&](const CenterCropParams& c) { cur = center_crop(cur, c.width, c.height); },
                     [&](const FlipParams&) { cur = flip_horizontal(cur); },
                     [&](const RotateParams& r) { cur = random_rotate(cur, r.max_degrees, rng); },
                     [&](const ShiftParams& s) { cur = random_shift(cur, s.fx, s.fy, rng); },
                     [&](const JitterParams& j) {
                       if (cur.channels() == 1 && j.on_gray == GrayPolicy::Skip) {
                         entry.choice = "skip";
                         return;
                       }
                       cur = color_jitter(cur, j, rng);
                     },
                     [&](const TenengradParams&) { cur = filters::tenengrad(cur); },
                     [&](const SketchStageParams& s) { cur = filters::image_to_sketch(cur, s.sketch); },
                     [&](const CombinatorParams& c) {
                       const bool use_tenengrad = c.mode == AlternationMode::Alternate
                                                      ? activation_number(spec, pos, index) % 2 == 1
                                                      : rng.uniform() < 0.5;
                       if (use_tenengrad) {
                         entry.choice = "Tenengrad";
                         cur = filters::tenengrad(cur);
                       } else {
                         entry.choice = "ImageToSketch";
                         cur = filters::image_to_sketch(cur, c.sketch);
                       }
                     },
                     [&](const NormalizeParams& n) { sample.normalized = normalize(cur, n); },
                 },
                 stage.params);
    } catch (const StageError&) {
      throw;
    } catch (const std::exception& ex) {
      throw StageError(entry.token, index, ex.what());
    }
    sample.trace.push_back(std::move(entry));
  }
  return sample;
}

}  // namespace geomaug::pipeline
