#include "geomaug/pipeline/config.hpp"

#include <fstream>
#include <set>

#include <fmt/format.h>

#include "geomaug/core/error.hpp"

namespace geomaug::pipeline {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void put_sketch(json& j, const filters::SketchParams& s) {
  j["blur_ksize"] = s.blur_ksize;
  j["open_size"] = s.open_size;
  j["dilate_size"] = s.dilate_size;
}

// Reads typed fields out of one stage object and remembers which keys were
// consumed so leftovers can be reported.
class FieldReader {
 public:
  FieldReader(const json& obj, std::size_t index) : obj_(obj), index_(index) {}

  template <typename T>
  void read(const char* key, T& out) {
    used_.insert(key);
    const auto it = obj_.find(key);
    if (it == obj_.end()) return;
    try {
      out = it->template get<T>();
    } catch (const json::exception& ex) {
      throw ConfigError(fmt::format("stages[{}].{}: {}", index_, key, ex.what()));
    }
  }

  void read_sketch(filters::SketchParams& s) {
    read("blur_ksize", s.blur_ksize);
    read("open_size", s.open_size);
    read("dilate_size", s.dilate_size);
  }

  template <typename Enum>
  void read_enum(const char* key, Enum& out, std::initializer_list<std::pair<const char*, Enum>> names) {
    std::string value;
    read(key, value);
    if (value.empty()) return;
    for (const auto& [name, e] : names) {
      if (value == name) {
        out = e;
        return;
      }
    }
    throw ConfigError(fmt::format("stages[{}].{}: unknown value '{}'", index_, key, value));
  }

  void reject_unknown(std::string_view kind) const {
    for (const auto& [key, _] : obj_.items()) {
      if (key == "kind" || key == "p" || key == "label" || used_.count(key) != 0) continue;
      throw ConfigError(fmt::format("stages[{}]: unknown key '{}' for kind {}", index_, key, kind));
    }
  }

 private:
  const json& obj_;
  std::size_t index_;
  std::set<std::string> used_;
};

Stage stage_from_json(const json& obj, std::size_t i) {
  if (!obj.is_object()) throw ConfigError(fmt::format("stages[{}]: expected an object", i));
  const auto kind_it = obj.find("kind");
  if (kind_it == obj.end() || !kind_it->is_string()) {
    throw ConfigError(fmt::format("stages[{}].kind: required string field missing", i));
  }
  const StageKind kind = kind_from_name(kind_it->get<std::string>());

  Stage st;
  FieldReader r(obj, i);
  r.read("p", st.p);
  r.read("label", st.label);

  switch (kind) {
    case StageKind::Resize: {
      ResizeParams p;
      r.read("width", p.width);
      r.read("height", p.height);
      st.params = p;
      break;
    }
    case StageKind::CenterCrop: {
      CenterCropParams p;
      r.read("width", p.width);
      r.read("height", p.height);
      st.params = p;
      break;
    }
    case StageKind::HorizontalFlip:
      st.params = FlipParams{};
      break;
    case StageKind::RandomRotate: {
      RotateParams p;
      r.read("degrees", p.max_degrees);
      st.params = p;
      break;
    }
    case StageKind::RandomShift: {
      ShiftParams p;
      r.read("x", p.fx);
      r.read("y", p.fy);
      st.params = p;
      break;
    }
    case StageKind::ColorJitter: {
      JitterParams p;
      r.read("brightness", p.brightness);
      r.read("contrast", p.contrast);
      r.read("saturation", p.saturation);
      r.read("hue", p.hue);
      r.read_enum("on_gray", p.on_gray, {{"replicate", GrayPolicy::Replicate}, {"skip", GrayPolicy::Skip}});
      st.params = p;
      break;
    }
    case StageKind::Tenengrad:
      st.params = TenengradParams{};
      break;
    case StageKind::ImageToSketch: {
      SketchStageParams p;
      r.read_sketch(p.sketch);
      st.params = p;
      break;
    }
    case StageKind::TenengradOrSketch: {
      CombinatorParams p;
      r.read_enum("mode", p.mode, {{"alternate", AlternationMode::Alternate}, {"coin", AlternationMode::Coin}});
      r.read_sketch(p.sketch);
      st.params = p;
      break;
    }
    case StageKind::Normalize: {
      NormalizeParams p;
      r.read("mean", p.mean);
      r.read("std", p.std);
      st.params = p;
      break;
    }
  }
  r.reject_unknown(kind_name(kind));
  return st;
}

}  // namespace

json to_json(const PipelineSpec& spec) {
  json stages = json::array();
  for (const Stage& st : spec.stages) {
    json j;
    j["kind"] = std::string(kind_name(st.kind()));
    j["p"] = st.p;
    if (!st.label.empty()) j["label"] = st.label;
    std::visit(Overloaded{
                   [&](const ResizeParams& p) {
                     j["width"] = p.width;
                     j["height"] = p.height;
                   },
                   [&](const CenterCropParams& p) {
                     j["width"] = p.width;
                     j["height"] = p.height;
                   },
                   [](const FlipParams&) {},
                   [&](const RotateParams& p) { j["degrees"] = p.max_degrees; },
                   [&](const ShiftParams& p) {
                     j["x"] = p.fx;
                     j["y"] = p.fy;
                   },
                   [&](const JitterParams& p) {
                     j["brightness"] = p.brightness;
                     j["contrast"] = p.contrast;
                     j["saturation"] = p.saturation;
                     j["hue"] = p.hue;
                     j["on_gray"] = p.on_gray == GrayPolicy::Replicate ? "replicate" : "skip";
                   },
                   [](const TenengradParams&) {},
                   [&](const SketchStageParams& p) { put_sketch(j, p.sketch); },
                   [&](const CombinatorParams& p) {
                     j["mode"] = p.mode == AlternationMode::Alternate ? "alternate" : "coin";
                     put_sketch(j, p.sketch);
                   },
                   [&](const NormalizeParams& p) {
                     j["mean"] = p.mean;
                     j["std"] = p.std;
                   },
               },
               st.params);
    stages.push_back(std::move(j));
  }
  return json{{"name", spec.name}, {"seed", spec.seed}, {"stages", std::move(stages)}};
}

PipelineSpec spec_from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("pipeline config: expected a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "name" && key != "seed" && key != "stages") {
      throw ConfigError(fmt::format("pipeline config: unknown key '{}'", key));
    }
  }
  PipelineSpec spec;
  try {
    spec.name = doc.value("name", std::string{});
    spec.seed = doc.value("seed", std::uint64_t{0});
  } catch (const json::exception& ex) {
    throw ConfigError(fmt::format("pipeline config: {}", ex.what()));
  }
  const auto stages = doc.find("stages");
  if (stages == doc.end() || !stages->is_array()) {
    throw ConfigError("pipeline config: 'stages' must be an array");
  }
  for (std::size_t i = 0; i < stages->size(); ++i) spec.stages.push_back(stage_from_json((*stages)[i], i));
  spec.validate();
  return spec;
}

PipelineSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open pipeline config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& ex) {
    throw ConfigError(fmt::format("{}: {}", path.string(), ex.what()));
  }
  return spec_from_json(doc);
}

void save_spec(const PipelineSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << to_json(spec).dump(2) << '\n';
}

}  // namespace geomaug::pipeline
