#include <gtest/gtest.h>

#include <fstream>

#include "geomaug/pipeline/config.hpp"
#include "geomaug/pipeline/pipeline.hpp"
#include "geomaug/pipeline/presets.hpp"
#include "support/test_support.hpp"

namespace geomaug::pipeline {
namespace {

using nlohmann::json;

std::string config_error(const json& doc) {
  try {
    spec_from_json(doc);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

TEST(Config, PresetsRoundTrip) {
  for (const auto& name : preset_names()) {
    const PipelineSpec spec = preset(name, 123);
    const json doc = to_json(spec);
    const PipelineSpec back = spec_from_json(doc);
    EXPECT_EQ(back.describe(), spec.describe());
    EXPECT_EQ(back.seed, 123u);
    EXPECT_EQ(back.name, name);
    EXPECT_EQ(to_json(back), doc);
  }
}

TEST(Config, RoundTripPreservesBehaviour) {
  std::mt19937 gen(1);
  const ImageU8 img = testing::random_image(gen, 300, 260, 3);
  const PipelineSpec spec = preset("tenengrad+imagetosketch", 9);
  const PipelineSpec back = spec_from_json(json::parse(to_json(spec).dump()));
  for (std::uint64_t i = 0; i < 4; ++i) EXPECT_EQ(apply(spec, img, i).image, apply(back, img, i).image);
}

TEST(Config, EveryKindParses) {
  const json doc = json::parse(R"({
    "name": "all", "seed": 3,
    "stages": [
      {"kind": "Resize", "width": 256, "height": 240},
      {"kind": "CenterCrop", "width": 224, "height": 224},
      {"kind": "HorizontalFlip", "p": 0.5},
      {"kind": "RandomRotate", "p": 0.4, "degrees": 15},
      {"kind": "RandomShift", "p": 0.4, "x": 0.1, "y": 0.0},
      {"kind": "ColorJitter", "p": 0.4, "brightness": 0.1, "contrast": 0, "saturation": 0.2, "hue": 0.05, "on_gray": "skip"},
      {"kind": "Tenengrad", "p": 0.1},
      {"kind": "ImageToSketch", "p": 0.1, "blur_ksize": 11, "open_size": 1, "dilate_size": 3},
      {"kind": "TenengradOrSketch", "p": 0.5, "mode": "coin"},
      {"kind": "Normalize", "mean": [0.5], "std": [0.25]}
    ]})");
  const PipelineSpec spec = spec_from_json(doc);
  ASSERT_EQ(spec.stages.size(), 10u);
  EXPECT_EQ(std::get<ResizeParams>(spec.stages[0].params).height, 240);
  EXPECT_EQ(spec.stages[1].p, 1.0);
  EXPECT_EQ(std::get<RotateParams>(spec.stages[3].params).max_degrees, 15.0);
  EXPECT_EQ(std::get<ShiftParams>(spec.stages[4].params).fx, 0.1);
  EXPECT_EQ(std::get<JitterParams>(spec.stages[5].params).on_gray, GrayPolicy::Skip);
  EXPECT_EQ(std::get<SketchStageParams>(spec.stages[7].params).sketch.dilate_size, 3);
  EXPECT_EQ(std::get<CombinatorParams>(spec.stages[8].params).mode, AlternationMode::Coin);
  EXPECT_EQ(std::get<NormalizeParams>(spec.stages[9].params).std, std::vector<double>{0.25});
  for (std::size_t i = 0; i < spec.stages.size(); ++i) {
    EXPECT_EQ(spec.stages[i].kind(), static_cast<StageKind>(i));
  }
}

TEST(Config, Diagnostics) {
  EXPECT_NE(config_error(json::parse(R"({"stages": [{"kind": "Blur"}]})")).find("valid kinds"), std::string::npos);
  EXPECT_NE(config_error(json::parse(R"({"stages": [{"kind": "RandomRotate", "degrees": -5}]})"))
                .find("stages[0].degrees"),
            std::string::npos);
  EXPECT_NE(config_error(json::parse(R"({"stages": [{"kind": "Tenengrad"}, {"kind": "Resize", "p": 1.5}]})"))
                .find("stages[1].p"),
            std::string::npos);
  EXPECT_NE(config_error(json::parse(R"({"stages": [{"kind": "Resize", "size": 3}]})")).find("unknown key 'size'"),
            std::string::npos);
  EXPECT_NE(config_error(json::parse(R"({"stages": [], "extra": 1})")).find("unknown key 'extra'"),
            std::string::npos);
  EXPECT_NE(config_error(json::parse(R"({"stages": [{"kind": "ColorJitter", "hue": 0.7}]})")).find("stages[0].hue"),
            std::string::npos);
  EXPECT_NE(config_error(json::parse(R"({"stages": [{"kind": "RandomShift", "x": "wide"}]})")).find("stages[0].x"),
            std::string::npos);
  EXPECT_NE(config_error(json::parse(R"({"stages": [{"kind": "ImageToSketch", "blur_ksize": 20}]})"))
                .find("stages[0].blur_ksize"),
            std::string::npos);
  EXPECT_NE(config_error(json::parse(R"({"stages": [{"kind": "Normalize", "std": [0, 1, 1]}]})")).find("stages[0].std"),
            std::string::npos);
  EXPECT_NE(config_error(json::parse(R"({"stages": [{"p": 1}]})")).find("stages[0].kind"), std::string::npos);
  EXPECT_NE(config_error(json::parse(R"([1, 2])")), "");
}

TEST(Config, NormalizeMustBeLastAndUnique) {
  EXPECT_NE(config_error(json::parse(R"({"stages": [{"kind": "Normalize"}, {"kind": "Tenengrad"}]})"))
                .find("Normalize must be the last stage"),
            std::string::npos);
  EXPECT_NE(config_error(json::parse(R"({"stages": [{"kind": "Normalize"}, {"kind": "Normalize"}]})")), "");
}

TEST(Config, FileRoundTripAndErrors) {
  testing::TempDir dir;
  const PipelineSpec spec = preset("conventional", 4);
  save_spec(spec, dir / "p.json");
  EXPECT_EQ(load_spec(dir / "p.json").describe(), spec.describe());
  EXPECT_THROW(load_spec(dir / "missing.json"), IoError);
  std::ofstream(dir / "bad.json") << "{ not json";
  EXPECT_THROW(load_spec(dir / "bad.json"), ConfigError);
}

}  // namespace
}  // namespace geomaug::pipeline
