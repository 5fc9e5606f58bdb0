#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "geomaug/cli/commands.hpp"
#include "geomaug/cli/dataset.hpp"
#include "geomaug/cli/manifest.hpp"
#include "geomaug/core/codec.hpp"
#include "geomaug/pipeline/config.hpp"
#include "geomaug/pipeline/presets.hpp"
#include "support/test_support.hpp"

namespace geomaug::cli {
namespace {

namespace fs = std::filesystem;
using testing::TempDir;
using testing::run_cli;

std::vector<std::string> read_lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

// Output column of a manifest row; traces may be quoted but never precede it.
std::string output_column(const std::string& row) {
  std::vector<std::string> cols;
  std::stringstream ss(row);
  std::string col;
  std::getline(ss, col, ',');
  std::getline(ss, col, ',');
  return col;
}

AugmentOptions augment_opts(const TempDir& dir, std::string preset, int k, int jobs) {
  AugmentOptions o;
  o.pipeline.preset = std::move(preset);
  o.pipeline.seed = 7;
  o.in = dir / "in";
  o.out = dir / ("out_" + std::to_string(jobs));
  o.multiplier = k;
  o.jobs = jobs;
  return o;
}

TEST(Dataset, ScanIsSortedAndFiltered) {
  TempDir dir;
  fs::create_directories(dir / "b");
  fs::create_directories(dir / "a");
  std::ofstream(dir / "b" / "z.PNG").put('x');
  std::ofstream(dir / "b" / "c.jpg").put('x');
  std::ofstream(dir / "b" / "notes.txt").put('x');
  std::ofstream(dir / "stray.png").put('x');
  const DatasetLayout layout = scan_dataset(dir.path());
  ASSERT_EQ(layout.classes.size(), 2u);
  EXPECT_EQ(layout.classes[0].name, "a");
  EXPECT_TRUE(layout.classes[0].files.empty());
  ASSERT_EQ(layout.classes[1].files.size(), 2u);
  EXPECT_EQ(layout.classes[1].files[0].generic_string(), "b/c.jpg");
  EXPECT_EQ(layout.file_count(), 2u);
  EXPECT_THROW(scan_dataset(dir / "missing"), IoError);
}

TEST(Manifest, CsvQuoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a, b"), "\"a, b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  std::ostringstream out;
  const std::vector<ManifestRow> rows{{"c/x.png", "c/x_0.png", "c", "Resize + ColorJitter(brightness=0.2, contrast=0.3)", 3, 0}};
  write_manifest(out, rows);
  EXPECT_EQ(out.str(),
            "source,output,class,trace,seed,index\n"
            "c/x.png,c/x_0.png,c,\"Resize + ColorJitter(brightness=0.2, contrast=0.3)\",3,0\n");
}

TEST(Augment, PreservesStructureAndCounts) {
  TempDir dir;
  testing::write_fixture_tree(dir / "in", 5, 3, 1);
  fs::create_directories(dir / "in" / "empty_class");
  const AugmentOptions o = augment_opts(dir, "tenengrad", 2, 2);
  const AugmentSummary s = run_augment(o);
  EXPECT_EQ(s.processed, 15u);
  EXPECT_EQ(s.skipped, 0u);
  EXPECT_EQ(s.emitted, s.processed * 2);
  for (int c = 0; c < 5; ++c) {
    const auto cls = o.out / ("class" + std::to_string(c));
    EXPECT_EQ(std::distance(fs::directory_iterator(cls), fs::directory_iterator{}), 6);
  }
  EXPECT_TRUE(fs::is_directory(o.out / "empty_class"));
  EXPECT_TRUE(fs::is_empty(o.out / "empty_class"));
  EXPECT_TRUE(fs::exists(o.out / "effective_config.json"));
  EXPECT_EQ(pipeline::load_spec(o.out / "effective_config.json").seed, 7u);

  const ImageU8 first = decode(o.out / "class0" / "img0_0.png");
  EXPECT_EQ(first.width(), 224);
  EXPECT_EQ(first.height(), 224);
}

TEST(Augment, ManifestMatchesOutputTree) {
  TempDir dir;
  testing::write_fixture_tree(dir / "in", 3, 4, 2);
  const AugmentOptions o = augment_opts(dir, "tenengrad+imagetosketch", 3, 1);
  run_augment(o);
  const auto lines = read_lines(o.out / "manifest.csv");
  ASSERT_FALSE(lines.empty());
  EXPECT_EQ(lines[0], "source,output,class,trace,seed,index");

  std::multiset<std::string> listed;
  for (std::size_t i = 1; i < lines.size(); ++i) listed.insert(output_column(lines[i]));
  std::multiset<std::string> on_disk;
  for (const auto& e : fs::recursive_directory_iterator(o.out)) {
    const auto rel = fs::relative(e.path(), o.out).generic_string();
    if (e.is_regular_file() && rel != "manifest.csv" && rel != "effective_config.json") on_disk.insert(rel);
  }
  EXPECT_EQ(listed, on_disk);
  EXPECT_EQ(std::set<std::string>(listed.begin(), listed.end()).size(), listed.size());

  // Rows are ordered by index, which is ordinal * k + variant.
  for (std::size_t i = 1; i < lines.size(); ++i) {
    EXPECT_TRUE(lines[i].ends_with("," + std::to_string(i - 1))) << lines[i];
  }
  EXPECT_NE(lines[1].find("class0/img0.png,class0/img0_0.png,class0,"), std::string::npos) << lines[1];
}

TEST(Augment, DeterministicAcrossWorkerCounts) {
  TempDir dir;
  testing::write_fixture_tree(dir / "in", 3, 6, 3);
  for (int jobs : {1, 3, 8}) run_augment(augment_opts(dir, "tenengrad", 2, jobs));
  const auto ref = testing::snapshot_tree(dir / "out_1");
  EXPECT_EQ(ref.size(), 3u * 6 * 2 + 2);
  EXPECT_EQ(testing::snapshot_tree(dir / "out_3"), ref);
  EXPECT_EQ(testing::snapshot_tree(dir / "out_8"), ref);
}

TEST(Augment, SkipsUndecodableFiles) {
  TempDir dir;
  testing::write_fixture_tree(dir / "in", 1, 2, 4);
  std::ofstream(dir / "in" / "class0" / "broken.png") << "not a png";
  const AugmentSummary s = run_augment(augment_opts(dir, "conventional", 2, 1));
  EXPECT_EQ(s.processed, 2u);
  EXPECT_EQ(s.skipped, 1u);
  EXPECT_EQ(s.emitted, 4u);
  EXPECT_EQ(read_lines(dir / "out_1" / "manifest.csv").size(), 5u);
}

TEST(Augment, StemCollisionsKeepExtension) {
  TempDir dir;
  fs::create_directories(dir / "in" / "c");
  std::mt19937 gen(5);
  encode(testing::random_image(gen, 20, 20, 3), dir / "in" / "c" / "a.png");
  encode(testing::random_image(gen, 20, 20, 3), dir / "in" / "c" / "a.jpg");
  run_augment(augment_opts(dir, "conventional", 1, 1));
  EXPECT_TRUE(fs::exists(dir / "out_1" / "c" / "a_jpg_0.png"));
  EXPECT_TRUE(fs::exists(dir / "out_1" / "c" / "a_png_0.png"));
}

TEST(ResolvePipeline, Precedence) {
  PipelineSource src;
  EXPECT_THROW(resolve_pipeline(src), ConfigError);
  src.preset = "imagetosketch";
  src.config = "x.json";
  EXPECT_THROW(resolve_pipeline(src), ConfigError);
  src.config.reset();
  src.seed = 99;
  src.dilate_size = 3;
  const auto spec = resolve_pipeline(src);
  EXPECT_EQ(spec.seed, 99u);
  EXPECT_EQ(std::get<pipeline::SketchStageParams>(spec.stages[4].params).sketch.dilate_size, 3);
  src.open_size = 0;
  EXPECT_THROW(resolve_pipeline(src), ConfigError);
}

// ---------------------------------------------------------------------------
// Executable

TEST(Executable, PresetsListing) {
  TempDir dir;
  ASSERT_EQ(run_cli("presets", dir / "log"), 0);
  const auto lines = read_lines(dir / "log");
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[4], "rotate-and-flip: Resize + CenterCrop + RandomRotate(90°) + RandomHorizontalFlip + Normalize");
}

TEST(Executable, PreviewMissingInputIsIoError) {
  TempDir dir;
  const auto missing = dir / "nowhere.png";
  EXPECT_EQ(run_cli("preview --preset tenengrad --in " + missing.string() + " --out " + (dir / "o.png").string(),
                    dir / "log"),
            1);
  EXPECT_NE(testing::read_bytes(dir / "log").find(missing.string()), std::string::npos);
}

TEST(Executable, PreviewIndexChangesDraws) {
  TempDir dir;
  const auto input = testing::golden_dir() / "pollen224_input.png";
  std::set<std::string> outputs;
  for (int index = 0; index < 4; ++index) {
    const auto out = dir / ("p" + std::to_string(index) + ".png");
    ASSERT_EQ(run_cli("preview --preset conventional --seed 3 --index " + std::to_string(index) + " --in " +
                          input.string() + " --out " + out.string(),
                      dir / "log"),
              0);
    outputs.insert(testing::read_bytes(out));
  }
  EXPECT_GT(outputs.size(), 1u);
}

TEST(Executable, ConfigErrorsExitTwo) {
  TempDir dir;
  std::ofstream(dir / "bad.json") << R"({"stages": [{"kind": "RandomRotate", "degrees": -1}]})";
  EXPECT_EQ(run_cli("preview --config " + (dir / "bad.json").string() + " --in x.png --out y.png", dir / "log"), 2);
  EXPECT_NE(testing::read_bytes(dir / "log").find("stages[0].degrees"), std::string::npos);
  EXPECT_EQ(run_cli("preview --preset nope --in x.png --out y.png", dir / "log"), 2);
  EXPECT_EQ(run_cli("augment --preset tenengrad --config a.json --in a --out b", dir / "log"), 2);
  EXPECT_EQ(run_cli("frobnicate", dir / "log"), 2);
}

TEST(Executable, MetricsMalformedHeaderExitsTwo) {
  TempDir dir;
  std::ofstream(dir / "logs.csv") << "augmentation,replicate,epoch,loss,acc_val,acc_field\nnone,0,1,0.5,0.9,0.8\n";
  EXPECT_EQ(run_cli("metrics --logs " + (dir / "logs.csv").string() + " --baseline none --out " +
                        (dir / "m.csv").string(),
                    dir / "log"),
            2);
  EXPECT_NE(testing::read_bytes(dir / "log").find("train_loss"), std::string::npos);
}

TEST(Executable, MetricsBaselineOnly) {
  TempDir dir;
  std::ofstream(dir / "logs.csv") << "augmentation,replicate,epoch,train_loss,acc_val,acc_field\n"
                                     "none,0,1,0.7,,\nnone,0,2,0.5,0.8,0.6\n";
  ASSERT_EQ(run_cli("metrics --logs " + (dir / "logs.csv").string() + " --baseline none --out " +
                        (dir / "m.csv").string() + " --plot " + (dir / "m.svg").string(),
                    dir / "log"),
            0);
  const auto lines = read_lines(dir / "m.csv");
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "augmentation,affinity,affinity_std,diversity,diversity_std,n");
  std::stringstream row(lines[1]);
  std::vector<std::string> cols;
  for (std::string c; std::getline(row, c, ',');) cols.push_back(c);
  ASSERT_EQ(cols.size(), 6u);
  EXPECT_EQ(cols[0], "none");
  EXPECT_NEAR(std::stod(cols[1]), 0.6 / 0.8, 1e-15);
  EXPECT_EQ(cols[2], "0");
  EXPECT_EQ(cols[3], "1");
  EXPECT_EQ(cols[4], "0");
  EXPECT_EQ(cols[5], "1");
  EXPECT_TRUE(fs::exists(dir / "m.svg"));
}

}  // namespace
}  // namespace geomaug::cli
