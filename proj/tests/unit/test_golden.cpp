#include <gtest/gtest.h>

#include "geomaug/cli/commands.hpp"
#include "geomaug/core/codec.hpp"
#include "geomaug/filters/geometric.hpp"
#include "geomaug/reference/reference.hpp"
#include "support/test_support.hpp"

namespace geomaug {
namespace {

using testing::golden_dir;

ImageU8 golden(const std::string& name) { return decode(golden_dir() / name); }

TEST(Golden, Step8TenengradMatchesHandOracle) {
  const ImageU8 input = golden("step8_input.png");
  ImageU8 expected(8, 8, 1, std::uint8_t{0});
  for (int y = 0; y < 8; ++y) {
    expected.at(3, y) = 255;
    expected.at(4, y) = 255;
  }
  EXPECT_EQ(golden("step8_tenengrad.png"), expected);
  EXPECT_EQ(filters::tenengrad(input), expected);
}

TEST(Golden, Step8Sketch) {
  const ImageU8 input = golden("step8_input.png");
  EXPECT_EQ(filters::image_to_sketch(input), golden("step8_sketch.png"));
}

TEST(Golden, Pollen224Tenengrad) {
  const ImageU8 input = golden("pollen224_input.png");
  ASSERT_EQ(input.width(), 224);
  ASSERT_EQ(input.height(), 224);
  const ImageU8 expected = golden("pollen224_tenengrad.png");
  EXPECT_EQ(filters::tenengrad(input), expected);
  EXPECT_EQ(reference::tenengrad(input), expected);
}

TEST(Golden, Pollen224Sketch) {
  const ImageU8 input = golden("pollen224_input.png");
  EXPECT_EQ(filters::image_to_sketch(input), golden("pollen224_sketch.png"));
}

TEST(Golden, PreviewThroughCli) {
  testing::TempDir dir;
  const auto out = dir / "preview.png";
  ASSERT_EQ(testing::run_cli("preview --preset tenengrad --seed 7 --index 3 --in " +
                                 (golden_dir() / "pollen224_input.png").string() + " --out " + out.string(),
                             dir / "log"),
            0)
      << testing::read_bytes(dir / "log");
  EXPECT_EQ(decode(out), golden("pollen224_preview_tenengrad_seed7_index3.png"));
}

}  // namespace
}  // namespace geomaug
