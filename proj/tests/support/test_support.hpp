#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "geomaug/core/codec.hpp"
#include "geomaug/core/image.hpp"

namespace geomaug::testing {

inline std::filesystem::path data_dir() { return GEOMAUG_TEST_DATA; }
inline std::filesystem::path golden_dir() { return data_dir() / "golden"; }

/// Scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag = "geomaug") {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            (tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& rel) const { return path_ / rel; }

 private:
  std::filesystem::path path_;
};

inline ImageU8 random_image(std::mt19937& gen, int w, int h, int channels = 1) {
  ImageU8 img(w, h, channels);
  for (auto& v : img.samples()) v = static_cast<std::uint8_t>(gen() & 0xFF);
  return img;
}

/// Smooth blobs plus noise: closer to natural images than uniform noise.
inline ImageU8 blobby_image(std::mt19937& gen, int w, int h, int channels = 1) {
  std::uniform_real_distribution<double> pos(0.0, 1.0);
  const double cx = pos(gen) * w, cy = pos(gen) * h, r = 0.2 + 0.3 * pos(gen);
  ImageU8 img(w, h, channels);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double d = std::hypot((x - cx) / w, (y - cy) / h);
      for (int c = 0; c < channels; ++c) {
        const double v = (d < r ? 180.0 : 40.0) + 30.0 * c + static_cast<int>(gen() % 21) - 10;
        img.at(x, y, c) = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
      }
    }
  }
  return img;
}

inline ImageF as_float(const ImageU8& img) { return to_float(img); }

inline std::string read_bytes(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Map of relative path -> file bytes for every regular file under `root`.
inline std::vector<std::pair<std::string, std::string>> snapshot_tree(const std::filesystem::path& root) {
  std::vector<std::pair<std::string, std::string>> files;
  for (const auto& e : std::filesystem::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) {
      files.emplace_back(std::filesystem::relative(e.path(), root).generic_string(), read_bytes(e.path()));
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

/// max |a - b| over all samples; images must share a shape.
template <typename A, typename B>
double max_abs_diff(const Image<A>& a, const Image<B>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(static_cast<double>(a.samples()[i]) - static_cast<double>(b.samples()[i])));
  }
  return m;
}

/// Class-per-directory dataset of `per_class` small RGB PNGs in each of
/// `classes` subdirectories named class0, class1, ...
inline void write_fixture_tree(const std::filesystem::path& root, int classes, int per_class, std::uint32_t seed) {
  std::mt19937 gen(seed);
  for (int c = 0; c < classes; ++c) {
    const auto dir = root / ("class" + std::to_string(c));
    std::filesystem::create_directories(dir);
    for (int i = 0; i < per_class; ++i) {
      const int w = 40 + static_cast<int>(gen() % 40);
      const int h = 40 + static_cast<int>(gen() % 40);
      encode(blobby_image(gen, w, h, 3), dir / ("img" + std::to_string(i) + ".png"));
    }
  }
}

/// Run the geomaug executable with `args` (shell syntax), stdout and stderr
/// captured into `log`. Returns the exit status.
inline int run_cli(const std::string& args, const std::filesystem::path& log) {
  const std::string cmd = std::string("\"") + GEOMAUG_CLI_PATH + "\" " + args + " > \"" + log.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace geomaug::testing
