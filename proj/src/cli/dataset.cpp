#include "geomaug/cli/dataset.hpp"

#include <algorithm>
#include <cctype>

#include "geomaug/core/error.hpp"

namespace geomaug::cli {

namespace fs = std::filesystem;

std::size_t DatasetLayout::file_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : classes) n += c.files.size();
  return n;
}

bool has_image_extension(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

DatasetLayout scan_dataset(const fs::path& root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw IoError("input is not a directory: " + root.string());

  DatasetLayout layout{root, {}};
  for (const auto& entry : fs::directory_iterator(root)) {
    if (!entry.is_directory()) continue;
    DatasetLayout::ClassDir cls{entry.path().filename().string(), {}};
    for (const auto& file : fs::directory_iterator(entry.path())) {
      if (file.is_regular_file() && has_image_extension(file.path())) {
        cls.files.push_back(fs::relative(file.path(), root));
      }
    }
    std::sort(cls.files.begin(), cls.files.end());
    layout.classes.push_back(std::move(cls));
  }
  if (layout.classes.empty()) throw IoError("no class subdirectories under " + root.string());
  std::sort(layout.classes.begin(), layout.classes.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  return layout;
}

}  // namespace geomaug::cli
