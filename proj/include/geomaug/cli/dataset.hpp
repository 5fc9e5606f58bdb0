#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace geomaug::cli {

/// root/<class>/<image>. Classes and files are sorted lexicographically so the
/// ordinal of every file (and thus its RNG streams) is platform independent.
struct DatasetLayout {
  struct ClassDir {
    std::string name;
    std::vector<std::filesystem::path> files;  ///< relative to root
  };

  std::filesystem::path root;
  std::vector<ClassDir> classes;

  std::size_t file_count() const noexcept;
};

/// True for .png/.jpg/.jpeg (case-insensitive).
bool has_image_extension(const std::filesystem::path& path);

/// Scan `root`. Throws IoError when it is not a directory or has no class
/// subdirectories.
DatasetLayout scan_dataset(const std::filesystem::path& root);

}  // namespace geomaug::cli
