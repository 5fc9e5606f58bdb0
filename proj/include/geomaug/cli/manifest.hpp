#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace geomaug::cli {

/// One emitted image. Paths are relative to the input and output roots.
struct ManifestRow {
  std::string source;
  std::string output;
  std::string label;
  std::string trace;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
};

/// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(std::string_view s);

/// Header source,output,class,trace,seed,index followed by one line per row.
void write_manifest(std::ostream& out, std::span<const ManifestRow> rows);
void write_manifest(const std::filesystem::path& path, std::span<const ManifestRow> rows);

}  // namespace geomaug::cli
