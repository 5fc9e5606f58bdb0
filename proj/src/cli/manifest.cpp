#include "geomaug/cli/manifest.hpp"

#include <fstream>
#include <ostream>

#include "geomaug/core/error.hpp"

namespace geomaug::cli {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_manifest(std::ostream& out, std::span<const ManifestRow> rows) {
  out << "source,output,class,trace,seed,index\n";
  for (const auto& r : rows) {
    out << csv_field(r.source) << ',' << csv_field(r.output) << ',' << csv_field(r.label) << ','
        << csv_field(r.trace) << ',' << r.seed << ',' << r.index << '\n';
  }
}

void write_manifest(const std::filesystem::path& path, std::span<const ManifestRow> rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_manifest(out, rows);
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace geomaug::cli
