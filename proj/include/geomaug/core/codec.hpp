#pragma once

#include <filesystem>
#include <string_view>

#include "geomaug/core/image.hpp"

namespace geomaug {

enum class ImageFormat { Png, Jpeg };

/// Guess the format from the file extension (.png, .jpg, .jpeg; case-insensitive).
/// Throws IoError for anything else.
ImageFormat format_from_path(const std::filesystem::path& path);

/// Decode an 8-bit PNG or baseline JPEG. Alpha is dropped, palette and 16-bit
/// PNGs are expanded to 8-bit gray or RGB. The format is sniffed from the file
/// signature, not the extension.
ImageU8 decode(const std::filesystem::path& path);

/// Encode to PNG (lossless) or JPEG (quality 95).
void encode(const ImageU8& img, const std::filesystem::path& path, ImageFormat format);
void encode(const ImageU8& img, const std::filesystem::path& path);

}  // namespace geomaug
