#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "geomaug/core/error.hpp"

namespace geomaug {

/// Owned raster buffer, interleaved row-major (y, x, c).
///
/// Channels are 1 (gray) or 3 (RGB). A default-constructed image is empty;
/// every other image has positive extents and exactly width*height*channels
/// samples.
template <typename T>
class Image {
 public:
  using value_type = T;

  Image() = default;

  Image(int width, int height, int channels, T fill = T{})
      : width_(width), height_(height), channels_(channels) {
    check_shape(width, height, channels);
    data_.assign(static_cast<std::size_t>(width) * height * channels, fill);
  }

  Image(int width, int height, int channels, std::vector<T> data)
      : width_(width), height_(height), channels_(channels), data_(std::move(data)) {
    check_shape(width, height, channels);
    if (data_.size() != static_cast<std::size_t>(width) * height * channels) {
      throw InvalidArgument("image data length " + std::to_string(data_.size()) +
                            " does not match " + std::to_string(width) + "x" +
                            std::to_string(height) + "x" + std::to_string(channels));
    }
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return channels_; }
  bool empty() const noexcept { return data_.empty(); }
  std::size_t size() const noexcept { return data_.size(); }

  bool same_shape(const Image& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_ && channels_ == other.channels_;
  }

  template <typename U>
  bool same_extent(const Image<U>& other) const noexcept {
    return width_ == other.width() && height_ == other.height();
  }

  T& at(int x, int y, int c = 0) noexcept { return data_[index(x, y, c)]; }
  const T& at(int x, int y, int c = 0) const noexcept { return data_[index(x, y, c)]; }

  std::span<T> row(int y) noexcept {
    const auto stride = static_cast<std::size_t>(width_) * channels_;
    return {data_.data() + stride * y, stride};
  }
  std::span<const T> row(int y) const noexcept {
    const auto stride = static_cast<std::size_t>(width_) * channels_;
    return {data_.data() + stride * y, stride};
  }

  std::span<T> samples() noexcept { return data_; }
  std::span<const T> samples() const noexcept { return data_; }
  T* data() noexcept { return data_.data(); }
  const T* data() const noexcept { return data_.data(); }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  static void check_shape(int width, int height, int channels) {
    if (width <= 0 || height <= 0) {
      throw InvalidArgument("image extents must be positive, got " + std::to_string(width) +
                            "x" + std::to_string(height));
    }
    if (channels != 1 && channels != 3) {
      throw InvalidArgument("image must have 1 or 3 channels, got " + std::to_string(channels));
    }
  }

  std::size_t index(int x, int y, int c) const noexcept {
    return (static_cast<std::size_t>(y) * width_ + x) * channels_ + c;
  }

  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<T> data_;
};

using ImageU8 = Image<std::uint8_t>;
using ImageF = Image<float>;

/// Sub-rectangle of an image.
struct PixelRect {
  int x0 = 0;
  int y0 = 0;
  int w = 0;
  int h = 0;

  friend bool operator==(const PixelRect&, const PixelRect&) = default;
};

/// Sample-wise conversion between sample types. float -> u8 rounds and clamps.
ImageF to_float(const ImageU8& img);
ImageU8 to_u8_clamped(const ImageF& img);

/// Dimensions as "WxHxC", for diagnostics.
template <typename T>
std::string describe_shape(const Image<T>& img) {
  return std::to_string(img.width()) + "x" + std::to_string(img.height()) + "x" +
         std::to_string(img.channels());
}

}  // namespace geomaug
