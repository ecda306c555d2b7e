#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lsbstego {

/// Decoded pixel grid. Channels are stored top-down, row-major, R,G,B per
/// pixel, regardless of the file format the image came from.
class RasterImage {
 public:
  /// Zero-filled image. Throws Error{InvalidImage} for zero dimensions.
  RasterImage(std::uint32_t width, std::uint32_t height);
  /// Throws Error{InvalidImage} unless channels.size() == 3 * width * height.
  RasterImage(std::uint32_t width, std::uint32_t height, std::vector<std::uint8_t> channels);

  std::uint32_t width() const noexcept { return width_; }
  std::uint32_t height() const noexcept { return height_; }
  std::size_t slot_count() const noexcept { return channels_.size(); }

  std::span<const std::uint8_t> channels() const noexcept { return channels_; }
  std::span<std::uint8_t> channels() noexcept { return channels_; }

  std::uint8_t& at(std::uint32_t x, std::uint32_t y, unsigned channel) {
    return channels_[(std::size_t{y} * width_ + x) * 3 + channel];
  }
  std::uint8_t at(std::uint32_t x, std::uint32_t y, unsigned channel) const {
    return channels_[(std::size_t{y} * width_ + x) * 3 + channel];
  }

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::uint32_t width_;
  std::uint32_t height_;
  std::vector<std::uint8_t> channels_;
};

/// 3 * width * height, checked against size_t overflow.
std::size_t slot_count_for(std::uint32_t width, std::uint32_t height);

}  // namespace lsbstego
