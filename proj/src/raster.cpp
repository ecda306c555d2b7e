#include "lsbstego/raster.hpp"

#include <limits>
#include <string>
#include <utility>

#include "lsbstego/error.hpp"

namespace lsbstego {

std::size_t slot_count_for(std::uint32_t width, std::uint32_t height) {
  if (width == 0 || height == 0) {
    throw Error(Errc::InvalidImage, "image dimensions must be positive");
  }
  const std::uint64_t pixels = std::uint64_t{width} * height;
  if (pixels > std::numeric_limits<std::size_t>::max() / 3) {
    throw Error(Errc::InvalidImage, "image dimensions overflow");
  }
  return static_cast<std::size_t>(pixels * 3);
}

RasterImage::RasterImage(std::uint32_t width, std::uint32_t height)
    : width_(width), height_(height), channels_(slot_count_for(width, height), 0) {}

RasterImage::RasterImage(std::uint32_t width, std::uint32_t height,
                         std::vector<std::uint8_t> channels)
    : width_(width), height_(height), channels_(std::move(channels)) {
  if (channels_.size() != slot_count_for(width, height)) {
    throw Error(Errc::InvalidImage,
                "expected " + std::to_string(slot_count_for(width, height)) +
                    " channel bytes, got " + std::to_string(channels_.size()));
  }
}

}  // namespace lsbstego
