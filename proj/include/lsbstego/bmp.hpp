#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lsbstego/raster.hpp"

namespace lsbstego::bmp {

inline constexpr std::size_t kFileHeaderSize = 14;
inline constexpr std::size_t kInfoHeaderSize = 40;
inline constexpr std::size_t kHeaderSize = kFileHeaderSize + kInfoHeaderSize;

/// Bytes per stored pixel row: 3 * width rounded up to a multiple of 4.
constexpr std::size_t row_stride(std::uint32_t width) noexcept {
  return (std::size_t{width} * 3 + 3) & ~std::size_t{3};
}

/// Decodes a 24-bit uncompressed bottom-up BITMAPINFOHEADER file.
///
/// A pixel-data offset beyond 54 is honoured (non-canonical files are
/// accepted), trailing bytes after the last row are ignored.
/// Throws Error with MalformedHeader, UnsupportedFormat or TruncatedPixelData.
RasterImage parse(std::span<const std::uint8_t> data);

/// Emits the canonical encoding: 54 header bytes, zero-padded bottom-up
/// B,G,R rows, all optional header fields zero except biPlanes = 1.
std::vector<std::uint8_t> write(const RasterImage& image);

}  // namespace lsbstego::bmp
