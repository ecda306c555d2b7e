#include "lsbstego/bmp.hpp"

#include <limits>
#include <string>

#include "lsbstego/error.hpp"

namespace lsbstego::bmp {
namespace {

std::uint16_t le16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t le32(const std::uint8_t* p) {
  return std::uint32_t{p[0]} | (std::uint32_t{p[1]} << 8) |
         (std::uint32_t{p[2]} << 16) | (std::uint32_t{p[3]} << 24);
}

void put16(std::uint8_t* p, std::uint16_t v) {
  p[0] = static_cast<std::uint8_t>(v);
  p[1] = static_cast<std::uint8_t>(v >> 8);
}

void put32(std::uint8_t* p, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

}  // namespace

RasterImage parse(std::span<const std::uint8_t> data) {
  if (data.size() < 2 || data[0] != 'B' || data[1] != 'M') {
    throw Error(Errc::MalformedHeader, "missing BM signature");
  }
  if (data.size() < kFileHeaderSize + 4) {
    throw Error(Errc::MalformedHeader, "truncated file header");
  }
  const std::uint8_t* p = data.data();
  const std::uint32_t pixel_offset = le32(p + 10);
  const std::uint32_t info_size = le32(p + 14);
  if (info_size != kInfoHeaderSize) {
    throw Error(Errc::UnsupportedFormat,
                "info header size " + std::to_string(info_size) +
                    " (only 40-byte BITMAPINFOHEADER is supported)");
  }
  if (data.size() < kHeaderSize) {
    throw Error(Errc::MalformedHeader, "truncated info header");
  }

  const auto width = static_cast<std::int32_t>(le32(p + 18));
  const auto height = static_cast<std::int32_t>(le32(p + 22));
  const std::uint16_t planes = le16(p + 26);
  const std::uint16_t bpp = le16(p + 28);
  const std::uint32_t compression = le32(p + 30);

  if (planes != 1) {
    throw Error(Errc::MalformedHeader, "biPlanes must be 1, got " + std::to_string(planes));
  }
  if (bpp != 24) {
    throw Error(Errc::UnsupportedFormat, std::to_string(bpp) + " bits per pixel");
  }
  if (compression != 0) {
    throw Error(Errc::UnsupportedFormat, "compression " + std::to_string(compression));
  }
  if (width <= 0) {
    throw Error(Errc::UnsupportedFormat, "non-positive width " + std::to_string(width));
  }
  if (height <= 0) {
    throw Error(Errc::UnsupportedFormat,
                height == 0 ? std::string("zero height")
                            : "top-down (negative height) bitmaps are not supported");
  }
  if (pixel_offset < kHeaderSize) {
    throw Error(Errc::MalformedHeader,
                "pixel data offset " + std::to_string(pixel_offset) + " overlaps headers");
  }

  const auto w = static_cast<std::uint32_t>(width);
  const auto h = static_cast<std::uint32_t>(height);
  const std::size_t stride = row_stride(w);
  const std::uint64_t needed = std::uint64_t{pixel_offset} + std::uint64_t{stride} * h;
  if (needed > data.size()) {
    throw Error(Errc::TruncatedPixelData,
                "need " + std::to_string(needed) + " bytes, file has " +
                    std::to_string(data.size()));
  }

  RasterImage image(w, h);
  const std::uint8_t* pixels = p + pixel_offset;
  std::uint8_t* out = image.channels().data();
  const auto rows = static_cast<std::int64_t>(h);

#pragma omp parallel for schedule(static) if (rows > 256)
  for (std::int64_t y = 0; y < rows; ++y) {
    const std::uint8_t* src = pixels + static_cast<std::size_t>(rows - 1 - y) * stride;
    std::uint8_t* dst = out + static_cast<std::size_t>(y) * w * 3;
    for (std::uint32_t x = 0; x < w; ++x) {
      dst[3 * x + 0] = src[3 * x + 2];
      dst[3 * x + 1] = src[3 * x + 1];
      dst[3 * x + 2] = src[3 * x + 0];
    }
  }
  return image;
}

std::vector<std::uint8_t> write(const RasterImage& image) {
  const std::uint32_t w = image.width();
  const std::uint32_t h = image.height();
  const std::size_t stride = row_stride(w);
  const std::size_t image_size = stride * h;
  const std::size_t file_size = kHeaderSize + image_size;
  if (file_size > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(Errc::InvalidImage, "image too large for a BMP file");
  }

  std::vector<std::uint8_t> out(file_size, 0);
  std::uint8_t* p = out.data();
  p[0] = 'B';
  p[1] = 'M';
  put32(p + 2, static_cast<std::uint32_t>(file_size));
  put32(p + 10, static_cast<std::uint32_t>(kHeaderSize));
  put32(p + 14, static_cast<std::uint32_t>(kInfoHeaderSize));
  put32(p + 18, w);
  put32(p + 22, h);
  put16(p + 26, 1);
  put16(p + 28, 24);
  put32(p + 34, static_cast<std::uint32_t>(image_size));

  const std::uint8_t* src = image.channels().data();
  std::uint8_t* pixels = p + kHeaderSize;
  const auto rows = static_cast<std::int64_t>(h);

#pragma omp parallel for schedule(static) if (rows > 256)
  for (std::int64_t y = 0; y < rows; ++y) {
    const std::uint8_t* row = src + static_cast<std::size_t>(y) * w * 3;
    std::uint8_t* dst = pixels + static_cast<std::size_t>(rows - 1 - y) * stride;
    for (std::uint32_t x = 0; x < w; ++x) {
      dst[3 * x + 0] = row[3 * x + 2];
      dst[3 * x + 1] = row[3 * x + 1];
      dst[3 * x + 2] = row[3 * x + 0];
    }
  }
  return out;
}

}  // namespace lsbstego::bmp
