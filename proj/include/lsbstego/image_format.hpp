#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lsbstego/raster.hpp"

namespace lsbstego {

enum class ImageFormat { Bmp, Ppm };

/// Identifies the container from its leading magic bytes.
std::optional<ImageFormat> detect_format(std::span<const std::uint8_t> data);

/// Maps ".bmp" / ".ppm" (case-insensitive) to a format.
std::optional<ImageFormat> format_from_extension(const std::filesystem::path& path);

struct DecodedImage {
  RasterImage image;
  ImageFormat format;
};

/// Sniffs the format and decodes. Throws Error{UnsupportedFormat} for
/// unrecognised magic.
DecodedImage decode_image(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> encode_image(const RasterImage& image, ImageFormat format);

/// Thrown for filesystem failures; distinct from codec errors.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

DecodedImage load_image(const std::filesystem::path& path);
void save_image(const std::filesystem::path& path, const RasterImage& image, ImageFormat format);

}  // namespace lsbstego
