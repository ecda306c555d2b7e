#include "lsbstego/image_format.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

#include "lsbstego/bmp.hpp"
#include "lsbstego/error.hpp"
#include "lsbstego/ppm.hpp"

namespace lsbstego {

std::optional<ImageFormat> detect_format(std::span<const std::uint8_t> data) {
  if (data.size() >= 2 && data[0] == 'B' && data[1] == 'M') return ImageFormat::Bmp;
  if (data.size() >= 2 && data[0] == 'P' && data[1] == '6') return ImageFormat::Ppm;
  return std::nullopt;
}

std::optional<ImageFormat> format_from_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".bmp") return ImageFormat::Bmp;
  if (ext == ".ppm") return ImageFormat::Ppm;
  return std::nullopt;
}

DecodedImage decode_image(std::span<const std::uint8_t> data) {
  const auto format = detect_format(data);
  if (!format) {
    throw Error(Errc::UnsupportedFormat, "not a BMP or binary PPM file");
  }
  switch (*format) {
    case ImageFormat::Bmp: return {bmp::parse(data), ImageFormat::Bmp};
    case ImageFormat::Ppm: return {ppm::parse(data), ImageFormat::Ppm};
  }
  throw Error(Errc::UnsupportedFormat, "unknown format");
}

std::vector<std::uint8_t> encode_image(const RasterImage& image, ImageFormat format) {
  return format == ImageFormat::Bmp ? bmp::write(image) : ppm::write(image);
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                  std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("failed reading " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

DecodedImage load_image(const std::filesystem::path& path) {
  return decode_image(read_file(path));
}

void save_image(const std::filesystem::path& path, const RasterImage& image,
                ImageFormat format) {
  write_file(path, encode_image(image, format));
}

}  // namespace lsbstego
