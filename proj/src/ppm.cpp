#include "lsbstego/ppm.hpp"

#include <charconv>
#include <string>

#include "lsbstego/error.hpp"

namespace lsbstego::ppm {
namespace {

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint32_t next_number(const char* field) {
    skip_space_and_comments();
    const std::size_t begin = pos_;
    while (pos_ < data_.size() && data_[pos_] >= '0' && data_[pos_] <= '9') ++pos_;
    if (begin == pos_) {
      throw Error(Errc::MalformedHeader, std::string("expected ") + field);
    }
    std::uint32_t value = 0;
    const auto* first = reinterpret_cast<const char*>(data_.data() + begin);
    const auto* last = reinterpret_cast<const char*>(data_.data() + pos_);
    if (auto [ptr, ec] = std::from_chars(first, last, value); ec != std::errc{}) {
      throw Error(Errc::MalformedHeader, std::string(field) + " out of range");
    }
    return value;
  }

  // The byte after maxval must be a single whitespace byte.
  std::size_t pixel_start() {
    if (pos_ >= data_.size() || !is_space(data_[pos_])) {
      throw Error(Errc::MalformedHeader, "missing whitespace before pixel data");
    }
    return pos_ + 1;
  }

  void skip(std::size_t n) { pos_ += n; }

 private:
  void skip_space_and_comments() {
    while (pos_ < data_.size()) {
      if (is_space(data_[pos_])) {
        ++pos_;
      } else if (data_[pos_] == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n' && data_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

}  // namespace

RasterImage parse(std::span<const std::uint8_t> data) {
  if (data.size() < 2 || data[0] != 'P') {
    throw Error(Errc::MalformedHeader, "missing PNM signature");
  }
  if (data[1] != '6') {
    throw Error(Errc::UnsupportedFormat,
                std::string("PNM variant P") + static_cast<char>(data[1]) +
                    " (only binary P6 is supported)");
  }
  HeaderReader header(data);
  header.skip(2);
  const std::uint32_t width = header.next_number("width");
  const std::uint32_t height = header.next_number("height");
  const std::uint32_t maxval = header.next_number("maxval");
  if (width == 0 || height == 0) {
    throw Error(Errc::UnsupportedFormat, "zero image dimension");
  }
  if (maxval != 255) {
    throw Error(Errc::UnsupportedFormat, "maxval " + std::to_string(maxval));
  }
  const std::size_t start = header.pixel_start();
  const std::uint64_t needed = std::uint64_t{width} * height * 3;
  if (start > data.size() || needed > data.size() - start) {
    throw Error(Errc::TruncatedPixelData,
                "need " + std::to_string(needed) + " pixel bytes, have " +
                    std::to_string(start > data.size() ? 0 : data.size() - start));
  }
  const auto pixels = data.subspan(start, static_cast<std::size_t>(needed));
  return RasterImage(width, height, std::vector<std::uint8_t>(pixels.begin(), pixels.end()));
}

std::vector<std::uint8_t> write(const RasterImage& image) {
  const std::string header = "P6\n" + std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n255\n";
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + image.slot_count());
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), image.channels().begin(), image.channels().end());
  return out;
}

}  // namespace lsbstego::ppm
