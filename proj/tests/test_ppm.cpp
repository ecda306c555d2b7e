#include <doctest.h>

#include <random>
#include <string>

#include "lsbstego/bmp.hpp"
#include "lsbstego/error.hpp"
#include "lsbstego/image_format.hpp"
#include "lsbstego/ppm.hpp"
#include "test_support.hpp"

using namespace lsbstego;
using namespace testing_support;

namespace {

std::vector<std::uint8_t> bytes(const std::string& header, std::vector<std::uint8_t> pixels = {}) {
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), pixels.begin(), pixels.end());
  return out;
}

Errc parse_error(const std::vector<std::uint8_t>& data) {
  try {
    ppm::parse(data);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parse succeeded unexpectedly");
  return Errc::InvalidImage;
}

}  // namespace

TEST_CASE("single red pixel") {
  CHECK(ppm::parse(bytes("P6\n1 1\n255\n", {255, 0, 0})) == RasterImage(1, 1, {255, 0, 0}));
}

TEST_CASE("comments and mixed whitespace in the header") {
  const RasterImage expected(2, 1, {1, 2, 3, 4, 5, 6});
  CHECK(ppm::parse(bytes("P6\n# made by hand\n2 1\n255\n", {1, 2, 3, 4, 5, 6})) == expected);
  CHECK(ppm::parse(bytes("P6 2\t# w\n  1 # h\n255 ", {1, 2, 3, 4, 5, 6})) == expected);
  CHECK(ppm::parse(bytes("P6\r\n2 1\r\n255\n", {1, 2, 3, 4, 5, 6})) == expected);
}

TEST_CASE("pixel data starting with a whitespace-valued byte is not skipped") {
  CHECK(ppm::parse(bytes("P6\n1 1\n255\n", {'\n', ' ', '#'})) ==
        RasterImage(1, 1, {'\n', ' ', '#'}));
}

TEST_CASE("canonical header on write") {
  const auto f = ppm::write(RasterImage(2, 1, {1, 2, 3, 4, 5, 6}));
  CHECK(f == bytes("P6\n2 1\n255\n", {1, 2, 3, 4, 5, 6}));
}

TEST_CASE("errors") {
  CHECK(parse_error(bytes("P3\n1 1\n255\n255 0 0\n")) == Errc::UnsupportedFormat);
  CHECK(parse_error(bytes("P5\n1 1\n255\n", {0})) == Errc::UnsupportedFormat);
  CHECK(parse_error(bytes("P6\n1 1\n65535\n", {0, 0, 0, 0, 0, 0})) == Errc::UnsupportedFormat);
  CHECK(parse_error(bytes("P6\n0 1\n255\n")) == Errc::UnsupportedFormat);
  CHECK(parse_error(bytes("Q6\n1 1\n255\n", {0, 0, 0})) == Errc::MalformedHeader);
  CHECK(parse_error(bytes("P6\n1 x\n255\n", {0, 0, 0})) == Errc::MalformedHeader);
  CHECK(parse_error(bytes("P6\n1 1\n255")) == Errc::MalformedHeader);
  CHECK(parse_error(bytes("P6\n99999999999 1\n255\n")) == Errc::MalformedHeader);
  CHECK(parse_error(bytes("P6\n2 2\n255\n", {1, 2, 3})) == Errc::TruncatedPixelData);
  CHECK(parse_error(bytes("P6\n100000 100000\n255\n")) == Errc::TruncatedPixelData);
}

TEST_CASE("property: cross-codec equivalence") {
  std::mt19937_64 rng(0x9696);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = static_cast<std::uint32_t>(1 + rng() % 64);
    const auto h = static_cast<std::uint32_t>(1 + rng() % 64);
    const RasterImage img = random_image(rng, w, h);
    REQUIRE(ppm::parse(ppm::write(img)) == img);
    REQUIRE(bmp::parse(bmp::write(img)) == ppm::parse(ppm::write(img)));
  }
}

TEST_CASE("format detection and dispatch") {
  const RasterImage img(3, 2, std::vector<std::uint8_t>(18, 7));
  CHECK(detect_format(bmp::write(img)) == ImageFormat::Bmp);
  CHECK(detect_format(ppm::write(img)) == ImageFormat::Ppm);
  CHECK_FALSE(detect_format(bytes("GIF89a")).has_value());
  CHECK(decode_image(ppm::write(img)).image == img);
  CHECK(decode_image(bmp::write(img)).format == ImageFormat::Bmp);
  CHECK(format_from_extension("a/b.BMP") == ImageFormat::Bmp);
  CHECK(format_from_extension("x.ppm") == ImageFormat::Ppm);
  CHECK_FALSE(format_from_extension("x.png").has_value());
  CHECK_THROWS_AS(decode_image(bytes("GIF89a")), Error);
}
