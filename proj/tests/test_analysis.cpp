#include <doctest.h>

#include <bit>
#include <random>

#include "lsbstego/analysis.hpp"
#include "lsbstego/error.hpp"
#include "lsbstego/stego.hpp"
#include "test_support.hpp"

using namespace lsbstego;
using namespace testing_support;

TEST_CASE("bit planes of uniform images") {
  CHECK(extract_bitplane(filled_image(3, 3, 0xFF), 8) == filled_image(3, 3, 255));
  CHECK(extract_bitplane(filled_image(3, 3, 0x02), 7) == filled_image(3, 3, 255));
  CHECK(extract_bitplane(filled_image(3, 3, 0x02), 8) == filled_image(3, 3, 0));
  CHECK(extract_bitplane(filled_image(3, 3, 0x80), 1, Channel::Green) == filled_image(3, 3, 255));
}

TEST_CASE("single channel plane is grey") {
  const RasterImage img(2, 1, {0x01, 0x00, 0x00, 0x00, 0x01, 0x01});
  CHECK(extract_bitplane(img, 8, Channel::Red) == RasterImage(2, 1, {255, 255, 255, 0, 0, 0}));
  CHECK(extract_bitplane(img, 8, Channel::Blue) == RasterImage(2, 1, {0, 0, 0, 255, 255, 255}));
  CHECK(extract_bitplane(img, 8, Channel::All) == RasterImage(2, 1, {255, 0, 0, 0, 255, 255}));
}

TEST_CASE("bit plane of the 8x8 embed example shows the stream") {
  const RasterImage stego = embed(filled_image(8, 8, 0xFF), Payload{"a", {0x00}});
  const RasterImage plane = extract_bitplane(stego, 8, Channel::All);
  const std::uint8_t expected[16] = {0, 255, 255, 0, 0, 0, 0, 255, 0, 0, 0, 0, 0, 0, 0, 0};
  for (int i = 0; i < 16; ++i) CHECK(plane.channels()[i] == expected[i]);
  CHECK(plane.channels()[16] == 255);
}

TEST_CASE("invalid layer and channel") {
  const RasterImage img(2, 2);
  try {
    extract_bitplane(img, 0);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidLayer);
  }
  CHECK_THROWS_AS(extract_bitplane(img, 9), Error);
  try {
    extract_bitplane(img, 8, static_cast<Channel>(7));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidChannel);
  }
  CHECK(parse_channel("R") == Channel::Red);
  CHECK(parse_channel("all") == Channel::All);
  CHECK_THROWS_AS(parse_channel("alpha"), Error);
}

TEST_CASE("layer_stats") {
  CHECK(layer_stats(RasterImage(4, 4)) == LayerCounts{});
  LayerCounts twelve;
  twelve.fill(12);
  CHECK(layer_stats(filled_image(2, 2, 0xFF)) == twelve);
  RasterImage img(3, 3);
  img.channels()[4] = 0x81;
  CHECK(layer_stats(img) == LayerCounts{1, 0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("property: recombined planes reproduce the image; stats match popcount") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto w = static_cast<std::uint32_t>(1 + rng() % 40);
    const auto h = static_cast<std::uint32_t>(1 + rng() % 40);
    const RasterImage img = random_image(rng, w, h);
    std::vector<int> rebuilt(img.slot_count(), 0);
    for (int layer = 1; layer <= 8; ++layer) {
      const RasterImage plane = extract_bitplane(img, layer);
      for (std::size_t i = 0; i < img.slot_count(); ++i) {
        rebuilt[i] += (plane.channels()[i] / 255) << (8 - layer);
      }
    }
    for (std::size_t i = 0; i < img.slot_count(); ++i) REQUIRE(rebuilt[i] == img.channels()[i]);

    std::uint64_t popcount = 0;
    for (std::uint8_t v : img.channels()) popcount += static_cast<std::uint64_t>(std::popcount(v));
    std::uint64_t total = 0;
    for (auto c : layer_stats(img)) total += c;
    REQUIRE(total == popcount);
  }
}
