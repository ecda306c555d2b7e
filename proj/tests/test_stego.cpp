#include <doctest.h>

#include <random>

#include "lsbstego/error.hpp"
#include "lsbstego/metrics.hpp"
#include "lsbstego/stego.hpp"
#include "test_support.hpp"

using namespace lsbstego;
using namespace testing_support;

namespace {

template <typename Fn>
Errc error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return Errc::InvalidImage;
}

// Reads layer-8 bits of consecutive slots as a big-endian integer, directly
// from the channel bytes.
std::uint64_t lsb_field(const RasterImage& img, std::size_t first_slot, unsigned width) {
  std::uint64_t v = 0;
  for (unsigned i = 0; i < width; ++i) v = (v << 1) | (img.channels()[first_slot + i] & 1u);
  return v;
}

// Hand evaluation: 8x8 all-0xFF cover, name "a", data {0x00}.
RasterImage expected_8x8_example() {
  std::vector<std::uint8_t> c(192, 255);
  const std::uint8_t first[8] = {254, 255, 255, 254, 254, 254, 254, 255};  // 0x61
  for (int i = 0; i < 8; ++i) c[i] = first[i];
  for (int i = 8; i < 16; ++i) c[i] = 254;  // 0x00
  // Trailer A5 01 0001 00000001, MSB first, in slots 128..191.
  const std::uint64_t trailer = 0xA5'01'0001'00000001ULL;
  for (int i = 0; i < 64; ++i) c[128 + i] = static_cast<std::uint8_t>(254 | ((trailer >> (63 - i)) & 1u));
  return RasterImage(8, 8, std::move(c));
}

}  // namespace

TEST_CASE("8x8 worked example matches the hand-evaluated image") {
  const Payload payload{"a", {0x00}};
  const RasterImage stego = embed(filled_image(8, 8, 0xFF), payload);
  CHECK(stego == expected_8x8_example());

  // Independent bit reader over the trailer fields.
  CHECK(lsb_field(stego, 128, 8) == 0xA5);
  CHECK(lsb_field(stego, 136, 8) == 0x01);
  CHECK(lsb_field(stego, 144, 16) == 1);
  CHECK(lsb_field(stego, 160, 32) == 1);
  CHECK(lsb_field(stego, 0, 8) == 0x61);
  CHECK(lsb_field(stego, 8, 8) == 0x00);

  CHECK(extract(stego) == payload);
}

TEST_CASE("header bit layout") {
  StegoHeader h;
  h.name_length = 0x0102;
  h.payload_size = 0xDEADBEEF;
  const BitSequence bits = h.to_bits();
  REQUIRE(bits.size() == 64);
  CHECK(read_uint(bits, 0, 8) == 0xA5);
  CHECK(read_uint(bits, 8, 8) == 0x01);
  CHECK(read_uint(bits, 16, 16) == 0x0102);
  CHECK(read_uint(bits, 32, 32) == 0xDEADBEEF);
  CHECK(StegoHeader::from_bits(bits) == h);
}

TEST_CASE("capacity report") {
  const CapacityReport one = capacity(RasterImage(100, 100), 1);
  CHECK(one.per_layer_bytes == 3750);
  CHECK(one.max_payload_plus_name_bytes == 3742);
  CHECK(one.trailer_overhead_bits == 64);
  CHECK(capacity(RasterImage(100, 100), 8).max_payload_plus_name_bytes == 29992);
  CHECK(capacity(RasterImage(8, 8), 2).max_payload_plus_name_bytes == 40);

  const CapacityReport tiny = capacity(RasterImage(1, 1));
  CHECK(tiny.max_payload_plus_name_bytes == 0);
  CHECK(tiny.cover_too_small);
  CHECK_FALSE(one.cover_too_small);

  std::uint64_t previous = 0;
  for (int k = 1; k <= 8; ++k) {
    const auto bytes = capacity(RasterImage(13, 7), k).max_payload_plus_name_bytes;
    CHECK(bytes >= previous);
    previous = bytes;
  }
  CHECK(error_of([] { capacity(RasterImage(8, 8), 9); }) == Errc::InvalidLayer);
}

TEST_CASE("layers_used") {
  const RasterImage cover(8, 8);  // 192 slots, 128 usable in layer 8
  CHECK(layers_used(cover, Payload{"x", {}}) == 1);
  CHECK(layers_used(cover, Payload{"a", {7}}) == 1);
  CHECK(layers_used(cover, Payload{"n", std::vector<std::uint8_t>(15)}) == 1);  // 128 bits
  CHECK(layers_used(cover, Payload{"n", std::vector<std::uint8_t>(16)}) == 2);  // 136 bits
  CHECK(layers_required(128, 192) == 1);
  CHECK(layers_required(129, 192) == 2);
  CHECK(layers_required(8 * 192 - 64, 192) == 8);
  CHECK_FALSE(layers_required(8 * 192 - 63, 192).has_value());
  CHECK_FALSE(layers_required(0, 63).has_value());
  CHECK_THROWS_AS(layers_used(cover, Payload{"n", std::vector<std::uint8_t>(200)}),
                  CapacityExceeded);
}

TEST_CASE("embed errors") {
  CHECK(error_of([] { embed(RasterImage(1, 1), Payload{"a", {}}); }) == Errc::CoverTooSmall);
  CHECK(error_of([] { embed(RasterImage(8, 8), Payload{"", {}}); }) == Errc::InvalidPayload);
  CHECK(error_of([] { embed(RasterImage(200, 200), Payload{std::string(4097, 'n'), {}}); }) ==
        Errc::NameTooLong);
  CHECK(error_of([] { embed(RasterImage(8, 8), Payload{"a", {}}, 0); }) == Errc::InvalidLayer);

  try {
    embed(RasterImage(8, 8), Payload{"a", std::vector<std::uint8_t>(20)}, 1);
    FAIL("expected CapacityExceeded");
  } catch (const CapacityExceeded& e) {
    CHECK(e.required_bits() == 168);
    CHECK(e.available_bits() == 128);
    CHECK(e.layers_needed() == 2);
  }
}

TEST_CASE("a 4096-byte name is accepted") {
  const Payload p{std::string(4096, 'n'), {1, 2, 3}};
  CHECK(extract(embed(RasterImage(200, 200), p)) == p);
}

TEST_CASE("extract rejects innocent and inconsistent images") {
  CHECK(error_of([] { extract(RasterImage(8, 8)); }) == Errc::NotAStegoImage);
  CHECK(error_of([] { extract(filled_image(8, 8, 0xFF)); }) == Errc::NotAStegoImage);
  CHECK(error_of([] { extract(RasterImage(2, 2)); }) == Errc::CoverTooSmall);

  // Valid magic/version but a payload size the image cannot hold.
  StegoHeader h;
  h.name_length = 1;
  h.payload_size = 1000;
  RasterImage img(8, 8);
  write_bits_into(img, 192 - 64, h.to_bits(), TraversalPlan(192));
  CHECK(error_of([&] { extract(img); }) == Errc::CorruptHeader);

  h.payload_size = 0;
  h.name_length = 0;
  img = RasterImage(8, 8);
  write_bits_into(img, 192 - 64, h.to_bits(), TraversalPlan(192));
  CHECK(error_of([&] { extract(img); }) == Errc::CorruptHeader);

  h.version = 2;
  h.name_length = 1;
  img = RasterImage(8, 8);
  write_bits_into(img, 192 - 64, h.to_bits(), TraversalPlan(192));
  CHECK(error_of([&] { extract(img); }) == Errc::NotAStegoImage);
}

TEST_CASE("embed leaves the cover unchanged and works at full capacity") {
  std::mt19937_64 rng(5);
  const RasterImage cover = random_image(rng, 6, 4);  // 72 slots
  const RasterImage copy = cover;
  const auto cap = capacity(cover, 8).max_payload_plus_name_bytes;
  REQUIRE(cap == (8 * 72 - 64) / 8);
  const Payload p{"f", random_bytes(rng, cap - 1)};
  const RasterImage stego = embed(cover, p);
  CHECK(cover == copy);
  CHECK(extract(stego) == p);
  CHECK(layers_used(cover, p) == 8);
  CHECK_THROWS_AS(embed(cover, Payload{"f", random_bytes(rng, cap)}), CapacityExceeded);
}

TEST_CASE("property: round trip, minimality, distortion bound") {
  std::mt19937_64 rng(0x5EED);
  for (int trial = 0; trial < 120; ++trial) {
    const auto w = static_cast<std::uint32_t>(4 + rng() % 29);
    const auto h = static_cast<std::uint32_t>(6 + rng() % 27);
    const RasterImage cover = random_image(rng, w, h);
    const int max_layers = 1 + static_cast<int>(rng() % 8);
    const auto cap = capacity(cover, max_layers).max_payload_plus_name_bytes;
    const std::size_t name_len = 1 + rng() % std::min<std::uint64_t>(cap, 12);
    const std::size_t data_len = rng() % (cap - name_len + 1);
    const Payload p{random_name(rng, name_len), random_bytes(rng, data_len)};

    const RasterImage stego = embed(cover, p, max_layers);
    REQUIRE(extract(stego) == p);

    const int k = layers_used(cover, p);
    REQUIRE(k <= max_layers);
    REQUIRE(compare(cover, stego).max_deviation <= (1 << k) - 1);

    const auto allowed = oracle_stream_addresses(cover.slot_count(), p.stream_bits());
    std::set<std::pair<std::size_t, int>> allowed_set(allowed.begin(), allowed.end());
    for (std::size_t s = cover.slot_count() - 64; s < cover.slot_count(); ++s) {
      allowed_set.emplace(s, 8);
    }
    for (const auto& bit : differing_bits(cover, stego)) REQUIRE(allowed_set.count(bit) == 1);
  }
}
