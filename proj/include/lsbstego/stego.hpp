#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsbstego/bitplane.hpp"
#include "lsbstego/raster.hpp"

namespace lsbstego {

// Trailer wire layout, stored MSB-first in layer 8 of the last 64 slots:
//   bits  0..7   magic        0xA5
//   bits  8..15  version      0x01
//   bits 16..31  name_length  bytes of the embedded name
//   bits 32..63  payload_size bytes of the embedded data
inline constexpr std::uint8_t kTrailerMagic = 0xA5;
inline constexpr std::uint8_t kTrailerVersion = 0x01;
inline constexpr std::size_t kTrailerBits = 64;
inline constexpr std::size_t kMaxNameLength = 4096;

struct StegoHeader {
  std::uint8_t magic = kTrailerMagic;
  std::uint8_t version = kTrailerVersion;
  std::uint16_t name_length = 0;
  std::uint32_t payload_size = 0;

  BitSequence to_bits() const;
  static StegoHeader from_bits(std::span<const std::uint8_t> bits);

  friend bool operator==(const StegoHeader&, const StegoHeader&) = default;
};

/// The hidden file. The name is an opaque byte string; it is not
/// interpreted in any text encoding.
struct Payload {
  std::string name;
  std::vector<std::uint8_t> data;

  /// Bits of the main stream: name bytes followed by data bytes.
  std::uint64_t stream_bits() const noexcept {
    return 8 * (std::uint64_t{name.size()} + data.size());
  }

  friend bool operator==(const Payload&, const Payload&) = default;
};

/// Slots holding the trailer: the last 64 channel slots, ascending.
std::vector<std::size_t> trailer_slots(std::size_t total_slots);

/// Traversal plan for the main stream of an image with `total_slots` slots.
TraversalPlan stream_plan(std::size_t total_slots);

/// Smallest k such that stream_bits fits in layers 8..(9-k), or nullopt
/// when it needs more than eight layers (or the cover cannot hold a trailer).
std::optional<int> layers_required(std::uint64_t stream_bits, std::size_t total_slots);

struct CapacityReport {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::size_t total_slots = 0;
  int max_layers = kLayerCount;
  std::uint64_t per_layer_bytes = 0;
  std::uint64_t trailer_overhead_bits = kTrailerBits;
  /// floor((max_layers * 3wh - 64) / 8), clamped at zero.
  std::uint64_t max_payload_plus_name_bytes = 0;
  /// True when the image has fewer than 64 slots and cannot carry a trailer.
  bool cover_too_small = false;

  /// Layers needed for this payload, nullopt if it does not fit in eight.
  std::optional<int> layers_required(const Payload& payload) const;
};

CapacityReport capacity(const RasterImage& cover, int max_layers = kLayerCount);

/// Hides payload in a copy of cover.
///
/// The trailer goes to layer 8 of the last 64 slots; the name-then-data
/// stream fills layer 8 of the remaining slots, then climbs to layers
/// 7, 6, ... as needed, never beyond max_layers. No other bit changes.
///
/// Throws CapacityExceeded, or Error with CoverTooSmall, NameTooLong,
/// InvalidPayload (empty name, oversized data) or InvalidLayer.
RasterImage embed(const RasterImage& cover, const Payload& payload,
                  int max_layers = kLayerCount);

/// Recovers the payload. Throws Error with NotAStegoImage (magic or version
/// mismatch), CorruptHeader (sizes the image cannot hold) or CoverTooSmall.
Payload extract(const RasterImage& stego);

/// Layers the payload's stream occupies in this cover (1..8).
/// Throws CapacityExceeded if it needs more than eight.
int layers_used(const RasterImage& cover, const Payload& payload);

}  // namespace lsbstego
