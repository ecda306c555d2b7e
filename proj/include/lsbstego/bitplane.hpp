#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lsbstego/bitstream.hpp"
#include "lsbstego/raster.hpp"

namespace lsbstego {

// Layers are numbered 1 (most significant bit) to 8 (least significant bit).
inline constexpr int kMsbLayer = 1;
inline constexpr int kLsbLayer = 8;
inline constexpr int kLayerCount = 8;

/// Bit weight of a layer: 2^(8 - layer).
constexpr std::uint8_t layer_mask(int layer) noexcept {
  return static_cast<std::uint8_t>(1u << (kLsbLayer - layer));
}

/// Throws Error{InvalidLayer} unless 1 <= layer <= 8.
void check_layer(int layer);

struct BitAddress {
  std::size_t slot;
  int layer;

  friend bool operator==(const BitAddress&, const BitAddress&) = default;
};

/// Whole bytes one bit layer can hold: floor(3 * width * height / 8).
std::uint64_t capacity_per_layer(std::uint32_t width, std::uint32_t height);

/// Bijection from linear bit positions to (slot, layer) addresses.
///
/// Positions fill layer 8 first over the non-reserved slots in ascending
/// order, then layers 7, 6, ..., 1 over every slot in ascending order.
/// Reserved slots are skipped in layer 8 only.
class TraversalPlan {
 public:
  /// A run of consecutive positions that map to consecutive slots of one layer.
  struct Segment {
    std::uint64_t first_position;
    std::size_t first_slot;
    std::size_t length;
    int layer;
  };

  /// `reserved` may be unordered and contain duplicates. Throws
  /// Error{PositionOutOfRange} if a reserved slot is >= total_slots.
  explicit TraversalPlan(std::size_t total_slots, std::vector<std::size_t> reserved = {});

  std::size_t total_slots() const noexcept { return total_slots_; }
  std::span<const std::size_t> reserved() const noexcept { return reserved_; }
  std::span<const Segment> segments() const noexcept { return segments_; }

  /// Number of addressable positions: 8 * total_slots - |reserved|.
  std::uint64_t size() const noexcept;

  /// Positions available when only the `layers` least significant layers
  /// (8 down to 9 - layers) may be used.
  std::uint64_t positions_in_lowest_layers(int layers) const;

  /// Throws Error{PositionOutOfRange} for position >= size().
  BitAddress address(std::uint64_t position) const;

 private:
  std::size_t total_slots_;
  std::vector<std::size_t> reserved_;
  std::vector<Segment> segments_;
};

BitAddress bit_address(std::uint64_t position, std::uint32_t width, std::uint32_t height,
                       std::vector<std::size_t> reserved = {});

/// Sets the layer bit at positions start .. start + bits.size() - 1 in place.
/// Throws Error{PositionOutOfRange} if the range exceeds the plan, and
/// Error{DimensionMismatch} if the plan was built for a different slot count.
void write_bits_into(RasterImage& image, std::uint64_t start,
                     std::span<const std::uint8_t> bits, const TraversalPlan& plan);

BitSequence read_bits(const RasterImage& image, std::uint64_t start, std::uint64_t count,
                      const TraversalPlan& plan);

/// Value-returning form; the input image is left untouched.
RasterImage write_bits(const RasterImage& image, std::uint64_t start,
                       std::span<const std::uint8_t> bits,
                       std::vector<std::size_t> reserved = {});

BitSequence read_bits(const RasterImage& image, std::uint64_t start, std::uint64_t count,
                      std::vector<std::size_t> reserved = {});

}  // namespace lsbstego
