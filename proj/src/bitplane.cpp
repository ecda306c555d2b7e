#include "lsbstego/bitplane.hpp"

#include <algorithm>
#include <iterator>
#include <string>
#include <utility>

#include "lsbstego/error.hpp"

namespace lsbstego {
namespace {

void check_range(const TraversalPlan& plan, const RasterImage& image, std::uint64_t start,
                 std::uint64_t count) {
  if (plan.total_slots() != image.slot_count()) {
    throw Error(Errc::DimensionMismatch,
                "traversal plan covers " + std::to_string(plan.total_slots()) +
                    " slots, image has " + std::to_string(image.slot_count()));
  }
  if (start > plan.size() || count > plan.size() - start) {
    throw Error(Errc::PositionOutOfRange,
                "positions [" + std::to_string(start) + ", " + std::to_string(start + count) +
                    ") exceed " + std::to_string(plan.size()) + " addressable bits");
  }
}

// Calls fn(segment, first offset in segment, offset count, offset into caller range)
// for every segment overlapping [start, start + count).
template <typename Fn>
void for_each_overlap(const TraversalPlan& plan, std::uint64_t start, std::uint64_t count,
                      Fn&& fn) {
  const std::uint64_t end = start + count;
  for (const auto& seg : plan.segments()) {
    const std::uint64_t seg_end = seg.first_position + seg.length;
    if (seg_end <= start) continue;
    if (seg.first_position >= end) break;
    const std::uint64_t lo = std::max(start, seg.first_position);
    const std::uint64_t hi = std::min(end, seg_end);
    fn(seg, lo - seg.first_position, hi - lo, lo - start);
  }
}

}  // namespace

void check_layer(int layer) {
  if (layer < kMsbLayer || layer > kLsbLayer) {
    throw Error(Errc::InvalidLayer, "layer " + std::to_string(layer) + " not in 1..8");
  }
}

std::uint64_t capacity_per_layer(std::uint32_t width, std::uint32_t height) {
  return std::uint64_t{width} * height * 3 / 8;
}

TraversalPlan::TraversalPlan(std::size_t total_slots, std::vector<std::size_t> reserved)
    : total_slots_(total_slots), reserved_(std::move(reserved)) {
  std::sort(reserved_.begin(), reserved_.end());
  reserved_.erase(std::unique(reserved_.begin(), reserved_.end()), reserved_.end());
  if (!reserved_.empty() && reserved_.back() >= total_slots_) {
    throw Error(Errc::PositionOutOfRange,
                "reserved slot " + std::to_string(reserved_.back()) + " >= " +
                    std::to_string(total_slots_));
  }

  std::uint64_t position = 0;
  std::size_t run_start = 0;
  auto emit = [&](std::size_t first, std::size_t last, int layer) {
    if (last > first) {
      segments_.push_back({position, first, last - first, layer});
      position += last - first;
    }
  };
  for (std::size_t r : reserved_) {
    emit(run_start, r, kLsbLayer);
    run_start = r + 1;
  }
  emit(run_start, total_slots_, kLsbLayer);
  for (int layer = kLsbLayer - 1; layer >= kMsbLayer; --layer) emit(0, total_slots_, layer);
}

std::uint64_t TraversalPlan::size() const noexcept {
  return std::uint64_t{total_slots_} * kLayerCount - reserved_.size();
}

std::uint64_t TraversalPlan::positions_in_lowest_layers(int layers) const {
  if (layers < 1 || layers > kLayerCount) {
    throw Error(Errc::InvalidLayer, "layer count " + std::to_string(layers) + " not in 1..8");
  }
  return std::uint64_t{total_slots_} * static_cast<std::uint64_t>(layers) - reserved_.size();
}

BitAddress TraversalPlan::address(std::uint64_t position) const {
  if (position >= size()) {
    throw Error(Errc::PositionOutOfRange,
                "position " + std::to_string(position) + " >= " + std::to_string(size()));
  }
  auto it = std::upper_bound(
      segments_.begin(), segments_.end(), position,
      [](std::uint64_t p, const Segment& s) { return p < s.first_position; });
  const Segment& seg = *std::prev(it);
  return {seg.first_slot + static_cast<std::size_t>(position - seg.first_position), seg.layer};
}

BitAddress bit_address(std::uint64_t position, std::uint32_t width, std::uint32_t height,
                       std::vector<std::size_t> reserved) {
  return TraversalPlan(slot_count_for(width, height), std::move(reserved)).address(position);
}

void write_bits_into(RasterImage& image, std::uint64_t start,
                     std::span<const std::uint8_t> bits, const TraversalPlan& plan) {
  check_range(plan, image, start, bits.size());
  std::uint8_t* channels = image.channels().data();
  // Within one segment every position addresses a distinct slot, so the
  // inner loop is free of write conflicts.
  for_each_overlap(plan, start, bits.size(),
                   [&](const TraversalPlan::Segment& seg, std::uint64_t offset,
                       std::uint64_t n, std::uint64_t src) {
                     const std::uint8_t mask = layer_mask(seg.layer);
                     const unsigned shift = static_cast<unsigned>(kLsbLayer - seg.layer);
                     std::uint8_t* base = channels + seg.first_slot + offset;
                     const std::uint8_t* in = bits.data() + src;
                     const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (count > 65536)
                     for (std::int64_t i = 0; i < count; ++i) {
                       const auto bit = static_cast<std::uint8_t>((in[i] & 1u) << shift);
                       base[i] = static_cast<std::uint8_t>((base[i] & ~mask) | bit);
                     }
                   });
}

BitSequence read_bits(const RasterImage& image, std::uint64_t start, std::uint64_t count,
                      const TraversalPlan& plan) {
  check_range(plan, image, start, count);
  BitSequence bits(static_cast<std::size_t>(count));
  const std::uint8_t* channels = image.channels().data();
  for_each_overlap(plan, start, count,
                   [&](const TraversalPlan::Segment& seg, std::uint64_t offset,
                       std::uint64_t n, std::uint64_t dst) {
                     const unsigned shift = static_cast<unsigned>(kLsbLayer - seg.layer);
                     const std::uint8_t* base = channels + seg.first_slot + offset;
                     std::uint8_t* out = bits.data() + dst;
                     const auto len = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (len > 65536)
                     for (std::int64_t i = 0; i < len; ++i) out[i] = (base[i] >> shift) & 1u;
                   });
  return bits;
}

RasterImage write_bits(const RasterImage& image, std::uint64_t start,
                       std::span<const std::uint8_t> bits, std::vector<std::size_t> reserved) {
  RasterImage out = image;
  write_bits_into(out, start, bits, TraversalPlan(image.slot_count(), std::move(reserved)));
  return out;
}

BitSequence read_bits(const RasterImage& image, std::uint64_t start, std::uint64_t count,
                      std::vector<std::size_t> reserved) {
  return read_bits(image, start, count, TraversalPlan(image.slot_count(), std::move(reserved)));
}

}  // namespace lsbstego
