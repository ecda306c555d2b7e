#include "lsbstego/stego.hpp"

#include <limits>
#include <numeric>

#include "lsbstego/error.hpp"

namespace lsbstego {
namespace {

void require_trailer_room(std::size_t total_slots) {
  if (total_slots < kTrailerBits) {
    throw Error(Errc::CoverTooSmall, "image has " + std::to_string(total_slots) +
                                         " channel slots, the trailer needs " +
                                         std::to_string(kTrailerBits));
  }
}

std::uint64_t available_stream_bits(std::size_t total_slots, int layers) {
  return std::uint64_t{total_slots} * static_cast<std::uint64_t>(layers) - kTrailerBits;
}

}  // namespace

BitSequence StegoHeader::to_bits() const {
  BitSequence bits;
  bits.reserve(kTrailerBits);
  append_bits(bits, magic, 8);
  append_bits(bits, version, 8);
  append_bits(bits, name_length, 16);
  append_bits(bits, payload_size, 32);
  return bits;
}

StegoHeader StegoHeader::from_bits(std::span<const std::uint8_t> bits) {
  StegoHeader h;
  h.magic = static_cast<std::uint8_t>(read_uint(bits, 0, 8));
  h.version = static_cast<std::uint8_t>(read_uint(bits, 8, 8));
  h.name_length = static_cast<std::uint16_t>(read_uint(bits, 16, 16));
  h.payload_size = static_cast<std::uint32_t>(read_uint(bits, 32, 32));
  return h;
}

std::vector<std::size_t> trailer_slots(std::size_t total_slots) {
  require_trailer_room(total_slots);
  std::vector<std::size_t> slots(kTrailerBits);
  std::iota(slots.begin(), slots.end(), total_slots - kTrailerBits);
  return slots;
}

TraversalPlan stream_plan(std::size_t total_slots) {
  return TraversalPlan(total_slots, trailer_slots(total_slots));
}

std::optional<int> layers_required(std::uint64_t stream_bits, std::size_t total_slots) {
  if (total_slots < kTrailerBits) return std::nullopt;
  for (int k = 1; k <= kLayerCount; ++k) {
    if (stream_bits <= available_stream_bits(total_slots, k)) return k;
  }
  return std::nullopt;
}

std::optional<int> CapacityReport::layers_required(const Payload& payload) const {
  return lsbstego::layers_required(payload.stream_bits(), total_slots);
}

CapacityReport capacity(const RasterImage& cover, int max_layers) {
  check_layer(max_layers);
  CapacityReport report;
  report.width = cover.width();
  report.height = cover.height();
  report.total_slots = cover.slot_count();
  report.max_layers = max_layers;
  report.per_layer_bytes = capacity_per_layer(cover.width(), cover.height());
  report.cover_too_small = cover.slot_count() < kTrailerBits;
  report.max_payload_plus_name_bytes =
      report.cover_too_small ? 0 : available_stream_bits(cover.slot_count(), max_layers) / 8;
  return report;
}

RasterImage embed(const RasterImage& cover, const Payload& payload, int max_layers) {
  check_layer(max_layers);
  const std::size_t total = cover.slot_count();
  require_trailer_room(total);
  if (payload.name.empty()) {
    throw Error(Errc::InvalidPayload, "payload name must not be empty");
  }
  if (payload.name.size() > kMaxNameLength) {
    throw Error(Errc::NameTooLong, "name is " + std::to_string(payload.name.size()) +
                                       " bytes, limit is " + std::to_string(kMaxNameLength));
  }
  if (payload.data.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(Errc::InvalidPayload, "payload larger than 4 GiB - 1");
  }

  const std::uint64_t needed = payload.stream_bits();
  const std::uint64_t available = available_stream_bits(total, max_layers);
  if (needed > available) {
    throw CapacityExceeded(needed, available, layers_required(needed, total).value_or(0));
  }

  StegoHeader header;
  header.name_length = static_cast<std::uint16_t>(payload.name.size());
  header.payload_size = static_cast<std::uint32_t>(payload.data.size());

  RasterImage stego = cover;

  const TraversalPlan trailer_plan(total);
  const BitSequence trailer = header.to_bits();
  write_bits_into(stego, total - kTrailerBits, trailer, trailer_plan);

  std::vector<std::uint8_t> stream;
  stream.reserve(payload.name.size() + payload.data.size());
  stream.insert(stream.end(), payload.name.begin(), payload.name.end());
  stream.insert(stream.end(), payload.data.begin(), payload.data.end());
  write_bits_into(stego, 0, unpack_msb_first(stream), stream_plan(total));
  return stego;
}

Payload extract(const RasterImage& stego) {
  const std::size_t total = stego.slot_count();
  require_trailer_room(total);

  const StegoHeader header = StegoHeader::from_bits(
      read_bits(stego, total - kTrailerBits, kTrailerBits, TraversalPlan(total)));
  if (header.magic != kTrailerMagic || header.version != kTrailerVersion) {
    throw Error(Errc::NotAStegoImage, "no embedding trailer found");
  }
  if (header.name_length == 0 || header.name_length > kMaxNameLength) {
    throw Error(Errc::CorruptHeader,
                "trailer name length " + std::to_string(header.name_length));
  }
  const std::uint64_t stream_bits =
      8 * (std::uint64_t{header.name_length} + header.payload_size);
  const std::uint64_t available = available_stream_bits(total, kLayerCount);
  if (stream_bits > available) {
    throw Error(Errc::CorruptHeader, "trailer declares " + std::to_string(stream_bits) +
                                         " stream bits, image holds " +
                                         std::to_string(available));
  }

  const std::vector<std::uint8_t> stream =
      pack_msb_first(read_bits(stego, 0, stream_bits, stream_plan(total)));
  Payload payload;
  payload.name.assign(stream.begin(), stream.begin() + header.name_length);
  payload.data.assign(stream.begin() + header.name_length, stream.end());
  return payload;
}

int layers_used(const RasterImage& cover, const Payload& payload) {
  const std::size_t total = cover.slot_count();
  require_trailer_room(total);
  const auto k = layers_required(payload.stream_bits(), total);
  if (!k) {
    throw CapacityExceeded(payload.stream_bits(), available_stream_bits(total, kLayerCount), 0);
  }
  return *k;
}

}  // namespace lsbstego
