#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lsbstego {

/// One element per bit, each 0 or 1.
using BitSequence = std::vector<std::uint8_t>;

/// Expands bytes into bits, most significant bit of each byte first.
BitSequence unpack_msb_first(std::span<const std::uint8_t> bytes);

/// Inverse of unpack_msb_first. A trailing partial byte is zero-filled in its
/// low bits.
std::vector<std::uint8_t> pack_msb_first(std::span<const std::uint8_t> bits);

/// Appends the low `width` bits of value, most significant first.
void append_bits(BitSequence& out, std::uint64_t value, unsigned width);

/// Reads `width` bits starting at bits[offset] as a big-endian integer.
std::uint64_t read_uint(std::span<const std::uint8_t> bits, std::size_t offset, unsigned width);

}  // namespace lsbstego
