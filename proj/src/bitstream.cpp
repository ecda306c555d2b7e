#include "lsbstego/bitstream.hpp"

#include <cstddef>

namespace lsbstego {

BitSequence unpack_msb_first(std::span<const std::uint8_t> bytes) {
  BitSequence bits(bytes.size() * 8);
  const auto n = static_cast<std::int64_t>(bytes.size());
#pragma omp parallel for schedule(static) if (n > 65536)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::uint8_t b = bytes[static_cast<std::size_t>(i)];
    std::uint8_t* out = bits.data() + i * 8;
    for (int k = 0; k < 8; ++k) out[k] = (b >> (7 - k)) & 1u;
  }
  return bits;
}

std::vector<std::uint8_t> pack_msb_first(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
  const auto n = static_cast<std::int64_t>(bytes.size());
#pragma omp parallel for schedule(static) if (n > 65536)
  for (std::int64_t i = 0; i < n; ++i) {
    std::uint8_t b = 0;
    const std::size_t base = static_cast<std::size_t>(i) * 8;
    for (std::size_t k = 0; k < 8; ++k) {
      const std::uint8_t bit = base + k < bits.size() ? (bits[base + k] & 1u) : 0;
      b = static_cast<std::uint8_t>((b << 1) | bit);
    }
    bytes[static_cast<std::size_t>(i)] = b;
  }
  return bytes;
}

void append_bits(BitSequence& out, std::uint64_t value, unsigned width) {
  for (unsigned i = width; i-- > 0;) out.push_back(static_cast<std::uint8_t>((value >> i) & 1u));
}

std::uint64_t read_uint(std::span<const std::uint8_t> bits, std::size_t offset, unsigned width) {
  std::uint64_t value = 0;
  for (unsigned i = 0; i < width; ++i) value = (value << 1) | (bits[offset + i] & 1u);
  return value;
}

}  // namespace lsbstego
