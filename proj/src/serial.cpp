#include "lsbstego/serial.hpp"

#include <cstdlib>
#include <string>

#include "lsbstego/error.hpp"

namespace lsbstego::serial {

void write_bits_into(RasterImage& image, std::uint64_t start,
                     std::span<const std::uint8_t> bits, const TraversalPlan& plan) {
  if (plan.total_slots() != image.slot_count()) {
    throw Error(Errc::DimensionMismatch, "plan does not match image");
  }
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const BitAddress addr = plan.address(start + i);
    std::uint8_t& byte = image.channels()[addr.slot];
    const std::uint8_t mask = layer_mask(addr.layer);
    byte = (bits[i] & 1u) ? (byte | mask) : (byte & ~mask);
  }
}

BitSequence read_bits(const RasterImage& image, std::uint64_t start, std::uint64_t count,
                      const TraversalPlan& plan) {
  if (plan.total_slots() != image.slot_count()) {
    throw Error(Errc::DimensionMismatch, "plan does not match image");
  }
  BitSequence bits;
  bits.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t i = 0; i < count; ++i) {
    const BitAddress addr = plan.address(start + i);
    bits.push_back((image.channels()[addr.slot] & layer_mask(addr.layer)) ? 1 : 0);
  }
  return bits;
}

QualityReport compare(const RasterImage& cover, const RasterImage& stego) {
  if (cover.width() != stego.width() || cover.height() != stego.height()) {
    throw Error(Errc::DimensionMismatch, "image sizes differ");
  }
  QualityReport report;
  for (std::size_t i = 0; i < cover.slot_count(); ++i) {
    const int d = std::abs(int{cover.channels()[i]} - int{stego.channels()[i]});
    report.sum_squared_error += static_cast<std::uint64_t>(d * d);
    if (d > report.max_deviation) report.max_deviation = static_cast<std::uint8_t>(d);
  }
  report.mse = static_cast<double>(report.sum_squared_error) /
               static_cast<double>(cover.slot_count());
  report.psnr_db = psnr_from_mse(report.mse);
  return report;
}

RasterImage extract_bitplane(const RasterImage& image, int layer, Channel channel) {
  check_layer(layer);
  RasterImage out(image.width(), image.height());
  for (std::uint32_t y = 0; y < image.height(); ++y) {
    for (std::uint32_t x = 0; x < image.width(); ++x) {
      for (unsigned c = 0; c < 3; ++c) {
        const unsigned source = channel == Channel::All ? c : static_cast<unsigned>(channel);
        const bool set = (image.at(x, y, source) >> (8 - layer)) & 1u;
        out.at(x, y, c) = set ? 255 : 0;
      }
    }
  }
  return out;
}

LayerCounts layer_stats(const RasterImage& image) {
  LayerCounts counts{};
  for (std::uint8_t v : image.channels()) {
    for (int layer = 1; layer <= 8; ++layer) counts[layer - 1] += (v >> (8 - layer)) & 1u;
  }
  return counts;
}

}  // namespace lsbstego::serial
