#include "lsbstego/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "lsbstego/bitplane.hpp"
#include "lsbstego/error.hpp"

namespace lsbstego {

Channel parse_channel(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "r" || lower == "red") return Channel::Red;
  if (lower == "g" || lower == "green") return Channel::Green;
  if (lower == "b" || lower == "blue") return Channel::Blue;
  if (lower == "all" || lower == "rgb") return Channel::All;
  throw Error(Errc::InvalidChannel, "unknown channel '" + std::string(text) + "'");
}

RasterImage extract_bitplane(const RasterImage& image, int layer, Channel channel) {
  check_layer(layer);
  const auto selected = static_cast<int>(channel);
  if (selected < 0 || selected > static_cast<int>(Channel::All)) {
    throw Error(Errc::InvalidChannel, "channel value " + std::to_string(selected));
  }

  RasterImage out(image.width(), image.height());
  const std::uint8_t mask = layer_mask(layer);
  const std::uint8_t* src = image.channels().data();
  std::uint8_t* dst = out.channels().data();

  if (channel == Channel::All) {
    const auto n = static_cast<std::int64_t>(image.slot_count());
#pragma omp parallel for schedule(static) if (n > 65536)
    for (std::int64_t i = 0; i < n; ++i) dst[i] = (src[i] & mask) ? 255 : 0;
  } else {
    const auto pixels = static_cast<std::int64_t>(image.slot_count() / 3);
#pragma omp parallel for schedule(static) if (pixels > 65536)
    for (std::int64_t p = 0; p < pixels; ++p) {
      const std::uint8_t v = (src[3 * p + selected] & mask) ? 255 : 0;
      dst[3 * p] = dst[3 * p + 1] = dst[3 * p + 2] = v;
    }
  }
  return out;
}

LayerCounts layer_stats(const RasterImage& image) {
  const std::uint8_t* src = image.channels().data();
  const auto n = static_cast<std::int64_t>(image.slot_count());
  std::uint64_t counts[8] = {};
#pragma omp parallel for schedule(static) reduction(+ : counts[:8]) if (n > 65536)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::uint8_t v = src[i];
    for (int bit = 0; bit < 8; ++bit) counts[7 - bit] += (v >> bit) & 1u;
  }
  LayerCounts result{};
  std::copy(std::begin(counts), std::end(counts), result.begin());
  return result;
}

}  // namespace lsbstego
