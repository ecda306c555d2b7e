#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "lsbstego/raster.hpp"

namespace lsbstego {

enum class Channel { Red, Green, Blue, All };

/// Accepts r|g|b|all (also red|green|blue), case-insensitive.
/// Throws Error{InvalidChannel}.
Channel parse_channel(std::string_view text);

/// Renders one bit layer as a 0/255 image of the same size.
///
/// With Channel::All every channel is mapped independently. With a single
/// channel the output is grey: all three output channels carry the selected
/// channel's bit, so the plane reads as a monochrome picture.
/// Throws Error with InvalidLayer or InvalidChannel.
RasterImage extract_bitplane(const RasterImage& image, int layer, Channel channel = Channel::All);

/// counts[layer - 1] = number of 1 bits in that layer over all channel bytes.
using LayerCounts = std::array<std::uint64_t, 8>;

LayerCounts layer_stats(const RasterImage& image);

}  // namespace lsbstego
