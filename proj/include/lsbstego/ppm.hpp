#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lsbstego/raster.hpp"

namespace lsbstego::ppm {

/// Decodes binary PPM (P6, maxval 255). '#' comments are allowed between
/// header fields; exactly one whitespace byte separates maxval from pixels.
RasterImage parse(std::span<const std::uint8_t> data);

/// "P6\n<w> <h>\n255\n" followed by the channel bytes.
std::vector<std::uint8_t> write(const RasterImage& image);

}  // namespace lsbstego::ppm
