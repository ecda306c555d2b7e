#pragma once

// Straightforward single-threaded versions of the data-parallel kernels.
// They address one bit or one byte at a time and are kept as the reference
// the OpenMP kernels are tested and benchmarked against.

#include <cstdint>
#include <span>

#include "lsbstego/analysis.hpp"
#include "lsbstego/bitplane.hpp"
#include "lsbstego/metrics.hpp"

namespace lsbstego::serial {

void write_bits_into(RasterImage& image, std::uint64_t start,
                     std::span<const std::uint8_t> bits, const TraversalPlan& plan);

BitSequence read_bits(const RasterImage& image, std::uint64_t start, std::uint64_t count,
                      const TraversalPlan& plan);

QualityReport compare(const RasterImage& cover, const RasterImage& stego);

RasterImage extract_bitplane(const RasterImage& image, int layer, Channel channel);

LayerCounts layer_stats(const RasterImage& image);

}  // namespace lsbstego::serial
