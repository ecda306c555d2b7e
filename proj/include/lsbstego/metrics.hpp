#pragma once

#include <cstdint>

#include "lsbstego/raster.hpp"

namespace lsbstego {

struct QualityReport {
  double mse = 0.0;
  /// +infinity when mse == 0.
  double psnr_db = 0.0;
  std::uint8_t max_deviation = 0;
  std::uint64_t sum_squared_error = 0;
};

/// Throws Error{DimensionMismatch} when the images differ in size.
QualityReport compare(const RasterImage& cover, const RasterImage& stego);

/// 10 * log10(255^2 / mse), infinity for mse == 0.
double psnr_from_mse(double mse);

}  // namespace lsbstego
