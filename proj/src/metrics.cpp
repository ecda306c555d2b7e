#include "lsbstego/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "lsbstego/error.hpp"

namespace lsbstego {

double psnr_from_mse(double mse) {
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

QualityReport compare(const RasterImage& cover, const RasterImage& stego) {
  if (cover.width() != stego.width() || cover.height() != stego.height()) {
    throw Error(Errc::DimensionMismatch,
                std::to_string(cover.width()) + "x" + std::to_string(cover.height()) + " vs " +
                    std::to_string(stego.width()) + "x" + std::to_string(stego.height()));
  }
  const std::uint8_t* a = cover.channels().data();
  const std::uint8_t* b = stego.channels().data();
  const auto n = static_cast<std::int64_t>(cover.slot_count());

  std::uint64_t sse = 0;
  int max_dev = 0;
  // Integer accumulation keeps the result independent of thread count.
#pragma omp parallel for schedule(static) reduction(+ : sse) reduction(max : max_dev) if (n > 65536)
  for (std::int64_t i = 0; i < n; ++i) {
    const int d = std::abs(int{a[i]} - int{b[i]});
    sse += static_cast<std::uint64_t>(d * d);
    if (d > max_dev) max_dev = d;
  }

  QualityReport report;
  report.sum_squared_error = sse;
  report.mse = static_cast<double>(sse) / static_cast<double>(n);
  report.psnr_db = psnr_from_mse(report.mse);
  report.max_deviation = static_cast<std::uint8_t>(max_dev);
  return report;
}

}  // namespace lsbstego
