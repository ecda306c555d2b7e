// Serial reference kernels against their OpenMP counterparts.
// Run with OMP_NUM_THREADS set to compare scaling.

#include <benchmark/benchmark.h>

#include <random>

#include "lsbstego/analysis.hpp"
#include "lsbstego/bitplane.hpp"
#include "lsbstego/metrics.hpp"
#include "lsbstego/serial.hpp"
#include "lsbstego/stego.hpp"

namespace {

using namespace lsbstego;

RasterImage random_image(std::uint32_t side, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> channels(std::size_t{side} * side * 3);
  for (auto& c : channels) c = static_cast<std::uint8_t>(rng());
  return RasterImage(side, side, std::move(channels));
}

BitSequence random_bits(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BitSequence bits(n);
  for (auto& b : bits) b = rng() & 1u;
  return bits;
}

void BM_WriteBitsSerial(benchmark::State& state) {
  const auto side = static_cast<std::uint32_t>(state.range(0));
  RasterImage image = random_image(side, 1);
  const TraversalPlan plan = stream_plan(image.slot_count());
  const BitSequence bits = random_bits(image.slot_count() * 2, 2);
  for (auto _ : state) {
    serial::write_bits_into(image, 0, bits, plan);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(bits.size()));
}

void BM_WriteBitsParallel(benchmark::State& state) {
  const auto side = static_cast<std::uint32_t>(state.range(0));
  RasterImage image = random_image(side, 1);
  const TraversalPlan plan = stream_plan(image.slot_count());
  const BitSequence bits = random_bits(image.slot_count() * 2, 2);
  for (auto _ : state) {
    write_bits_into(image, 0, bits, plan);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(bits.size()));
}

void BM_CompareSerial(benchmark::State& state) {
  const auto side = static_cast<std::uint32_t>(state.range(0));
  const RasterImage a = random_image(side, 3), b = random_image(side, 4);
  for (auto _ : state) benchmark::DoNotOptimize(serial::compare(a, b));
}

void BM_CompareParallel(benchmark::State& state) {
  const auto side = static_cast<std::uint32_t>(state.range(0));
  const RasterImage a = random_image(side, 3), b = random_image(side, 4);
  for (auto _ : state) benchmark::DoNotOptimize(compare(a, b));
}

void BM_LayerStatsSerial(benchmark::State& state) {
  const RasterImage a = random_image(static_cast<std::uint32_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(serial::layer_stats(a));
}

void BM_LayerStatsParallel(benchmark::State& state) {
  const RasterImage a = random_image(static_cast<std::uint32_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(layer_stats(a));
}

void BM_BitplaneSerial(benchmark::State& state) {
  const RasterImage a = random_image(static_cast<std::uint32_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(serial::extract_bitplane(a, 8, Channel::All));
}

void BM_BitplaneParallel(benchmark::State& state) {
  const RasterImage a = random_image(static_cast<std::uint32_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(extract_bitplane(a, 8, Channel::All));
}

}  // namespace

BENCHMARK(BM_WriteBitsSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_WriteBitsParallel)->Arg(256)->Arg(1024);
BENCHMARK(BM_CompareSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_CompareParallel)->Arg(256)->Arg(1024);
BENCHMARK(BM_LayerStatsSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_LayerStatsParallel)->Arg(256)->Arg(1024);
BENCHMARK(BM_BitplaneSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_BitplaneParallel)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
