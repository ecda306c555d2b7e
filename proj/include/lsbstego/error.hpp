#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lsbstego {

enum class Errc {
  InvalidImage,
  MalformedHeader,
  UnsupportedFormat,
  TruncatedPixelData,
  PositionOutOfRange,
  CapacityExceeded,
  CoverTooSmall,
  NameTooLong,
  InvalidPayload,
  NotAStegoImage,
  CorruptHeader,
  DimensionMismatch,
  InvalidLayer,
  InvalidChannel,
};

std::string_view to_string(Errc code) noexcept;

/// Base exception for every failure raised by the library. The code is
/// stable and is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by embed when the stream does not fit the allowed layers.
/// layers_needed is 0 when even all eight layers are insufficient.
class CapacityExceeded : public Error {
 public:
  CapacityExceeded(std::uint64_t required_bits, std::uint64_t available_bits,
                   int layers_needed);

  std::uint64_t required_bits() const noexcept { return required_bits_; }
  std::uint64_t available_bits() const noexcept { return available_bits_; }
  int layers_needed() const noexcept { return layers_needed_; }

 private:
  std::uint64_t required_bits_;
  std::uint64_t available_bits_;
  int layers_needed_;
};

}  // namespace lsbstego
