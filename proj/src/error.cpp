#include "lsbstego/error.hpp"

namespace lsbstego {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidImage: return "InvalidImage";
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::UnsupportedFormat: return "UnsupportedFormat";
    case Errc::TruncatedPixelData: return "TruncatedPixelData";
    case Errc::PositionOutOfRange: return "PositionOutOfRange";
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::CoverTooSmall: return "CoverTooSmall";
    case Errc::NameTooLong: return "NameTooLong";
    case Errc::InvalidPayload: return "InvalidPayload";
    case Errc::NotAStegoImage: return "NotAStegoImage";
    case Errc::CorruptHeader: return "CorruptHeader";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidLayer: return "InvalidLayer";
    case Errc::InvalidChannel: return "InvalidChannel";
  }
  return "Unknown";
}

CapacityExceeded::CapacityExceeded(std::uint64_t required_bits,
                                   std::uint64_t available_bits, int layers_needed)
    : Error(Errc::CapacityExceeded,
            "stream needs " + std::to_string(required_bits) + " bits (" +
                std::to_string((required_bits + 7) / 8) + " bytes) but only " +
                std::to_string(available_bits) + " bits (" +
                std::to_string(available_bits / 8) + " bytes) are available; " +
                (layers_needed > 0 ? "minimal layers: " + std::to_string(layers_needed)
                                   : std::string("does not fit in 8 layers"))),
      required_bits_(required_bits),
      available_bits_(available_bits),
      layers_needed_(layers_needed) {}

}  // namespace lsbstego
