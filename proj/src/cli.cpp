#include "lsbstego/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "lsbstego/analysis.hpp"
#include "lsbstego/error.hpp"
#include "lsbstego/image_format.hpp"
#include "lsbstego/metrics.hpp"
#include "lsbstego/stego.hpp"

namespace lsbstego::cli {
namespace {

namespace fs = std::filesystem;

struct UnsafeName : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_db(double psnr) {
  if (std::isinf(psnr)) return "inf";
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << psnr;
  return s.str();
}

void print_quality(std::ostream& out, const QualityReport& q) {
  out << "mse: " << std::setprecision(10) << q.mse << "\n"
      << "psnr db: " << format_db(q.psnr_db) << "\n"
      << "max deviation: " << int{q.max_deviation} << "\n";
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::CapacityExceeded:
    case Errc::CoverTooSmall:
      return kCapacityExceeded;
    case Errc::InvalidImage:
    case Errc::MalformedHeader:
    case Errc::UnsupportedFormat:
    case Errc::TruncatedPixelData:
      return kCodecError;
    case Errc::NotAStegoImage: return kNotAStegoImage;
    case Errc::CorruptHeader: return kCorruptHeader;
    case Errc::DimensionMismatch: return kDimensionMismatch;
    case Errc::PositionOutOfRange:
    case Errc::NameTooLong:
    case Errc::InvalidPayload:
    case Errc::InvalidLayer:
    case Errc::InvalidChannel:
      return kUsageError;
  }
  return kUsageError;
}

ImageFormat output_format(const fs::path& path, std::optional<ImageFormat> fallback) {
  if (auto f = format_from_extension(path)) return *f;
  if (fallback) return *fallback;
  throw Error(Errc::UnsupportedFormat,
              "cannot infer image format from '" + path.string() + "' (use .bmp or .ppm)");
}

void cmd_embed(std::ostream& out, const fs::path& cover_path, const fs::path& secret_path,
               const fs::path& out_path, int max_layers, const std::string& name_override) {
  const DecodedImage cover = load_image(cover_path);
  Payload payload;
  payload.name = name_override.empty() ? secret_path.filename().string() : name_override;
  payload.data = read_file(secret_path);

  const RasterImage stego = embed(cover.image, payload, max_layers);
  save_image(out_path, stego, cover.format);

  const CapacityReport cap = capacity(cover.image, max_layers);
  const std::uint64_t stream_bytes = payload.stream_bits() / 8;
  out << "name: " << payload.name << "\n"
      << "bytes embedded: " << payload.data.size() << "\n"
      << "stream bytes: " << stream_bytes << "\n"
      << "layers used: " << layers_used(cover.image, payload) << "\n"
      << "max layers: " << max_layers << "\n"
      << "capacity bytes: " << cap.max_payload_plus_name_bytes << "\n"
      << "capacity remaining: " << cap.max_payload_plus_name_bytes - stream_bytes << "\n";
  print_quality(out, compare(cover.image, stego));
}

void cmd_extract(std::ostream& out, const fs::path& stego_path, const fs::path& out_dir) {
  const Payload payload = extract(load_image(stego_path).image);
  if (!is_safe_name(payload.name)) {
    throw UnsafeName("embedded name is not a plain file name");
  }
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create directory " + out_dir.string() + ": " + ec.message());
  const fs::path target = out_dir / payload.name;
  write_file(target, payload.data);
  out << "name: " << payload.name << "\n"
      << "size: " << payload.data.size() << "\n"
      << "path: " << target.string() << "\n";
}

void cmd_capacity(std::ostream& out, const fs::path& image_path, int max_layers) {
  const RasterImage image = load_image(image_path).image;
  const CapacityReport r = capacity(image, max_layers);
  out << "width: " << r.width << "\n"
      << "height: " << r.height << "\n"
      << "channel slots: " << r.total_slots << "\n"
      << "max layers: " << r.max_layers << "\n"
      << "per layer bytes: " << r.per_layer_bytes << "\n"
      << "trailer overhead bits: " << r.trailer_overhead_bits << "\n"
      << "max payload plus name bytes: " << r.max_payload_plus_name_bytes << "\n"
      << "cover too small: " << (r.cover_too_small ? "yes" : "no") << "\n";
}

void cmd_psnr(std::ostream& out, const fs::path& a, const fs::path& b) {
  print_quality(out, compare(load_image(a).image, load_image(b).image));
}

void cmd_bitplane(std::ostream& out, const fs::path& in_path, const fs::path& out_path,
                  int layer, const std::string& channel) {
  const DecodedImage in = load_image(in_path);
  const Channel ch = parse_channel(channel);
  const RasterImage plane = extract_bitplane(in.image, layer, ch);
  const ImageFormat format = output_format(out_path, in.format);
  save_image(out_path, plane, format);
  out << "layer: " << layer << "\n"
      << "channel: " << channel << "\n"
      << "output: " << out_path.string() << "\n";
}

void cmd_convert(std::ostream& out, const fs::path& in_path, const fs::path& out_path) {
  const ImageFormat format = output_format(out_path, std::nullopt);
  const DecodedImage in = load_image(in_path);
  save_image(out_path, in.image, format);
  out << "width: " << in.image.width() << "\n"
      << "height: " << in.image.height() << "\n"
      << "format: " << (format == ImageFormat::Bmp ? "bmp" : "ppm") << "\n";
}

void cmd_stats(std::ostream& out, const fs::path& image_path) {
  const LayerCounts counts = layer_stats(load_image(image_path).image);
  for (int layer = 1; layer <= 8; ++layer) {
    out << "layer " << layer << " ones: " << counts[layer - 1] << "\n";
  }
}

}  // namespace

bool is_safe_name(const std::string& name) {
  if (name.empty() || name == "." || name == "..") return false;
  return name.find_first_of(std::string("/\\\0", 3)) == std::string::npos;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hide files in BMP/PPM images using multi-layer LSB embedding", "lsbstego"};
  app.require_subcommand(1);

  std::string cover, secret, output, name, image, image_b, out_dir = ".", channel = "all";
  int max_layers = 8;
  int layer = 8;

  auto* embed_cmd = app.add_subcommand("embed", "Hide a file inside a cover image");
  embed_cmd->add_option("cover", cover, "Cover image (BMP or PPM)")->required();
  embed_cmd->add_option("secret", secret, "File to hide")->required();
  embed_cmd->add_option("output", output, "Stego image to write (same format as cover)")
      ->required();
  embed_cmd->add_option("--max-layers", max_layers, "Highest number of bit layers to use")
      ->check(CLI::Range(1, 8));
  embed_cmd->add_option("--name", name, "Name to store instead of the file's base name");

  auto* extract_cmd = app.add_subcommand("extract", "Recover a hidden file");
  extract_cmd->add_option("stego", image, "Stego image")->required();
  extract_cmd->add_option("--out-dir", out_dir, "Directory to write the recovered file");

  auto* capacity_cmd = app.add_subcommand("capacity", "Report embedding capacity");
  capacity_cmd->add_option("image", image, "Image to inspect")->required();
  capacity_cmd->add_option("--max-layers", max_layers, "Layer cap")->check(CLI::Range(1, 8));

  auto* psnr_cmd = app.add_subcommand("psnr", "Compare two images (MSE, PSNR, max deviation)");
  psnr_cmd->add_option("a", image, "First image")->required();
  psnr_cmd->add_option("b", image_b, "Second image")->required();

  auto* bitplane_cmd = app.add_subcommand("bitplane", "Render one bit layer as a 0/255 image");
  bitplane_cmd->add_option("image", image, "Input image")->required();
  bitplane_cmd->add_option("output", output, "Output image (.bmp or .ppm)")->required();
  bitplane_cmd->add_option("--layer", layer, "Layer 1 (MSB) .. 8 (LSB)");
  bitplane_cmd->add_option("--channel", channel, "r, g, b or all");

  auto* convert_cmd = app.add_subcommand("convert", "Convert between BMP and PPM");
  convert_cmd->add_option("input", image, "Input image")->required();
  convert_cmd->add_option("output", output, "Output path; format from extension")->required();

  auto* stats_cmd = app.add_subcommand("stats", "Count 1 bits in every layer");
  stats_cmd->add_option("image", image, "Image to inspect")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (embed_cmd->parsed()) {
      cmd_embed(out, cover, secret, output, max_layers, name);
    } else if (extract_cmd->parsed()) {
      cmd_extract(out, image, out_dir);
    } else if (capacity_cmd->parsed()) {
      cmd_capacity(out, image, max_layers);
    } else if (psnr_cmd->parsed()) {
      cmd_psnr(out, image, image_b);
    } else if (bitplane_cmd->parsed()) {
      cmd_bitplane(out, image, output, layer, channel);
    } else if (convert_cmd->parsed()) {
      cmd_convert(out, image, output);
    } else if (stats_cmd->parsed()) {
      cmd_stats(out, image);
    }
  } catch (const CapacityExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapacityExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const UnsafeName& e) {
    err << "error: UnsafeName: " << e.what() << "\n";
    return kUnsafeName;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kOk;
}

}  // namespace lsbstego::cli
