#include "spg/image_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "spg/errors.hpp"

namespace spg {

namespace {

std::string lower_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

/// Bounded reader over the first bytes of a file.
class HeaderReader {
 public:
  explicit HeaderReader(std::ifstream& in) : in_(in) {}

  bool read(std::uint8_t* dst, std::size_t n) {
    in_.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(n));
    return static_cast<std::size_t>(in_.gcount()) == n;
  }
  bool skip(std::size_t n) { return static_cast<bool>(in_.seekg(static_cast<std::streamoff>(n), std::ios::cur)); }
  bool seek(std::size_t pos) { return static_cast<bool>(in_.seekg(static_cast<std::streamoff>(pos))); }

  bool u8(std::uint8_t& v) { return read(&v, 1); }
  bool u16(std::uint16_t& v, bool big_endian) {
    std::array<std::uint8_t, 2> b{};
    if (!read(b.data(), 2)) return false;
    v = big_endian ? std::uint16_t(b[0] << 8 | b[1]) : std::uint16_t(b[1] << 8 | b[0]);
    return true;
  }
  bool u32(std::uint32_t& v, bool big_endian) {
    std::array<std::uint8_t, 4> b{};
    if (!read(b.data(), 4)) return false;
    v = big_endian ? (std::uint32_t(b[0]) << 24 | std::uint32_t(b[1]) << 16 | std::uint32_t(b[2]) << 8 | b[3])
                   : (std::uint32_t(b[3]) << 24 | std::uint32_t(b[2]) << 16 | std::uint32_t(b[1]) << 8 | b[0]);
    return true;
  }

 private:
  std::ifstream& in_;
};

std::optional<ImageSize> probe_png(HeaderReader& in) {
  // signature(8) length(4) "IHDR"(4) width(4) height(4)
  std::array<std::uint8_t, 8> rest{};
  if (!in.read(rest.data(), 4) || rest[0] != 0x0D || rest[1] != 0x0A || rest[2] != 0x1A ||
      rest[3] != 0x0A)
    return std::nullopt;
  if (!in.read(rest.data(), 8) || rest[4] != 'I' || rest[5] != 'H' || rest[6] != 'D' ||
      rest[7] != 'R')
    return std::nullopt;
  std::uint32_t w = 0;
  std::uint32_t h = 0;
  if (!in.u32(w, true) || !in.u32(h, true)) return std::nullopt;
  return ImageSize{static_cast<int>(w), static_cast<int>(h)};
}

std::optional<ImageSize> probe_bmp(HeaderReader& in) {
  std::uint32_t header_size = 0;
  if (!in.seek(14) || !in.u32(header_size, false)) return std::nullopt;
  if (header_size == 12) {
    std::uint16_t w = 0;
    std::uint16_t h = 0;
    if (!in.u16(w, false) || !in.u16(h, false)) return std::nullopt;
    return ImageSize{w, h};
  }
  std::uint32_t w = 0;
  std::uint32_t h = 0;
  if (!in.u32(w, false) || !in.u32(h, false)) return std::nullopt;
  // Negative height marks a top-down bitmap.
  return ImageSize{static_cast<std::int32_t>(w), std::abs(static_cast<std::int32_t>(h))};
}

std::optional<ImageSize> probe_jpeg(HeaderReader& in) {
  for (;;) {
    std::uint8_t byte = 0;
    if (!in.u8(byte)) return std::nullopt;
    if (byte != 0xFF) return std::nullopt;
    std::uint8_t marker = 0xFF;
    while (marker == 0xFF) {
      if (!in.u8(marker)) return std::nullopt;
    }
    if (marker == 0x01 || (marker >= 0xD0 && marker <= 0xD7)) continue;
    if (marker == 0xD9 || marker == 0xDA) return std::nullopt;
    std::uint16_t length = 0;
    if (!in.u16(length, true) || length < 2) return std::nullopt;
    const bool is_sof = marker >= 0xC0 && marker <= 0xCF && marker != 0xC4 && marker != 0xC8 &&
                        marker != 0xCC;
    if (is_sof) {
      std::uint8_t precision = 0;
      std::uint16_t h = 0;
      std::uint16_t w = 0;
      if (!in.u8(precision) || !in.u16(h, true) || !in.u16(w, true)) return std::nullopt;
      return ImageSize{w, h};
    }
    if (!in.skip(length - 2u)) return std::nullopt;
  }
}

std::optional<ImageSize> probe_tiff(HeaderReader& in, bool big_endian) {
  std::uint16_t magic = 0;
  std::uint32_t ifd = 0;
  if (!in.u16(magic, big_endian) || magic != 42) return std::nullopt;
  if (!in.u32(ifd, big_endian) || !in.seek(ifd)) return std::nullopt;
  std::uint16_t entries = 0;
  if (!in.u16(entries, big_endian)) return std::nullopt;
  std::optional<std::uint32_t> width;
  std::optional<std::uint32_t> height;
  for (std::uint16_t e = 0; e < entries && !(width && height); ++e) {
    std::uint16_t tag = 0;
    std::uint16_t type = 0;
    std::uint32_t count = 0;
    if (!in.u16(tag, big_endian) || !in.u16(type, big_endian) || !in.u32(count, big_endian))
      return std::nullopt;
    std::uint32_t value = 0;
    if (type == 3) {
      std::uint16_t short_value = 0;
      if (!in.u16(short_value, big_endian) || !in.skip(2)) return std::nullopt;
      value = short_value;
    } else if (!in.u32(value, big_endian)) {
      return std::nullopt;
    }
    if (tag == 256) width = value;
    if (tag == 257) height = value;
  }
  if (!width || !height) return std::nullopt;
  return ImageSize{static_cast<int>(*width), static_cast<int>(*height)};
}

}  // namespace

bool is_image_file(const std::filesystem::path& path) {
  static constexpr std::array<std::string_view, 6> kExtensions{".png", ".jpg", ".jpeg",
                                                               ".bmp", ".tif", ".tiff"};
  const std::string ext = lower_extension(path);
  return std::find(kExtensions.begin(), kExtensions.end(), ext) != kExtensions.end();
}

std::optional<ImageSize> probe_image_size(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) return std::nullopt;
  HeaderReader in(file);
  std::array<std::uint8_t, 4> magic{};
  if (!in.read(magic.data(), 4)) return std::nullopt;

  std::optional<ImageSize> size;
  if (magic[0] == 0x89 && magic[1] == 'P' && magic[2] == 'N' && magic[3] == 'G') {
    size = probe_png(in);
  } else if (magic[0] == 'B' && magic[1] == 'M') {
    size = probe_bmp(in);
  } else if (magic[0] == 0xFF && magic[1] == 0xD8) {
    in.seek(2);
    size = probe_jpeg(in);
  } else if ((magic[0] == 'I' && magic[1] == 'I') || (magic[0] == 'M' && magic[1] == 'M')) {
    in.seek(2);
    size = probe_tiff(in, magic[0] == 'M');
  }
  if (size && (size->width < 1 || size->height < 1)) return std::nullopt;
  return size;
}

RgbImage decode_image(const std::filesystem::path& path) {
  cv::Mat bgr;
  try {
    bgr = cv::imread(path.string(), cv::IMREAD_COLOR);
  } catch (const cv::Exception& e) {
    throw DataError(fmt::format("cannot decode image '{}': {}", path.string(), e.what()));
  }
  if (bgr.empty()) {
    throw DataError(fmt::format("cannot decode image '{}'", path.string()));
  }
  RgbImage image(bgr.cols, bgr.rows);
  for (int r = 0; r < bgr.rows; ++r) {
    const auto* row = bgr.ptr<cv::Vec3b>(r);
    for (int c = 0; c < bgr.cols; ++c) {
      image.at(r, c) = Rgb{row[c][2], row[c][1], row[c][0]};
    }
  }
  return image;
}

void write_image(const std::filesystem::path& path, const RgbImage& image) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  cv::Mat bgr(image.height(), image.width(), CV_8UC3);
  for (int r = 0; r < image.height(); ++r) {
    auto* row = bgr.ptr<cv::Vec3b>(r);
    for (int c = 0; c < image.width(); ++c) {
      const Rgb& px = image.at(r, c);
      row[c] = cv::Vec3b(px.b, px.g, px.r);
    }
  }
  bool ok = false;
  try {
    ok = cv::imwrite(path.string(), bgr);
  } catch (const cv::Exception& e) {
    throw DataError(fmt::format("cannot write image '{}': {}", path.string(), e.what()));
  }
  if (!ok) {
    throw DataError(fmt::format("cannot write image '{}'", path.string()));
  }
}

}  // namespace spg
