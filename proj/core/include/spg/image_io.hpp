#pragma once

#include <filesystem>
#include <optional>

#include "spg/colorspace.hpp"

namespace spg {

struct ImageSize {
  int width = 0;
  int height = 0;
  friend bool operator==(const ImageSize&, const ImageSize&) = default;
};

/// True for the extensions the corpus reader accepts: png, jpg, jpeg, bmp, tif, tiff.
bool is_image_file(const std::filesystem::path& path);

/// Reads only the file header. Returns nullopt when the file cannot be opened
/// or its header is not a recognizable PNG, JPEG, BMP or TIFF header.
std::optional<ImageSize> probe_image_size(const std::filesystem::path& path);

/// Decodes any supported format to 8-bit RGB. Grayscale inputs are replicated
/// across channels and alpha is dropped. Throws DataError on failure.
RgbImage decode_image(const std::filesystem::path& path);

/// Writes an RGB image; the format follows the extension. Throws DataError on failure.
void write_image(const std::filesystem::path& path, const RgbImage& image);

}  // namespace spg
