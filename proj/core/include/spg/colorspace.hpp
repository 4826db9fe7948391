#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace spg {

/// Number of quantization levels above zero for every HSI channel.
inline constexpr int kLevels = 255;

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

struct Hsi {
  std::uint8_t h = 0;
  std::uint8_t s = 0;
  std::uint8_t i = 0;
  friend bool operator==(const Hsi&, const Hsi&) = default;
};

/// Row-major interleaved RGB raster. Width and height are at least 1.
class RgbImage {
 public:
  RgbImage(int width, int height);
  RgbImage(int width, int height, std::vector<Rgb> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  std::span<const Rgb> pixels() const { return pixels_; }
  std::span<Rgb> pixels() { return pixels_; }

  const Rgb& at(int row, int col) const { return pixels_[index(row, col)]; }
  Rgb& at(int row, int col) { return pixels_[index(row, col)]; }

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * width_ + col;
  }

  int width_;
  int height_;
  std::vector<Rgb> pixels_;
};

/// One quantized channel, values in [0, kLevels].
class Plane {
 public:
  Plane() = default;
  Plane(int width, int height, std::uint8_t fill = 0);

  int width() const { return width_; }
  int height() const { return height_; }
  std::span<const std::uint8_t> values() const { return values_; }
  std::span<std::uint8_t> values() { return values_; }

  std::uint8_t at(int row, int col) const { return values_[index(row, col)]; }
  std::uint8_t& at(int row, int col) { return values_[index(row, col)]; }

  friend bool operator==(const Plane&, const Plane&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * width_ + col;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> values_;
};

/// Three equally sized channel planes.
struct HsiImage {
  Plane h;
  Plane s;
  Plane i;

  HsiImage() = default;
  HsiImage(int width, int height);
  HsiImage(Plane h_plane, Plane s_plane, Plane i_plane);

  int width() const { return h.width(); }
  int height() const { return h.height(); }

  friend bool operator==(const HsiImage&, const HsiImage&) = default;
};

/// Gonzalez-Woods HSI. I = (R+G+B)/3, S = 1 - 3 min/(R+G+B) (0 for black),
/// H = geometric hue angle in [0, 360) (0 when S = 0). Every component is
/// scaled linearly onto [0, 255] and rounded half-up.
Hsi rgb_to_hsi(Rgb rgb);

HsiImage convert_image(const RgbImage& image);

}  // namespace spg
