#include "spg/colorspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include <fmt/format.h>

#include "spg/errors.hpp"

namespace spg {

namespace {

void check_dimensions(int width, int height) {
  if (width < 1 || height < 1) {
    throw ConfigError(fmt::format("image dimensions must be positive, got {}x{}", width, height));
  }
}

// Hue angles such as 60 degrees scale onto exact .5 ties; acos lands a few ulps
// either side of them, so values within kTieSlack of a tie count as ties.
constexpr double kTieSlack = 1e-9;

std::uint8_t round_half_up(double x) {
  return static_cast<std::uint8_t>(
      std::clamp(std::floor(x + 0.5 + kTieSlack), 0.0, double(kLevels)));
}

}  // namespace

RgbImage::RgbImage(int width, int height) : width_(width), height_(height) {
  check_dimensions(width, height);
  pixels_.resize(static_cast<std::size_t>(width) * height);
}

RgbImage::RgbImage(int width, int height, std::vector<Rgb> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dimensions(width, height);
  if (pixels_.size() != static_cast<std::size_t>(width) * height) {
    throw ConfigError(fmt::format("pixel buffer holds {} pixels, expected {}x{}", pixels_.size(),
                                  width, height));
  }
}

Plane::Plane(int width, int height, std::uint8_t fill)
    : width_(width), height_(height), values_(static_cast<std::size_t>(width) * height, fill) {
  check_dimensions(width, height);
}

HsiImage::HsiImage(int width, int height)
    : h(width, height), s(width, height), i(width, height) {}

HsiImage::HsiImage(Plane h_plane, Plane s_plane, Plane i_plane)
    : h(std::move(h_plane)), s(std::move(s_plane)), i(std::move(i_plane)) {
  if (h.width() != s.width() || h.width() != i.width() || h.height() != s.height() ||
      h.height() != i.height()) {
    throw ConfigError("HSI planes must share dimensions");
  }
}

Hsi rgb_to_hsi(Rgb rgb) {
  const int r = rgb.r;
  const int g = rgb.g;
  const int b = rgb.b;
  const int sum = r + g + b;
  const int lo = std::min({r, g, b});

  Hsi out;
  // round(sum / 3) without floating point; sum / 3 is never a half-integer.
  out.i = static_cast<std::uint8_t>((2 * sum + 3) / 6);
  if (sum == 0) {
    return out;
  }
  // 255 * (1 - 3 lo / sum), rounded half-up, in exact integer arithmetic.
  const int s_num = kLevels * (sum - 3 * lo);
  out.s = static_cast<std::uint8_t>((2 * s_num + sum) / (2 * sum));
  if (out.s == 0) {
    return out;
  }

  const double rg = r - g;
  const double rb = r - b;
  const double gb = g - b;
  const double den = std::sqrt(rg * rg + rb * gb);
  if (den == 0.0) {
    return out;
  }
  const double theta = std::acos(std::clamp(0.5 * (rg + rb) / den, -1.0, 1.0));
  double hue = b <= g ? theta : 2.0 * std::numbers::pi - theta;
  if (hue >= 2.0 * std::numbers::pi) {
    hue = 0.0;
  }
  out.h = round_half_up(hue / (2.0 * std::numbers::pi) * kLevels);
  return out;
}

HsiImage convert_image(const RgbImage& image) {
  HsiImage out(image.width(), image.height());
  auto h = out.h.values();
  auto s = out.s.values();
  auto i = out.i.values();
  const auto src = image.pixels();
  for (std::size_t k = 0; k < src.size(); ++k) {
    const Hsi px = rgb_to_hsi(src[k]);
    h[k] = px.h;
    s[k] = px.s;
    i[k] = px.i;
  }
  return out;
}

}  // namespace spg
