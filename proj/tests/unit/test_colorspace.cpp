#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "spg/colorspace.hpp"
#include "spg/errors.hpp"

namespace spg {
namespace {

TEST(RgbToHsi, AchromaticWhite) { EXPECT_EQ(rgb_to_hsi({255, 255, 255}), (Hsi{0, 0, 255})); }

TEST(RgbToHsi, BlackHasZeroSaturation) { EXPECT_EQ(rgb_to_hsi({0, 0, 0}), (Hsi{0, 0, 0})); }

TEST(RgbToHsi, PureRed) { EXPECT_EQ(rgb_to_hsi({255, 0, 0}), (Hsi{0, 255, 85})); }

TEST(RgbToHsi, PrimaryHues) {
  // Green sits at 120 degrees, blue at 240: 255/3 and 2*255/3.
  EXPECT_EQ(rgb_to_hsi({0, 255, 0}), (Hsi{85, 255, 85}));
  EXPECT_EQ(rgb_to_hsi({0, 0, 255}), (Hsi{170, 255, 85}));
}

TEST(RgbToHsi, GrayMapsToIntensityOnly) {
  for (int v = 0; v <= 255; ++v) {
    const auto g = static_cast<std::uint8_t>(v);
    EXPECT_EQ(rgb_to_hsi({g, g, g}), (Hsi{0, 0, g})) << "v=" << v;
  }
}

// Straightforward floating-point rendition of the same model.
Hsi reference_hsi(int r, int g, int b) {
  const double sum = r + g + b;
  const double i = sum / 3.0;
  const double s = sum == 0 ? 0.0 : 1.0 - 3.0 * std::min({r, g, b}) / sum;
  double h = 0.0;
  const double den = std::sqrt(double(r - g) * (r - g) + double(r - b) * (g - b));
  if (den > 0) {
    const double theta =
        std::acos(std::clamp(0.5 * ((r - g) + (r - b)) / den, -1.0, 1.0)) * 180.0 / M_PI;
    h = b <= g ? theta : 360.0 - theta;
  }
  // The epsilon pushes exact .5 ties, which float evaluation lands just
  // below, to the half-up side.
  auto q = [](double x) { return static_cast<std::uint8_t>(std::floor(x + 0.5 + 1e-9)); };
  const std::uint8_t sq = q(s * 255.0);
  return Hsi{sq == 0 ? std::uint8_t{0} : q(h / 360.0 * 255.0), sq, q(i)};
}

TEST(RgbToHsi, MatchesFloatingReferenceOnSampledCube) {
  int mismatches = 0;
  for (int r = 0; r < 256; r += 3) {
    for (int g = 0; g < 256; g += 5) {
      for (int b = 0; b < 256; b += 7) {
        const Hsi got = rgb_to_hsi({std::uint8_t(r), std::uint8_t(g), std::uint8_t(b)});
        const Hsi want = reference_hsi(r, g, b);
        EXPECT_EQ(got.i, want.i);
        EXPECT_EQ(got.s, want.s) << r << "," << g << "," << b;
        mismatches += got != want;
      }
    }
  }
  EXPECT_EQ(mismatches, 0);
}

TEST(RgbToHsi, IntensityIsRoundedMeanOverFullCube) {
  for (int r = 0; r < 256; ++r) {
    for (int g = 0; g < 256; ++g) {
      for (int b = 0; b < 256; b += 17) {
        const Hsi px = rgb_to_hsi({std::uint8_t(r), std::uint8_t(g), std::uint8_t(b)});
        ASSERT_EQ(px.i, static_cast<int>(std::lround((r + g + b) / 3.0)));
      }
    }
  }
}

TEST(ConvertImage, SinglePixel) {
  const HsiImage out = convert_image(RgbImage(1, 1, {{255, 255, 255}}));
  EXPECT_EQ(out.h.at(0, 0), 0);
  EXPECT_EQ(out.s.at(0, 0), 0);
  EXPECT_EQ(out.i.at(0, 0), 255);
}

TEST(ConvertImage, TwoPixels) {
  const HsiImage out = convert_image(RgbImage(2, 1, {{0, 0, 0}, {255, 0, 0}}));
  ASSERT_EQ(out.width(), 2);
  ASSERT_EQ(out.height(), 1);
  EXPECT_EQ(std::vector<std::uint8_t>(out.h.values().begin(), out.h.values().end()),
            (std::vector<std::uint8_t>{0, 0}));
  EXPECT_EQ(std::vector<std::uint8_t>(out.s.values().begin(), out.s.values().end()),
            (std::vector<std::uint8_t>{0, 255}));
  EXPECT_EQ(std::vector<std::uint8_t>(out.i.values().begin(), out.i.values().end()),
            (std::vector<std::uint8_t>{0, 85}));
}

TEST(ConvertImage, PixelwiseAndDeterministic) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dist(0, 255);
  RgbImage img(7, 5);
  for (Rgb& px : img.pixels()) {
    px = Rgb{std::uint8_t(dist(rng)), std::uint8_t(dist(rng)), std::uint8_t(dist(rng))};
  }
  const HsiImage a = convert_image(img);
  const HsiImage b = convert_image(img);
  EXPECT_EQ(a, b);
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      const Hsi px = rgb_to_hsi(img.at(r, c));
      EXPECT_EQ(a.h.at(r, c), px.h);
      EXPECT_EQ(a.s.at(r, c), px.s);
      EXPECT_EQ(a.i.at(r, c), px.i);
    }
  }
}

TEST(ConvertImage, RejectsEmptyDimensions) {
  EXPECT_THROW(RgbImage(0, 3), ConfigError);
  EXPECT_THROW(RgbImage(2, 2, std::vector<Rgb>(3)), ConfigError);
  EXPECT_THROW(HsiImage(Plane(2, 2), Plane(2, 3), Plane(2, 2)), ConfigError);
}

}  // namespace
}  // namespace spg
