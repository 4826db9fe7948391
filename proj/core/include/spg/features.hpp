#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spg/colorspace.hpp"
#include "spg/graphmodel.hpp"
#include "spg/pathengine.hpp"

namespace spg {

/// Channel order of the descriptor.
inline constexpr std::array<Layer, 3> kChannels{Layer::H, Layer::S, Layer::I};
inline constexpr std::size_t kCostsPerBlock = kChannels.size() * kDirections.size();
/// mu and sigma for every (channel, direction) pair.
inline constexpr std::size_t kValuesPerScale = 2 * kCostsPerBlock;

/// One non-overlapping side x side tile of an HsiImage.
struct Block {
  int side = 0;
  Pixel origin;
  std::vector<std::uint8_t> h;
  std::vector<std::uint8_t> s;
  std::vector<std::uint8_t> i;
};

/// Path costs of one block indexed [channel * 4 + direction] in kChannels and
/// kDirections order.
using BlockCosts = std::array<HalfInt, kCostsPerBlock>;

using FeatureVector = std::vector<double>;

/// Ordered list of grid counts r (blocks per image side).
class ScaleSpec {
 public:
  ScaleSpec() = default;
  explicit ScaleSpec(std::vector<int> grids);

  /// Parses a comma-separated list such as "32,16".
  static ScaleSpec parse(std::string_view text);

  std::span<const int> grids() const { return grids_; }
  std::size_t size() const { return grids_.size(); }
  std::size_t vector_length() const { return grids_.size() * kValuesPerScale; }
  std::string to_string() const;

  /// Rejects grid counts that do not divide the image side, and grid counts
  /// equal to the side (1x1 blocks carry no texture).
  void validate_for(int image_side) const;

  friend bool operator==(const ScaleSpec&, const ScaleSpec&) = default;

 private:
  std::vector<int> grids_;
};

/// Tiles a square image with grid x grid blocks in row-major order.
/// Throws ConfigError for non-square images or a grid that does not divide the side.
std::vector<Block> partition_blocks(const HsiImage& image, int grid);

/// H costs on the single-layer H graph; S and I costs on the coupled S/I graph.
BlockCosts block_path_costs(const Block& block);

/// Mean and population standard deviation of every (channel, direction) cost
/// over the blocks, laid out as [H | S | I], each [mu_0, sigma_0, mu_45,
/// sigma_45, mu_m45, sigma_m45, mu_90, sigma_90].
FeatureVector summarize_costs(std::span<const BlockCosts> costs);

/// Single-scale descriptor (24 values).
FeatureVector extract_scale(const HsiImage& image, int grid);

/// Concatenation of extract_scale over the scales, in order.
FeatureVector extract_multiscale(const HsiImage& image, const ScaleSpec& scales);

/// Column names matching the descriptor layout, e.g. "r32_H_mu_0".
std::vector<std::string> feature_names(const ScaleSpec& scales);

}  // namespace spg
