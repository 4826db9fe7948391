#include "spg/features.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "spg/errors.hpp"

namespace spg {

namespace {

char channel_name(Layer layer) {
  switch (layer) {
    case Layer::H:
      return 'H';
    case Layer::S:
      return 'S';
    case Layer::I:
      return 'I';
  }
  return '?';
}

__extension__ using WideUint = unsigned __int128;

void copy_tile(const Plane& plane, Pixel origin, int side, std::vector<std::uint8_t>& out) {
  out.resize(static_cast<std::size_t>(side) * side);
  auto dst = out.begin();
  for (int r = 0; r < side; ++r) {
    const auto row = plane.values().subspan(
        static_cast<std::size_t>(origin.row + r) * plane.width() + origin.col, side);
    dst = std::copy(row.begin(), row.end(), dst);
  }
}

}  // namespace

ScaleSpec::ScaleSpec(std::vector<int> grids) : grids_(std::move(grids)) {
  if (grids_.empty()) {
    throw ConfigError("scale list is empty");
  }
  for (int r : grids_) {
    if (r < 1) {
      throw ConfigError(fmt::format("grid count must be positive, got {}", r));
    }
  }
}

ScaleSpec ScaleSpec::parse(std::string_view text) {
  std::vector<int> grids;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view token = text.substr(start, comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ConfigError(fmt::format("invalid scale list '{}'", text));
    }
    grids.push_back(value);
    start = comma + 1;
  }
  return ScaleSpec(std::move(grids));
}

std::string ScaleSpec::to_string() const { return fmt::format("{}", fmt::join(grids_, ",")); }

void ScaleSpec::validate_for(int image_side) const {
  for (int r : grids_) {
    if (image_side % r != 0) {
      throw ConfigError(
          fmt::format("grid count {} does not divide the image side {}", r, image_side));
    }
    if (r == image_side) {
      throw ConfigError(fmt::format("grid count {} yields 1x1 blocks on a {}x{} image", r,
                                    image_side, image_side));
    }
  }
}

std::vector<Block> partition_blocks(const HsiImage& image, int grid) {
  if (image.width() != image.height()) {
    throw ConfigError(fmt::format("image must be square, got width {} and height {}",
                                  image.width(), image.height()));
  }
  const int n = image.width();
  if (grid < 1 || n % grid != 0) {
    throw ConfigError(fmt::format("grid count {} does not divide the image side {}", grid, n));
  }
  const int side = n / grid;
  std::vector<Block> blocks(static_cast<std::size_t>(grid) * grid);
  for (int gr = 0; gr < grid; ++gr) {
    for (int gc = 0; gc < grid; ++gc) {
      Block& b = blocks[static_cast<std::size_t>(gr) * grid + gc];
      b.side = side;
      b.origin = Pixel{gr * side, gc * side};
      copy_tile(image.h, b.origin, side, b.h);
      copy_tile(image.s, b.origin, side, b.s);
      copy_tile(image.i, b.origin, side, b.i);
    }
  }
  return blocks;
}

BlockCosts block_path_costs(const Block& block) {
  BlockCosts costs{};
  const BlockGraph hue = BlockGraph::single_layer(block.h, block.side);
  const BlockGraph coupled = BlockGraph::two_layer(block.s, block.i, block.side);
  for (std::size_t c = 0; c < kChannels.size(); ++c) {
    const BlockGraph& graph = kChannels[c] == Layer::H ? hue : coupled;
    for (std::size_t d = 0; d < kDirections.size(); ++d) {
      const PathQuery query = make_query(kDirections[d], kChannels[c], block.side);
      costs[c * kDirections.size() + d] = shortest_path_cost(graph, query).cost;
    }
  }
  return costs;
}

FeatureVector summarize_costs(std::span<const BlockCosts> costs) {
  if (costs.empty()) {
    throw ContractError("cannot summarize an empty block set");
  }
  const auto n = static_cast<std::uint64_t>(costs.size());
  FeatureVector out(kValuesPerScale);
  for (std::size_t k = 0; k < kCostsPerBlock; ++k) {
    // Exact integer moments: the statistics do not depend on block order.
    WideUint sum = 0;
    WideUint sum_sq = 0;
    for (const BlockCosts& bc : costs) {
      const WideUint h = bc[k].halves();
      sum += h;
      sum_sq += h * h;
    }
    // sigma = sqrt(n * sum_sq - sum^2) / (2n) in value units.
    const WideUint spread = WideUint(n) * sum_sq - sum * sum;
    out[2 * k] = static_cast<double>(static_cast<long double>(sum) / (2.0L * n));
    out[2 * k + 1] =
        static_cast<double>(std::sqrt(static_cast<long double>(spread)) / (2.0L * n));
  }
  return out;
}

FeatureVector extract_scale(const HsiImage& image, int grid) {
  const std::vector<Block> blocks = partition_blocks(image, grid);
  std::vector<BlockCosts> costs;
  costs.reserve(blocks.size());
  for (const Block& b : blocks) {
    costs.push_back(block_path_costs(b));
  }
  return summarize_costs(costs);
}

FeatureVector extract_multiscale(const HsiImage& image, const ScaleSpec& scales) {
  FeatureVector out;
  out.reserve(scales.vector_length());
  for (int r : scales.grids()) {
    const FeatureVector part = extract_scale(image, r);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<std::string> feature_names(const ScaleSpec& scales) {
  std::vector<std::string> names;
  names.reserve(scales.vector_length());
  for (int r : scales.grids()) {
    for (Layer c : kChannels) {
      for (Direction d : kDirections) {
        names.push_back(fmt::format("r{}_{}_mu_{}", r, channel_name(c), direction_name(d)));
        names.push_back(fmt::format("r{}_{}_sigma_{}", r, channel_name(c), direction_name(d)));
      }
    }
  }
  return names;
}

}  // namespace spg
