#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "spg/graphmodel.hpp"

namespace spg {

enum class Direction : std::uint8_t {
  D0,    ///< horizontal
  D45,   ///< bottom-left to top-right
  DN45,  ///< top-left to bottom-right
  D90,   ///< vertical
};

/// Feature layout order.
inline constexpr std::array<Direction, 4> kDirections{Direction::D0, Direction::D45,
                                                      Direction::DN45, Direction::D90};

std::string_view direction_name(Direction d);

struct Pixel {
  int row = 0;
  int col = 0;
  friend bool operator==(const Pixel&, const Pixel&) = default;
};

struct Endpoints {
  Pixel source;
  Pixel target;
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

/// Endpoint pixels of the directional path in a side x side block, with
/// m = (side - 1) / 2: D0 (m,0)->(m,b-1), D90 (0,m)->(b-1,m),
/// DN45 (0,0)->(b-1,b-1), D45 (b-1,0)->(0,b-1).
Endpoints block_endpoints(Direction direction, int side);

struct PathQuery {
  Direction direction = Direction::D0;
  Layer channel = Layer::H;
  VertexId source;
  VertexId target;
};

/// The directional query for one channel: both endpoints lie in the channel's layer.
PathQuery make_query(Direction direction, Layer channel, int side);

struct PathResult {
  HalfInt cost;
  double value() const { return cost.value(); }
};

/// Minimum total edge weight from query.source to query.target (Dijkstra,
/// binary heap, early exit once the target is settled). Paths may cross
/// layers; both endpoints must lie in query.channel's layer.
///
/// Throws ContractError for endpoints outside the graph or in the wrong layer
/// and DisconnectedError when the target is unreachable.
PathResult shortest_path_cost(const BlockGraph& graph, const PathQuery& query);
PathResult shortest_path_cost(const ExplicitGraph& graph, const PathQuery& query);

}  // namespace spg
