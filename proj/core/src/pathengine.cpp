#include "spg/pathengine.hpp"

#include <fmt/format.h>

#include "dijkstra.hpp"
#include "spg/errors.hpp"

namespace spg {

namespace {

char layer_name(Layer layer) {
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

std::pair<int, int> resolve(const VertexLayout& layout, const PathQuery& query) {
  if (query.source.layer != query.channel || query.target.layer != query.channel) {
    throw ContractError(fmt::format("path endpoints must both lie in channel {} (got {} -> {})",
                                    layer_name(query.channel), layer_name(query.source.layer),
                                    layer_name(query.target.layer)));
  }
  for (const VertexId& v : {query.source, query.target}) {
    if (!layout.contains(v)) {
      throw ContractError(fmt::format("vertex {}({}, {}) is not part of this {}x{} graph",
                                      layer_name(v.layer), v.row, v.col, layout.side(),
                                      layout.side()));
    }
  }
  return {layout.index_of(query.source), layout.index_of(query.target)};
}

template <class Graph>
PathResult run(const Graph& graph, const PathQuery& query) {
  const auto [source, target] = resolve(graph.layout(), query);
  return PathResult{detail::dijkstra(graph, source, target)};
}

}  // namespace

std::string_view direction_name(Direction d) {
  switch (d) {
    case Direction::D0:
      return "0";
    case Direction::D45:
      return "45";
    case Direction::DN45:
      return "m45";
    case Direction::D90:
      return "90";
  }
  return "?";
}

Endpoints block_endpoints(Direction direction, int side) {
  if (side < 1) {
    throw ConfigError(fmt::format("block side must be positive, got {}", side));
  }
  const int last = side - 1;
  const int mid = last / 2;
  switch (direction) {
    case Direction::D0:
      return {{mid, 0}, {mid, last}};
    case Direction::D90:
      return {{0, mid}, {last, mid}};
    case Direction::DN45:
      return {{0, 0}, {last, last}};
    case Direction::D45:
      return {{last, 0}, {0, last}};
  }
  return {};
}

PathQuery make_query(Direction direction, Layer channel, int side) {
  const Endpoints ends = block_endpoints(direction, side);
  return PathQuery{direction, channel, VertexId{channel, ends.source.row, ends.source.col},
                   VertexId{channel, ends.target.row, ends.target.col}};
}

PathResult shortest_path_cost(const BlockGraph& graph, const PathQuery& query) {
  return run(graph, query);
}

PathResult shortest_path_cost(const ExplicitGraph& graph, const PathQuery& query) {
  return run(graph, query);
}

}  // namespace spg
