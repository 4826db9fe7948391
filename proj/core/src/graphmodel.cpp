#include "spg/graphmodel.hpp"

#include <algorithm>
#include <utility>

#include <fmt/format.h>

#include "spg/errors.hpp"

namespace spg {

namespace {

int layer_slot(GraphKind kind, Layer layer) {
  if (kind == GraphKind::SingleLayer) {
    return layer == Layer::H ? 0 : -1;
  }
  switch (layer) {
    case Layer::S:
      return 0;
    case Layer::I:
      return 1;
    default:
      return -1;
  }
}

void check_plane(std::span<const std::uint8_t> plane, int side) {
  if (side < 1) {
    throw ConfigError(fmt::format("block side must be positive, got {}", side));
  }
  if (plane.size() != static_cast<std::size_t>(side) * side) {
    throw ConfigError(
        fmt::format("block plane holds {} values, expected {}x{}", plane.size(), side, side));
  }
}

}  // namespace

bool VertexLayout::contains(VertexId v) const {
  return layer_slot(kind_, v.layer) >= 0 && v.row >= 0 && v.row < side_ && v.col >= 0 &&
         v.col < side_;
}

int VertexLayout::index_of(VertexId v) const {
  return layer_slot(kind_, v.layer) * layer_size() + v.row * side_ + v.col;
}

VertexId VertexLayout::vertex_at(int index) const {
  const int slot = index / layer_size();
  const int pixel = index % layer_size();
  Layer layer = Layer::H;
  if (kind_ == GraphKind::TwoLayer) {
    layer = slot == 0 ? Layer::S : Layer::I;
  }
  return VertexId{layer, pixel / side_, pixel % side_};
}

BlockGraph::BlockGraph(VertexLayout layout, std::vector<std::uint8_t> values)
    : layout_(layout), values_(std::move(values)) {}

BlockGraph BlockGraph::single_layer(std::span<const std::uint8_t> plane, int side) {
  check_plane(plane, side);
  return BlockGraph(VertexLayout(GraphKind::SingleLayer, side), {plane.begin(), plane.end()});
}

BlockGraph BlockGraph::two_layer(std::span<const std::uint8_t> s_plane,
                                 std::span<const std::uint8_t> i_plane, int side) {
  check_plane(s_plane, side);
  check_plane(i_plane, side);
  std::vector<std::uint8_t> values;
  values.reserve(s_plane.size() + i_plane.size());
  values.insert(values.end(), s_plane.begin(), s_plane.end());
  values.insert(values.end(), i_plane.begin(), i_plane.end());
  return BlockGraph(VertexLayout(GraphKind::TwoLayer, side), std::move(values));
}

std::vector<Edge> BlockGraph::edges() const {
  std::vector<Edge> out;
  for (int v = 0; v < vertex_count(); ++v) {
    for_each_neighbor(v, [&](int u, HalfInt w) {
      if (v < u) out.push_back(Edge{v, u, w});
    });
  }
  std::sort(out.begin(), out.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  return out;
}

std::size_t BlockGraph::edge_count() const {
  std::size_t degree_sum = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    for_each_neighbor(v, [&](int, HalfInt) { ++degree_sum; });
  }
  return degree_sum / 2;
}

ExplicitGraph::ExplicitGraph(const BlockGraph& graph)
    : ExplicitGraph(graph.layout(), graph.edges()) {}

ExplicitGraph::ExplicitGraph(VertexLayout layout, std::span<const Edge> edges)
    : layout_(layout), offsets_(static_cast<std::size_t>(layout.vertex_count()) + 1, 0) {
  const int n = layout_.vertex_count();
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v) {
      throw ContractError(fmt::format("edge ({}, {}) invalid for a {}-vertex graph", e.u, e.v, n));
    }
    ++offsets_[static_cast<std::size_t>(e.u) + 1];
    ++offsets_[static_cast<std::size_t>(e.v) + 1];
  }
  for (std::size_t k = 1; k < offsets_.size(); ++k) {
    offsets_[k] += offsets_[k - 1];
  }
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) {
    adjacency_[cursor[static_cast<std::size_t>(e.u)]++] = {e.v, e.weight};
    adjacency_[cursor[static_cast<std::size_t>(e.v)]++] = {e.u, e.weight};
  }
}

}  // namespace spg
