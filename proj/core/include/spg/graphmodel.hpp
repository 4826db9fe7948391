#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace spg {

/// Edges join vertices whose Chebyshev distance is at most this value.
inline constexpr int kChebyshevThreshold = 1;

/// Exact non-negative real on the half-integer lattice, stored as twice its
/// value. Edge weights and path costs are always representable.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_halves(std::uint64_t halves) {
    HalfInt h;
    h.halves_ = halves;
    return h;
  }

  constexpr std::uint64_t halves() const { return halves_; }
  constexpr double value() const { return static_cast<double>(halves_) * 0.5; }

  constexpr HalfInt& operator+=(HalfInt other) {
    halves_ += other.halves_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  std::uint64_t halves_ = 0;
};

/// w = |g1 - g2| + (g1 + g2) / 2.
constexpr HalfInt edge_weight(std::uint8_t g1, std::uint8_t g2) {
  // 2w = 2|g1 - g2| + g1 + g2 = 3 max - min
  const unsigned hi = g1 > g2 ? g1 : g2;
  const unsigned lo = g1 > g2 ? g2 : g1;
  return HalfInt::from_halves(3 * hi - lo);
}

enum class Layer : std::uint8_t { H, S, I };

enum class GraphKind : std::uint8_t {
  SingleLayer,  ///< one channel (H)
  TwoLayer,     ///< coupled S and I layers
};

struct VertexId {
  Layer layer = Layer::H;
  int row = 0;
  int col = 0;
  friend bool operator==(const VertexId&, const VertexId&) = default;
};

struct Edge {
  int u = 0;
  int v = 0;
  HalfInt weight;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Maps block-local vertex ids onto dense indices. Layers are stored
/// layer-major: the H graph has one layer; the coupled graph stores S then I.
class VertexLayout {
 public:
  constexpr VertexLayout(GraphKind kind, int side) : kind_(kind), side_(side) {}

  constexpr GraphKind kind() const { return kind_; }
  constexpr int side() const { return side_; }
  constexpr int layer_count() const { return kind_ == GraphKind::SingleLayer ? 1 : 2; }
  constexpr int layer_size() const { return side_ * side_; }
  constexpr int vertex_count() const { return layer_count() * layer_size(); }

  /// True if the layer belongs to this kind of graph and the pixel lies inside the block.
  bool contains(VertexId v) const;
  /// Precondition: contains(v).
  int index_of(VertexId v) const;
  VertexId vertex_at(int index) const;

 private:
  GraphKind kind_;
  int side_;
};

/// Weighted undirected pixel graph of one b x b block. Adjacency is implicit:
/// neighbors and weights are computed from the stored intensities on demand.
class BlockGraph {
 public:
  /// Single-layer graph over one channel plane (row-major, side * side values).
  static BlockGraph single_layer(std::span<const std::uint8_t> plane, int side);
  /// Two-layer graph: S and I layers plus cross edges between S and I pixels at
  /// Chebyshev distance <= 1, including the spatially aligned pair.
  static BlockGraph two_layer(std::span<const std::uint8_t> s_plane,
                              std::span<const std::uint8_t> i_plane, int side);

  const VertexLayout& layout() const { return layout_; }
  GraphKind kind() const { return layout_.kind(); }
  int side() const { return layout_.side(); }
  int vertex_count() const { return layout_.vertex_count(); }
  std::uint8_t intensity(int index) const { return values_[static_cast<std::size_t>(index)]; }

  template <class Fn>
  void for_each_neighbor(int index, Fn&& fn) const {
    const int side = layout_.side();
    const int layer_size = layout_.layer_size();
    const int layer = index / layer_size;
    const int pixel = index % layer_size;
    const int row = pixel / side;
    const int col = pixel % side;
    const std::uint8_t g = values_[static_cast<std::size_t>(index)];
    for (int other_layer = 0; other_layer < layout_.layer_count(); ++other_layer) {
      const int base = other_layer * layer_size;
      for (int r = row - kChebyshevThreshold; r <= row + kChebyshevThreshold; ++r) {
        if (r < 0 || r >= side) continue;
        for (int c = col - kChebyshevThreshold; c <= col + kChebyshevThreshold; ++c) {
          if (c < 0 || c >= side) continue;
          if (other_layer == layer && r == row && c == col) continue;
          const int u = base + r * side + c;
          fn(u, edge_weight(g, values_[static_cast<std::size_t>(u)]));
        }
      }
    }
  }

  /// Every edge once, with u < v, in increasing (u, v) order.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

 private:
  BlockGraph(VertexLayout layout, std::vector<std::uint8_t> values);

  VertexLayout layout_;
  std::vector<std::uint8_t> values_;
};

/// Materialized adjacency (CSR) over the same vertex layout. Used to compare
/// implicit and explicit adjacency, and to hand-assemble graphs in tests.
class ExplicitGraph {
 public:
  explicit ExplicitGraph(const BlockGraph& graph);
  ExplicitGraph(VertexLayout layout, std::span<const Edge> edges);

  const VertexLayout& layout() const { return layout_; }
  int vertex_count() const { return layout_.vertex_count(); }
  std::size_t edge_count() const { return adjacency_.size() / 2; }

  template <class Fn>
  void for_each_neighbor(int index, Fn&& fn) const {
    const auto begin = offsets_[static_cast<std::size_t>(index)];
    const auto end = offsets_[static_cast<std::size_t>(index) + 1];
    for (auto k = begin; k < end; ++k) {
      fn(adjacency_[k].first, adjacency_[k].second);
    }
  }

 private:
  VertexLayout layout_;
  std::vector<std::size_t> offsets_;
  std::vector<std::pair<int, HalfInt>> adjacency_;
};

}  // namespace spg
