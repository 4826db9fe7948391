#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "spg/errors.hpp"
#include "spg/graphmodel.hpp"
#include "test_support.hpp"

namespace spg {
namespace {

using testing::random_plane;

std::vector<std::uint8_t> constant_plane(int side, std::uint8_t g) {
  return std::vector<std::uint8_t>(static_cast<std::size_t>(side) * side, g);
}

// Every unordered pair of distinct vertices admitted by the Chebyshev rule,
// enumerated without using the graph's neighbor iteration.
std::set<std::pair<int, int>> exhaustive_pairs(GraphKind kind, int side) {
  const VertexLayout layout(kind, side);
  std::set<std::pair<int, int>> pairs;
  for (int a = 0; a < layout.vertex_count(); ++a) {
    for (int b = a + 1; b < layout.vertex_count(); ++b) {
      const VertexId va = layout.vertex_at(a);
      const VertexId vb = layout.vertex_at(b);
      if (std::max(std::abs(va.row - vb.row), std::abs(va.col - vb.col)) <= 1) {
        pairs.emplace(a, b);
      }
    }
  }
  return pairs;
}

TEST(EdgeWeight, Examples) {
  EXPECT_EQ(edge_weight(0, 0).value(), 0.0);
  EXPECT_EQ(edge_weight(10, 20).value(), 25.0);
  for (int g = 0; g <= 255; ++g) {
    EXPECT_EQ(edge_weight(std::uint8_t(g), std::uint8_t(g)).value(), double(g));
  }
}

TEST(EdgeWeight, SymmetricAndMatchesDefinitionEverywhere) {
  for (int a = 0; a <= 255; ++a) {
    for (int b = 0; b <= 255; ++b) {
      const HalfInt w = edge_weight(std::uint8_t(a), std::uint8_t(b));
      ASSERT_EQ(w, edge_weight(std::uint8_t(b), std::uint8_t(a)));
      ASSERT_EQ(w.value(), std::abs(a - b) + (a + b) / 2.0);
    }
  }
}

TEST(SingleLayer, SmallBlockCounts) {
  const auto one = BlockGraph::single_layer(constant_plane(1, 7), 1);
  EXPECT_EQ(one.vertex_count(), 1);
  EXPECT_EQ(one.edge_count(), 0u);

  const auto two = BlockGraph::single_layer(constant_plane(2, 7), 2);
  EXPECT_EQ(two.vertex_count(), 4);
  EXPECT_EQ(two.edge_count(), 6u);

  const auto three = BlockGraph::single_layer(constant_plane(3, 7), 3);
  EXPECT_EQ(three.vertex_count(), 9);
  EXPECT_EQ(three.edge_count(), 20u);
}

TEST(SingleLayer, EdgeSetMatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(3);
  for (int b = 1; b <= 6; ++b) {
    const auto plane = random_plane(rng, b);
    const auto graph = BlockGraph::single_layer(plane, b);
    const auto expected = exhaustive_pairs(GraphKind::SingleLayer, b);
    const auto edges = graph.edges();
    ASSERT_EQ(edges.size(), expected.size()) << "b=" << b;
    EXPECT_EQ(edges.size(), std::size_t(2 * b * (b - 1) + 2 * (b - 1) * (b - 1)));
    for (const Edge& e : edges) {
      EXPECT_TRUE(expected.count({e.u, e.v})) << e.u << "-" << e.v;
      EXPECT_EQ(e.weight, edge_weight(plane[std::size_t(e.u)], plane[std::size_t(e.v)]));
    }
  }
}

TEST(SingleLayer, Degrees) {
  const int b = 5;
  const auto graph = BlockGraph::single_layer(constant_plane(b, 1), b);
  for (int v = 0; v < graph.vertex_count(); ++v) {
    const VertexId id = graph.layout().vertex_at(v);
    int degree = 0;
    graph.for_each_neighbor(v, [&](int u, HalfInt) {
      EXPECT_NE(u, v);
      ++degree;
    });
    const bool row_edge = id.row == 0 || id.row == b - 1;
    const bool col_edge = id.col == 0 || id.col == b - 1;
    const int expected = row_edge && col_edge ? 3 : (row_edge || col_edge ? 5 : 8);
    EXPECT_EQ(degree, expected) << id.row << "," << id.col;
  }
}

TEST(TwoLayer, SmallBlockCounts) {
  const std::vector<std::uint8_t> s{30};
  const std::vector<std::uint8_t> i{90};
  const auto one = BlockGraph::two_layer(s, i, 1);
  EXPECT_EQ(one.vertex_count(), 2);
  const auto edges = one.edges();
  ASSERT_EQ(edges.size(), 1u);
  EXPECT_EQ(edges[0].weight, edge_weight(30, 90));

  const auto two = BlockGraph::two_layer(constant_plane(2, 5), constant_plane(2, 9), 2);
  EXPECT_EQ(two.vertex_count(), 8);
  EXPECT_EQ(two.edge_count(), 28u);
}

TEST(TwoLayer, EdgeSetMatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(4);
  for (int b = 1; b <= 6; ++b) {
    const auto s = random_plane(rng, b);
    const auto i = random_plane(rng, b);
    const auto graph = BlockGraph::two_layer(s, i, b);
    const auto expected = exhaustive_pairs(GraphKind::TwoLayer, b);
    const auto edges = graph.edges();
    ASSERT_EQ(edges.size(), expected.size()) << "b=" << b;
    std::vector<std::uint8_t> values(s);
    values.insert(values.end(), i.begin(), i.end());
    for (const Edge& e : edges) {
      EXPECT_TRUE(expected.count({e.u, e.v}));
      EXPECT_EQ(e.weight, edge_weight(values[std::size_t(e.u)], values[std::size_t(e.v)]));
    }
  }
}

TEST(TwoLayer, ConstantPlanesGiveUniformWeights) {
  const auto graph = BlockGraph::two_layer(constant_plane(4, 77), constant_plane(4, 77), 4);
  for (const Edge& e : graph.edges()) EXPECT_EQ(e.weight.value(), 77.0);
}

TEST(TwoLayer, NeverContainsHueVertices) {
  const auto graph = BlockGraph::two_layer(constant_plane(3, 1), constant_plane(3, 2), 3);
  EXPECT_FALSE(graph.layout().contains(VertexId{Layer::H, 0, 0}));
  EXPECT_TRUE(graph.layout().contains(VertexId{Layer::S, 2, 2}));
  EXPECT_TRUE(graph.layout().contains(VertexId{Layer::I, 0, 1}));
  const auto hue = BlockGraph::single_layer(constant_plane(3, 1), 3);
  EXPECT_FALSE(hue.layout().contains(VertexId{Layer::S, 0, 0}));
  EXPECT_FALSE(hue.layout().contains(VertexId{Layer::H, 3, 0}));
}

TEST(Layout, IndexRoundTrip) {
  const VertexLayout layout(GraphKind::TwoLayer, 4);
  for (int v = 0; v < layout.vertex_count(); ++v) {
    EXPECT_EQ(layout.index_of(layout.vertex_at(v)), v);
  }
}

TEST(ExplicitGraph, MirrorsImplicitAdjacency) {
  std::mt19937_64 rng(5);
  const auto graph = BlockGraph::two_layer(random_plane(rng, 4), random_plane(rng, 4), 4);
  const ExplicitGraph explicit_graph(graph);
  EXPECT_EQ(explicit_graph.edge_count(), graph.edge_count());
  for (int v = 0; v < graph.vertex_count(); ++v) {
    std::set<std::pair<int, std::uint64_t>> a;
    std::set<std::pair<int, std::uint64_t>> b;
    graph.for_each_neighbor(v, [&](int u, HalfInt w) { a.emplace(u, w.halves()); });
    explicit_graph.for_each_neighbor(v, [&](int u, HalfInt w) { b.emplace(u, w.halves()); });
    EXPECT_EQ(a, b);
  }
}

TEST(ExplicitGraph, RejectsSelfLoops) {
  const std::vector<Edge> edges{{1, 1, HalfInt::from_halves(2)}};
  EXPECT_THROW(ExplicitGraph(VertexLayout(GraphKind::SingleLayer, 2), edges), ContractError);
}

TEST(BlockGraph, RejectsMismatchedPlane) {
  EXPECT_THROW(BlockGraph::single_layer(constant_plane(2, 0), 3), ConfigError);
  EXPECT_THROW(BlockGraph::two_layer(constant_plane(2, 0), constant_plane(3, 0), 2), ConfigError);
  EXPECT_THROW(BlockGraph::single_layer({}, 0), ConfigError);
}

}  // namespace
}  // namespace spg
