#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "spg/graphmodel.hpp"
#include "spg/pathengine.hpp"

namespace {

using namespace spg;

std::vector<std::uint8_t> noise(int side, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, 255);
  std::vector<std::uint8_t> out(static_cast<std::size_t>(side) * side);
  for (auto& v : out) v = static_cast<std::uint8_t>(dist(rng));
  return out;
}

void BM_SingleLayer(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const auto plane = noise(side, 1);
  const BlockGraph graph = BlockGraph::single_layer(plane, side);
  for (auto _ : state) {
    for (Direction d : kDirections) {
      benchmark::DoNotOptimize(shortest_path_cost(graph, make_query(d, Layer::H, side)));
    }
  }
  state.SetItemsProcessed(state.iterations() * 4);
}

void BM_TwoLayer(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const auto s = noise(side, 2);
  const auto i = noise(side, 3);
  const BlockGraph graph = BlockGraph::two_layer(s, i, side);
  for (auto _ : state) {
    for (Direction d : kDirections) {
      benchmark::DoNotOptimize(shortest_path_cost(graph, make_query(d, Layer::S, side)));
      benchmark::DoNotOptimize(shortest_path_cost(graph, make_query(d, Layer::I, side)));
    }
  }
  state.SetItemsProcessed(state.iterations() * 8);
}

// Same queries over a precomputed adjacency list.
void BM_TwoLayerExplicit(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const auto s = noise(side, 2);
  const auto i = noise(side, 3);
  const ExplicitGraph graph(BlockGraph::two_layer(s, i, side));
  for (auto _ : state) {
    for (Direction d : kDirections) {
      benchmark::DoNotOptimize(shortest_path_cost(graph, make_query(d, Layer::S, side)));
      benchmark::DoNotOptimize(shortest_path_cost(graph, make_query(d, Layer::I, side)));
    }
  }
  state.SetItemsProcessed(state.iterations() * 8);
}

void BM_BuildExplicit(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const auto s = noise(side, 2);
  const auto i = noise(side, 3);
  const BlockGraph graph = BlockGraph::two_layer(s, i, side);
  for (auto _ : state) benchmark::DoNotOptimize(ExplicitGraph(graph));
}

}  // namespace

BENCHMARK(BM_SingleLayer)->Arg(4)->Arg(5)->Arg(8)->Arg(40);
BENCHMARK(BM_TwoLayer)->Arg(4)->Arg(5)->Arg(8)->Arg(40);
BENCHMARK(BM_TwoLayerExplicit)->Arg(4)->Arg(5)->Arg(8)->Arg(40);
BENCHMARK(BM_BuildExplicit)->Arg(5)->Arg(40);
