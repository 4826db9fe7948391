#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "spg/errors.hpp"
#include "spg/graphmodel.hpp"

namespace spg::detail {

/// Per-thread scratch buffers reused across queries.
struct DijkstraWorkspace {
  std::vector<std::uint64_t> dist;
  std::vector<std::uint8_t> settled;
  std::vector<std::pair<std::uint64_t, int>> heap;

  void reset(int vertex_count) {
    dist.assign(static_cast<std::size_t>(vertex_count), std::numeric_limits<std::uint64_t>::max());
    settled.assign(static_cast<std::size_t>(vertex_count), 0);
    heap.clear();
  }
};

inline DijkstraWorkspace& thread_workspace() {
  thread_local DijkstraWorkspace ws;
  return ws;
}

template <class Graph>
HalfInt dijkstra(const Graph& graph, int source, int target) {
  if (source == target) {
    return HalfInt{};
  }
  DijkstraWorkspace& ws = thread_workspace();
  ws.reset(graph.vertex_count());
  constexpr auto cmp = std::greater<>{};

  ws.dist[static_cast<std::size_t>(source)] = 0;
  ws.heap.emplace_back(0, source);
  while (!ws.heap.empty()) {
    std::pop_heap(ws.heap.begin(), ws.heap.end(), cmp);
    const auto [d, v] = ws.heap.back();
    ws.heap.pop_back();
    if (ws.settled[static_cast<std::size_t>(v)]) continue;
    if (v == target) {
      return HalfInt::from_halves(d);
    }
    ws.settled[static_cast<std::size_t>(v)] = 1;
    graph.for_each_neighbor(v, [&](int u, HalfInt w) {
      const auto slot = static_cast<std::size_t>(u);
      if (ws.settled[slot]) return;
      const std::uint64_t candidate = d + w.halves();
      if (candidate < ws.dist[slot]) {
        ws.dist[slot] = candidate;
        ws.heap.emplace_back(candidate, u);
        std::push_heap(ws.heap.begin(), ws.heap.end(), cmp);
      }
    });
  }
  throw DisconnectedError("target vertex is unreachable from source");
}

}  // namespace spg::detail
