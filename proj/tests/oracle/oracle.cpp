#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace spg::oracle {

namespace {

struct Adjacency {
  std::vector<std::vector<std::pair<int, std::uint64_t>>> out;
  /// Admissible lower bound on the remaining cost to the target, in halves.
  std::vector<std::uint64_t> bound;
};

// Any v -> t path costs sum|dg| + (g_v + g_t)/2 + sum of interior intensities,
// and needs at least max(1, chebyshev(v, t)) - 1 interior vertices.
Adjacency build_adjacency(const BlockGraph& graph, int target) {
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  Adjacency adj;
  adj.out.resize(n);
  for (const Edge& e : graph.edges()) {
    adj.out[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.weight.halves());
    adj.out[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.weight.halves());
  }
  std::uint64_t g_min = 255;
  for (int v = 0; v < graph.vertex_count(); ++v) g_min = std::min<std::uint64_t>(g_min, graph.intensity(v));
  const VertexId t = graph.layout().vertex_at(target);
  const std::int64_t g_t = graph.intensity(target);
  adj.bound.resize(n, 0);
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (v == target) continue;
    const VertexId id = graph.layout().vertex_at(v);
    const std::int64_t g_v = graph.intensity(v);
    const int hops = std::max({1, std::abs(id.row - t.row), std::abs(id.col - t.col)});
    adj.bound[static_cast<std::size_t>(v)] =
        static_cast<std::uint64_t>(2 * std::abs(g_v - g_t) + g_v + g_t) +
        2 * static_cast<std::uint64_t>(hops - 1) * g_min;
  }
  for (auto& list : adj.out) {
    std::stable_sort(list.begin(), list.end(), [&](const auto& a, const auto& b) {
      return a.second + adj.bound[static_cast<std::size_t>(a.first)] <
             b.second + adj.bound[static_cast<std::size_t>(b.first)];
    });
  }
  return adj;
}

std::pair<int, int> endpoints(const BlockGraph& graph, const PathQuery& query, const OracleBudget& budget) {
  if (graph.vertex_count() > budget.max_vertices) {
    throw BudgetExceeded("graph has " + std::to_string(graph.vertex_count()) +
                         " vertices, oracle budget is " + std::to_string(budget.max_vertices));
  }
  if (query.source.layer != query.channel || query.target.layer != query.channel ||
      !graph.layout().contains(query.source) || !graph.layout().contains(query.target)) {
    throw ContractError("oracle query endpoints are not in the query channel");
  }
  return {graph.layout().index_of(query.source), graph.layout().index_of(query.target)};
}

class Search {
 public:
  Search(const Adjacency& adj, int target, std::uint64_t max_expansions, bool prune)
      : adj_(adj), target_(target), max_expansions_(max_expansions), prune_(prune),
        visited_(adj.out.size(), false) {}

  void run(int source) { visit(source, 0); }

  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::vector<HalfInt> all;

 private:
  void visit(int v, std::uint64_t cost) {
    if (++expansions_ > max_expansions_) {
      throw BudgetExceeded("oracle expansion budget exhausted");
    }
    if (v == target_) {
      best = std::min(best, cost);
      if (!prune_) all.push_back(HalfInt::from_halves(cost));
      return;
    }
    visited_[static_cast<std::size_t>(v)] = true;
    for (const auto& [u, w] : adj_.out[static_cast<std::size_t>(v)]) {
      if (visited_[static_cast<std::size_t>(u)]) continue;
      if (prune_ && cost + w + adj_.bound[static_cast<std::size_t>(u)] >= best) continue;
      visit(u, cost + w);
    }
    visited_[static_cast<std::size_t>(v)] = false;
  }

  const Adjacency& adj_;
  int target_;
  std::uint64_t max_expansions_;
  bool prune_;
  std::vector<bool> visited_;
  std::uint64_t expansions_ = 0;
};

Pixel endpoint(Direction d, int side, bool source) {
  const int last = side - 1;
  const int mid = last / 2;
  switch (d) {
    case Direction::D0:
      return source ? Pixel{mid, 0} : Pixel{mid, last};
    case Direction::D90:
      return source ? Pixel{0, mid} : Pixel{last, mid};
    case Direction::DN45:
      return source ? Pixel{0, 0} : Pixel{last, last};
    case Direction::D45:
      return source ? Pixel{last, 0} : Pixel{0, last};
  }
  return {};
}

std::vector<std::uint8_t> tile(const Plane& plane, int top, int left, int side) {
  std::vector<std::uint8_t> out;
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) out.push_back(plane.at(top + r, left + c));
  return out;
}

}  // namespace

PathResult brute_force_cost(const BlockGraph& graph, const PathQuery& query,
                            const OracleBudget& budget) {
  const auto [source, target] = endpoints(graph, query, budget);
  const Adjacency adj = build_adjacency(graph, target);
  Search search(adj, target, budget.max_expansions, true);
  search.run(source);
  if (search.best == std::numeric_limits<std::uint64_t>::max()) {
    throw DisconnectedError("oracle found no path");
  }
  return PathResult{HalfInt::from_halves(search.best)};
}

std::vector<HalfInt> enumerate_path_costs(const BlockGraph& graph, const PathQuery& query,
                                          const OracleBudget& budget) {
  const auto [source, target] = endpoints(graph, query, budget);
  const Adjacency adj = build_adjacency(graph, target);
  Search search(adj, target, budget.max_expansions, false);
  search.run(source);
  return search.all;
}

FeatureVector naive_extract(const HsiImage& image, int grid, const OracleBudget& budget) {
  const int side = image.width() / grid;
  const std::array<Layer, 3> channels{Layer::H, Layer::S, Layer::I};
  const std::array<Direction, 4> directions{Direction::D0, Direction::D45, Direction::DN45,
                                            Direction::D90};
  // costs[channel][direction][block]
  std::vector<std::vector<std::vector<double>>> costs(3, std::vector<std::vector<double>>(4));
  for (int gr = 0; gr < grid; ++gr) {
    for (int gc = 0; gc < grid; ++gc) {
      const auto h = tile(image.h, gr * side, gc * side, side);
      const auto s = tile(image.s, gr * side, gc * side, side);
      const auto i = tile(image.i, gr * side, gc * side, side);
      const BlockGraph hue = BlockGraph::single_layer(h, side);
      const BlockGraph coupled = BlockGraph::two_layer(s, i, side);
      for (std::size_t c = 0; c < 3; ++c) {
        for (std::size_t d = 0; d < 4; ++d) {
          const Pixel a = endpoint(directions[d], side, true);
          const Pixel b = endpoint(directions[d], side, false);
          const PathQuery q{directions[d], channels[c], VertexId{channels[c], a.row, a.col},
                            VertexId{channels[c], b.row, b.col}};
          const BlockGraph& g = channels[c] == Layer::H ? hue : coupled;
          costs[c][d].push_back(brute_force_cost(g, q, budget).value());
        }
      }
    }
  }
  FeatureVector out;
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t d = 0; d < 4; ++d) {
      const auto& xs = costs[c][d];
      long double sum = 0;
      for (double x : xs) sum += x;
      const long double mean = sum / xs.size();
      long double sq = 0;
      for (double x : xs) sq += (x - mean) * (x - mean);
      out.push_back(static_cast<double>(mean));
      out.push_back(static_cast<double>(std::sqrt(sq / xs.size())));
    }
  }
  return out;
}

}  // namespace spg::oracle
