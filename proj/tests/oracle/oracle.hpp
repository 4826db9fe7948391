#pragma once

#include <cstdint>
#include <vector>

#include "spg/colorspace.hpp"
#include "spg/errors.hpp"
#include "spg/features.hpp"
#include "spg/graphmodel.hpp"
#include "spg/pathengine.hpp"

// Brute-force references for the path engine and feature pipeline. Shares no
// shortest-path code with the library: adjacency comes from the explicit edge
// list, endpoints and statistics are recomputed here.
namespace spg::oracle {

struct OracleBudget {
  int max_vertices = 18;
  std::uint64_t max_expansions = 500'000'000;  ///< DFS node visits per query
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Minimum cost over all simple source-target paths (depth-first enumeration;
/// a branch is cut once its cost plus an admissible lower bound on the
/// remaining cost reaches the best complete path).
PathResult brute_force_cost(const BlockGraph& graph, const PathQuery& query,
                            const OracleBudget& budget = {});

/// Costs of every simple source-target path, without pruning.
std::vector<HalfInt> enumerate_path_costs(const BlockGraph& graph, const PathQuery& query,
                                          const OracleBudget& budget = {});

/// extract_scale recomputed with brute_force_cost.
FeatureVector naive_extract(const HsiImage& image, int grid, const OracleBudget& budget = {});

}  // namespace spg::oracle
