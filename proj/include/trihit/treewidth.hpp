#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trihit/graph.hpp"
#include "trihit/reduce.hpp"

namespace trihit {

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;              // sorted vertex sets
  std::vector<std::pair<int, int>> tree_edges;     // bag index pairs
  int width = -1;                                  // max bag size - 1
};

// All three decomposition axioms plus tree shape and the width field,
// checked exactly. Never throws.
bool validate_decomposition(const Graph& g, const TreeDecomposition& td);

// Best of the min-fill and min-degree elimination orders. Always valid; no
// width guarantee.
TreeDecomposition heuristic_decomposition(const Graph& g);

// Optimal-width decomposition via subset dynamic programming over
// elimination prefixes. Returns nothing when the treewidth exceeds
// max_width. Only for n <= 16.
std::optional<TreeDecomposition> exact_decomposition_small(const Graph& g,
                                                           int max_width);

// Minimum-weight triangle hitting set within w.budget, or nothing if even
// the optimum exceeds it. The decomposition is normalized to a nice one
// internally; states are the deleted subsets of each bag and a kept triangle
// inside a bag invalidates the state. Every triangle lies in some bag, which
// makes the per-bag check complete.
std::optional<std::pair<std::vector<int>, long long>> weighted_th_dp(
    const WeightedInstance& w, const TreeDecomposition& td);

}  // namespace trihit
