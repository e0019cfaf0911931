#pragma once

#include <vector>

#include "trihit/graph.hpp"

namespace trihit {

// Weighted triangle hitting instance produced by twin merging. class_map
// sends each merged vertex to the original vertices it stands for; hitting
// set vertices stand for themselves.
struct WeightedInstance {
  Graph graph;
  std::vector<long long> weights;
  long long budget = 0;
  std::vector<std::vector<int>> class_map;
};

// Collapses twin classes of V(g) minus m. Requires: m is a triangle hitting
// set and every N(v) minus m with v in m is independent, so each triangle has
// at least two vertices in m. Vertices outside m with no neighbor in m lie in
// no triangle and are dropped; the rest are grouped by their m-neighborhood
// and each class keeps its smallest member, carrying the class's total
// weight. The merged instance has the same yes/no answer at every budget.
WeightedInstance twin_merge(const Graph& g, const std::vector<int>& m,
                            const std::vector<long long>& weights, long long budget);

// Number of distinct sets N(v) intersected with m over v outside m.
int neighborhood_complexity(const Graph& g, const std::vector<int>& m);

}  // namespace trihit
