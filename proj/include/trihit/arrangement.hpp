#pragma once

#include <utility>
#include <vector>

#include "trihit/geometry.hpp"
#include "trihit/graph.hpp"

namespace trihit {

// Planar subdivision of a generic square scene. Regions are the connected
// components of the covered area after cutting along every square side;
// adjacency means a shared positive-length boundary arc (corner-only contact
// never counts).
struct ArrangementGraph {
  Graph adjacency;                                  // vertices are regions
  std::vector<std::vector<int>> membership;         // square -> sorted region ids
  std::vector<std::pair<Point, Point>> sample_cell; // region -> one grid cell (lo, hi)
};

// Exact construction on the coordinate grid of all square sides. Requires a
// generic (perturbed) scene.
ArrangementGraph build_square_arrangement(const Scene& scene);

// Radius of the region-adjacency subgraph induced on the regions inside
// square v. Throws if that subgraph is disconnected.
int local_radius_vertex(const ArrangementGraph& arr, int v);

struct LocalRadiusRow {
  int v = 0;
  int region_count = 0;  // regions inside square v
  int x_size = 0;        // |x| from the cover/independent neighbor partition
  int radius = 0;
};

struct LocalRadiusStats {
  int min_radius = 0;
  int max_radius = 0;
  std::vector<LocalRadiusRow> rows;
};

LocalRadiusStats local_radius_stats(const Scene& scene);

}  // namespace trihit
