#include "trihit/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "trihit/errors.hpp"

namespace trihit {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

std::vector<Rational> sorted_coords(const std::vector<Rational>& raw) {
  std::vector<Rational> out = raw;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ArrangementGraph build_square_arrangement(const Scene& scene) {
  if (scene.kind != SceneKind::squares)
    throw std::invalid_argument("arrangement needs a square scene");
  if (!squares_generic(scene))
    throw std::invalid_argument("arrangement needs a generic scene: perturb first");
  const int n = scene.size();

  std::vector<Rational> raw_x, raw_y;
  // Genericity: each grid line belongs to exactly one square, so a line maps
  // to the interval its side spans.
  std::map<Rational, std::pair<Rational, Rational>> vline_span, hline_span;
  for (const Square& s : scene.squares) {
    raw_x.push_back(s.x);
    raw_x.push_back(s.x + s.side);
    raw_y.push_back(s.y);
    raw_y.push_back(s.y + s.side);
    vline_span.emplace(s.x, std::make_pair(s.y, s.y + s.side));
    vline_span.emplace(s.x + s.side, std::make_pair(s.y, s.y + s.side));
    hline_span.emplace(s.y, std::make_pair(s.x, s.x + s.side));
    hline_span.emplace(s.y + s.side, std::make_pair(s.x, s.x + s.side));
  }
  const std::vector<Rational> xs = sorted_coords(raw_x);
  const std::vector<Rational> ys = sorted_coords(raw_y);
  const int cols = std::max(0, static_cast<int>(xs.size()) - 1);
  const int rows = std::max(0, static_cast<int>(ys.size()) - 1);

  const auto cell_id = [&](int a, int b) { return b * cols + a; };
  std::vector<char> covered(static_cast<std::size_t>(cols * rows), 0);
  std::vector<Point> centers(static_cast<std::size_t>(cols * rows));
  for (int b = 0; b < rows; ++b)
    for (int a = 0; a < cols; ++a) {
      const Point center{(xs[static_cast<std::size_t>(a)] + xs[static_cast<std::size_t>(a) + 1]) / 2,
                         (ys[static_cast<std::size_t>(b)] + ys[static_cast<std::size_t>(b) + 1]) / 2};
      centers[static_cast<std::size_t>(cell_id(a, b))] = center;
      for (const Square& s : scene.squares)
        if (point_in_square(center, s)) {
          covered[static_cast<std::size_t>(cell_id(a, b))] = 1;
          break;
        }
    }

  // Shared edge between side-adjacent cells: cut iff it lies on a square
  // side. Side endpoints are grid values, so coverage is all or nothing.
  const auto vertical_cut = [&](int a, int b) {  // edge between (a,b) and (a+1,b)
    const auto it = vline_span.find(xs[static_cast<std::size_t>(a) + 1]);
    if (it == vline_span.end()) return false;
    return it->second.first <= ys[static_cast<std::size_t>(b)] &&
           ys[static_cast<std::size_t>(b) + 1] <= it->second.second;
  };
  const auto horizontal_cut = [&](int a, int b) {  // edge between (a,b) and (a,b+1)
    const auto it = hline_span.find(ys[static_cast<std::size_t>(b) + 1]);
    if (it == hline_span.end()) return false;
    return it->second.first <= xs[static_cast<std::size_t>(a)] &&
           xs[static_cast<std::size_t>(a) + 1] <= it->second.second;
  };

  UnionFind uf(cols * rows);
  for (int b = 0; b < rows; ++b)
    for (int a = 0; a < cols; ++a) {
      if (!covered[static_cast<std::size_t>(cell_id(a, b))]) continue;
      if (a + 1 < cols && covered[static_cast<std::size_t>(cell_id(a + 1, b))] &&
          !vertical_cut(a, b))
        uf.unite(cell_id(a, b), cell_id(a + 1, b));
      if (b + 1 < rows && covered[static_cast<std::size_t>(cell_id(a, b + 1))] &&
          !horizontal_cut(a, b))
        uf.unite(cell_id(a, b), cell_id(a, b + 1));
    }

  // Region ids in row-major order of each region's first cell.
  std::map<int, int> region_of_root;
  std::vector<std::pair<Point, Point>> sample;
  for (int b = 0; b < rows; ++b)
    for (int a = 0; a < cols; ++a) {
      if (!covered[static_cast<std::size_t>(cell_id(a, b))]) continue;
      const int root = uf.find(cell_id(a, b));
      if (region_of_root.emplace(root, static_cast<int>(sample.size())).second)
        sample.emplace_back(Point{xs[static_cast<std::size_t>(a)], ys[static_cast<std::size_t>(b)]},
                            Point{xs[static_cast<std::size_t>(a) + 1], ys[static_cast<std::size_t>(b) + 1]});
    }

  ArrangementGraph out;
  out.adjacency = Graph(static_cast<int>(sample.size()));
  out.sample_cell = std::move(sample);
  const auto region_at = [&](int a, int b) {
    return region_of_root.at(uf.find(cell_id(a, b)));
  };
  for (int b = 0; b < rows; ++b)
    for (int a = 0; a < cols; ++a) {
      if (!covered[static_cast<std::size_t>(cell_id(a, b))]) continue;
      const int r = region_at(a, b);
      if (a + 1 < cols && covered[static_cast<std::size_t>(cell_id(a + 1, b))]) {
        const int r2 = region_at(a + 1, b);
        if (r != r2 && !out.adjacency.has_edge(r, r2)) out.adjacency.add_edge(r, r2);
      }
      if (b + 1 < rows && covered[static_cast<std::size_t>(cell_id(a, b + 1))]) {
        const int r2 = region_at(a, b + 1);
        if (r != r2 && !out.adjacency.has_edge(r, r2)) out.adjacency.add_edge(r, r2);
      }
    }

  // A region is inside a square iff any of its cells is: a region crossing
  // the square's boundary would contain a cut edge, which is impossible.
  out.membership.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const Square& sq = scene.squares[static_cast<std::size_t>(v)];
    std::vector<char> inside(out.sample_cell.size(), 0);
    for (int b = 0; b < rows; ++b)
      for (int a = 0; a < cols; ++a) {
        if (!covered[static_cast<std::size_t>(cell_id(a, b))]) continue;
        if (point_in_square(centers[static_cast<std::size_t>(cell_id(a, b))], sq))
          inside[static_cast<std::size_t>(region_at(a, b))] = 1;
      }
    for (std::size_t r = 0; r < inside.size(); ++r)
      if (inside[r]) out.membership[static_cast<std::size_t>(v)].push_back(static_cast<int>(r));
  }
  return out;
}

int local_radius_vertex(const ArrangementGraph& arr, int v) {
  if (v < 0 || v >= static_cast<int>(arr.membership.size()))
    throw std::invalid_argument("vertex id out of range");
  const std::vector<int>& regions = arr.membership[static_cast<std::size_t>(v)];
  if (regions.empty()) throw std::invalid_argument("vertex covers no region");
  const Graph sub = arr.adjacency.induced(regions);
  int radius = -1;
  for (int s = 0; s < sub.n(); ++s) {
    int ecc = 0;
    for (int d : sub.bfs_distances(s)) {
      if (d < 0) throw std::runtime_error("disconnected region set");
      ecc = std::max(ecc, d);
    }
    if (radius < 0 || ecc < radius) radius = ecc;
  }
  return radius;
}

LocalRadiusStats local_radius_stats(const Scene& scene) {
  const ArrangementGraph arr = build_square_arrangement(scene);
  const Graph g = build_graph(scene);
  LocalRadiusStats stats;
  for (int v = 0; v < scene.size(); ++v) {
    LocalRadiusRow row;
    row.v = v;
    row.region_count = static_cast<int>(arr.membership[static_cast<std::size_t>(v)].size());
    row.x_size = static_cast<int>(hix_partition(scene, g, v).x.size());
    row.radius = local_radius_vertex(arr, v);
    stats.rows.push_back(row);
  }
  if (!stats.rows.empty()) {
    stats.min_radius = stats.rows.front().radius;
    stats.max_radius = stats.rows.front().radius;
    for (const LocalRadiusRow& row : stats.rows) {
      stats.min_radius = std::min(stats.min_radius, row.radius);
      stats.max_radius = std::max(stats.max_radius, row.radius);
    }
  }
  return stats;
}

}  // namespace trihit
