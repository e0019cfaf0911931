#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "trihit/gen.hpp"
#include "trihit/graph.hpp"
#include "trihit/reduce.hpp"
#include "trihit/rng.hpp"
#include "trihit/treewidth.hpp"

using namespace trihit;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph grid(int rows, int cols) {
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
    }
  return g;
}

Graph random_tree(Rng& rng, int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v);
  return g;
}

// Treewidth by trying every elimination order.
int oracle_treewidth(const Graph& g) {
  const int n = g.n();
  if (n == 0) return -1;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  int best = n - 1;
  do {
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : g.edges()) {
      adj[static_cast<std::size_t>(u)].insert(v);
      adj[static_cast<std::size_t>(v)].insert(u);
    }
    int width = 0;
    for (int v : perm) {
      const std::vector<int> nb(adj[static_cast<std::size_t>(v)].begin(),
                                adj[static_cast<std::size_t>(v)].end());
      width = std::max(width, static_cast<int>(nb.size()));
      if (width >= best) break;
      for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b) {
          adj[static_cast<std::size_t>(nb[a])].insert(nb[b]);
          adj[static_cast<std::size_t>(nb[b])].insert(nb[a]);
        }
      for (int u : nb) adj[static_cast<std::size_t>(u)].erase(v);
    }
    best = std::min(best, width);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

int exact_treewidth(const Graph& g) {
  for (int w = 0;; ++w)
    if (exact_decomposition_small(g, w)) return w;
}

long long oracle_weighted_min(const Graph& g, const std::vector<long long>& weights) {
  const auto triangles = list_triangles(g);
  long long best = 0;
  for (long long w : weights) best += w;
  for (std::uint32_t mask = 0; mask < (1u << g.n()); ++mask) {
    bool hits = true;
    for (const auto& tri : triangles)
      if (!(mask & (1u << tri[0])) && !(mask & (1u << tri[1])) &&
          !(mask & (1u << tri[2]))) {
        hits = false;
        break;
      }
    if (!hits) continue;
    long long total = 0;
    for (int v = 0; v < g.n(); ++v)
      if (mask & (1u << v)) total += weights[static_cast<std::size_t>(v)];
    best = std::min(best, total);
  }
  return best;
}

WeightedInstance plain_instance(const Graph& g, std::vector<long long> weights,
                                long long budget) {
  WeightedInstance w;
  w.graph = g;
  w.weights = std::move(weights);
  w.budget = budget;
  for (int v = 0; v < g.n(); ++v) w.class_map.push_back({v});
  return w;
}

std::vector<long long> unit_weights(int n) {
  return std::vector<long long>(static_cast<std::size_t>(n), 1);
}

}  // namespace

TEST_CASE("validator checks all axioms and the tree shape") {
  const Graph tri = complete(3);
  TreeDecomposition one;
  one.bags = {{0, 1, 2}};
  one.width = 2;
  CHECK(validate_decomposition(tri, one));
  one.width = 1;
  CHECK(!validate_decomposition(tri, one));  // width field wrong

  TreeDecomposition split;  // loses the edge (0,2)
  split.bags = {{0, 1}, {1, 2}};
  split.tree_edges = {{0, 1}};
  split.width = 1;
  CHECK(!validate_decomposition(tri, split));

  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(validate_decomposition(path, split));

  TreeDecomposition uncovered;  // vertex 2 is in no bag
  uncovered.bags = {{0, 1}, {1}};
  uncovered.tree_edges = {{0, 1}};
  uncovered.width = 1;
  CHECK(!validate_decomposition(path, uncovered));

  TreeDecomposition torn;  // occurrences of vertex 0 are not connected
  torn.bags = {{0, 1}, {1, 2}, {0, 2}};
  torn.tree_edges = {{0, 1}, {1, 2}};
  torn.width = 1;
  CHECK(!validate_decomposition(path, torn));

  TreeDecomposition forest;  // two bags, no connecting edge
  forest.bags = {{0, 1}, {1, 2}};
  forest.width = 1;
  CHECK(!validate_decomposition(path, forest));

  TreeDecomposition looped;
  looped.bags = {{0, 1, 2}, {0, 1, 2}};
  looped.tree_edges = {{1, 1}};
  looped.width = 2;
  CHECK(!validate_decomposition(path, looped));

  CHECK(validate_decomposition(Graph(0), TreeDecomposition{}));
  CHECK(!validate_decomposition(path, TreeDecomposition{}));
}

TEST_CASE("heuristic widths on known structures") {
  Rng rng(5001);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph t = random_tree(rng, rng.range(2, 12));
    const TreeDecomposition td = heuristic_decomposition(t);
    CHECK(validate_decomposition(t, td));
    CHECK(td.width == 1);
  }
  CHECK(heuristic_decomposition(complete(6)).width == 5);
  CHECK(heuristic_decomposition(cycle(5)).width == 2);
  CHECK(heuristic_decomposition(Graph(5)).width == 0);

  const Graph g44 = grid(4, 4);
  const TreeDecomposition td = heuristic_decomposition(g44);
  CHECK(validate_decomposition(g44, td));
  CHECK(td.width <= 4);

  const TreeDecomposition empty = heuristic_decomposition(Graph(0));
  CHECK(validate_decomposition(Graph(0), empty));
}

TEST_CASE("heuristic decompositions are always valid") {
  Rng rng(5002);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.range(1, 20);
    const Graph g = random_graph(rng, n, static_cast<int>(rng.range(1, 4)), 5);
    CHECK(validate_decomposition(g, heuristic_decomposition(g)));
  }
}

TEST_CASE("exact small decompositions") {
  const auto c5 = exact_decomposition_small(cycle(5), 2);
  REQUIRE(c5.has_value());
  CHECK(validate_decomposition(cycle(5), *c5));
  CHECK(c5->width <= 2);
  CHECK(!exact_decomposition_small(cycle(5), 1));
  CHECK(!exact_decomposition_small(complete(5), 3));
  const auto k5 = exact_decomposition_small(complete(5), 4);
  REQUIRE(k5.has_value());
  CHECK(k5->width == 4);
  CHECK_THROWS_AS(exact_decomposition_small(Graph(17), 3), std::invalid_argument);
}

TEST_CASE("exact width equals the permutation oracle") {
  Rng rng(5003);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.range(1, 7);
    const Graph g = random_graph(rng, n, 1, 2);
    CHECK(exact_treewidth(g) == oracle_treewidth(g));
  }
  // At larger sizes the exact result still lower-bounds the heuristic.
  for (int trial = 0; trial < 10; ++trial) {
    const int n = rng.range(8, 12);
    const Graph g = random_graph(rng, n, 1, 3);
    const int exact = exact_treewidth(g);
    const TreeDecomposition heur = heuristic_decomposition(g);
    CHECK(exact <= heur.width);
    const auto at_heur = exact_decomposition_small(g, heur.width);
    REQUIRE(at_heur.has_value());
    CHECK(validate_decomposition(g, *at_heur));
  }
}

TEST_CASE("triangle instances solve to the cheapest vertex") {
  const Graph tri = complete(3);
  const TreeDecomposition td = heuristic_decomposition(tri);

  const auto unit = weighted_th_dp(plain_instance(tri, unit_weights(3), 1), td);
  REQUIRE(unit.has_value());
  CHECK(unit->second == 1);
  CHECK(unit->first.size() == 1);

  const auto weighted = weighted_th_dp(plain_instance(tri, {5, 1, 3}, 2), td);
  REQUIRE(weighted.has_value());
  CHECK(weighted->second == 1);
  CHECK(weighted->first == std::vector<int>{1});

  CHECK(!weighted_th_dp(plain_instance(tri, {5, 1, 3}, 0), td));

  const Graph c5 = cycle(5);
  const auto free_graph =
      weighted_th_dp(plain_instance(c5, unit_weights(5), 0), heuristic_decomposition(c5));
  REQUIRE(free_graph.has_value());
  CHECK(free_graph->second == 0);
  CHECK(free_graph->first.empty());
  CHECK(!weighted_th_dp(plain_instance(c5, unit_weights(5), -1),
                        heuristic_decomposition(c5)));
}

TEST_CASE("DP rejects invalid decompositions") {
  const Graph tri = complete(3);
  TreeDecomposition bad;
  bad.bags = {{0, 1}, {1, 2}};
  bad.tree_edges = {{0, 1}};
  bad.width = 1;
  CHECK_THROWS_AS(weighted_th_dp(plain_instance(tri, unit_weights(3), 3), bad),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      weighted_th_dp(plain_instance(tri, unit_weights(2), 3), heuristic_decomposition(tri)),
      std::invalid_argument);
}

TEST_CASE("DP handles join-shaped decompositions") {
  // Two triangles sharing vertex 0; a star decomposition forces join nodes.
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(0, 4);
  g.add_edge(3, 4);
  TreeDecomposition star;
  star.bags = {{0}, {0, 1, 2}, {0, 3, 4}};
  star.tree_edges = {{0, 1}, {0, 2}};
  star.width = 2;
  REQUIRE(validate_decomposition(g, star));
  const auto got = weighted_th_dp(plain_instance(g, unit_weights(5), 5), star);
  REQUIRE(got.has_value());
  CHECK(got->second == 1);
  CHECK(got->first == std::vector<int>{0});
}

TEST_CASE("DP agrees with the weighted brute force") {
  Rng rng(5004);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.range(1, 12);
    const Graph g = random_graph(rng, n, 2, 5);
    std::vector<long long> weights(static_cast<std::size_t>(n));
    long long total = 0;
    for (auto& w : weights) {
      w = static_cast<long long>(rng.range(1, 6));
      total += w;
    }
    const long long optimum = oracle_weighted_min(g, weights);
    const TreeDecomposition td = heuristic_decomposition(g);
    const long long budget = static_cast<long long>(rng.below(static_cast<std::uint64_t>(total + 2)));
    const auto got = weighted_th_dp(plain_instance(g, weights, budget), td);
    if (optimum <= budget) {
      REQUIRE(got.has_value());
      CHECK(got->second == optimum);
      CHECK(std::is_sorted(got->first.begin(), got->first.end()));
      long long recount = 0;
      for (int v : got->first) recount += weights[static_cast<std::size_t>(v)];
      CHECK(recount == optimum);
      CHECK(is_triangle_free(g.remove(got->first).first));
      // Monotonicity: a bigger budget keeps the answer.
      const auto more = weighted_th_dp(plain_instance(g, weights, budget + 1), td);
      REQUIRE(more.has_value());
      CHECK(more->second == optimum);
    } else {
      CHECK(!got.has_value());
    }
  }
}

TEST_CASE("every triangle lies inside some heuristic bag") {
  Rng rng(5005);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.range(3, 14);
    const Graph g = random_graph(rng, n, 3, 5);
    const TreeDecomposition td = heuristic_decomposition(g);
    for (const auto& tri : list_triangles(g)) {
      bool housed = false;
      for (const auto& bag : td.bags)
        housed = housed || (std::binary_search(bag.begin(), bag.end(), tri[0]) &&
                            std::binary_search(bag.begin(), bag.end(), tri[1]) &&
                            std::binary_search(bag.begin(), bag.end(), tri[2]));
      CHECK(housed);
    }
  }
}

TEST_CASE("DP solves merged instances to the original optimum") {
  Rng rng(5006);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = rng.range(3, 11);
    const Graph g = random_graph(rng, n, 2, 5);
    std::vector<int> m = brute_min_hitting(g, make_profile(Profile::triangle_hitting));
    std::set<int> in_m(m.begin(), m.end());
    bool grew = true;
    while (grew) {
      grew = false;
      for (int v : std::vector<int>(in_m.begin(), in_m.end())) {
        std::vector<int> outside;
        for (int u : g.neighbors(v))
          if (!in_m.count(u)) outside.push_back(u);
        for (std::size_t i = 0; i < outside.size() && !grew; ++i)
          for (std::size_t j = i + 1; j < outside.size() && !grew; ++j)
            if (g.has_edge(outside[i], outside[j])) {
              in_m.insert(outside[i]);
              grew = true;
            }
        if (grew) break;
      }
    }
    const WeightedInstance w =
        twin_merge(g, {in_m.begin(), in_m.end()}, unit_weights(n), n);
    const auto got = weighted_th_dp(w, heuristic_decomposition(w.graph));
    REQUIRE(got.has_value());
    CHECK(got->second == th_min_exact(g));
  }
}
