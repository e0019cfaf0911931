#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "trihit/branching.hpp"
#include "trihit/errors.hpp"
#include "trihit/gen.hpp"
#include "trihit/geometry.hpp"
#include "trihit/graph.hpp"
#include "trihit/rng.hpp"

using namespace trihit;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

std::vector<int> mask_to_vec(unsigned mask) {
  std::vector<int> out;
  for (int v = 0; mask >> v; ++v)
    if (mask >> v & 1u) out.push_back(v);
  return out;
}

// Every hitting set of size <= k, by subset enumeration. The ground truth
// for the exactly-one representation property.
std::vector<std::vector<int>> all_solutions(const Graph& g,
                                            const ProblemProfile& profile, int k) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << g.n()); ++mask) {
    const std::vector<int> sol = mask_to_vec(mask);
    if (static_cast<int>(sol.size()) > k) continue;
    if (hitting_set_valid(g, sol, profile)) out.push_back(sol);
  }
  return out;
}

bool disjoint_from(const std::vector<int>& sorted_a, const std::vector<int>& sorted_b) {
  std::vector<int> meet;
  std::set_intersection(sorted_a.begin(), sorted_a.end(), sorted_b.begin(),
                        sorted_b.end(), std::back_inserter(meet));
  return meet.empty();
}

bool represents(const std::vector<int>& d, const std::vector<int>& u,
                const std::vector<int>& sol) {
  return std::includes(sol.begin(), sol.end(), d.begin(), d.end()) &&
         disjoint_from(u, sol);
}

// Existence of t pairwise disjoint edges, by direct search. Independent of
// the blossom matcher the library uses.
bool oracle_has_matching(const Graph& g, int t, std::vector<char>& used, int from) {
  if (t == 0) return true;
  const auto edges = g.edges();
  for (std::size_t e = from; e < edges.size(); ++e) {
    const auto [a, b] = edges[e];
    if (used[a] || used[b]) continue;
    used[a] = used[b] = 1;
    if (oracle_has_matching(g, t - 1, used, static_cast<int>(e) + 1)) {
      used[a] = used[b] = 0;
      return true;
    }
    used[a] = used[b] = 0;
  }
  return false;
}

bool oracle_has_matching(const Graph& g, int t) {
  std::vector<char> used(g.n(), 0);
  return oracle_has_matching(g, t, used, 0);
}

// Matching size of g[N(v) minus block], the branching condition.
bool wide_matching_beside(const Graph& g, int v, const std::vector<int>& block,
                          int cost) {
  std::vector<int> nb;
  for (int u : g.neighbors(v))
    if (!std::binary_search(block.begin(), block.end(), u)) nb.push_back(u);
  return oracle_has_matching(g.induced(nb), cost);
}

int mu_star_oracle(const Graph& g, const std::vector<std::vector<int>>& sub, int v) {
  const Graph part = g.induced(sub[v]);
  int t = 0;
  while (oracle_has_matching(part, t + 1)) ++t;
  return t;
}

}  // namespace

TEST_CASE("clique branch leaves small graphs alone") {
  const ProblemProfile th = make_profile(Profile::triangle_hitting);
  const CliqueFinder finder = exact_clique_finder();

  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  for (const Graph& g : {Graph(0), Graph(4), c5, complete(6)}) {
    const auto pairs = clique_branch(g, 3, 6, th, finder);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].d.empty());
    CHECK(pairs[0].u.empty());
  }
}

TEST_CASE("clique branch rejects bad arguments") {
  const ProblemProfile th = make_profile(Profile::triangle_hitting);
  const ProblemProfile p5 = make_profile(Profile::pt_hitting, 5);
  const Graph g = complete(4);
  CHECK_THROWS_AS(clique_branch(g, 3, 5, th, exact_clique_finder()),
                  std::invalid_argument);
  CHECK_THROWS_AS(clique_branch(g, 3, 11, p5, exact_clique_finder()),
                  std::invalid_argument);
  CHECK_THROWS_AS(clique_branch(g, -1, 6, th, exact_clique_finder()),
                  std::invalid_argument);
  CHECK_THROWS_AS(clique_branch(g, 3, 6, th, CliqueFinder{}), std::invalid_argument);
}

TEST_CASE("clique branch on one clique matches the kept-pair picture") {
  const ProblemProfile th = make_profile(Profile::triangle_hitting);
  const Graph g = complete(7);  // p = 6, so the clique must shed 5 vertices
  const int k = 5;

  const auto pairs = clique_branch(g, k, 6, th, exact_clique_finder());
  REQUIRE(pairs.size() == 21);  // budget kills the keep-0 and keep-1 children
  for (const auto& [d, u] : pairs) {
    CHECK(d.size() == 5);
    CHECK(u.size() == 2);
    CHECK(disjoint_from(d, u));
    CHECK(max_clique(g.remove(d).first).size() <= 6);
  }

  const auto sols = all_solutions(g, th, k);
  REQUIRE(sols.size() == 21);  // deleting all but two vertices, no smaller set
  for (const auto& sol : sols) {
    int hits = 0;
    for (const auto& [d, u] : pairs)
      if (represents(d, u, sol)) ++hits;
    CHECK(hits == 1);
  }
}

TEST_CASE("clique branch composes over disjoint cliques") {
  const ProblemProfile th = make_profile(Profile::triangle_hitting);
  Graph g(14);
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      g.add_edge(i, j);
      g.add_edge(7 + i, 7 + j);
    }

  const auto pairs = clique_branch(g, 10, 6, th, exact_clique_finder());
  REQUIRE(pairs.size() == 441);  // 21 kept pairs per clique, independently

  const auto sols = all_solutions(g, th, 10);
  REQUIRE(sols.size() == 441);
  for (const auto& sol : sols) {
    int hits = 0;
    for (const auto& [d, u] : pairs)
      if (represents(d, u, sol)) ++hits;
    CHECK(hits == 1);
  }
}

TEST_CASE("clique branch represents every solution exactly once") {
  const CliqueFinder finder = exact_clique_finder();
  Rng rng(7001);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = rng.range(9, 12);
    Graph g = random_graph(rng, n, 2, 3);
    // Splice in a clique on 8 random-ish vertices so branching actually fires.
    const int base = rng.range(0, n - 8);
    for (int i = base; i < base + 8; ++i)
      for (int j = i + 1; j < base + 8; ++j)
        if (!g.has_edge(i, j)) g.add_edge(i, j);
    const ProblemProfile profile =
        trial % 2 ? make_profile(Profile::fvs) : make_profile(Profile::triangle_hitting);
    const int k = rng.range(5, 7);

    const auto pairs = clique_branch(g, k, 6, profile, finder);
    CHECK(std::is_sorted(pairs.begin(), pairs.end(),
                         [](const BranchPair& a, const BranchPair& b) {
                           return std::tie(a.d, a.u) < std::tie(b.d, b.u);
                         }));
    for (const auto& [d, u] : pairs) {
      CHECK(disjoint_from(d, u));
      CHECK(max_clique(g.remove(d).first).size() <= 6);
    }
    for (const auto& sol : all_solutions(g, profile, k)) {
      int hits = 0;
      for (const auto& [d, u] : pairs)
        if (represents(d, u, sol)) ++hits;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("bundle branch is a no-op without wide matchings") {
  const ProblemProfile th = make_profile(Profile::triangle_hitting);

  Graph star(6);
  for (int leaf = 1; leaf < 6; ++leaf) star.add_edge(0, leaf);
  for (const std::vector<int>& x : {std::vector<int>{}, std::vector<int>{0}}) {
    const auto leaves = bundle_branch(star, 4, 2, th, x);
    REQUIRE(leaves.size() == 1);
    CHECK(leaves[0].pair.d.empty());
    CHECK(leaves[0].pair.u.empty());
    CHECK(leaves[0].z.empty());
  }
}

TEST_CASE("bundle branch splits a wide center into delete and commit") {
  const ProblemProfile th = make_profile(Profile::triangle_hitting);
  Graph g(7);  // vertex 0 sees three disjoint edges
  for (int i = 1; i < 7; ++i) g.add_edge(0, i);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  g.add_edge(5, 6);
  const std::vector<int> x = {0};

  const auto leaves = bundle_branch(g, 10, 2, th, x);
  REQUIRE(leaves.size() == 2);
  // Sorted by (d, u): the commit branch (empty d) comes first.
  CHECK(leaves[0].pair.d.empty());
  CHECK(leaves[0].pair.u == std::vector<int>{0});
  CHECK(leaves[0].z == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(leaves[1].pair.d == std::vector<int>{0});
  CHECK(leaves[1].pair.u.empty());
  CHECK(leaves[1].z.empty());

  // The commit branch certifies 3 - 1 + 1 = 3 solution vertices inside z, so
  // it needs budget 3; the delete branch needs only 1.
  CHECK(bundle_branch(g, 3, 2, th, x).size() == 2);
  CHECK(bundle_branch(g, 2, 2, th, x).size() == 1);
  CHECK(bundle_branch(g, 2, 2, th, x)[0].pair.d == std::vector<int>{0});
  CHECK(bundle_branch(g, 0, 2, th, x).empty());
}

TEST_CASE("bundle branch rejects bad arguments") {
  const ProblemProfile th = make_profile(Profile::triangle_hitting);
  const Graph g = complete(4);  // one vertex cannot hit all its triangles
  CHECK_THROWS_AS(bundle_branch(g, 3, 1, th, {}), std::invalid_argument);
  CHECK_THROWS_AS(bundle_branch(g, -1, 2, th, {}), std::invalid_argument);
  CHECK_THROWS_WITH_AS(bundle_branch(g, 3, 2, th, {0}),
                       doctest::Contains("not a bundle hitting set"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(bundle_branch(g, 3, 2, th, {0, 0, 1}),
                       doctest::Contains("duplicate"), std::invalid_argument);
  CHECK_THROWS_AS(bundle_branch(g, 3, 2, th, {0, 9}), std::invalid_argument);
}

TEST_CASE("bundle branch leaves satisfy the lemma and represent uniquely") {
  Rng rng(7002);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.range(6, 12);
    const Graph g = random_graph(rng, n, rng.range(2, 4), 5);
    const ProblemProfile profile =
        trial % 2 ? make_profile(Profile::fvs) : make_profile(Profile::triangle_hitting);
    const std::vector<int> x = greedy_bundle_hitting(g, profile.cost);
    const int k = rng.range(0, 4);
    const int p = 2 * rng.range(profile.cost, 3);

    const auto leaves = bundle_branch(g, k, p, profile, x);
    for (const auto& leaf : leaves) {
      const auto& [d, u] = leaf.pair;
      CHECK(std::includes(x.begin(), x.end(), d.begin(), d.end()));
      CHECK(std::includes(x.begin(), x.end(), u.begin(), u.end()));
      CHECK(disjoint_from(d, u));
      CHECK(disjoint_from(leaf.z, x));

      const std::vector<int> x_left = [&] {
        std::vector<int> out;
        std::set_difference(x.begin(), x.end(), d.begin(), d.end(),
                            std::back_inserter(out));
        return out;
      }();
      CHECK(leaf.z.size() <= 4 * (k + static_cast<std::size_t>(p) * x_left.size()));

      std::vector<int> block;
      std::set_union(x.begin(), x.end(), leaf.z.begin(), leaf.z.end(),
                     std::back_inserter(block));
      for (int v : x_left) CHECK_FALSE(wide_matching_beside(g, v, block, profile.cost));
    }

    for (const auto& sol : all_solutions(g, profile, k)) {
      int hits = 0;
      for (const auto& leaf : leaves)
        if (represents(leaf.pair.d, leaf.pair.u, sol)) ++hits;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("both branchings emits conforming instances that decide the input") {
  const CliqueFinder finder = exact_clique_finder();
  Rng rng(7003);
  for (int trial = 0; trial < 36; ++trial) {
    const int n = trial % 3 == 0 ? rng.range(8, 13) : rng.range(6, 13);
    Graph g = random_graph(rng, n, rng.range(2, 4), 5);
    if (trial % 3 == 0) {  // force a wide clique through the top branching
      for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
          if (!g.has_edge(i, j)) g.add_edge(i, j);
    }
    const ProblemProfile profile =
        trial % 2 ? make_profile(Profile::fvs) : make_profile(Profile::triangle_hitting);
    const int k = rng.range(0, 4) + (trial % 3 == 0 ? 6 : 0);
    const int p = 6;

    const auto instances = both_branchings(g, k, p, profile, finder);
    bool any_yes = false;
    for (const BranchInstance& inst : instances) {
      if (inst.dummy_no) {
        CHECK(inst.graph.n() == 0);
        continue;
      }
      CHECK(inst.k_residual >= 0);
      CHECK(inst.k_residual ==
            k - static_cast<int>(inst.d_total.size()));
      CHECK(inst.graph.n() == static_cast<int>(inst.orig_ids.size()));
      CHECK(max_clique(inst.graph).size() <= static_cast<std::size_t>(p));
      CHECK_FALSE(find_bundle(inst.graph.remove(inst.m).first, profile.cost));
      for (int v : inst.m)
        CHECK_FALSE(wide_matching_beside(inst.graph, v, inst.m, profile.cost));
      CHECK(inst.m.size() <=
            (2 * profile.cost + 1) * static_cast<std::size_t>(k) * (4 * p + 1) +
                4 * static_cast<std::size_t>(k));

      const auto best = brute_min_hitting(inst.graph, profile);
      if (static_cast<int>(best.size()) <= inst.k_residual) any_yes = true;
    }

    const auto sols = all_solutions(g, profile, k);
    CHECK(any_yes == !sols.empty());
    for (const auto& sol : sols) {
      int hits = 0;
      for (const BranchInstance& inst : instances)
        if (!inst.dummy_no && represents(inst.d_total, inst.u_total, sol)) ++hits;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("both branchings handles the trivial shapes") {
  const ProblemProfile th = make_profile(Profile::triangle_hitting);
  const CliqueFinder finder = exact_clique_finder();

  Graph path(5);
  for (int i = 0; i + 1 < 5; ++i) path.add_edge(i, i + 1);
  auto instances = both_branchings(path, 2, 6, th, finder);
  REQUIRE(instances.size() == 1);
  CHECK(instances[0].graph.n() == 5);
  CHECK(instances[0].m.empty());
  CHECK(instances[0].k_residual == 2);
  CHECK_FALSE(instances[0].dummy_no);

  instances = both_branchings(complete(3), 1, 6, th, finder);
  REQUIRE(instances.size() == 1);
  CHECK(instances[0].m == std::vector<int>{0, 1, 2});
  CHECK(instances[0].k_residual == 1);

  // Budget 0 against a triangle: the greedy packing already certifies no.
  instances = both_branchings(complete(3), 0, 6, th, finder);
  REQUIRE(instances.size() == 1);
  CHECK(instances[0].dummy_no);

  CHECK_THROWS_AS(both_branchings(path, 2, 5, th, finder), std::invalid_argument);
  CHECK_THROWS_AS(both_branchings(path, -2, 6, th, finder), std::invalid_argument);
}

TEST_CASE("scene clique finders agree with subset enumeration") {
  Rng rng(7004);
  for (int trial = 0; trial < 12; ++trial) {
    const Scene scene = perturb_squares(random_square_scene(rng, rng.range(4, 9), 14, 5));
    const Graph g = build_graph(scene);
    const CliqueFinder finder = square_scene_clique_finder(scene);
    std::vector<int> alive;
    for (int v = 0; v < g.n(); ++v)
      if (rng.chance(3, 4)) alive.push_back(v);
    const std::vector<int> got = finder(g, alive);
    CHECK(std::includes(alive.begin(), alive.end(), got.begin(), got.end()));
    CHECK(got.size() == max_clique(g.induced(alive)).size());
    for (std::size_t i = 0; i < got.size(); ++i)
      for (std::size_t j = i + 1; j < got.size(); ++j)
        CHECK(g.has_edge(got[i], got[j]));
  }
  for (int trial = 0; trial < 12; ++trial) {
    const Scene scene = random_contact_scene(rng, rng.range(4, 10), 12);
    const Graph g = build_graph(scene);
    const CliqueFinder finder = contact_scene_clique_finder(scene);
    std::vector<int> alive;
    for (int v = 0; v < g.n(); ++v)
      if (rng.chance(3, 4)) alive.push_back(v);
    const std::vector<int> got = finder(g, alive);
    CHECK(got.size() == max_clique(g.induced(alive)).size());
  }
}

TEST_CASE("big matching removal strips exactly the wide vertices") {
  const ProblemProfile th = make_profile(Profile::triangle_hitting);

  // Hub h = 0 over two disjoint edges; subneighborhoods point at the hub's.
  Graph g(5);
  for (int i = 1; i < 5; ++i) g.add_edge(0, i);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  std::vector<std::vector<int>> sub(5);
  sub[0] = {1, 2, 3, 4};
  const std::vector<int> m = {0, 1, 3};

  CHECK(remove_big_mu_star(g, m, sub, 2, th) == std::vector<int>{0});
  CHECK(remove_big_mu_star(g, m, sub, 3, th).empty());

  CHECK_THROWS_WITH_AS(remove_big_mu_star(g, m, sub, 0, th),
                       doctest::Contains("tau below"), std::invalid_argument);
  std::vector<std::vector<int>> broken = sub;
  broken[1] = {3};  // not adjacent
  CHECK_THROWS_WITH_AS(remove_big_mu_star(g, m, broken, 2, th),
                       doctest::Contains("not a neighbor"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(remove_big_mu_star(g, {2}, sub, 2, th),
                       doctest::Contains("not a bundle hitting set"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(remove_big_mu_star(g, {0}, sub, 2, th),
                       doctest::Contains("matching beside m"), std::invalid_argument);
  CHECK_THROWS_AS(remove_big_mu_star(g, m, {{0}}, 2, th), std::invalid_argument);
}

TEST_CASE("big matching removal on pipeline-shaped square instances") {
  Rng rng(7005);
  const ProblemProfile th = make_profile(Profile::triangle_hitting);
  for (int trial = 0; trial < 10; ++trial) {
    const Scene scene = perturb_squares(random_square_scene(rng, rng.range(6, 11), 12, 5));
    const Graph g = build_graph(scene);
    const std::vector<std::vector<int>> sub = n_minus_all(scene, g);
    const int k = rng.range(1, 3);

    for (const BranchInstance& inst :
         both_branchings(g, k, 6, th, square_scene_clique_finder(scene))) {
      if (inst.dummy_no) continue;
      std::vector<int> back(g.n(), -1);
      for (int i = 0; i < inst.graph.n(); ++i) back[inst.orig_ids[i]] = i;
      std::vector<std::vector<int>> sub_local(inst.graph.n());
      for (int i = 0; i < inst.graph.n(); ++i)
        for (int u : sub[inst.orig_ids[i]])
          if (back[u] >= 0) sub_local[i].push_back(back[u]);

      for (int tau = 1; tau <= 3; ++tau) {
        const std::vector<int> big = remove_big_mu_star(inst.graph, inst.m, sub_local, tau, th);
        for (int v = 0; v < inst.graph.n(); ++v)
          CHECK((mu_star_oracle(inst.graph, sub_local, v) >= tau) ==
                std::binary_search(big.begin(), big.end(), v));
        const long long c = max_occurrence(inst.graph.n(), sub_local);
        CHECK(static_cast<long long>(big.size()) * (tau - th.cost + 1) <=
              c * static_cast<long long>(inst.m.size()));
      }
    }
  }
}

TEST_CASE("pipeline solves the micro examples") {
  const ProblemProfile th = make_profile(Profile::triangle_hitting);

  CHECK(solve_pipeline(Graph(0), 0, th) == std::vector<int>{});
  CHECK(solve_pipeline(complete(3), 0, th) == std::nullopt);

  PipelineReport report;
  const auto sol = solve_pipeline(complete(3), 1, th, 1.0 / 3.0, &report);
  REQUIRE(sol.has_value());
  CHECK(sol->size() == 1);
  CHECK(report.p == 6);
  CHECK(report.instances == 1);

  CHECK(solve_pipeline(complete(5), 2, th) == std::nullopt);
  const auto k5 = solve_pipeline(complete(5), 3, th);
  REQUIRE(k5.has_value());
  CHECK(k5->size() == 3);

  CHECK_THROWS_AS(solve_pipeline(Graph(3), -1, th), std::invalid_argument);
  CHECK_THROWS_AS(solve_pipeline(Graph(3), 2, th, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(solve_pipeline(Graph(3), 2, th, 1.5), std::invalid_argument);
}

TEST_CASE("pipeline agrees with exhaustive search on random graphs") {
  Rng rng(7006);
  const ProblemProfile profiles[] = {
      make_profile(Profile::triangle_hitting), make_profile(Profile::fvs),
      make_profile(Profile::pseudoforest_deletion), make_profile(Profile::pt_hitting, 5)};
  for (int trial = 0; trial < 48; ++trial) {
    const int n = rng.range(4, 13);
    const Graph g = random_graph(rng, n, rng.range(2, 4), 5);
    const ProblemProfile& profile = profiles[trial % 4];
    const int k = rng.range(0, 5);

    const auto got = solve_pipeline(g, k, profile);
    const auto best = brute_min_hitting(g, profile);
    CHECK(got.has_value() == (static_cast<int>(best.size()) <= k));
    if (got) {
      CHECK(got->size() <= static_cast<std::size_t>(k));
      CHECK(hitting_set_valid(g, *got, profile));
    }
  }
}

TEST_CASE("pipeline agrees with exhaustive search on scenes") {
  Rng rng(7007);
  const ProblemProfile th = make_profile(Profile::triangle_hitting);
  int square_trials = 0, contact_trials = 0;
  for (int trial = 0; trial < 30; ++trial) {
    Scene scene;
    switch (trial % 3) {
      case 0:
        scene = random_ddir_scene(rng, rng.range(4, 12), 2, 10);
        break;
      case 1:
        scene = random_square_scene(rng, rng.range(4, 10), 12, 5);
        ++square_trials;
        break;
      default:
        scene = random_contact_scene(rng, rng.range(4, 10), 12);
        ++contact_trials;
        break;
    }
    const Graph g = build_graph(scene);
    const int k = rng.range(0, 4);

    const auto got = solve_pipeline(scene, k, th);
    const auto best = brute_min_hitting(g, th);
    CHECK(got.has_value() == (static_cast<int>(best.size()) <= k));
    if (got) {
      CHECK(got->size() <= static_cast<std::size_t>(k));
      CHECK(hitting_set_valid(g, *got, th));
    }
  }
  CHECK(square_trials > 0);
  CHECK(contact_trials > 0);
}

TEST_CASE("branch collections are deterministic") {
  Rng rng(7008);
  const ProblemProfile th = make_profile(Profile::triangle_hitting);
  const CliqueFinder finder = exact_clique_finder();
  for (int trial = 0; trial < 6; ++trial) {
    Graph g = random_graph(rng, 11, 3, 4);
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j)
        if (!g.has_edge(i, j)) g.add_edge(i, j);

    const auto a = clique_branch(g, 6, 6, th, finder);
    const auto b = clique_branch(g, 6, 6, th, finder);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].d == b[i].d);
      CHECK(a[i].u == b[i].u);
      if (i + 1 < a.size())
        CHECK(std::tie(a[i].d, a[i].u) < std::tie(a[i + 1].d, a[i + 1].u));
    }

    const auto i1 = both_branchings(g, 6, 6, th, finder);
    const auto i2 = both_branchings(g, 6, 6, th, finder);
    REQUIRE(i1.size() == i2.size());
    for (std::size_t i = 0; i < i1.size(); ++i) {
      CHECK(i1[i].d_total == i2[i].d_total);
      CHECK(i1[i].u_total == i2[i].u_total);
      CHECK(i1[i].m == i2[i].m);
      CHECK(i1[i].k_residual == i2[i].k_residual);
    }
  }
}
