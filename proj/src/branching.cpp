#include "trihit/branching.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "trihit/errors.hpp"
#include "trihit/reduce.hpp"
#include "trihit/treewidth.hpp"

namespace trihit {

namespace {

// Hard ceiling on emitted branches; desk-scale inputs stay far below it.
constexpr std::size_t kBranchCap = 100000;

std::vector<int> sorted_ids(const Graph& g, std::vector<int> ids, const char* who) {
  std::sort(ids.begin(), ids.end());
  for (int v : ids)
    if (v < 0 || v >= g.n())
      throw std::invalid_argument(std::string(who) + ": vertex id out of range");
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::invalid_argument(std::string(who) + ": duplicate vertex");
  return ids;
}

std::vector<int> set_to_vec(const std::set<int>& s) {
  return std::vector<int>(s.begin(), s.end());
}

std::vector<int> union_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> minus_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    (a[i] < b[j] ? i : j)++;
  }
  return false;
}

bool pair_less(const BranchPair& a, const BranchPair& b) {
  if (a.d != b.d) return a.d < b.d;
  return a.u < b.u;
}

// Maximum matching inside N(v) minus the blocked vertices, as (size, matched
// vertex ids). Maximality means that after blocking the matched vertices too,
// the surviving neighborhood is edgeless.
std::pair<int, std::vector<int>> matching_beside(const Graph& g, int v,
                                                 const std::vector<char>& blocked) {
  std::vector<int> nb;
  for (int u : g.neighbors(v))
    if (!blocked[u]) nb.push_back(u);
  const Graph sub = g.induced(nb);
  const std::vector<int> mate = max_matching(sub);
  std::vector<int> matched;
  for (int i = 0; i < sub.n(); ++i)
    if (mate[i] >= 0) matched.push_back(nb[i]);
  return {static_cast<int>(matched.size()) / 2, matched};
}

void check_clique(const Graph& g, const std::vector<int>& alive,
                  const std::vector<int>& cliq) {
  for (std::size_t i = 0; i < cliq.size(); ++i) {
    if (!std::binary_search(alive.begin(), alive.end(), cliq[i]))
      throw std::logic_error("clique finder returned a removed vertex");
    for (std::size_t j = i + 1; j < cliq.size(); ++j)
      if (!g.has_edge(cliq[i], cliq[j]))
        throw std::logic_error("clique finder returned a non-clique");
  }
}

}  // namespace

CliqueFinder exact_clique_finder() {
  return [](const Graph& g, const std::vector<int>& alive) {
    std::vector<int> local = max_clique(g.induced(alive));
    for (int& v : local) v = alive[v];
    return local;
  };
}

CliqueFinder square_scene_clique_finder(Scene scene) {
  return [scene = std::move(scene)](const Graph&, const std::vector<int>& alive) {
    if (alive.empty()) return std::vector<int>{};
    Scene part;
    part.kind = SceneKind::squares;
    for (int v : alive) part.squares.push_back(scene.squares.at(v));
    std::vector<int> local = square_max_clique(part);
    for (int& v : local) v = alive[v];
    return local;
  };
}

CliqueFinder contact_scene_clique_finder(Scene scene) {
  return [scene = std::move(scene)](const Graph&, const std::vector<int>& alive) {
    if (alive.empty()) return std::vector<int>{};
    Scene part;
    part.kind = SceneKind::segments;
    for (int v : alive) part.segments.push_back(scene.segments.at(v));
    std::vector<int> local = contact_max_clique(part, build_graph(part));
    for (int& v : local) v = alive[v];
    return local;
  };
}

std::vector<BranchPair> clique_branch(const Graph& g, int k, int p,
                                      const ProblemProfile& profile,
                                      const CliqueFinder& finder) {
  if (p < 6 * profile.cost)
    throw std::invalid_argument("clique branch: p must be at least 6 times the cost");
  if (k < 0) throw std::invalid_argument("clique branch: negative budget");
  if (!finder) throw std::invalid_argument("clique branch: missing clique finder");

  const int keep_cap = 2 * profile.cost;
  std::vector<BranchPair> out;

  // A solution keeps at most keep_cap vertices of any clique wider than p,
  // else the dropped part would hide an unhit bundle. Branching enumerates
  // the kept subset; every child deletes > p - keep_cap >= 1 vertices, so
  // the budget forces termination. Children that would overrun the budget,
  // or delete a vertex kept earlier, match no solution and are pruned.
  std::function<void(std::vector<int>, std::set<int>, std::set<int>, int)> rec =
      [&](std::vector<int> alive, std::set<int> d, std::set<int> u, int k_rem) {
        std::vector<int> cliq = finder(g, alive);
        std::sort(cliq.begin(), cliq.end());
        check_clique(g, alive, cliq);
        if (static_cast<int>(cliq.size()) <= p) {
          if (out.size() >= kBranchCap)
            throw resource_limit_error("clique branch collection exceeds cap");
          out.push_back({set_to_vec(d), set_to_vec(u)});
          return;
        }

        std::vector<int> keep;
        std::function<void(std::size_t)> choose = [&](std::size_t from) {
          std::vector<int> drop(cliq.size() - keep.size());
          std::set_difference(cliq.begin(), cliq.end(), keep.begin(), keep.end(),
                              drop.begin());
          const int spent = static_cast<int>(drop.size());
          bool conflict = false;
          for (int v : drop)
            if (u.count(v)) conflict = true;
          if (!conflict && k_rem - spent >= 0) {
            std::vector<int> alive2 = minus_sorted(alive, drop);
            std::set<int> d2 = d, u2 = u;
            d2.insert(drop.begin(), drop.end());
            u2.insert(keep.begin(), keep.end());
            rec(std::move(alive2), std::move(d2), std::move(u2), k_rem - spent);
          }
          if (static_cast<int>(keep.size()) == keep_cap) return;
          for (std::size_t i = from; i < cliq.size(); ++i) {
            keep.push_back(cliq[i]);
            choose(i + 1);
            keep.pop_back();
          }
        };
        choose(0);
      };

  std::vector<int> all(g.n());
  std::iota(all.begin(), all.end(), 0);
  rec(std::move(all), {}, {}, k);

  std::sort(out.begin(), out.end(), pair_less);
  return out;
}

std::vector<BundleBranch> bundle_branch(const Graph& g, int k, int p,
                                        const ProblemProfile& profile,
                                        const std::vector<int>& x) {
  if (p < 2 * profile.cost)
    throw std::invalid_argument("bundle branch: p must be at least 2 times the cost");
  if (k < 0) throw std::invalid_argument("bundle branch: negative budget");
  const std::vector<int> xs = sorted_ids(g, x, "bundle branch");
  if (find_bundle(g.remove(xs).first, profile.cost))
    throw std::invalid_argument("bundle branch: x is not a bundle hitting set");

  // blocked = x plus the current z; branching never looks inside it.
  std::vector<char> blocked(g.n(), 0);
  for (int v : xs) blocked[v] = 1;

  std::vector<BundleBranch> out;

  std::function<void(std::set<int>&, std::set<int>&, std::set<int>&, int)> rec =
      [&](std::set<int>& d, std::set<int>& u, std::set<int>& z, int k_rem) {
        for (int v : xs) {
          if (d.count(v) || u.count(v)) continue;
          auto [size, matched] = matching_beside(g, v, blocked);
          if (size < profile.cost) continue;

          // Delete v: one solution vertex spent. Or forbid v: the matched
          // edges minus cost - 1 spares must each lose an endpoint to the
          // solution, a certified spend inside the fresh part of z.
          if (k_rem - 1 >= 0) {
            d.insert(v);
            rec(d, u, z, k_rem - 1);
            d.erase(v);
          }
          const int spend = size - profile.cost + 1;
          if (k_rem - spend >= 0) {
            u.insert(v);
            z.insert(matched.begin(), matched.end());
            for (int w : matched) blocked[w] = 1;
            rec(d, u, z, k_rem - spend);
            for (int w : matched) {
              blocked[w] = 0;
              z.erase(w);
            }
            u.erase(v);
          }
          return;
        }

        BundleBranch leaf{{set_to_vec(d), set_to_vec(u)}, set_to_vec(z)};
        const long long cap =
            4LL * (k + static_cast<long long>(p) *
                           (static_cast<long long>(xs.size()) - leaf.pair.d.size()));
        if (static_cast<long long>(leaf.z.size()) > cap)
          throw std::logic_error("bundle branch: committed set exceeds its bound");
        for (int v : xs) {
          if (d.count(v)) continue;
          if (matching_beside(g, v, blocked).first >= profile.cost)
            throw std::logic_error("bundle branch: leaf keeps a wide matching");
        }
        if (out.size() >= kBranchCap)
          throw resource_limit_error("bundle branch collection exceeds cap");
        out.push_back(std::move(leaf));
      };

  std::set<int> d, u, z;
  rec(d, u, z, k);

  std::sort(out.begin(), out.end(), [](const BundleBranch& a, const BundleBranch& b) {
    return pair_less(a.pair, b.pair);
  });
  return out;
}

namespace {

// Theorem checks on an emitted instance; failures mean a bug, not bad input.
void check_instance(const BranchInstance& inst, int k, int p,
                    const ProblemProfile& profile, const CliqueFinder& finder,
                    const Graph& g, std::size_t x_size) {
  const std::vector<int> cliq = finder(g, inst.orig_ids);
  if (static_cast<int>(cliq.size()) > p)
    throw std::logic_error("branch instance keeps a clique wider than p");
  if (find_bundle(inst.graph.remove(inst.m).first, profile.cost))
    throw std::logic_error("branch instance modulator misses a bundle");
  std::vector<char> in_m(inst.graph.n(), 0);
  for (int v : inst.m) in_m[v] = 1;
  for (int v : inst.m)
    if (matching_beside(inst.graph, v, in_m).first >= profile.cost)
      throw std::logic_error("branch instance keeps a wide matching beside m");
  const long long m_cap =
      static_cast<long long>(x_size) +
      4LL * (k + static_cast<long long>(p) * static_cast<long long>(x_size));
  if (static_cast<long long>(inst.m.size()) > m_cap)
    throw std::logic_error("branch instance modulator exceeds its bound");
  if (intersect_sorted(inst.d_total, inst.u_total))
    throw std::logic_error("branch instance mixes deleted and kept vertices");
}

}  // namespace

std::vector<BranchInstance> both_branchings(const Graph& g, int k, int p,
                                            const ProblemProfile& profile,
                                            const CliqueFinder& finder) {
  if (p < 6 * profile.cost)
    throw std::invalid_argument(
        "both branchings: p must be at least 6 times the cost");
  if (k < 0) throw std::invalid_argument("both branchings: negative budget");

  std::vector<BranchInstance> out;
  for (const BranchPair& top : clique_branch(g, k, p, profile, finder)) {
    auto [g1, ids1] = g.remove(top.d);
    const int k1 = k - static_cast<int>(top.d.size());

    // The greedy packing is a (2 cost + 1)-approximation and every solution
    // is bundle-hitting, so overrunning that slack certifies a no-branch.
    const std::vector<int> x1 = greedy_bundle_hitting(g1, profile.cost);
    if (static_cast<long long>(x1.size()) >
        static_cast<long long>(2 * profile.cost + 1) * k) {
      BranchInstance dummy;
      dummy.dummy_no = true;
      dummy.d_total = top.d;
      dummy.u_total = top.u;
      out.push_back(std::move(dummy));
      continue;
    }

    for (const BundleBranch& leaf : bundle_branch(g1, k1, p, profile, x1)) {
      auto to_orig = [&](const std::vector<int>& local) {
        std::vector<int> mapped;
        mapped.reserve(local.size());
        for (int v : local) mapped.push_back(ids1[v]);
        return mapped;
      };
      BranchInstance inst;
      inst.d_total = union_sorted(top.d, to_orig(leaf.pair.d));
      inst.u_total = union_sorted(top.u, to_orig(leaf.pair.u));
      if (intersect_sorted(inst.d_total, inst.u_total)) continue;

      auto [g2, ids2] = g1.remove(leaf.pair.d);
      std::vector<int> back(g1.n(), -1);
      for (int i = 0; i < g2.n(); ++i) back[ids2[i]] = i;
      inst.graph = std::move(g2);
      inst.orig_ids.reserve(ids2.size());
      for (int v : ids2) inst.orig_ids.push_back(ids1[v]);
      const std::vector<int> m1 =
          union_sorted(minus_sorted(x1, leaf.pair.d), leaf.z);
      inst.m.reserve(m1.size());
      for (int v : m1) inst.m.push_back(back[v]);
      inst.k_residual = k1 - static_cast<int>(leaf.pair.d.size());

      check_instance(inst, k, p, profile, finder, g, x1.size());
      if (out.size() >= kBranchCap)
        throw resource_limit_error("branch instance collection exceeds cap");
      out.push_back(std::move(inst));
    }
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const BranchInstance& a, const BranchInstance& b) {
                     if (a.d_total != b.d_total) return a.d_total < b.d_total;
                     return a.u_total < b.u_total;
                   });
  return out;
}

std::vector<int> remove_big_mu_star(const Graph& g, const std::vector<int>& m,
                                    const std::vector<std::vector<int>>& subnbhd,
                                    int tau, const ProblemProfile& profile) {
  if (tau < profile.cost)
    throw std::invalid_argument("big matching removal: tau below the profile cost");
  const std::vector<int> ms = sorted_ids(g, m, "big matching removal");
  if (static_cast<int>(subnbhd.size()) != g.n())
    throw std::invalid_argument("big matching removal: one subneighborhood per vertex");
  for (int v = 0; v < g.n(); ++v)
    for (int u : subnbhd[v])
      if (u < 0 || u >= g.n() || !g.has_edge(u, v))
        throw std::invalid_argument(
            "big matching removal: subneighborhood entry is not a neighbor");
  if (find_bundle(g.remove(ms).first, profile.cost))
    throw std::invalid_argument("big matching removal: m is not a bundle hitting set");
  std::vector<char> in_m(g.n(), 0);
  for (int v : ms) in_m[v] = 1;
  for (int v : ms)
    if (matching_beside(g, v, in_m).first >= profile.cost)
      throw std::invalid_argument(
          "big matching removal: matching beside m reaches the cost at vertex " +
          std::to_string(v));

  std::vector<int> big;
  for (int v = 0; v < g.n(); ++v)
    if (mu_star_of(g, subnbhd, v) >= tau) big.push_back(v);

  // Both bounds below are theorems given the preconditions.
  auto [g3, ids3] = g.remove(big);
  std::vector<int> back(g.n(), -1);
  for (int i = 0; i < g3.n(); ++i) back[ids3[i]] = i;
  std::vector<std::vector<int>> sub3(g3.n());
  for (int i = 0; i < g3.n(); ++i)
    for (int u : subnbhd[ids3[i]])
      if (back[u] >= 0) sub3[i].push_back(back[u]);
  if (mu_star(g3, sub3) > tau)
    throw std::logic_error("big matching removal: a big matching survived");

  const long long c = max_occurrence(g.n(), subnbhd);
  if (static_cast<long long>(big.size()) * (tau - profile.cost + 1) >
      c * static_cast<long long>(ms.size()))
    throw std::logic_error("big matching removal: removed set exceeds its bound");

  return big;
}

namespace {

struct SceneHooks {
  std::vector<std::vector<int>> subnbhd;  // empty when no structure applies
  bool active = false;
};

int power_ceiling(int k, double exponent) {
  if (k <= 0) return 0;
  return static_cast<int>(std::ceil(std::pow(static_cast<double>(k), exponent) - 1e-9));
}

std::optional<std::vector<int>> pipeline_core(const Graph& g, int k,
                                              const ProblemProfile& profile,
                                              double alpha, const CliqueFinder& finder,
                                              const SceneHooks& hooks,
                                              PipelineReport* report) {
  if (k < 0) throw std::invalid_argument("solve pipeline: negative budget");
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("solve pipeline: alpha must lie in (0, 1]");

  const int p = std::max(6 * profile.cost, power_ceiling(k, alpha));
  const int tau = std::max(profile.cost, power_ceiling(k, 2.0 * alpha));
  if (report) {
    *report = PipelineReport{};
    report->p = p;
    report->tau = tau;
  }

  const auto instances = both_branchings(g, k, p, profile, finder);
  if (report) {
    report->instances = instances.size();
    for (const BranchInstance& inst : instances)
      if (inst.dummy_no) ++report->dummy_instances;
  }

  for (const BranchInstance& inst : instances) {
    if (inst.dummy_no) continue;

    if (hooks.active) {
      // Diagnostic only: the leaf solvers below do not depend on the removal,
      // it exercises the treewidth-capping path and feeds the report.
      std::vector<int> back(g.n(), -1);
      for (int i = 0; i < inst.graph.n(); ++i) back[inst.orig_ids[i]] = i;
      std::vector<std::vector<int>> sub(inst.graph.n());
      for (int i = 0; i < inst.graph.n(); ++i)
        for (int u : hooks.subnbhd[inst.orig_ids[i]])
          if (back[u] >= 0) sub[i].push_back(back[u]);
      const std::vector<int> removed =
          remove_big_mu_star(inst.graph, inst.m, sub, tau, profile);
      if (report && removed.size() >= report->removed_max) {
        report->removed_max = removed.size();
        const double c = max_occurrence(inst.graph.n(), sub);
        report->removed_bound =
            c * static_cast<double>(inst.m.size()) / (tau - profile.cost + 1);
      }
    }

    std::optional<std::vector<int>> local;
    if (property_holds(inst.graph, profile)) {
      local.emplace();
    } else if (profile.kind == Profile::triangle_hitting) {
      const std::vector<long long> unit(inst.graph.n(), 1);
      const WeightedInstance merged =
          twin_merge(inst.graph, inst.m, unit, inst.k_residual);
      const TreeDecomposition td = heuristic_decomposition(merged.graph);
      if (report) report->max_dp_bag = std::max(report->max_dp_bag, td.width + 1);
      if (const auto hit = weighted_th_dp(merged, td)) {
        local.emplace();
        for (int rep : hit->first)
          local->insert(local->end(), merged.class_map[rep].begin(),
                        merged.class_map[rep].end());
        std::sort(local->begin(), local->end());
      }
    } else {
      const std::vector<int> best = brute_min_hitting(inst.graph, profile);
      if (static_cast<int>(best.size()) <= inst.k_residual) local = best;
    }
    if (report) ++report->solved_leaves;

    if (local) {
      std::vector<int> lifted;
      lifted.reserve(local->size() + inst.d_total.size());
      for (int v : *local) lifted.push_back(inst.orig_ids[v]);
      lifted = union_sorted(lifted, inst.d_total);
      if (static_cast<int>(lifted.size()) > k ||
          !hitting_set_valid(g, lifted, profile))
        throw std::logic_error("solve pipeline: lifted answer failed verification");
      return lifted;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> solve_pipeline(const Graph& g, int k,
                                               const ProblemProfile& profile,
                                               double alpha_exponent,
                                               PipelineReport* report) {
  return pipeline_core(g, k, profile, alpha_exponent, exact_clique_finder(), {},
                       report);
}

std::optional<std::vector<int>> solve_pipeline(const Scene& scene, int k,
                                               const ProblemProfile& profile,
                                               double alpha_exponent,
                                               PipelineReport* report) {
  validate_scene(scene);
  const Graph g = build_graph(scene);
  SceneHooks hooks;
  CliqueFinder finder;
  if (scene.kind == SceneKind::squares) {
    Scene generic = perturb_squares(scene);
    hooks.subnbhd = n_minus_all(generic, g);
    hooks.active = true;
    finder = square_scene_clique_finder(std::move(generic));
  } else if (validate_contact(scene)) {
    hooks.subnbhd = n_star_contact_all(scene, g);
    hooks.active = true;
    finder = contact_scene_clique_finder(scene);
  } else {
    finder = exact_clique_finder();
  }
  return pipeline_core(g, k, profile, alpha_exponent, finder, hooks, report);
}

}  // namespace trihit
