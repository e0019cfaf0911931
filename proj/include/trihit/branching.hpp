#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "trihit/geometry.hpp"
#include "trihit/graph.hpp"

namespace trihit {

// Returns a maximum clique of g restricted to `alive` (strictly ascending
// original ids), expressed in original ids. All finders below are exact.
using CliqueFinder =
    std::function<std::vector<int>(const Graph& g, const std::vector<int>& alive)>;

CliqueFinder exact_clique_finder();
CliqueFinder square_scene_clique_finder(Scene scene);
CliqueFinder contact_scene_clique_finder(Scene scene);

// One branch of the solution space: D is forced into the solution (and
// deleted from the graph), U is forbidden. Always D ∩ U = ∅, both sorted.
struct BranchPair {
  std::vector<int> d, u;
};

// bundle_branch leaf: pair plus the matched vertices committed outside x.
struct BundleBranch {
  BranchPair pair;
  std::vector<int> z;
};

// both_branchings leaf. graph is the input minus d_total, remapped dense;
// vertex i of graph is orig_ids[i] of the input. m and the budget live in
// local ids; d_total / u_total keep the audit trail in original ids.
struct BranchInstance {
  Graph graph;
  std::vector<int> orig_ids;
  std::vector<int> m;
  int k_residual = 0;
  std::vector<int> d_total, u_total;
  bool dummy_no = false;  // placeholder that always answers "no"
};

// Branches until no remaining clique exceeds p. Every solution of size <= k
// of the input matches exactly one returned pair (d inside it, u disjoint
// from it), and g - d has clique number <= p for every pair. Children that
// cannot host a solution within budget are pruned. Output sorted by (d, u).
// Requires p >= 6 * profile.cost (finder approximation factor 1).
std::vector<BranchPair> clique_branch(const Graph& g, int k, int p,
                                      const ProblemProfile& profile,
                                      const CliqueFinder& finder);

// Bundle branching below a hitting set x of the profile's bundles. While
// some v in x outside d and u has a matching of size >= profile.cost in
// N(v) \ (x ∪ z), branches on the smallest such v: delete it, or forbid it
// and commit the matched vertices to z. At every leaf, each v in x \ d has
// matching size < profile.cost beside x ∪ z, and |z| <= 4(k + p|x \ d|).
// Exactly-one representation as above. Requires p >= 2 * profile.cost and
// x bundle-hitting.
std::vector<BundleBranch> bundle_branch(const Graph& g, int k, int p,
                                        const ProblemProfile& profile,
                                        const std::vector<int>& x);

// Composition: clique branching, then per pair a greedy bundle hitting set
// and bundle branching. Emits instances whose modulator m is bundle-hitting
// with small matchings beside it and whose clique number is at most p; the
// input is a yes-instance iff some emitted instance is. A pair whose greedy
// hitting set exceeds (2 * cost + 1) * k collapses to one dummy no-instance.
std::vector<BranchInstance> both_branchings(const Graph& g, int k, int p,
                                            const ProblemProfile& profile,
                                            const CliqueFinder& finder);

// Vertices whose matching size inside their subneighborhood reaches tau.
// Removing them caps the subneighborhood matching of the remainder at tau,
// and |B| <= c|m| / (tau - cost + 1) where c bounds the occurrences of
// subnbhd. Requires tau >= cost and m as produced by both_branchings (a
// bundle hitting set with matchings below cost beside it).
std::vector<int> remove_big_mu_star(const Graph& g, const std::vector<int>& m,
                                    const std::vector<std::vector<int>>& subnbhd,
                                    int tau, const ProblemProfile& profile);

struct PipelineReport {
  int p = 0;
  int tau = 0;
  std::size_t instances = 0;
  std::size_t dummy_instances = 0;
  std::size_t solved_leaves = 0;
  int max_dp_bag = 0;          // largest decomposition bag any DP leaf met
  std::size_t removed_max = 0; // largest diagnostic big-matching removal
  double removed_bound = 0.0;  // the c|m| / (tau - cost + 1) bound for it
};

// End-to-end solver: branch with p = max(ceil(k^alpha), 6 cost), solve each
// instance leaf (twin-merged treewidth DP for triangle hitting, exhaustive
// search otherwise), lift the first verified answer back through d_total.
// Returns a hitting set of size <= k iff one exists. Scene overloads pick
// the geometric clique finder and run the subneighborhood removal
// diagnostically on each instance. Resource overflows throw; answers are
// re-verified before being returned.
std::optional<std::vector<int>> solve_pipeline(const Graph& g, int k,
                                               const ProblemProfile& profile,
                                               double alpha_exponent = 1.0 / 3.0,
                                               PipelineReport* report = nullptr);
std::optional<std::vector<int>> solve_pipeline(const Scene& scene, int k,
                                               const ProblemProfile& profile,
                                               double alpha_exponent = 1.0 / 3.0,
                                               PipelineReport* report = nullptr);

}  // namespace trihit
