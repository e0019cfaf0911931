#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace trihit {

// Undirected simple graph on vertex ids 0..n-1. Adjacency lists stay sorted;
// self loops and parallel edges are rejected.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return m_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;

  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  // Subgraph induced on `keep` (strictly ascending ids). Vertex keep[i]
  // becomes vertex i of the result.
  Graph induced(const std::vector<int>& keep) const;

  // Removes `drop` (any order, duplicates allowed) and returns the induced
  // remainder plus the map from new ids to surviving original ids.
  std::pair<Graph, std::vector<int>> remove(const std::vector<int>& drop) const;

  // Adjacency rows as bitsets, packed 64 vertices per word.
  std::vector<std::vector<std::uint64_t>> adjacency_words() const;

  std::vector<int> component_of(int v) const;  // sorted vertex ids
  bool is_connected() const;                   // true for the empty graph

  // BFS distances from src; -1 marks unreachable vertices.
  std::vector<int> bfs_distances(int src) const;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

// Hitting problems share one shape: delete at most k vertices so that the
// remainder lands in a hereditary family. `cost` is the per-bundle hitting
// charge of that family (how many deletions one bundle can force).
enum class Profile { triangle_hitting, fvs, pseudoforest_deletion, pt_hitting };

struct ProblemProfile {
  Profile kind = Profile::triangle_hitting;
  int cost = 1;    // bundles of this size must be hit by every solution
  int path_t = 0;  // only meaningful for pt_hitting (3..5)
};

ProblemProfile make_profile(Profile kind, int path_t = 0);
std::optional<ProblemProfile> profile_by_name(const std::string& name);

// True iff g belongs to the profile's target family (triangle free, forest,
// pseudoforest, or P_t free).
bool property_holds(const Graph& g, const ProblemProfile& profile);

// True iff removing `sol` (valid distinct ids) lands g in the family.
bool hitting_set_valid(const Graph& g, const std::vector<int>& sol,
                       const ProblemProfile& profile);

// A t-bundle: t vertex-disjoint matching edges plus a center adjacent to all
// 2t matched endpoints. Any induced supergraph still counts.
struct Bundle {
  int center = -1;
  std::vector<std::pair<int, int>> matching;  // each pair sorted, list sorted

  std::vector<int> vertices() const;  // sorted, 2t+1 entries
};

bool is_bundle_of(const Graph& g, const Bundle& b);

// Smallest-center t-bundle if one exists. Deterministic: centers ascending,
// matching chosen as the lexicographically least maximum matching search
// result inside the center's neighborhood.
std::optional<Bundle> find_bundle(const Graph& g, int t);

// Greedy (2t+1)-approximation of a minimum t-bundle hitting set: vertices of
// a maximal vertex-disjoint t-bundle packing, sorted ascending.
std::vector<int> greedy_bundle_hitting(const Graph& g, int t);

// Maximum matching (blossom algorithm). Returns mate[v] (-1 if unmatched).
std::vector<int> max_matching(const Graph& g);
int max_matching_size(const Graph& g);

// Triangles {a, b, c} with a < b < c, sorted lexicographically.
std::vector<std::array<int, 3>> list_triangles(const Graph& g);
bool is_triangle_free(const Graph& g);

// Minimum hitting set by exhaustive search, lex-least among minimums.
// Throws resource_limit_error when n exceeds cap.
std::vector<int> brute_min_hitting(const Graph& g, const ProblemProfile& profile,
                                   int cap = 20);

// All minimum hitting sets, each sorted, list sorted lexicographically.
std::vector<std::vector<int>> brute_min_hitting_all(const Graph& g,
                                                    const ProblemProfile& profile,
                                                    int cap = 20);

// Exact minimum triangle hitting set size via branch and bound with a
// disjoint-packing lower bound. Scales far past the brute oracle.
int th_min_exact(const Graph& g);
bool th_within(const Graph& g, int k);

// Every minimum triangle hitting set, sorted. Throws resource_limit_error if
// more than `limit` distinct optimums exist.
std::vector<std::vector<int>> th_enumerate_min(const Graph& g, std::size_t limit);

// Maximum clique, lex-least among maximums, via Bron-Kerbosch with pivoting.
std::vector<int> max_clique(const Graph& g);

// All maximal cliques (each sorted, list sorted). Throws
// resource_limit_error if their number exceeds cap.
std::vector<std::vector<int>> maximal_cliques(const Graph& g, std::size_t cap);

// True iff g has no K_{t,t} subgraph (sides need not be disjoint from each
// other's neighborhoods beyond the definition: two disjoint t-sets, all
// cross edges present). Supports t in [1, 4].
bool is_ktt_free(const Graph& g, int t);

// Subneighborhood helpers: sub[v] is any subset of N(v).
// Max over u of how many subneighborhoods contain u.
int max_occurrence(int n, const std::vector<std::vector<int>>& sub);
// Matching size inside the subneighborhood of one vertex / the max over all.
int mu_star_of(const Graph& g, const std::vector<std::vector<int>>& sub, int v);
int mu_star(const Graph& g, const std::vector<std::vector<int>>& sub);

// Exact minimum vertex cover: Koenig construction on bipartite components,
// bounded branch and bound elsewhere. Deterministic.
std::vector<int> min_vertex_cover(const Graph& g);

}  // namespace trihit
