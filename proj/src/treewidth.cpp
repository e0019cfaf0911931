#include "trihit/treewidth.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "trihit/errors.hpp"

namespace trihit {

namespace {

constexpr long long kInf = LLONG_MAX / 4;
constexpr int kMaxDpBag = 25;

TreeDecomposition decomposition_from_order(const Graph& g,
                                           const std::vector<int>& order) {
  const int n = g.n();
  std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)].insert(v);
    adj[static_cast<std::size_t>(v)].insert(u);
  }
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

  TreeDecomposition td;
  td.bags.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int v = order[static_cast<std::size_t>(i)];
    std::vector<int> later(adj[static_cast<std::size_t>(v)].begin(),
                           adj[static_cast<std::size_t>(v)].end());
    std::vector<int> bag = later;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags[static_cast<std::size_t>(i)] = std::move(bag);
    // Eliminating v turns its remaining neighborhood into a clique.
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        adj[static_cast<std::size_t>(later[a])].insert(later[b]);
        adj[static_cast<std::size_t>(later[b])].insert(later[a]);
      }
    for (int u : later) adj[static_cast<std::size_t>(u)].erase(v);
    if (!later.empty()) {
      int next = later.front();
      for (int u : later)
        if (position[static_cast<std::size_t>(u)] < position[static_cast<std::size_t>(next)])
          next = u;
      td.tree_edges.emplace_back(i, position[static_cast<std::size_t>(next)]);
    } else if (i + 1 < n) {
      td.tree_edges.emplace_back(i, i + 1);
    }
  }
  int widest = 0;
  for (const auto& bag : td.bags) widest = std::max(widest, static_cast<int>(bag.size()));
  td.width = widest - 1;
  return td;
}

// Greedy elimination order; score is the number of fill edges (min-fill) or
// the current degree (min-degree), smallest vertex id breaking ties.
std::vector<int> greedy_order(const Graph& g, bool fill_score) {
  const int n = g.n();
  std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)].insert(v);
    adj[static_cast<std::size_t>(v)].insert(u);
  }
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long long best_score = 0;
    for (int v = 0; v < n; ++v) {
      if (gone[static_cast<std::size_t>(v)]) continue;
      long long score = 0;
      if (fill_score) {
        const std::vector<int> nb(adj[static_cast<std::size_t>(v)].begin(),
                                  adj[static_cast<std::size_t>(v)].end());
        for (std::size_t a = 0; a < nb.size(); ++a)
          for (std::size_t b = a + 1; b < nb.size(); ++b)
            if (!adj[static_cast<std::size_t>(nb[a])].count(nb[b])) ++score;
      } else {
        score = static_cast<long long>(adj[static_cast<std::size_t>(v)].size());
      }
      if (best < 0 || score < best_score) {
        best = v;
        best_score = score;
      }
    }
    order.push_back(best);
    const std::vector<int> nb(adj[static_cast<std::size_t>(best)].begin(),
                              adj[static_cast<std::size_t>(best)].end());
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        adj[static_cast<std::size_t>(nb[a])].insert(nb[b]);
        adj[static_cast<std::size_t>(nb[b])].insert(nb[a]);
      }
    for (int u : nb) adj[static_cast<std::size_t>(u)].erase(best);
    gone[static_cast<std::size_t>(best)] = 1;
  }
  return order;
}

// Fill degree of v when eliminated right after the prefix set s: neighbors
// of v outside s reachable through s. visited tracks expanded s-vertices.
int elimination_degree(const Graph& g, std::uint32_t s, int v) {
  std::uint32_t visited = 1u << v;
  std::uint32_t frontier = 1u << v;
  int count = 0;
  std::uint32_t counted = 0;
  while (frontier) {
    const int x = __builtin_ctz(frontier);
    frontier &= frontier - 1;
    for (int u : g.neighbors(x)) {
      const std::uint32_t bit = 1u << u;
      if (s & bit) {
        if (!(visited & bit)) {
          visited |= bit;
          frontier |= bit;
        }
      } else if (u != v && !(counted & bit)) {
        counted |= bit;
        ++count;
      }
    }
  }
  return count;
}

}  // namespace

bool validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int n = g.n();
  const int bags = static_cast<int>(td.bags.size());
  if (bags == 0) return n == 0 && td.tree_edges.empty() && td.width == -1;

  int widest = 0;
  for (const auto& bag : td.bags) {
    for (std::size_t i = 0; i < bag.size(); ++i) {
      if (bag[i] < 0 || bag[i] >= n) return false;
      if (i > 0 && bag[i] <= bag[i - 1]) return false;
    }
    widest = std::max(widest, static_cast<int>(bag.size()));
  }
  if (td.width != widest - 1) return false;

  // Tree shape: exactly bags-1 distinct edges and one component.
  if (static_cast<int>(td.tree_edges.size()) != bags - 1) return false;
  std::vector<std::vector<int>> tree(static_cast<std::size_t>(bags));
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || a >= bags || b >= bags || a == b) return false;
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) return false;
    tree[static_cast<std::size_t>(a)].push_back(b);
    tree[static_cast<std::size_t>(b)].push_back(a);
  }
  {
    std::vector<char> reached(static_cast<std::size_t>(bags), 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      for (int u : tree[static_cast<std::size_t>(t)])
        if (!reached[static_cast<std::size_t>(u)]) {
          reached[static_cast<std::size_t>(u)] = 1;
          stack.push_back(u);
        }
    }
    for (char r : reached)
      if (!r) return false;
  }

  std::vector<std::vector<int>> holding(static_cast<std::size_t>(n));
  for (int t = 0; t < bags; ++t)
    for (int v : td.bags[static_cast<std::size_t>(t)])
      holding[static_cast<std::size_t>(v)].push_back(t);

  for (int v = 0; v < n; ++v) {
    const auto& occ = holding[static_cast<std::size_t>(v)];
    if (occ.empty()) return false;  // vertex coverage
    // Occurrence connectivity within the tree.
    std::set<int> in_occ(occ.begin(), occ.end());
    std::set<int> reached{occ.front()};
    std::vector<int> stack{occ.front()};
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      for (int u : tree[static_cast<std::size_t>(t)])
        if (in_occ.count(u) && reached.insert(u).second) stack.push_back(u);
    }
    if (reached.size() != in_occ.size()) return false;
  }

  for (const auto& [u, v] : g.edges()) {
    bool housed = false;
    for (int t : holding[static_cast<std::size_t>(u)])
      if (std::binary_search(td.bags[static_cast<std::size_t>(t)].begin(),
                             td.bags[static_cast<std::size_t>(t)].end(), v)) {
        housed = true;
        break;
      }
    if (!housed) return false;  // edge coverage
  }
  return true;
}

TreeDecomposition heuristic_decomposition(const Graph& g) {
  if (g.n() == 0) return {};
  TreeDecomposition best;
  for (const bool fill : {true, false}) {
    TreeDecomposition td = decomposition_from_order(g, greedy_order(g, fill));
    if (!validate_decomposition(g, td))
      throw std::logic_error("heuristic produced an invalid decomposition");
    if (best.bags.empty() || td.width < best.width) best = std::move(td);
  }
  return best;
}

std::optional<TreeDecomposition> exact_decomposition_small(const Graph& g,
                                                           int max_width) {
  const int n = g.n();
  if (n > 16)
    throw std::invalid_argument("exact decomposition limited to 16 vertices");
  if (n == 0) return TreeDecomposition{};

  // f[s] = least achievable maximum elimination degree over orderings of the
  // prefix set s.
  const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
  std::vector<int> f(static_cast<std::size_t>(full) + 1, INT_MAX);
  f[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = INT_MAX;
    for (std::uint32_t rest = s; rest;) {
      const int v = __builtin_ctz(rest);
      rest &= rest - 1;
      const std::uint32_t prev = s & ~(1u << v);
      if (f[prev] == INT_MAX) continue;
      best = std::min(best, std::max(f[prev], elimination_degree(g, prev, v)));
    }
    f[s] = best;
  }
  if (f[full] > max_width) return std::nullopt;

  std::vector<int> order(static_cast<std::size_t>(n));
  std::uint32_t s = full;
  for (int i = n - 1; i >= 0; --i) {
    for (std::uint32_t rest = s;;) {
      const int v = __builtin_ctz(rest);
      rest &= rest - 1;
      const std::uint32_t prev = s & ~(1u << v);
      if (f[prev] != INT_MAX &&
          std::max(f[prev], elimination_degree(g, prev, v)) == f[s]) {
        order[static_cast<std::size_t>(i)] = v;
        s = prev;
        break;
      }
    }
  }
  TreeDecomposition td = decomposition_from_order(g, order);
  if (!validate_decomposition(g, td) || td.width != f[full])
    throw std::logic_error("exact decomposition reconstruction failed");
  return td;
}

namespace {

struct NiceNode {
  enum Kind { leaf, introduce, forget, join } kind = leaf;
  int v = -1;
  std::vector<int> bag;
  int left = -1;
  int right = -1;
};

class NiceTree {
 public:
  explicit NiceTree(const TreeDecomposition& td) {
    const int bags = static_cast<int>(td.bags.size());
    std::vector<std::vector<int>> tree(static_cast<std::size_t>(bags));
    for (const auto& [a, b] : td.tree_edges) {
      tree[static_cast<std::size_t>(a)].push_back(b);
      tree[static_cast<std::size_t>(b)].push_back(a);
    }
    int top = build(td, tree, 0, -1);
    // Forget the root bag down to the empty set.
    std::vector<int> bag = nodes_[static_cast<std::size_t>(top)].bag;
    for (int v : bag) {
      std::vector<int> shrunk = nodes_[static_cast<std::size_t>(top)].bag;
      shrunk.erase(std::find(shrunk.begin(), shrunk.end(), v));
      top = add({NiceNode::forget, v, std::move(shrunk), top, -1});
    }
    root_ = top;
  }

  const std::vector<NiceNode>& nodes() const { return nodes_; }
  int root() const { return root_; }

 private:
  int add(NiceNode node) {
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size()) - 1;
  }

  // Introduce chain from the empty bag up to target.
  int chain_from_empty(const std::vector<int>& target) {
    int cur = add({NiceNode::leaf, -1, {}, -1, -1});
    std::vector<int> bag;
    for (int v : target) {
      bag.push_back(v);
      cur = add({NiceNode::introduce, v, bag, cur, -1});
    }
    return cur;
  }

  // Forget sub's extra vertices, then introduce the missing ones, ending at
  // exactly the bag `target`.
  int morph(int sub, const std::vector<int>& target) {
    const std::vector<int> original = nodes_[static_cast<std::size_t>(sub)].bag;
    std::vector<int> bag = original;
    int cur = sub;
    for (int v : original)
      if (!std::binary_search(target.begin(), target.end(), v)) {
        bag.erase(std::find(bag.begin(), bag.end(), v));
        cur = add({NiceNode::forget, v, bag, cur, -1});
      }
    for (int v : target)
      if (!std::binary_search(bag.begin(), bag.end(), v)) {
        bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
        cur = add({NiceNode::introduce, v, bag, cur, -1});
      }
    return cur;
  }

  int build(const TreeDecomposition& td, const std::vector<std::vector<int>>& tree,
            int t, int parent) {
    std::vector<int> branches;
    for (int c : tree[static_cast<std::size_t>(t)]) {
      if (c == parent) continue;
      branches.push_back(
          morph(build(td, tree, c, t), td.bags[static_cast<std::size_t>(t)]));
    }
    if (branches.empty()) return chain_from_empty(td.bags[static_cast<std::size_t>(t)]);
    int cur = branches.front();
    for (std::size_t i = 1; i < branches.size(); ++i)
      cur = add({NiceNode::join, -1, td.bags[static_cast<std::size_t>(t)], cur,
                 branches[i]});
    return cur;
  }

  std::vector<NiceNode> nodes_;
  int root_ = -1;
};

int index_in(const std::vector<int>& bag, int v) {
  return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

// Child mask of an introduce node's mask: drop the introduced bit.
std::uint32_t drop_bit(std::uint32_t mask, int pos) {
  const std::uint32_t low = mask & ((1u << pos) - 1);
  return low | ((mask >> (pos + 1)) << pos);
}

std::uint32_t insert_bit(std::uint32_t mask, int pos, bool set) {
  const std::uint32_t low = mask & ((1u << pos) - 1);
  return low | ((set ? 1u : 0u) << pos) | ((mask >> pos) << (pos + 1));
}

}  // namespace

std::optional<std::pair<std::vector<int>, long long>> weighted_th_dp(
    const WeightedInstance& w, const TreeDecomposition& td) {
  const Graph& g = w.graph;
  if (static_cast<int>(w.weights.size()) != g.n())
    throw std::invalid_argument("weighted instance needs one weight per vertex");
  for (long long wt : w.weights)
    if (wt <= 0) throw std::invalid_argument("weights must be positive");
  if (!validate_decomposition(g, td))
    throw std::invalid_argument("invalid tree decomposition");
  if (g.n() == 0) {
    if (w.budget < 0) return std::nullopt;
    return std::make_pair(std::vector<int>{}, 0LL);
  }
  if (td.width + 1 > kMaxDpBag)
    throw resource_limit_error("bag size exceeds the DP budget");

  // Every triangle lies inside some bag; this is what makes the per-bag
  // state check below complete.
  for (const auto& tri : list_triangles(g)) {
    bool housed = false;
    for (const auto& bag : td.bags)
      if (std::binary_search(bag.begin(), bag.end(), tri[0]) &&
          std::binary_search(bag.begin(), bag.end(), tri[1]) &&
          std::binary_search(bag.begin(), bag.end(), tri[2])) {
        housed = true;
        break;
      }
    if (!housed) throw std::logic_error("triangle escapes every bag");
  }

  const NiceTree nice(td);
  const auto& nodes = nice.nodes();
  std::vector<std::vector<long long>> dp(nodes.size());
  // Pairs of bag vertices forming a triangle with the introduced vertex,
  // encoded as kept-bit masks over the node bag.
  std::vector<std::vector<std::uint32_t>> tri_pairs(nodes.size());

  for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
    const NiceNode& node = nodes[idx];
    const std::size_t states = std::size_t{1} << node.bag.size();
    dp[idx].assign(states, kInf);
    switch (node.kind) {
      case NiceNode::leaf:
        dp[idx][0] = 0;
        break;
      case NiceNode::introduce: {
        const int pos = index_in(node.bag, node.v);
        auto& pairs = tri_pairs[idx];
        for (std::size_t a = 0; a < node.bag.size(); ++a)
          for (std::size_t b = a + 1; b < node.bag.size(); ++b) {
            if (static_cast<int>(a) == pos || static_cast<int>(b) == pos) continue;
            if (g.has_edge(node.v, node.bag[a]) && g.has_edge(node.v, node.bag[b]) &&
                g.has_edge(node.bag[a], node.bag[b]))
              pairs.push_back((1u << a) | (1u << b));
          }
        const auto& child = dp[static_cast<std::size_t>(node.left)];
        for (std::uint32_t mask = 0; mask < states; ++mask) {
          const long long base = child[drop_bit(mask, pos)];
          if (base >= kInf) continue;
          if (mask & (1u << pos)) {
            dp[idx][mask] = base + w.weights[static_cast<std::size_t>(node.v)];
          } else {
            bool ok = true;
            for (std::uint32_t pm : pairs)
              if ((mask & pm) == 0) {
                ok = false;
                break;
              }
            if (ok) dp[idx][mask] = base;
          }
        }
        break;
      }
      case NiceNode::forget: {
        const auto& child_bag = nodes[static_cast<std::size_t>(node.left)].bag;
        const int pos = index_in(child_bag, node.v);
        const auto& child = dp[static_cast<std::size_t>(node.left)];
        for (std::uint32_t mask = 0; mask < states; ++mask)
          dp[idx][mask] = std::min(child[insert_bit(mask, pos, false)],
                                   child[insert_bit(mask, pos, true)]);
        break;
      }
      case NiceNode::join: {
        const auto& l = dp[static_cast<std::size_t>(node.left)];
        const auto& r = dp[static_cast<std::size_t>(node.right)];
        for (std::uint32_t mask = 0; mask < states; ++mask) {
          if (l[mask] >= kInf || r[mask] >= kInf) continue;
          long long shared = 0;
          for (std::size_t b = 0; b < node.bag.size(); ++b)
            if (mask & (1u << b))
              shared += w.weights[static_cast<std::size_t>(node.bag[b])];
          dp[idx][mask] = l[mask] + r[mask] - shared;
        }
        break;
      }
    }
  }

  const long long optimum = dp[static_cast<std::size_t>(nice.root())][0];
  if (optimum >= kInf) throw std::logic_error("DP found no state");

  std::set<int> chosen;
  std::vector<std::pair<int, std::uint32_t>> stack{{nice.root(), 0}};
  while (!stack.empty()) {
    const auto [idx, mask] = stack.back();
    stack.pop_back();
    const NiceNode& node = nodes[static_cast<std::size_t>(idx)];
    switch (node.kind) {
      case NiceNode::leaf:
        break;
      case NiceNode::introduce: {
        const int pos = index_in(node.bag, node.v);
        if (mask & (1u << pos)) chosen.insert(node.v);
        stack.emplace_back(node.left, drop_bit(mask, pos));
        break;
      }
      case NiceNode::forget: {
        const auto& child_bag = nodes[static_cast<std::size_t>(node.left)].bag;
        const int pos = index_in(child_bag, node.v);
        const auto& child = dp[static_cast<std::size_t>(node.left)];
        const std::uint32_t kept = insert_bit(mask, pos, false);
        const std::uint32_t deleted = insert_bit(mask, pos, true);
        stack.emplace_back(node.left,
                           child[kept] <= child[deleted] ? kept : deleted);
        break;
      }
      case NiceNode::join:
        stack.emplace_back(node.left, mask);
        stack.emplace_back(node.right, mask);
        break;
    }
  }

  std::vector<int> solution(chosen.begin(), chosen.end());
  long long total = 0;
  for (int v : solution) total += w.weights[static_cast<std::size_t>(v)];
  if (total != optimum) throw std::logic_error("DP weight accounting mismatch");
  if (!is_triangle_free(g.remove(solution).first))
    throw std::logic_error("DP solution leaves a triangle");
  if (optimum > w.budget) return std::nullopt;
  return std::make_pair(std::move(solution), optimum);
}

}  // namespace trihit
