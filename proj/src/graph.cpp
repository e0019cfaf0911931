#include "trihit/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "trihit/errors.hpp"

namespace trihit {

namespace {

int popcount_words(const std::vector<std::uint64_t>& w) {
  int c = 0;
  for (std::uint64_t x : w) c += __builtin_popcountll(x);
  return c;
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph size must be nonnegative");
  adj_.resize(static_cast<std::size_t>(n));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n()) throw std::invalid_argument("vertex id out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self loop rejected");
  if (has_edge(u, v)) throw std::invalid_argument("parallel edge rejected");
  adj_[static_cast<std::size_t>(u)].insert(
      std::lower_bound(adj_[static_cast<std::size_t>(u)].begin(),
                       adj_[static_cast<std::size_t>(u)].end(), v),
      v);
  adj_[static_cast<std::size_t>(v)].insert(
      std::lower_bound(adj_[static_cast<std::size_t>(v)].begin(),
                       adj_[static_cast<std::size_t>(v)].end(), u),
      u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int v = 0; v < n(); ++v)
    for (int u : adj_[static_cast<std::size_t>(v)])
      if (u > v) out.emplace_back(v, u);
  return out;
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> where(static_cast<std::size_t>(n()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("induced: ids must be strictly ascending");
    where[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  }
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (int u : adj_[static_cast<std::size_t>(keep[i])]) {
      const int j = where[static_cast<std::size_t>(u)];
      if (j > static_cast<int>(i)) out.add_edge(static_cast<int>(i), j);
    }
  return out;
}

std::pair<Graph, std::vector<int>> Graph::remove(const std::vector<int>& drop) const {
  std::vector<char> gone(static_cast<std::size_t>(n()), 0);
  for (int v : drop) {
    check_vertex(v);
    gone[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> keep;
  for (int v = 0; v < n(); ++v)
    if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
  return {induced(keep), keep};
}

std::vector<std::vector<std::uint64_t>> Graph::adjacency_words() const {
  const std::size_t words = (static_cast<std::size_t>(n()) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(
      static_cast<std::size_t>(n()), std::vector<std::uint64_t>(words, 0));
  for (int v = 0; v < n(); ++v)
    for (int u : adj_[static_cast<std::size_t>(v)])
      rows[static_cast<std::size_t>(v)][static_cast<std::size_t>(u) / 64] |=
          std::uint64_t{1} << (u % 64);
  return rows;
}

std::vector<int> Graph::component_of(int v) const {
  check_vertex(v);
  std::vector<char> seen(static_cast<std::size_t>(n()), 0);
  std::queue<int> q;
  q.push(v);
  seen[static_cast<std::size_t>(v)] = 1;
  std::vector<int> out;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    out.push_back(x);
    for (int u : adj_[static_cast<std::size_t>(x)])
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        q.push(u);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::is_connected() const {
  if (n() == 0) return true;
  return static_cast<int>(component_of(0).size()) == n();
}

std::vector<int> Graph::bfs_distances(int src) const {
  check_vertex(src);
  std::vector<int> dist(static_cast<std::size_t>(n()), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(src)] = 0;
  q.push(src);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int u : adj_[static_cast<std::size_t>(x)])
      if (dist[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(x)] + 1;
        q.push(u);
      }
  }
  return dist;
}

ProblemProfile make_profile(Profile kind, int path_t) {
  ProblemProfile p;
  p.kind = kind;
  switch (kind) {
    case Profile::triangle_hitting:
    case Profile::fvs:
      p.cost = 1;
      break;
    case Profile::pseudoforest_deletion:
      p.cost = 2;
      break;
    case Profile::pt_hitting:
      if (path_t < 3 || path_t > 5)
        throw std::invalid_argument("path hitting supports path lengths 3..5");
      p.cost = 2;
      p.path_t = path_t;
      break;
  }
  return p;
}

std::optional<ProblemProfile> profile_by_name(const std::string& name) {
  if (name == "th") return make_profile(Profile::triangle_hitting);
  if (name == "fvs") return make_profile(Profile::fvs);
  if (name == "pseudoforest") return make_profile(Profile::pseudoforest_deletion);
  if (name == "p3") return make_profile(Profile::pt_hitting, 3);
  if (name == "p4") return make_profile(Profile::pt_hitting, 4);
  if (name == "p5") return make_profile(Profile::pt_hitting, 5);
  return std::nullopt;
}

namespace {

bool is_acyclic(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.n()), -2);
  for (int s = 0; s < g.n(); ++s) {
    if (parent[static_cast<std::size_t>(s)] != -2) continue;
    parent[static_cast<std::size_t>(s)] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u : g.neighbors(v)) {
        if (u == parent[static_cast<std::size_t>(v)]) continue;
        if (parent[static_cast<std::size_t>(u)] != -2) return false;
        parent[static_cast<std::size_t>(u)] = v;
        q.push(u);
      }
    }
  }
  return true;
}

bool is_pseudoforest(const Graph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    const std::vector<int> comp = g.component_of(s);
    long long deg_sum = 0;
    for (int v : comp) {
      seen[static_cast<std::size_t>(v)] = 1;
      deg_sum += g.degree(v);
    }
    if (deg_sum / 2 > static_cast<long long>(comp.size())) return false;
  }
  return true;
}

bool has_path_on(const Graph& g, int t) {
  if (t <= 0) return true;
  if (t == 1) return g.n() > 0;
  std::vector<char> in_path(static_cast<std::size_t>(g.n()), 0);
  std::function<bool(int, int)> extend = [&](int v, int len) {
    if (len == t) return true;
    for (int u : g.neighbors(v)) {
      if (in_path[static_cast<std::size_t>(u)]) continue;
      in_path[static_cast<std::size_t>(u)] = 1;
      const bool ok = extend(u, len + 1);
      in_path[static_cast<std::size_t>(u)] = 0;
      if (ok) return true;
    }
    return false;
  };
  for (int v = 0; v < g.n(); ++v) {
    in_path[static_cast<std::size_t>(v)] = 1;
    const bool ok = extend(v, 1);
    in_path[static_cast<std::size_t>(v)] = 0;
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool property_holds(const Graph& g, const ProblemProfile& profile) {
  switch (profile.kind) {
    case Profile::triangle_hitting:
      return is_triangle_free(g);
    case Profile::fvs:
      return is_acyclic(g);
    case Profile::pseudoforest_deletion:
      return is_pseudoforest(g);
    case Profile::pt_hitting:
      return !has_path_on(g, profile.path_t);
  }
  return false;
}

bool hitting_set_valid(const Graph& g, const std::vector<int>& sol,
                       const ProblemProfile& profile) {
  std::set<int> distinct(sol.begin(), sol.end());
  if (distinct.size() != sol.size())
    throw std::invalid_argument("solution has repeated vertices");
  return property_holds(g.remove(sol).first, profile);
}

std::vector<int> Bundle::vertices() const {
  std::vector<int> out{center};
  for (const auto& [a, b] : matching) {
    out.push_back(a);
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_bundle_of(const Graph& g, const Bundle& b) {
  if (b.matching.empty()) return false;
  const std::vector<int> verts = b.vertices();
  for (std::size_t i = 1; i < verts.size(); ++i)
    if (verts[i] == verts[i - 1]) return false;
  for (const auto& [a, x] : b.matching) {
    if (!g.has_edge(a, x)) return false;
    if (!g.has_edge(b.center, a) || !g.has_edge(b.center, x)) return false;
  }
  return true;
}

std::optional<Bundle> find_bundle(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("bundle size must be positive");
  for (int v = 0; v < g.n(); ++v) {
    const std::vector<int>& nb = g.neighbors(v);
    if (static_cast<int>(nb.size()) < 2 * t) continue;
    const Graph h = g.induced(nb);
    const std::vector<int> mate = max_matching(h);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < h.n(); ++i)
      if (mate[static_cast<std::size_t>(i)] > i)
        pairs.emplace_back(nb[static_cast<std::size_t>(i)],
                           nb[static_cast<std::size_t>(mate[static_cast<std::size_t>(i)])]);
    if (static_cast<int>(pairs.size()) < t) continue;
    pairs.resize(static_cast<std::size_t>(t));
    Bundle b;
    b.center = v;
    b.matching = std::move(pairs);
    return b;
  }
  return std::nullopt;
}

std::vector<int> greedy_bundle_hitting(const Graph& g, int t) {
  std::vector<int> hit;
  Graph cur = g;
  std::vector<int> ids(static_cast<std::size_t>(g.n()));
  std::iota(ids.begin(), ids.end(), 0);
  for (;;) {
    const std::optional<Bundle> b = find_bundle(cur, t);
    if (!b) break;
    std::vector<int> pack = b->vertices();
    for (int v : pack) hit.push_back(ids[static_cast<std::size_t>(v)]);
    auto [next, keep] = cur.remove(pack);
    std::vector<int> next_ids(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
      next_ids[i] = ids[static_cast<std::size_t>(keep[i])];
    cur = std::move(next);
    ids = std::move(next_ids);
  }
  std::sort(hit.begin(), hit.end());
  return hit;
}

namespace {

// Classic blossom-contraction augmenting search. Deterministic for a fixed
// adjacency order.
class Matcher {
 public:
  explicit Matcher(const Graph& g)
      : g_(g),
        n_(g.n()),
        match_(static_cast<std::size_t>(n_), -1),
        p_(static_cast<std::size_t>(n_), -1),
        base_(static_cast<std::size_t>(n_), 0),
        used_(static_cast<std::size_t>(n_), 0),
        blossom_(static_cast<std::size_t>(n_), 0) {}

  std::vector<int> run() {
    for (int v = 0; v < n_; ++v)
      if (match_[static_cast<std::size_t>(v)] == -1) {
        const int u = find_path(v);
        int cur = u;
        while (cur != -1) {
          const int pv = p_[static_cast<std::size_t>(cur)];
          const int ppv = match_[static_cast<std::size_t>(pv)];
          match_[static_cast<std::size_t>(cur)] = pv;
          match_[static_cast<std::size_t>(pv)] = cur;
          cur = ppv;
        }
      }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> mark(static_cast<std::size_t>(n_), 0);
    for (;;) {
      a = base_[static_cast<std::size_t>(a)];
      mark[static_cast<std::size_t>(a)] = 1;
      if (match_[static_cast<std::size_t>(a)] == -1) break;
      a = p_[static_cast<std::size_t>(match_[static_cast<std::size_t>(a)])];
    }
    for (;;) {
      b = base_[static_cast<std::size_t>(b)];
      if (mark[static_cast<std::size_t>(b)]) return b;
      b = p_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[static_cast<std::size_t>(v)] != b) {
      blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
      blossom_[static_cast<std::size_t>(
          base_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])])] = 1;
      p_[static_cast<std::size_t>(v)] = child;
      child = match_[static_cast<std::size_t>(v)];
      v = p_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(p_.begin(), p_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[static_cast<std::size_t>(i)] = i;
    used_[static_cast<std::size_t>(root)] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : g_.neighbors(v)) {
        if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
            match_[static_cast<std::size_t>(v)] == to)
          continue;
        if (to == root ||
            (match_[static_cast<std::size_t>(to)] != -1 &&
             p_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] != -1)) {
          const int cur_base = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i)
            if (blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
              base_[static_cast<std::size_t>(i)] = cur_base;
              if (!used_[static_cast<std::size_t>(i)]) {
                used_[static_cast<std::size_t>(i)] = 1;
                q.push(i);
              }
            }
        } else if (p_[static_cast<std::size_t>(to)] == -1) {
          p_[static_cast<std::size_t>(to)] = v;
          if (match_[static_cast<std::size_t>(to)] == -1) return to;
          used_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] = 1;
          q.push(match_[static_cast<std::size_t>(to)]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_, p_, base_;
  std::vector<char> used_, blossom_;
};

}  // namespace

std::vector<int> max_matching(const Graph& g) { return Matcher(g).run(); }

int max_matching_size(const Graph& g) {
  const std::vector<int> mate = max_matching(g);
  int matched = 0;
  for (int v : mate)
    if (v != -1) ++matched;
  return matched / 2;
}

std::vector<std::array<int, 3>> list_triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  const auto rows = g.adjacency_words();
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      const auto& ru = rows[static_cast<std::size_t>(u)];
      const auto& rv = rows[static_cast<std::size_t>(v)];
      for (std::size_t w = 0; w < ru.size(); ++w) {
        std::uint64_t common = ru[w] & rv[w];
        if (static_cast<int>(w) == v / 64)
          common &= ~((std::uint64_t{2} << (v % 64)) - 1);
        else if (static_cast<int>(w) < v / 64)
          common = 0;
        while (common) {
          const int x = static_cast<int>(w * 64) + __builtin_ctzll(common);
          out.push_back({u, v, x});
          common &= common - 1;
        }
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_triangle_free(const Graph& g) {
  const auto rows = g.adjacency_words();
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      const auto& ru = rows[static_cast<std::size_t>(u)];
      const auto& rv = rows[static_cast<std::size_t>(v)];
      for (std::size_t w = 0; w < ru.size(); ++w)
        if (ru[w] & rv[w]) return false;
    }
  return true;
}

namespace {

bool combination_valid(const Graph& g, const std::vector<int>& sol,
                       const ProblemProfile& profile) {
  return property_holds(g.remove(sol).first, profile);
}

// Visits size-ascending, lexicographic combinations until `visit` says stop.
void for_each_combination(int n, const std::function<bool(const std::vector<int>&)>& visit) {
  for (int size = 0; size <= n; ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      if (!visit(pick)) return;
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

void check_oracle_cap(const Graph& g, int cap) {
  if (g.n() > cap)
    throw resource_limit_error("oracle too large: " + std::to_string(g.n()) +
                               " vertices exceeds cap " + std::to_string(cap));
}

}  // namespace

std::vector<int> brute_min_hitting(const Graph& g, const ProblemProfile& profile,
                                   int cap) {
  check_oracle_cap(g, cap);
  std::vector<std::uint64_t> tri_masks;
  const bool use_masks = profile.kind == Profile::triangle_hitting && g.n() <= 63;
  if (use_masks)
    for (const auto& t : list_triangles(g))
      tri_masks.push_back((std::uint64_t{1} << t[0]) | (std::uint64_t{1} << t[1]) |
                          (std::uint64_t{1} << t[2]));
  std::vector<int> best;
  bool found = false;
  for_each_combination(g.n(), [&](const std::vector<int>& pick) {
    bool ok;
    if (use_masks) {
      std::uint64_t mask = 0;
      for (int v : pick) mask |= std::uint64_t{1} << v;
      ok = std::all_of(tri_masks.begin(), tri_masks.end(),
                       [&](std::uint64_t t) { return (t & mask) != 0; });
    } else {
      ok = combination_valid(g, pick, profile);
    }
    if (ok) {
      best = pick;
      found = true;
      return false;
    }
    return true;
  });
  if (!found) throw std::logic_error("hitting search exhausted without a solution");
  return best;
}

std::vector<std::vector<int>> brute_min_hitting_all(const Graph& g,
                                                    const ProblemProfile& profile,
                                                    int cap) {
  const std::vector<int> first = brute_min_hitting(g, profile, cap);
  const int size = static_cast<int>(first.size());
  std::vector<std::vector<int>> out;
  for_each_combination(g.n(), [&](const std::vector<int>& pick) {
    if (static_cast<int>(pick.size()) < size) return true;
    if (static_cast<int>(pick.size()) > size) return false;
    if (combination_valid(g, pick, profile)) out.push_back(pick);
    return true;
  });
  return out;
}

namespace {

// Shared state for the exact triangle hitting search. Triangles are covered
// once any of their vertices is marked removed.
struct ThState {
  std::vector<std::array<int, 3>> tris;
  std::vector<char> removed;

  explicit ThState(const Graph& g)
      : tris(list_triangles(g)), removed(static_cast<std::size_t>(g.n()), 0) {}

  bool covered(const std::array<int, 3>& t) const {
    return removed[static_cast<std::size_t>(t[0])] ||
           removed[static_cast<std::size_t>(t[1])] ||
           removed[static_cast<std::size_t>(t[2])];
  }

  const std::array<int, 3>* first_uncovered() const {
    for (const auto& t : tris)
      if (!covered(t)) return &t;
    return nullptr;
  }

  // Greedy vertex-disjoint packing of uncovered triangles: a lower bound on
  // how many more removals any completion needs.
  int packing_bound() const {
    std::vector<char> used(removed.size(), 0);
    int packed = 0;
    for (const auto& t : tris) {
      if (covered(t)) continue;
      if (used[static_cast<std::size_t>(t[0])] || used[static_cast<std::size_t>(t[1])] ||
          used[static_cast<std::size_t>(t[2])])
        continue;
      used[static_cast<std::size_t>(t[0])] = 1;
      used[static_cast<std::size_t>(t[1])] = 1;
      used[static_cast<std::size_t>(t[2])] = 1;
      ++packed;
    }
    return packed;
  }

  int greedy_upper_bound() {
    std::vector<int> taken;
    for (;;) {
      const auto* t = first_uncovered();
      if (!t) break;
      int best_v = -1, best_gain = -1;
      for (int v = 0; v < static_cast<int>(removed.size()); ++v) {
        if (removed[static_cast<std::size_t>(v)]) continue;
        int gain = 0;
        for (const auto& tr : tris)
          if (!covered(tr) && (tr[0] == v || tr[1] == v || tr[2] == v)) ++gain;
        if (gain > best_gain) {
          best_gain = gain;
          best_v = v;
        }
      }
      removed[static_cast<std::size_t>(best_v)] = 1;
      taken.push_back(best_v);
    }
    for (int v : taken) removed[static_cast<std::size_t>(v)] = 0;
    return static_cast<int>(taken.size());
  }
};

void th_search(ThState& st, int count, int& best) {
  if (count + st.packing_bound() >= best) return;
  const auto* t = st.first_uncovered();
  if (!t) {
    best = count;
    return;
  }
  for (int v : *t) {
    st.removed[static_cast<std::size_t>(v)] = 1;
    th_search(st, count + 1, best);
    st.removed[static_cast<std::size_t>(v)] = 0;
  }
}

bool th_decision(ThState& st, int count, int budget) {
  if (count + st.packing_bound() > budget) return false;
  const auto* t = st.first_uncovered();
  if (!t) return true;
  for (int v : *t) {
    st.removed[static_cast<std::size_t>(v)] = 1;
    const bool ok = th_decision(st, count + 1, budget);
    st.removed[static_cast<std::size_t>(v)] = 0;
    if (ok) return true;
  }
  return false;
}

void th_collect(ThState& st, std::vector<int>& chosen, int target,
                std::set<std::vector<int>>& out, std::size_t limit) {
  if (static_cast<int>(chosen.size()) + st.packing_bound() > target) return;
  const auto* t = st.first_uncovered();
  if (!t) {
    if (static_cast<int>(chosen.size()) == target) {
      std::vector<int> sol = chosen;
      std::sort(sol.begin(), sol.end());
      out.insert(std::move(sol));
      if (out.size() > limit)
        throw resource_limit_error("minimum hitting set count exceeds limit");
    }
    return;
  }
  for (int v : *t) {
    if (st.removed[static_cast<std::size_t>(v)]) continue;
    st.removed[static_cast<std::size_t>(v)] = 1;
    chosen.push_back(v);
    th_collect(st, chosen, target, out, limit);
    chosen.pop_back();
    st.removed[static_cast<std::size_t>(v)] = 0;
  }
}

}  // namespace

int th_min_exact(const Graph& g) {
  ThState st(g);
  int best = st.greedy_upper_bound();
  th_search(st, 0, best);
  return best;
}

bool th_within(const Graph& g, int k) {
  if (k < 0) return false;
  ThState st(g);
  return th_decision(st, 0, k);
}

std::vector<std::vector<int>> th_enumerate_min(const Graph& g, std::size_t limit) {
  const int target = th_min_exact(g);
  ThState st(g);
  std::vector<int> chosen;
  std::set<std::vector<int>> out;
  th_collect(st, chosen, target, out, limit);
  return {out.begin(), out.end()};
}

namespace {

using Words = std::vector<std::uint64_t>;

Words words_and(const Words& a, const Words& b) {
  Words out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

struct CliqueSearch {
  const std::vector<Words>& rows;
  std::size_t words;
  std::function<void(const std::vector<int>&)> report;

  void expand(std::vector<int>& r, Words p, Words x) {
    if (popcount_words(p) == 0 && popcount_words(x) == 0) {
      report(r);
      return;
    }
    // Pivot on the vertex of P | X with most candidates in P.
    int pivot = -1, best = -1;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t both = p[w] | x[w];
      while (both) {
        const int v = static_cast<int>(w * 64) + __builtin_ctzll(both);
        both &= both - 1;
        const int cnt = popcount_words(words_and(p, rows[static_cast<std::size_t>(v)]));
        if (cnt > best) {
          best = cnt;
          pivot = v;
        }
      }
    }
    Words candidates = p;
    if (pivot >= 0)
      for (std::size_t w = 0; w < words; ++w)
        candidates[w] &= ~rows[static_cast<std::size_t>(pivot)][w];
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t c = candidates[w];
      while (c) {
        const int v = static_cast<int>(w * 64) + __builtin_ctzll(c);
        c &= c - 1;
        r.push_back(v);
        expand(r, words_and(p, rows[static_cast<std::size_t>(v)]),
               words_and(x, rows[static_cast<std::size_t>(v)]));
        r.pop_back();
        p[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
        x[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
      }
    }
  }
};

void enumerate_maximal_cliques(const Graph& g,
                               const std::function<void(const std::vector<int>&)>& report) {
  if (g.n() == 0) return;
  const auto rows = g.adjacency_words();
  const std::size_t words = rows[0].size();
  Words p(words, 0), x(words, 0);
  for (int v = 0; v < g.n(); ++v)
    p[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
  CliqueSearch search{rows, words, report};
  std::vector<int> r;
  search.expand(r, std::move(p), std::move(x));
}

}  // namespace

std::vector<int> max_clique(const Graph& g) {
  std::vector<int> best;
  enumerate_maximal_cliques(g, [&](const std::vector<int>& r) {
    std::vector<int> sorted = r;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() > best.size() || (sorted.size() == best.size() && sorted < best))
      best = std::move(sorted);
  });
  return best;
}

std::vector<std::vector<int>> maximal_cliques(const Graph& g, std::size_t cap) {
  std::vector<std::vector<int>> out;
  enumerate_maximal_cliques(g, [&](const std::vector<int>& r) {
    if (out.size() >= cap)
      throw resource_limit_error("maximal clique count exceeds cap");
    std::vector<int> sorted = r;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Depth-first choice of the side A; prunes once the running common
// neighborhood cannot hold t vertices outside A.
bool ktt_search(const std::vector<Words>& rows, int n, int t, int next, int picked,
                const Words& common, std::vector<int>& side) {
  if (picked == t) {
    Words rest = common;
    for (int a : side)
      rest[static_cast<std::size_t>(a) / 64] &= ~(std::uint64_t{1} << (a % 64));
    return popcount_words(rest) >= t;
  }
  for (int v = next; v <= n - (t - picked); ++v) {
    const Words cut = picked == 0 ? rows[static_cast<std::size_t>(v)]
                                  : words_and(common, rows[static_cast<std::size_t>(v)]);
    if (popcount_words(cut) < t) continue;
    side.push_back(v);
    if (ktt_search(rows, n, t, v + 1, picked + 1, cut, side)) return true;
    side.pop_back();
  }
  return false;
}

}  // namespace

bool is_ktt_free(const Graph& g, int t) {
  if (t < 1 || t > 4) throw std::invalid_argument("biclique test supports t in 1..4");
  if (t == 1) return g.m() == 0;
  const auto rows = g.adjacency_words();
  std::vector<int> side;
  Words empty;
  return !ktt_search(rows, g.n(), t, 0, 0, empty, side);
}

int max_occurrence(int n, const std::vector<std::vector<int>>& sub) {
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (const auto& s : sub)
    for (int u : s) {
      if (u < 0 || u >= n) throw std::invalid_argument("subneighborhood id out of range");
      ++count[static_cast<std::size_t>(u)];
    }
  int best = 0;
  for (int c : count) best = std::max(best, c);
  return best;
}

int mu_star_of(const Graph& g, const std::vector<std::vector<int>>& sub, int v) {
  if (v < 0 || v >= static_cast<int>(sub.size()))
    throw std::invalid_argument("vertex id out of range");
  std::vector<int> ids = sub[static_cast<std::size_t>(v)];
  std::sort(ids.begin(), ids.end());
  return max_matching_size(g.induced(ids));
}

int mu_star(const Graph& g, const std::vector<std::vector<int>>& sub) {
  int best = 0;
  for (int v = 0; v < static_cast<int>(sub.size()); ++v)
    best = std::max(best, mu_star_of(g, sub, v));
  return best;
}

namespace {

// Exact cover search for one non-bipartite component. Prunes with a greedy
// matching lower bound; strict improvement keeps the result deterministic.
struct VcSearch {
  const Graph& g;
  std::vector<char> chosen;
  std::vector<int> stack;
  std::vector<int> best;

  explicit VcSearch(const Graph& graph)
      : g(graph), chosen(static_cast<std::size_t>(graph.n()), 0) {
    best.resize(static_cast<std::size_t>(graph.n()));
    std::iota(best.begin(), best.end(), 0);
  }

  std::pair<int, int> first_uncovered() const {
    for (const auto& [u, v] : g.edges())
      if (!chosen[static_cast<std::size_t>(u)] && !chosen[static_cast<std::size_t>(v)])
        return {u, v};
    return {-1, -1};
  }

  int matching_bound() const {
    std::vector<char> used = chosen;
    int size = 0;
    for (const auto& [u, v] : g.edges())
      if (!used[static_cast<std::size_t>(u)] && !used[static_cast<std::size_t>(v)]) {
        used[static_cast<std::size_t>(u)] = 1;
        used[static_cast<std::size_t>(v)] = 1;
        ++size;
      }
    return size;
  }

  void run() {
    if (static_cast<int>(stack.size()) + matching_bound() >=
        static_cast<int>(best.size()))
      return;
    const auto [u, v] = first_uncovered();
    if (u < 0) {
      best = stack;
      std::sort(best.begin(), best.end());
      return;
    }
    for (int w : {u, v}) {
      chosen[static_cast<std::size_t>(w)] = 1;
      stack.push_back(w);
      run();
      stack.pop_back();
      chosen[static_cast<std::size_t>(w)] = 0;
    }
  }
};

// Koenig-Egervary construction: unmatched left vertices, alternating
// reachability, cover = (L minus reached) + (R reached).
std::vector<int> koenig_cover(const Graph& g, const std::vector<int>& color) {
  const std::vector<int> mate = max_matching(g);
  std::vector<char> reached(static_cast<std::size_t>(g.n()), 0);
  std::queue<int> q;
  for (int v = 0; v < g.n(); ++v)
    if (color[static_cast<std::size_t>(v)] == 0 && mate[static_cast<std::size_t>(v)] == -1) {
      reached[static_cast<std::size_t>(v)] = 1;
      q.push(v);
    }
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    if (color[static_cast<std::size_t>(v)] == 0) {
      for (int u : g.neighbors(v))
        if (mate[static_cast<std::size_t>(v)] != u && !reached[static_cast<std::size_t>(u)]) {
          reached[static_cast<std::size_t>(u)] = 1;
          q.push(u);
        }
    } else {
      const int u = mate[static_cast<std::size_t>(v)];
      if (u != -1 && !reached[static_cast<std::size_t>(u)]) {
        reached[static_cast<std::size_t>(u)] = 1;
        q.push(u);
      }
    }
  }
  std::vector<int> cover;
  for (int v = 0; v < g.n(); ++v) {
    const bool left = color[static_cast<std::size_t>(v)] == 0;
    const bool z = reached[static_cast<std::size_t>(v)] != 0;
    if (left != z) cover.push_back(v);  // (L minus Z) union (R intersect Z)
  }
  return cover;
}

}  // namespace

std::vector<int> min_vertex_cover(const Graph& g) {
  std::vector<int> cover;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    const std::vector<int> comp = g.component_of(s);
    for (int v : comp) seen[static_cast<std::size_t>(v)] = 1;
    const Graph sub = g.induced(comp);
    std::vector<int> color(static_cast<std::size_t>(sub.n()), -1);
    bool bipartite = true;
    std::queue<int> q;
    color[0] = 0;
    q.push(0);
    while (!q.empty() && bipartite) {
      const int v = q.front();
      q.pop();
      for (int u : sub.neighbors(v)) {
        if (color[static_cast<std::size_t>(u)] == -1) {
          color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
          q.push(u);
        } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
          bipartite = false;
          break;
        }
      }
    }
    std::vector<int> local;
    if (bipartite) {
      local = koenig_cover(sub, color);
    } else {
      VcSearch search(sub);
      search.run();
      local = search.best;
    }
    for (int v : local) cover.push_back(comp[static_cast<std::size_t>(v)]);
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

}  // namespace trihit
