#include "trihit/reduce.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace trihit {

namespace {

std::vector<char> membership_flags(const Graph& g, const std::vector<int>& m,
                                   const char* who) {
  std::vector<char> in_m(static_cast<std::size_t>(g.n()), 0);
  for (int v : m) {
    if (v < 0 || v >= g.n())
      throw std::invalid_argument(std::string(who) + ": vertex id out of range");
    if (in_m[static_cast<std::size_t>(v)])
      throw std::invalid_argument(std::string(who) + ": duplicate vertex " +
                                  std::to_string(v));
    in_m[static_cast<std::size_t>(v)] = 1;
  }
  return in_m;
}

}  // namespace

WeightedInstance twin_merge(const Graph& g, const std::vector<int>& m,
                            const std::vector<long long>& weights, long long budget) {
  if (static_cast<int>(weights.size()) != g.n())
    throw std::invalid_argument("twin merge: one weight per vertex required");
  for (long long w : weights)
    if (w <= 0) throw std::invalid_argument("twin merge: weights must be positive");
  const std::vector<char> in_m = membership_flags(g, m, "twin merge");

  const auto [rest, kept_ids] = g.remove(m);
  const auto leftover = list_triangles(rest);
  if (!leftover.empty())
    throw std::invalid_argument(
        "twin merge: not a triangle hitting set, triangle through vertex " +
        std::to_string(kept_ids[static_cast<std::size_t>(leftover.front()[0])]));
  for (int v : m) {
    std::vector<int> outside;
    for (int u : g.neighbors(v))
      if (!in_m[static_cast<std::size_t>(u)]) outside.push_back(u);
    for (std::size_t i = 0; i < outside.size(); ++i)
      for (std::size_t j = i + 1; j < outside.size(); ++j)
        if (g.has_edge(outside[i], outside[j]))
          throw std::invalid_argument(
              "twin merge: neighborhood outside the hitting set is not independent "
              "at vertex " +
              std::to_string(v));
  }

  // Group the outside vertices by their m-neighborhood; drop the ones with
  // none (they lie in no triangle).
  std::map<std::vector<int>, std::vector<int>> classes;
  for (int u = 0; u < g.n(); ++u) {
    if (in_m[static_cast<std::size_t>(u)]) continue;
    std::vector<int> key;
    for (int x : g.neighbors(u))
      if (in_m[static_cast<std::size_t>(x)]) key.push_back(x);
    if (!key.empty()) classes[key].push_back(u);
  }

  std::vector<int> kept = m;
  std::map<int, std::vector<int>> class_by_rep;
  for (const auto& [key, members] : classes)
    class_by_rep.emplace(members.front(), members);
  for (const auto& [rep, members] : class_by_rep) kept.push_back(rep);
  std::sort(kept.begin(), kept.end());

  WeightedInstance out;
  out.graph = g.induced(kept);
  out.budget = budget;
  for (int orig : kept) {
    const auto it = class_by_rep.find(orig);
    if (it == class_by_rep.end() || in_m[static_cast<std::size_t>(orig)]) {
      out.weights.push_back(weights[static_cast<std::size_t>(orig)]);
      out.class_map.push_back({orig});
    } else {
      long long total = 0;
      for (int u : it->second) total += weights[static_cast<std::size_t>(u)];
      out.weights.push_back(total);
      out.class_map.push_back(it->second);
    }
  }
  return out;
}

int neighborhood_complexity(const Graph& g, const std::vector<int>& m) {
  const std::vector<char> in_m = membership_flags(g, m, "neighborhood complexity");
  std::set<std::vector<int>> seen;
  for (int v = 0; v < g.n(); ++v) {
    if (in_m[static_cast<std::size_t>(v)]) continue;
    std::vector<int> key;
    for (int u : g.neighbors(v))
      if (in_m[static_cast<std::size_t>(u)]) key.push_back(u);
    seen.insert(std::move(key));
  }
  return static_cast<int>(seen.size());
}

}  // namespace trihit
