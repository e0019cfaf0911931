#include "trihit/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "trihit/errors.hpp"

namespace trihit {

Rational parse_rational(const std::string& text) {
  const auto bad = [&]() {
    return std::invalid_argument("bad rational literal: '" + text + "'");
  };
  if (text.empty()) throw bad();
  const std::size_t slash = text.find('/');
  const auto check_int = [&](std::size_t from, std::size_t to) {
    if (from >= to) throw bad();
    std::size_t i = from;
    if (text[i] == '-') ++i;
    if (i >= to) throw bad();
    for (; i < to; ++i)
      if (text[i] < '0' || text[i] > '9') throw bad();
  };
  mpz_class num, den = 1;
  if (slash == std::string::npos) {
    check_int(0, text.size());
    num = mpz_class(text);
  } else {
    check_int(0, slash);
    check_int(slash + 1, text.size());
    num = mpz_class(text.substr(0, slash));
    den = mpz_class(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

void validate_scene(const Scene& scene) {
  if (scene.kind == SceneKind::segments) {
    if (!scene.squares.empty())
      throw std::invalid_argument("segment scene must not carry squares");
  } else {
    if (!scene.segments.empty())
      throw std::invalid_argument("square scene must not carry segments");
    for (const Square& s : scene.squares)
      if (s.side <= 0) throw std::invalid_argument("square side must be positive");
  }
}

int orientation_sign(const Point& a, const Point& b, const Point& c) {
  const Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(cross);
}

bool point_on_segment(const Point& p, const Segment& s) {
  if (orientation_sign(s.a, s.b, p) != 0) return false;
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
         std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

bool point_in_square(const Point& p, const Square& s) {
  return s.x <= p.x && p.x <= s.x + s.side && s.y <= p.y && p.y <= s.y + s.side;
}

bool squares_intersect(const Square& a, const Square& b) {
  return !(a.x + a.side < b.x || b.x + b.side < a.x || a.y + a.side < b.y ||
           b.y + b.side < a.y);
}

SegmentMeetResult segment_meet(const Segment& s1, const Segment& s2) {
  if (s1.zero_length()) {
    if (point_on_segment(s1.a, s2)) return {SegmentMeet::point, s1.a};
    return {};
  }
  if (s2.zero_length()) {
    if (point_on_segment(s2.a, s1)) return {SegmentMeet::point, s2.a};
    return {};
  }
  const Rational d1x = s1.b.x - s1.a.x, d1y = s1.b.y - s1.a.y;
  const Rational d2x = s2.b.x - s2.a.x, d2y = s2.b.y - s2.a.y;
  const Rational denom = d1x * d2y - d1y * d2x;
  if (denom == 0) {
    if (orientation_sign(s1.a, s1.b, s2.a) != 0) return {};
    // Collinear: the shared part is delimited by endpoints lying on both.
    std::vector<Point> hits;
    for (const Point& p : {s1.a, s1.b, s2.a, s2.b})
      if (point_on_segment(p, s1) && point_on_segment(p, s2)) hits.push_back(p);
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    if (hits.empty()) return {};
    if (hits.size() == 1) return {SegmentMeet::point, hits.front()};
    return {SegmentMeet::overlap, hits.front()};
  }
  const Rational t = ((s2.a.x - s1.a.x) * d2y - (s2.a.y - s1.a.y) * d2x) / denom;
  const Point p{s1.a.x + t * d1x, s1.a.y + t * d1y};
  if (point_on_segment(p, s1) && point_on_segment(p, s2))
    return {SegmentMeet::point, p};
  return {};
}

bool segments_intersect(const Segment& a, const Segment& b) {
  return segment_meet(a, b).kind != SegmentMeet::none;
}

Graph build_graph(const Scene& scene) {
  validate_scene(scene);
  const int n = scene.size();
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool edge =
          scene.kind == SceneKind::segments
              ? segments_intersect(scene.segments[static_cast<std::size_t>(i)],
                                   scene.segments[static_cast<std::size_t>(j)])
              : squares_intersect(scene.squares[static_cast<std::size_t>(i)],
                                  scene.squares[static_cast<std::size_t>(j)]);
      if (edge) g.add_edge(i, j);
    }
  return g;
}

bool validate_contact(const Scene& scene) {
  if (scene.kind != SceneKind::segments)
    throw std::invalid_argument("contact validation needs a segment scene");
  validate_scene(scene);
  const int n = scene.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Segment& a = scene.segments[static_cast<std::size_t>(i)];
      const Segment& b = scene.segments[static_cast<std::size_t>(j)];
      const SegmentMeetResult meet = segment_meet(a, b);
      if (meet.kind == SegmentMeet::overlap) return false;
      if (meet.kind == SegmentMeet::point &&
          !(meet.at == a.a || meet.at == a.b || meet.at == b.a || meet.at == b.b))
        return false;
    }
  return true;
}

int slope_count(const Scene& scene) {
  if (scene.kind != SceneKind::segments)
    throw std::invalid_argument("slope count needs a segment scene");
  validate_scene(scene);
  std::set<Rational> slopes;
  bool vertical = false;
  for (const Segment& s : scene.segments) {
    if (s.zero_length()) continue;
    if (s.a.x == s.b.x)
      vertical = true;
    else
      slopes.insert((s.b.y - s.a.y) / (s.b.x - s.a.x));
  }
  return static_cast<int>(slopes.size()) + (vertical ? 1 : 0);
}

namespace {

void require_squares(const Scene& scene, const char* who) {
  if (scene.kind != SceneKind::squares)
    throw std::invalid_argument(std::string(who) + " needs a square scene");
  validate_scene(scene);
}

void require_distinct_sides(const Scene& scene) {
  std::set<Rational> sides;
  for (const Square& s : scene.squares)
    if (!sides.insert(s.side).second)
      throw std::invalid_argument("duplicate side lengths: perturb the scene first");
}

void require_matching_graph(const Scene& scene, const Graph& g) {
  if (g.n() != scene.size())
    throw std::invalid_argument("graph does not match the scene");
}

Square rescaled(const Square& s, const Rational& factor, const Point& anchor) {
  return Square{anchor.x + factor * (s.x - anchor.x),
                anchor.y + factor * (s.y - anchor.y), factor * s.side};
}

}  // namespace

bool squares_generic(const Scene& scene) {
  require_squares(scene, "genericity check");
  std::set<Rational> sides;
  std::map<Rational, int> xs, ys;
  for (int i = 0; i < scene.size(); ++i) {
    const Square& s = scene.squares[static_cast<std::size_t>(i)];
    if (!sides.insert(s.side).second) return false;
    const Rational xcoords[2] = {s.x, s.x + s.side};
    for (const Rational& x : xcoords) {
      const auto [it, fresh] = xs.emplace(x, i);
      if (!fresh && it->second != i) return false;
    }
    const Rational ycoords[2] = {s.y, s.y + s.side};
    for (const Rational& y : ycoords) {
      const auto [it, fresh] = ys.emplace(y, i);
      if (!fresh && it->second != i) return false;
    }
  }
  return true;
}

Scene perturb_squares(const Scene& scene) {
  require_squares(scene, "perturbation");
  const int n = scene.size();
  const Graph original = build_graph(scene);
  Scene out = scene;

  const auto collides = [&](int i, const Square& cand) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const Square& o = out.squares[static_cast<std::size_t>(j)];
      if (cand.side == o.side) return true;
      const Rational mine_x[2] = {cand.x, cand.x + cand.side};
      const Rational theirs_x[2] = {o.x, o.x + o.side};
      for (const Rational& mine : mine_x)
        for (const Rational& theirs : theirs_x)
          if (mine == theirs) return true;
      const Rational mine_y[2] = {cand.y, cand.y + cand.side};
      const Rational theirs_y[2] = {o.y, o.y + o.side};
      for (const Rational& mine : mine_y)
        for (const Rational& theirs : theirs_y)
          if (mine == theirs) return true;
    }
    return false;
  };
  const auto row_preserved = [&](int i, const Square& cand) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (squares_intersect(cand, out.squares[static_cast<std::size_t>(j)]) !=
          original.has_edge(i, j))
        return false;
    }
    return true;
  };

  for (int i = 0; i < n; ++i) {
    if (!collides(i, out.squares[static_cast<std::size_t>(i)])) continue;
    const Square& cur = out.squares[static_cast<std::size_t>(i)];
    const Point anchors[5] = {
        {cur.x + cur.side / 2, cur.y + cur.side / 2},
        {cur.x, cur.y},
        {cur.x + cur.side, cur.y},
        {cur.x, cur.y + cur.side},
        {cur.x + cur.side, cur.y + cur.side},
    };
    bool fixed = false;
    // Small factors come late in each round; a collision rules out only
    // finitely many q values, so some offset below always lands.
    for (int round = 0; round < 40 && !fixed; ++round) {
      const long long base = 16LL << std::min(round, 44);
      for (long long offset = 0; offset <= 10LL * n + 10 && !fixed; ++offset) {
        const Rational q(static_cast<long>(base + offset));
        // Shrink first, then expand.
        const Rational factors[2] = {(q - 1) / q, (q + 1) / q};
        for (const Rational& factor : factors) {
          for (const Point& anchor : anchors) {
            const Square cand = rescaled(cur, factor, anchor);
            if (collides(i, cand) || !row_preserved(i, cand)) continue;
            out.squares[static_cast<std::size_t>(i)] = cand;
            fixed = true;
            break;
          }
          if (fixed) break;
        }
      }
    }
    if (!fixed)
      throw resource_limit_error("perturbation search budget exhausted at square " +
                                 std::to_string(i));
  }

  if (!squares_generic(out) || !(build_graph(out).edges() == original.edges()))
    throw std::logic_error("perturbation postcondition failed");
  return out;
}

std::vector<int> n_minus(const Scene& scene, const Graph& g, int v) {
  require_squares(scene, "smaller-side neighborhood");
  require_matching_graph(scene, g);
  require_distinct_sides(scene);
  std::vector<int> out;
  const Rational& side = scene.squares[static_cast<std::size_t>(v)].side;
  for (int u : g.neighbors(v))
    if (scene.squares[static_cast<std::size_t>(u)].side < side) out.push_back(u);
  return out;
}

std::vector<std::vector<int>> n_minus_all(const Scene& scene, const Graph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(scene.size()));
  for (int v = 0; v < scene.size(); ++v) out.push_back(n_minus(scene, g, v));
  return out;
}

std::vector<SegmentContact> contact_report(const Scene& scene) {
  if (!validate_contact(scene))
    throw std::invalid_argument("not a contact scene: improper intersection");
  const int n = scene.size();
  // Per host segment, per interior contact point: has a toucher strictly
  // above / strictly below the host's line.
  std::vector<std::map<Point, std::pair<bool, bool>>> interior(
      static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const SegmentMeetResult meet =
          segment_meet(scene.segments[static_cast<std::size_t>(i)],
                       scene.segments[static_cast<std::size_t>(j)]);
      if (meet.kind != SegmentMeet::point) continue;
      const int pair_ids[2][2] = {{i, j}, {j, i}};
      for (const auto& [host, other] : pair_ids) {
        const Segment& hs = scene.segments[static_cast<std::size_t>(host)];
        if (hs.zero_length()) continue;
        if (meet.at == hs.a || meet.at == hs.b) continue;
        auto& sides = interior[static_cast<std::size_t>(host)][meet.at];
        const Segment& os = scene.segments[static_cast<std::size_t>(other)];
        if (os.zero_length()) continue;  // still registers the contact point
        const Point& away = os.a == meet.at ? os.b : os.a;
        const int side = orientation_sign(hs.a, hs.b, away);
        if (side > 0) sides.first = true;
        if (side < 0) sides.second = true;
      }
    }
  std::vector<SegmentContact> report(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    SegmentContact& sc = report[static_cast<std::size_t>(v)];
    const Segment& s = scene.segments[static_cast<std::size_t>(v)];
    sc.endpoints.push_back(std::min(s.a, s.b));
    if (!s.zero_length()) sc.endpoints.push_back(std::max(s.a, s.b));
    for (const auto& [p, sides] : interior[static_cast<std::size_t>(v)]) {
      sc.interior.push_back(p);
      if (sides.first && sides.second)
        sc.nonterminal.push_back(p);
      else
        sc.terminal.push_back(p);
    }
  }
  return report;
}

std::vector<std::vector<int>> n_star_contact_all(const Scene& scene, const Graph& g) {
  require_matching_graph(scene, g);
  const std::vector<SegmentContact> report = contact_report(scene);
  const int n = scene.size();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  const auto in_nt = [&](int v, const Point& p) {
    const std::vector<Point>& nt = report[static_cast<std::size_t>(v)].nonterminal;
    return std::binary_search(nt.begin(), nt.end(), p);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const SegmentMeetResult meet =
          segment_meet(scene.segments[static_cast<std::size_t>(i)],
                       scene.segments[static_cast<std::size_t>(j)]);
      if (meet.kind != SegmentMeet::point) continue;
      if (in_nt(i, meet.at)) out[static_cast<std::size_t>(i)].push_back(j);
      if (in_nt(j, meet.at)) out[static_cast<std::size_t>(j)].push_back(i);
    }
  for (auto& row : out) std::sort(row.begin(), row.end());
  return out;
}

std::vector<int> n_star_contact(const Scene& scene, const Graph& g, int v) {
  if (v < 0 || v >= scene.size()) throw std::invalid_argument("vertex id out of range");
  return n_star_contact_all(scene, g)[static_cast<std::size_t>(v)];
}

HixPartition hix_partition(const Scene& scene, const Graph& g, int v) {
  const std::vector<int> below = n_minus(scene, g, v);
  const Graph sub = g.induced(below);
  HixPartition out;
  for (int idx : min_vertex_cover(sub))
    out.h.push_back(below[static_cast<std::size_t>(idx)]);
  const std::set<int> cover(out.h.begin(), out.h.end());
  for (int u : below)
    if (!cover.count(u)) out.i.push_back(u);
  out.x = out.h;
  const Rational& side = scene.squares[static_cast<std::size_t>(v)].side;
  for (int u : g.neighbors(v))
    if (scene.squares[static_cast<std::size_t>(u)].side > side) out.x.push_back(u);
  std::sort(out.x.begin(), out.x.end());
  return out;
}

std::vector<int> square_max_clique(const Scene& scene) {
  require_squares(scene, "square clique");
  const int n = scene.size();
  std::vector<int> best;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Point candidate{scene.squares[static_cast<std::size_t>(i)].x,
                            scene.squares[static_cast<std::size_t>(j)].y};
      std::vector<int> stabbed;
      for (int k = 0; k < n; ++k)
        if (point_in_square(candidate, scene.squares[static_cast<std::size_t>(k)]))
          stabbed.push_back(k);
      if (stabbed.size() > best.size() ||
          (stabbed.size() == best.size() && stabbed < best))
        best = std::move(stabbed);
    }
  return best;
}

std::vector<int> contact_max_clique(const Scene& scene, const Graph& g,
                                    std::size_t cap_factor) {
  require_matching_graph(scene, g);
  if (!validate_contact(scene))
    throw std::invalid_argument("not a contact scene: improper intersection");
  if (g.n() == 0) return {};
  const std::size_t cap =
      cap_factor * static_cast<std::size_t>(g.n()) * static_cast<std::size_t>(g.n());
  const std::vector<std::vector<int>> cliques = maximal_cliques(g, cap);
  std::vector<int> best;
  for (const std::vector<int>& c : cliques)
    if (c.size() > best.size()) best = c;  // list is lex-sorted already
  return best;
}

}  // namespace trihit
