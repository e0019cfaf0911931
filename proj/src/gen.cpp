#include "trihit/gen.hpp"

#include <algorithm>
#include <stdexcept>

namespace trihit {

Graph random_graph(Rng& rng, int n, std::uint64_t num, std::uint64_t den) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(num, den)) g.add_edge(u, v);
  return g;
}

Scene random_square_scene(Rng& rng, int n, int coord_range, int side_range) {
  Scene scene;
  scene.kind = SceneKind::squares;
  for (int i = 0; i < n; ++i) {
    Square s;
    s.x = Rational(static_cast<long>(rng.range(0, coord_range)));
    s.y = Rational(static_cast<long>(rng.range(0, coord_range)));
    s.side = Rational(static_cast<long>(rng.range(1, side_range)));
    scene.squares.push_back(s);
  }
  return scene;
}

Scene random_axis_scene(Rng& rng, int n, int coord_range) {
  Scene scene;
  scene.kind = SceneKind::segments;
  for (int i = 0; i < n; ++i) {
    const long fixed = rng.range(0, coord_range);
    const long lo = rng.range(0, coord_range - 1);
    const long hi = rng.range(static_cast<int>(lo) + 1, coord_range);
    if (rng.chance(1, 2))
      scene.segments.push_back(
          {{Rational(lo), Rational(fixed)}, {Rational(hi), Rational(fixed)}});
    else
      scene.segments.push_back(
          {{Rational(fixed), Rational(lo)}, {Rational(fixed), Rational(hi)}});
  }
  return scene;
}

namespace {

constexpr int kDirPool[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};

}  // namespace

Scene random_ddir_scene(Rng& rng, int n, int d, int coord_range) {
  if (d < 1 || d > 4) throw std::invalid_argument("direction count must be in 1..4");
  Scene scene;
  scene.kind = SceneKind::segments;
  for (int i = 0; i < n; ++i) {
    const int dir = static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
    const long bx = rng.range(0, coord_range);
    const long by = rng.range(0, coord_range);
    const long len = rng.range(1, 4);
    scene.segments.push_back(
        {{Rational(bx), Rational(by)},
         {Rational(bx + len * kDirPool[dir][0]), Rational(by + len * kDirPool[dir][1])}});
  }
  return scene;
}

Scene random_contact_scene(Rng& rng, int n, int coord_range) {
  Scene scene;
  scene.kind = SceneKind::segments;
  constexpr int kCompass[8][2] = {{1, 0},  {0, 1},  {-1, 0}, {0, -1},
                                  {1, 1},  {-1, 1}, {1, -1}, {-1, -1}};
  const auto acceptable = [&](const Segment& cand) {
    for (const Segment& e : scene.segments) {
      const SegmentMeetResult meet = segment_meet(cand, e);
      if (meet.kind == SegmentMeet::overlap) return false;
      if (meet.kind == SegmentMeet::point &&
          !(meet.at == cand.a || meet.at == cand.b || meet.at == e.a || meet.at == e.b))
        return false;
    }
    return true;
  };
  for (int i = 0; i < n; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < 40 && !placed; ++attempt) {
      Point start;
      if (scene.segments.empty() || rng.chance(1, 4)) {
        start = {Rational(static_cast<long>(rng.range(0, coord_range))),
                 Rational(static_cast<long>(rng.range(0, coord_range)))};
      } else {
        // Start on an existing segment, at an eighth-point of its span.
        const Segment& host =
            scene.segments[rng.below(scene.segments.size())];
        const Rational t = Rational(static_cast<long>(rng.range(0, 8))) / 8;
        start = {host.a.x + t * (host.b.x - host.a.x),
                 host.a.y + t * (host.b.y - host.a.y)};
      }
      const int dir = static_cast<int>(rng.below(8));
      const Rational len(static_cast<long>(rng.range(1, 3)));
      const Segment cand{start,
                         {start.x + len * kCompass[dir][0], start.y + len * kCompass[dir][1]}};
      if (!acceptable(cand)) continue;
      scene.segments.push_back(cand);
      placed = true;
    }
    if (!placed) {
      // Guaranteed-disjoint fallback keeps the loop finite.
      Rational far(0);
      for (const Segment& e : scene.segments)
        far = std::max({far, e.a.x, e.b.x});
      scene.segments.push_back({{far + 2, Rational(0)}, {far + 3, Rational(0)}});
    }
  }
  return scene;
}

}  // namespace trihit
