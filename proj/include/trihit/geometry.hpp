#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "trihit/graph.hpp"

namespace trihit {

// Exact rational coordinates throughout. The scenes this library handles are
// degenerate by design (shared endpoints, zero-length segments, touching
// squares), so floating point is unsound everywhere.
using Rational = mpq_class;

// Accepts "p", "-p", "p/q"; rejects zero denominators. Canonical output.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& value);

struct Point {
  Rational x, y;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
  bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

// Closed segment. Coinciding endpoints are allowed: a zero-length segment is
// a point and intersects exactly the objects containing that point.
struct Segment {
  Point a, b;

  bool zero_length() const { return a == b; }
};

// Closed, filled, axis-parallel square with lower-left corner and side > 0.
struct Square {
  Rational x, y, side;
};

enum class SceneKind { segments, squares };

struct Scene {
  SceneKind kind = SceneKind::segments;
  std::vector<Segment> segments;
  std::vector<Square> squares;

  int size() const {
    return static_cast<int>(kind == SceneKind::segments ? segments.size()
                                                        : squares.size());
  }
};

// Rejects mixed-kind scenes and nonpositive square sides.
void validate_scene(const Scene& scene);

// Sign of the cross product (b - a) x (c - a): 1 left turn, -1 right, 0 flat.
int orientation_sign(const Point& a, const Point& b, const Point& c);

bool point_on_segment(const Point& p, const Segment& s);
bool point_in_square(const Point& p, const Square& s);
bool squares_intersect(const Square& a, const Square& b);
bool segments_intersect(const Segment& a, const Segment& b);

enum class SegmentMeet { none, point, overlap };

struct SegmentMeetResult {
  SegmentMeet kind = SegmentMeet::none;
  Point at;  // meaningful only when kind == point
};

// Exact classification of the intersection of two closed segments.
SegmentMeetResult segment_meet(const Segment& a, const Segment& b);

// Intersection graph: vertex i is object i, edge iff the closed objects
// share a point.
Graph build_graph(const Scene& scene);

// True iff every point shared by two segments is an endpoint of at least one
// of the two. Segment scenes only.
bool validate_contact(const Scene& scene);

// Distinct slopes among positive-length segments; zero-length ones carry no
// direction and are ignored.
int slope_count(const Scene& scene);

// True iff side lengths are pairwise distinct and no vertical or horizontal
// side lines coincide between different squares.
bool squares_generic(const Scene& scene);

// Rescales squares (shrink factors 1 - 1/q first, growing q, anchored at the
// center then each corner; expansion as fallback) until the scene is generic
// while the intersection graph stays identical. Generic input is returned
// unchanged. Throws resource_limit_error if the search budget runs out.
Scene perturb_squares(const Scene& scene);

// Neighbors with strictly smaller side. Requires pairwise distinct sides.
std::vector<int> n_minus(const Scene& scene, const Graph& g, int v);
std::vector<std::vector<int>> n_minus_all(const Scene& scene, const Graph& g);

// Per-segment contact classification. `endpoints` are the segment's own
// endpoints; `interior` the contact points in its relative interior;
// `nonterminal` those interior points approached by touchers from both open
// sides of the segment's line (collinear and zero-length touchers count to
// neither side); `terminal` the remaining interior points.
struct SegmentContact {
  std::vector<Point> endpoints, interior, nonterminal, terminal;
};

std::vector<SegmentContact> contact_report(const Scene& scene);

// Neighbors owning an endpoint at a nonterminal contact point of v.
std::vector<int> n_star_contact(const Scene& scene, const Graph& g, int v);
std::vector<std::vector<int>> n_star_contact_all(const Scene& scene, const Graph& g);

// Partition of N(v) for a generic square scene: h is a minimum vertex cover
// of the graph induced on the smaller-side neighbors, i the rest of them (an
// independent set), x = h plus all larger-side neighbors.
struct HixPartition {
  std::vector<int> h, i, x;
};

HixPartition hix_partition(const Scene& scene, const Graph& g, int v);

// Exact maximum clique of a square scene: pairwise-intersecting boxes share
// a point, so it equals the best point-stabbing set over the O(n^2) corner
// candidates. Lex-least among maximums.
std::vector<int> square_max_clique(const Scene& scene);

// Exact maximum clique of a contact scene via maximal-clique enumeration,
// aborting (resource_limit_error) if more than cap_factor * n^2 maximal
// cliques appear, which signals a non-contact input.
std::vector<int> contact_max_clique(const Scene& scene, const Graph& g,
                                    std::size_t cap_factor = 8);

}  // namespace trihit
