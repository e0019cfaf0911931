#pragma once

#include <optional>
#include <vector>

#include "trihit/geometry.hpp"

namespace trihit {

// CNF with 1-based variables; a literal is +v or -v.
struct CnfFormula {
  int variables = 0;
  std::vector<std::vector<int>> clauses;
};

// First satisfying assignment in mask order (assignment[i] is variable i+1),
// nullopt when unsatisfiable. Throws resource_limit_error past cap variables.
std::optional<std::vector<bool>> brute_force_sat(const CnfFormula& f, int cap = 24);

// Equisatisfiable rewrite: duplicate literals and tautological clauses
// dropped, unit clauses propagated, unused variables renumbered away, and
// every all-positive or all-negative 3-clause split with a fresh variable so
// the hardness encoder can realize it. A propagation contradiction yields
// the canonical unsatisfiable four-clause 2-SAT formula. Formulas already in
// encoder shape come back unchanged.
CnfFormula preprocess_formula(const CnfFormula& f);

// True iff f is in encoder shape: clauses of size 2 or 3 over distinct
// variables, all appearing, mixed signs in every 3-clause.
bool formula_preprocessed(const CnfFormula& f);

// Closed rectilinear ring of k horizontal and k vertical segments (bottom
// edge, right edge, a unit staircase, top and left edges) plus a zero-length
// segment on each of the 2k corners. Its minimum triangle hitting sets are
// exactly the horizontal set and the vertical set, of size k. anchor/scale
// place the unit layout; scale must be positive, k at least 2.
Scene make_k_polygon(int k, const Point& anchor, const Rational& scale);

// Segment ids of one variable gadget, grouped by role.
struct PolygonSegments {
  std::vector<int> horizontal, vertical, corner;
};

// A 2-DIR scene encoding a formula: one ring gadget per variable, one meeting
// point z_C per clause. The scene has a triangle hitting set of size k iff
// the formula is satisfiable.
struct ReductionOutput {
  Scene scene;
  long long k = 0;                         // sum of the ring sizes
  std::vector<PolygonSegments> polygon_map;  // per variable
  std::vector<long long> polygon_k;          // ring size k_i per variable
  std::vector<Point> clause_points;          // z_C per clause
  std::vector<int> clause_vertices;  // id of a 2-literal clause dot, else -1
};

// Encodes a preprocessed formula. Variable rings are stacked rows; literal
// corridors rise to the clause points, vertical tips for positive literals
// and horizontal tips for negative ones, so every clause point carries one
// triangle that is hit exactly when the clause is satisfied.
ReductionOutput sat_to_2dir(const CnfFormula& f);

// Rebuilds r so that no segment is crossed by more than t others, splitting
// over-crossed segments with two-vertical bumps; each bump grows its ring
// size by 2 and k is recomputed. Degrees end up at most t + 4 and the
// formula equivalence is untouched. Throws if no collision-free bump
// placement exists. Requires t >= 2.
ReductionOutput crenellate(const ReductionOutput& r, int t);

struct ReductionReport {
  bool satisfiable = false;  // exhaustive SAT on f
  bool th_at_k = false;      // scene has a triangle hitting set of size k
  bool agreement = false;
  long long k = 0;
  std::vector<bool> assignment;  // decoded for yes: true = vertical set chosen
};

// Certifies the equivalence between f (preprocessed, at most 10 variables
// and 15 clauses) and r: every gadget must be a valid ring with exactly the
// two expected optima, every scene triangle a ring corner triangle or a
// clause triangle, and tip orientations must match the literals. On a
// satisfiable formula the decoded hitting set is checked directly. A
// structural violation throws; sizes beyond the cap throw.
ReductionReport verify_reduction(const CnfFormula& f, const ReductionOutput& r);

}  // namespace trihit
