#pragma once

#include <cstdint>

#include "trihit/geometry.hpp"
#include "trihit/graph.hpp"
#include "trihit/rng.hpp"

namespace trihit {

// Seeded instance generators for test corpora. Deterministic: the same rng
// state yields the same instance on every platform.

// Erdos-Renyi-style graph, edge probability num/den.
Graph random_graph(Rng& rng, int n, std::uint64_t num, std::uint64_t den);

// Axis-parallel squares with integer corners in [0, coord_range] and integer
// sides in [1, side_range]. Ties and aligned sides are likely by design, so
// the result usually needs perturb_squares.
Scene random_square_scene(Rng& rng, int n, int coord_range, int side_range);

// Axis-parallel segments (2 slopes) with integer coordinates; crossings and
// collinear overlaps allowed.
Scene random_axis_scene(Rng& rng, int n, int coord_range);

// Segments drawn from the first d directions of a fixed 4-direction pool
// (horizontal, vertical, both diagonals). d in [1, 4].
Scene random_ddir_scene(Rng& rng, int n, int d, int coord_range);

// Valid contact scene grown incrementally: each new segment either floats
// freely or starts on an existing segment; candidates violating the contact
// condition are rejected and a guaranteed-disjoint fallback keeps progress.
Scene random_contact_scene(Rng& rng, int n, int coord_range);

}  // namespace trihit
