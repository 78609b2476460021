#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "asdim/cover.hpp"

namespace asdim {

using Coordinates = std::vector<std::vector<std::int64_t>>;

// Staggered brick tiling of a Z^dim window, each tile enlarged by lambda
// inside the window. `coords[p]` gives the lattice coordinates of point p.
// Tiles along axis i < dim-1 are shifted by side/2 on odd tiles of axis i+1.
// Requires side >= max(1, 2*lambda); the statistics are validated by callers,
// never assumed.
Cover brick_cover(SpacePtr space, const Coordinates& coords, int dim, std::int64_t lambda,
                  std::int64_t side, const PointSet& window);

// Band cover of a tree rooted at `root` (defaults to the basepoint, then 0):
// with width w = max(lambda, 1), the piece P(k, a) holds the descendants v of
// a vertex a at depth k*w with k*w <= depth(v) < (k+1)*w + lambda. Every point
// lies in at most two pieces and every set of diameter <= lambda lies below a
// common ancestor inside one band. Throws "not-a-tree".
Cover tree_cover(SpacePtr tree, std::int64_t lambda, const PointSet& window,
                 std::optional<Index> root = std::nullopt);

// Generic incumbent: greedily carve the window into pieces of diameter at most
// D - 2*lambda (ball-shaped around the first unassigned point), then enlarge
// each piece by lambda inside the window. Lebesgue >= lambda and mesh <= D
// hold by construction; multiplicity is whatever it is.
// Throws "diameter-budget-too-small" if D < 2*lambda.
Cover ball_cover(SpacePtr space, std::int64_t lambda, std::int64_t diameter_budget,
                 const PointSet& window);

}  // namespace asdim
