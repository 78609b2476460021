#include "asdim/constructions.hpp"

#include <algorithm>
#include <map>

#include "asdim/error.hpp"

namespace asdim {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Enlarge each piece by lambda and trace it on the window.
Cover enlarge_pieces(SpacePtr space, const std::vector<PointSet>& pieces, std::int64_t lambda,
                     const PointSet& window) {
  Cover cover{space, {}, window};
  for (const auto& piece : pieces) {
    PointSet s = set_intersection(outer_neighborhood(*space, piece, Rational(lambda)), window);
    if (!s.empty()) cover.sets.push_back(std::move(s));
  }
  return cover;
}

}  // namespace

Cover brick_cover(SpacePtr space, const Coordinates& coords, int dim, std::int64_t lambda,
                  std::int64_t side, const PointSet& window) {
  if (dim < 1) fail(ErrorKind::kInvalidInput, "bad-dimension");
  if (lambda < 0) fail(ErrorKind::kInvalidInput, "negative-radius");
  if (side < std::max<std::int64_t>(1, 2 * lambda))
    fail(ErrorKind::kPrecondition, "brick-side-too-small",
         "side " + std::to_string(side) + " < max(1, 2*lambda) = " +
             std::to_string(std::max<std::int64_t>(1, 2 * lambda)));
  check_members(*space, window);
  std::map<std::vector<std::int64_t>, std::vector<Index>> tiles;
  for (Index p : window) {
    const auto& x = coords.at(p);
    if (static_cast<int>(x.size()) < dim)
      fail(ErrorKind::kInvalidInput, "bad-coordinates", "point " + std::to_string(p));
    std::vector<std::int64_t> tile(dim);
    tile[dim - 1] = floor_div(x[dim - 1], side);
    for (int i = dim - 2; i >= 0; --i) {
      std::int64_t shift = (tile[i + 1] & 1) ? side / 2 : 0;
      tile[i] = floor_div(x[i] + shift, side);
    }
    tiles[tile].push_back(p);
  }
  std::vector<PointSet> pieces;
  pieces.reserve(tiles.size());
  for (auto& [key, members] : tiles) pieces.emplace_back(std::move(members));
  return enlarge_pieces(std::move(space), pieces, lambda, window);
}

Cover tree_cover(SpacePtr tree, std::int64_t lambda, const PointSet& window,
                 std::optional<Index> root) {
  if (lambda < 0) fail(ErrorKind::kInvalidInput, "negative-radius");
  const auto& space = *tree;
  if (!is_tree_metric(space))
    fail(ErrorKind::kInvalidInput, "not-a-tree", "the metric is not a tree path metric");
  check_members(space, window);
  const Index r = root ? *root : space.basepoint().value_or(0);
  const auto n = static_cast<Index>(space.size());
  const std::int64_t width = std::max<std::int64_t>(lambda, 1);

  std::vector<std::int64_t> depth(n);
  std::vector<Index> parent(n, r);
  for (Index v = 0; v < n; ++v) depth[v] = space.raw(r, v);
  for (Index v = 0; v < n; ++v) {
    if (v == r) continue;
    for (Index u = 0; u < n; ++u)
      if (space.raw(u, v) == 1 && depth[u] + 1 == depth[v]) {
        parent[v] = u;
        break;
      }
  }
  auto ancestor_at = [&](Index v, std::int64_t level) {
    while (depth[v] > level) v = parent[v];
    return v;
  };

  // (k, a) -> members
  std::map<std::pair<std::int64_t, Index>, std::vector<Index>> pieces;
  for (Index v = 0; v < n; ++v) {
    // bands k with k*w <= depth < (k+1)*w + lambda
    const std::int64_t k_hi = depth[v] / width;
    for (std::int64_t k = k_hi; k >= 0; --k) {
      if (depth[v] >= (k + 1) * width + lambda) break;
      pieces[{k, ancestor_at(v, k * width)}].push_back(v);
    }
  }
  Cover cover{std::move(tree), {}, window};
  for (auto& [key, members] : pieces) {
    PointSet s = set_intersection(PointSet(std::move(members)), window);
    if (!s.empty()) cover.sets.push_back(std::move(s));
  }
  return cover;
}

Cover ball_cover(SpacePtr space, std::int64_t lambda, std::int64_t diameter_budget,
                 const PointSet& window) {
  if (lambda < 0) fail(ErrorKind::kInvalidInput, "negative-radius");
  if (diameter_budget < 2 * lambda)
    fail(ErrorKind::kPrecondition, "diameter-budget-too-small",
         "D=" + std::to_string(diameter_budget) + " < 2*lambda");
  check_members(*space, window);
  const std::int64_t piece_radius = (diameter_budget - 2 * lambda) / 2;
  const std::int64_t limit = space->raw_threshold(Rational(piece_radius));
  std::vector<char> assigned(space->size(), 0);
  std::vector<PointSet> pieces;
  for (Index c : window) {
    if (assigned[c]) continue;
    std::vector<Index> piece;
    for (Index p : window)
      if (!assigned[p] && space->raw(c, p) <= limit) {
        assigned[p] = 1;
        piece.push_back(p);
      }
    pieces.emplace_back(std::move(piece));
  }
  return enlarge_pieces(std::move(space), pieces, lambda, window);
}

}  // namespace asdim
