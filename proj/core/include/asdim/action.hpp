#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "asdim/metric.hpp"

namespace asdim {

// A finite ball of a group acting by isometries on a finite space. Group
// elements are the points of `group` (word metric, basepoint = identity,
// length-lexicographic order). Products and actions that leave the windows
// are reported as nullopt.
struct ActionWindow {
  SpacePtr group;
  SpacePtr space;
  Index x0 = 0;
  std::vector<Index> generators;     // window indices of S (symmetric)
  std::vector<Index> orbit;          // orbit[g] = g.x0, the projection pi
  std::vector<std::int64_t> length;  // word length |g|
  std::function<std::optional<Index>(Index, Index)> multiply;  // (g, h) -> gh
  std::function<std::optional<Index>(Index, Index)> apply;     // (g, x) -> g.x

  Index identity() const { return *group->basepoint(); }
};

// W_R(x0) = {g in the window : d_X(g.x0, x0) <= R}.
PointSet stabilizer_window(const ActionWindow& act, const Rational& radius);

// mu = max over generators s of d_X(s.x0, x0).
Rational orbit_step(const ActionWindow& act);

struct ActionAudit {
  bool valid = true;
  std::vector<std::string> violations;  // capped
};
// Exhaustive: every window element acts isometrically where defined, the
// identity acts trivially, (gh).x = g.(h.x) on generator products, and pi
// is mu-Lipschitz on generator edges (g, gs).
ActionAudit audit_action(const ActionWindow& act);

}  // namespace asdim
