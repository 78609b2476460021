#pragma once

#include <string>

#include "asdim/curve.hpp"
#include "asdim/groups.hpp"

namespace asdim {

// Cayley ball of radius rho = min(R, largest radius within the policy's
// point budget). The window is the interior ball of radius rho - D when
// that ball is still wider than D, and the whole ball otherwise. Witnesses:
// brick covers for lattice models, tree covers for free groups.
WindowProvider group_provider(GroupPtr group, const WindowPolicy& policy);

// A fixed finite space; the window is every point.
WindowProvider space_provider(SpacePtr space);

}  // namespace asdim
