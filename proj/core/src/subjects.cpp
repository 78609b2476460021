#include "asdim/subjects.hpp"

#include "asdim/cayley.hpp"
#include "asdim/constructions.hpp"
#include "asdim/error.hpp"

namespace asdim {

WindowProvider group_provider(GroupPtr group, const WindowPolicy& policy) {
  const std::int64_t cap = radius_within(*group, policy.max_window_points, 4096);
  return [group, cap, policy](std::int64_t lambda, std::int64_t D, std::int64_t R) {
    const std::int64_t rho = std::min(R, cap);
    auto window = cayley_window(group, rho, {policy.max_window_points, 2'000'000});
    SampleWindow s;
    s.space = window.space;
    const std::int64_t inner = rho - D;
    std::vector<Index> members;
    for (Index i = 0; i < window.size(); ++i)
      if (2 * inner > D ? window.length[i] <= inner : true) members.push_back(i);
    s.window = PointSet(std::move(members));
    s.note = "ball=" + std::to_string(rho) +
             (2 * inner > D ? " window=" + std::to_string(inner) : " window=ball");

    if (auto first = group->coordinates(window.elements[0])) {
      const int dim = static_cast<int>(first->size());
      Coordinates coords;
      for (const auto& g : window.elements) coords.push_back(*group->coordinates(g));
      const std::int64_t side = (D - 2 * lambda) / dim + 1;
      try {
        s.witnesses.push_back({"brick", brick_cover(s.space, coords, dim, lambda, side, s.window)});
      } catch (const Error&) {
      }
    }
    if (group->is_free() && lambda >= 1)
      s.witnesses.push_back({"tree", tree_cover(s.space, lambda, s.window, Index{0})});
    return s;
  };
}

WindowProvider space_provider(SpacePtr space) {
  return [space](std::int64_t, std::int64_t, std::int64_t) {
    return SampleWindow{space, PointSet::all(space->size()), {}, "space"};
  };
}

}  // namespace asdim
