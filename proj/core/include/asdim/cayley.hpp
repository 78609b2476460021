#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "asdim/action.hpp"
#include "asdim/groups.hpp"
#include "asdim/metric.hpp"

namespace asdim {

struct CayleyBudget {
  std::size_t max_points = 5000;        // size of the reported ball B_R
  std::size_t max_table = 2'000'000;    // size of the B_2R length table, BFS groups only
};

// The ball B_R(e) of a Cayley graph as a finite metric space. Points are in
// length-lexicographic order (identity = 0 = basepoint) and labelled by
// normal forms. Every distance d(g, h) = |g^-1 h| <= 2R is read from a
// closed form or from a BFS table over B_2R, so all window distances are
// exact; `margin` records that radius.
struct CayleyWindow {
  GroupPtr group;
  SpacePtr space;
  std::vector<Element> elements;
  std::map<Element, Index> index;
  std::vector<std::int64_t> length;
  std::int64_t radius = 0;
  std::int64_t margin = 0;

  std::optional<Index> find(const Element& g) const;
  std::size_t size() const { return elements.size(); }
};

// Throws Error{kBudgetExhausted, "ball-budget"} naming the largest radius
// that fits.
CayleyWindow cayley_window(GroupPtr group, std::int64_t radius, const CayleyBudget& budget = {});

// |B_r| for r = 0..max_radius, stopping early once a ball exceeds max_points.
std::vector<std::size_t> ball_sizes(const GroupModel& group, std::int64_t max_radius,
                                    std::size_t max_points = 200'000);

// Word lengths of every element of B_radius by BFS.
std::map<Element, std::int64_t> word_length_table(const GroupModel& group, std::int64_t radius,
                                                  std::size_t max_points);

// Largest r with |B_r| <= max_points (capped at max_radius).
std::int64_t radius_within(const GroupModel& group, std::size_t max_points,
                           std::int64_t max_radius = 64);

// Generic builder: the group window acts on `space` by `act`, which may
// return nullopt when the image leaves the space.
using PointAction = std::function<std::optional<Index>(const Element&, Index)>;
ActionWindow make_action(const CayleyWindow& window, SpacePtr space, Index x0, PointAction act);

// Z^2 (window of radius `group_radius`) acting on the path -half..half by
// translation along the first coordinate; x0 = 0.
struct LatticeProjection {
  CayleyWindow group;
  ActionWindow action;
  std::int64_t half_width = 0;
};
LatticeProjection lattice_projection_action(std::int64_t group_radius, std::int64_t half_width);

// Any group acting trivially on a single point.
ActionWindow trivial_action(const CayleyWindow& window);

}  // namespace asdim
