#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "asdim/graph_of_groups.hpp"
#include "asdim/transport.hpp"

namespace asdim {

// Path 0..29 covered by {0..14} and {10..29}: multiplicity 2, L = 5, mesh 19.
Cover p30_cover();

// x -> 2x from the path 0..15 into the path 0..30 (alpha 2, density 1) with
// quasi-inverse y -> floor(y/2) (alpha' 2, eps' 1/2), and the interval cover
// {0..9}, {4..15} of the source (L = 6).
struct DoublingFixture {
  QuasiIsometryData qi;
  Cover cover;
  std::int64_t lambda_target = 2;
};
DoublingFixture doubling_fixture();

// An action together with transport inputs satisfying every precondition.
struct ActionFixture {
  std::string name;
  ActionWindow action;
  ActionTransportInput input;
  std::shared_ptr<const void> keep_alive;  // owns whatever the action refers to
};

// Z^2 (radius 24) on the path -24..24 by first coordinate; R = 4, lambda = 2.
// Orbit cover: intervals [3k, 3k+4]; stabilizer cover: bands 3k <= b <= 3k+4.
ActionFixture z2_on_line_fixture();

// Z/2 * Z/3 on its Bass-Serre tree, mu = 2. Orbit cover: tree_cover at
// 2*lambda (mesh R = 8*lambda - 2); stabilizer cover: W_R as one set.
ActionFixture free_product_tree_fixture(std::int64_t lambda);

// Trivial group on a point; the stabilizer cover is {W_R}.
ActionFixture trivial_fixture();

// Throws kUsage "unknown-fixture" ("z2-on-z", "z2z3-tree:<lambda>", "trivial").
ActionFixture action_fixture(const std::string& name);

}  // namespace asdim
