#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "asdim/cover.hpp"
#include "asdim/transport.hpp"

namespace asdim {

using Rng = std::mt19937_64;

// One of: weighted random graph (weights 1..3), path, grid, unit tree.
FiniteMetricSpace random_space(Rng& rng, std::size_t n_min, std::size_t n_max);
PointSet random_subset(Rng& rng, std::size_t n, double p, bool nonempty = true);
// Random balls and random subsets, patched until they cover the window.
Cover random_cover(Rng& rng, SpacePtr space, const PointSet& window, std::size_t max_sets = 6);
// ball_cover at Lebesgue 4k over the whole space plus random extra sets, on
// a random window.
Cover random_shrinkable_cover(Rng& rng, std::int64_t k, std::size_t n_min, std::size_t n_max);

// Regions laid out along the columns of a path or a thin grid, with Y
// filling the gaps and overlapping each region by a collar of width >= lambda.
struct UnionInstance {
  UniformFamily family;
  Cover y_cover;
  std::int64_t lambda = 1;
};
UnionInstance random_union_instance(Rng& rng, std::size_t max_points);

struct SuiteResult {
  std::string name;
  std::size_t count = 0;
  std::size_t passed = 0;
  std::size_t skipped = 0;  // generated instances outside the suite's hypothesis
  std::vector<std::string> failures;  // counterexample dumps, capped
  bool pass() const { return failures.empty() && passed == count; }
};

std::vector<std::string> suite_names();
// Throws kUsage "unknown-suite".
SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t count);

}  // namespace asdim
