#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asdim/cover.hpp"

namespace asdim {

struct ExactOptions {
  std::uint64_t node_budget = 2'000'000;        // branch-and-bound nodes per level
  std::uint64_t clique_node_budget = 20'000'000;
};

// Windowed asymptotic dimension at scale lambda with diameter budget D:
//   min { m(U) : U covers the window, mesh(U) <= D, L(U) >= lambda } - 1.
// Sets may be assumed inside the window (intersecting with it never hurts),
// and each may be taken to be the union of the maximal lambda-cliques it is
// responsible for, so the search assigns every maximal clique of the
// lambda-threshold graph to one group while keeping group diameters <= D and
// per-point group counts <= the target multiplicity.
struct ExactResult {
  std::int64_t ad = 0;
  Cover witness;
  std::uint64_t nodes = 0;
};

// Throws "lambda-exceeds-budget" (lambda > D), "clique-method-needs-integers",
// or "budget-exhausted".
ExactResult ad_exact(SpacePtr space, std::int64_t lambda, std::int64_t diameter_budget,
                     const PointSet& window, const ExactOptions& options = {});

// Outcome of the level-by-level search even when the budget runs out.
struct LevelSearch {
  std::int64_t proven_min_multiplicity = 1;  // all smaller targets infeasible
  std::optional<Cover> optimum;              // set when the search finished
  std::uint64_t nodes = 0;
  bool exhausted = false;
};
LevelSearch multiplicity_search(SpacePtr space, std::int64_t lambda,
                                std::int64_t diameter_budget, const PointSet& window,
                                const ExactOptions& options,
                                std::optional<std::int64_t> known_feasible = std::nullopt);

struct NamedCover {
  std::string name;
  Cover cover;
};

struct BoundsOptions {
  ExactOptions exact;
  std::size_t exact_point_budget = 400;  // windows above this size use sub-windows
  std::vector<NamedCover> extra_upper_witnesses;
};

struct AdBounds {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::optional<Cover> witness;  // realizes `upper`
  std::string lower_method;
  std::string upper_method;
};

// Certified sandwich lower <= ad <= upper. The upper bound is the best
// validated witness (exact optimum, caller witnesses, ball_cover); the lower
// bound is exact on the window, a partial branch-and-bound bound, or exact on
// sub-windows (restriction never increases ad).
AdBounds ad_bounds(SpacePtr space, std::int64_t lambda, std::int64_t diameter_budget,
                   const PointSet& window, const BoundsOptions& options = {});

// Multiplicity of `candidate` if it covers the window with mesh <= D and
// L >= lambda; nullopt otherwise.
std::optional<std::int64_t> witness_multiplicity(const Cover& candidate, std::int64_t lambda,
                                                 std::int64_t diameter_budget,
                                                 const CoverOptions& options = {});

}  // namespace asdim
