#include "doctest.h"

#include "asdim/constructions.hpp"
#include "asdim/error.hpp"
#include "asdim/estimator.hpp"
#include "asdim/fuzz.hpp"
#include "oracle.hpp"

using namespace asdim;

namespace {

SpacePtr share(FiniteMetricSpace s) { return std::make_shared<FiniteMetricSpace>(std::move(s)); }

}  // namespace

TEST_SUITE("estimator") {

TEST_CASE("path windows have dimension one") {
  auto path = share(path_space(12));
  const auto r = ad_exact(path, 1, 4, PointSet::all(12));
  CHECK(r.ad == 1);
  CHECK(witness_multiplicity(r.witness, 1, 4) == 2);
}

TEST_CASE("a window of diameter at most D has dimension zero") {
  auto path = share(path_space(5));
  CHECK(ad_exact(path, 1, 4, PointSet::all(5)).ad == 0);
  CHECK(ad_exact(path, 2, 4, PointSet::range(0, 4)).ad == 0);
}

TEST_CASE("lambda above the budget is refused") {
  auto path = share(path_space(5));
  CHECK_THROWS_WITH_AS(ad_exact(path, 5, 4, PointSet::all(5)), doctest::Contains("lambda-exceeds-budget"),
                       Error);
}

TEST_CASE("node budget exhaustion is reported") {
  auto grid = share(grid_space(6, 6));
  ExactOptions tiny;
  tiny.node_budget = 3;
  CHECK_THROWS_WITH_AS(ad_exact(grid, 1, 4, PointSet::all(36), tiny), doctest::Contains("budget-exhausted"),
                       Error);
  const auto partial = multiplicity_search(grid, 1, 4, PointSet::all(36), tiny);
  CHECK(partial.exhausted);
  CHECK(partial.proven_min_multiplicity >= 1);
}

TEST_CASE("grid 7x7 interior 5x5 at lambda 1") {
  auto grid = share(grid_space(7, 7));
  std::vector<Index> inner;
  for (Index y = 1; y <= 5; ++y)
    for (Index x = 1; x <= 5; ++x) inner.push_back(y * 7 + x);
  const PointSet window(inner);
  const auto r = ad_exact(grid, 1, 4, window);
  CHECK(r.ad == 1);
  // grids have no triangles, so the 1-small subsets are points and edges
  for (Index p : window)
    for (Index q : window)
      if (grid->raw(p, q) <= 1) {
        bool absorbed = false;
        for (const auto& s : r.witness.sets) absorbed = absorbed || (s.contains(p) && s.contains(q));
        CHECK(absorbed);
      }
  CHECK(oracle::multiplicity(r.witness.sets, window) == 2);
  for (const auto& s : r.witness.sets) CHECK(diam(*grid, s) <= Rational(4));
  const auto b = ad_bounds(grid, 1, 4, window);
  CHECK(b.lower == 1);
  CHECK(b.upper == 1);
  CHECK(ad_exact(grid, 2, 4, window).ad == 2);
}

TEST_CASE("witness multiplicity rejects covers that break a constraint") {
  auto path = share(path_space(10));
  Cover c{path, {PointSet::range(0, 6), PointSet::range(4, 9)}, PointSet::all(10)};
  CHECK(witness_multiplicity(c, 2, 6) == 2);
  CHECK(witness_multiplicity(c, 3, 6) == 2);
  CHECK_FALSE(witness_multiplicity(c, 4, 6).has_value());  // L = 3
  CHECK_FALSE(witness_multiplicity(c, 2, 5).has_value());  // mesh 6
  Cover hole{path, {PointSet::range(0, 6)}, PointSet::all(10)};
  CHECK_FALSE(witness_multiplicity(hole, 1, 9).has_value());
}

TEST_CASE("ad_bounds uses sub-windows past the exact budget") {
  auto path = share(path_space(40));
  BoundsOptions opt;
  opt.exact_point_budget = 12;
  const auto b = ad_bounds(path, 1, 4, PointSet::all(40), opt);
  CHECK(b.lower == 1);
  CHECK(b.upper == 1);
  REQUIRE(b.witness.has_value());
  CHECK(witness_multiplicity(*b.witness, 1, 4) == 2);
}

TEST_CASE("extra witnesses can only lower the upper bound") {
  auto path = share(path_space(20));
  Cover two{path, {}, PointSet::all(20)};
  for (Index s = 0; s < 20; s += 2) two.sets.push_back(PointSet::range(s, std::min<Index>(s + 3, 19)));
  BoundsOptions opt;
  opt.exact_point_budget = 0;
  opt.extra_upper_witnesses.push_back({"pairs", two});
  const auto b = ad_bounds(path, 1, 4, PointSet::all(20), opt);
  CHECK(b.upper == 1);
  CHECK(b.lower <= b.upper);
}

TEST_CASE("exact search agrees with the brute-force oracle on fixed shapes") {
  struct Shape {
    FiniteMetricSpace space;
    std::int64_t lambda, D;
  };
  std::vector<Shape> shapes{{path_space(8), 1, 3},
                            {grid_space(3, 3), 1, 2},
                            {grid_space(3, 3), 1, 3},
                            {grid_space(4, 2), 1, 2},
                            {grid_space(3, 3), 2, 3}};
  for (auto& s : shapes) {
    auto sp = share(s.space);
    const PointSet w = PointSet::all(sp->size());
    CHECK(ad_exact(sp, s.lambda, s.D, w).ad == oracle::ad(*sp, s.lambda, s.D, w));
  }
}

}
