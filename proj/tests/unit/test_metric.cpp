#include "doctest.h"

#include "asdim/error.hpp"
#include "asdim/metric.hpp"

using namespace asdim;

TEST_SUITE("metric") {

TEST_CASE("rationals parse and print") {
  CHECK(parse_rational("5/2") == Rational(5, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(format_rational(Rational(4, 2)) == "2");
  CHECK(format_rational(Rational(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("point sets sort, dedup and combine") {
  PointSet a({4, 1, 1, 3});
  CHECK(a.members() == std::vector<Index>{1, 3, 4});
  PointSet b = PointSet::range(3, 6);
  CHECK(set_union(a, b) == PointSet({1, 3, 4, 5, 6}));
  CHECK(set_intersection(a, b) == PointSet({3, 4}));
  CHECK(set_difference(a, b) == PointSet({1}));
  CHECK(complement(5, a) == PointSet({0, 2}));
  CHECK(is_subset(PointSet({3, 4}), a));
  CHECK_FALSE(is_subset(b, a));
  CHECK(PointSet::from_mask(a.mask(6)) == a);
}

TEST_CASE("path and grid metrics") {
  const auto path = path_space(5);
  CHECK(path.dist(0, 4) == Rational(4));
  CHECK(validate_metric(path).valid);
  CHECK(is_tree_metric(path));
  const auto grid = grid_space(3, 3);
  CHECK(grid.dist(0, 8) == Rational(4));
  CHECK(grid.dist(1, 3) == Rational(2));
  CHECK_FALSE(is_tree_metric(grid));
}

TEST_CASE("graph metric of a disconnected graph is rejected") {
  std::vector<std::vector<Index>> adj{{1}, {0}, {}};
  CHECK_THROWS_WITH_AS(graph_metric(adj), doctest::Contains("disconnected"), Error);
}

TEST_CASE("validation flags a triangle violation") {
  std::vector<std::int64_t> d{0, 1, 5, 1, 0, 1, 5, 1, 0};
  FiniteMetricSpace bad(3, d);
  const auto report = validate_metric(bad);
  CHECK_FALSE(report.valid);
  CHECK_FALSE(report.violations.empty());
}

TEST_CASE("rational distances compare exactly") {
  auto s = FiniteMetricSpace::from_rationals(3, {Rational(0), Rational(1, 2), Rational(1),
                                                 Rational(1, 2), Rational(0), Rational(1, 2),
                                                 Rational(1), Rational(1, 2), Rational(0)});
  CHECK(s.denominator() == 2);
  CHECK(s.within(0, 1, Rational(1, 2)));
  CHECK_FALSE(s.within(0, 2, Rational(3, 4)));
  CHECK(ball(s, 0, Rational(1, 2)) == PointSet({0, 1}));
}

TEST_CASE("neighbourhoods on the path") {
  const auto path = path_space(10);
  const PointSet a = PointSet::range(3, 6);
  CHECK(outer_neighborhood(path, a, Rational(2)) == PointSet::range(1, 8));
  CHECK(inner_neighborhood(path, a, Rational(1)) == PointSet::range(4, 5));
  CHECK(inner_neighborhood(path, a, Rational(2)).empty());
  CHECK(diam(path, a) == Rational(3));
  CHECK_THROWS_AS(diam(path, PointSet{}), Error);
}

TEST_CASE("set distance and family separation") {
  const auto path = path_space(10);
  CHECK(set_distance(path, PointSet({0, 1}), PointSet({5})) == Rational(4));
  CHECK_FALSE(set_distance(path, PointSet{}, PointSet({5})).has_value());
  std::vector<PointSet> fam{PointSet({0}), PointSet({3}), PointSet({9})};
  CHECK(family_separation(path, fam) == Rational(3));
  std::vector<PointSet> lone{PointSet({0}), PointSet{}};
  CHECK_FALSE(family_separation(path, lone).has_value());
}

TEST_CASE("subspace keeps the ambient metric") {
  const auto grid = grid_space(3, 3);
  const auto sub = subspace(grid, PointSet({0, 2, 8}));
  CHECK(sub.space.size() == 3);
  CHECK(sub.space.dist(0, 2) == Rational(4));
  CHECK(sub.to_parent == std::vector<Index>{0, 2, 8});
  CHECK_THROWS_AS(subspace(grid, PointSet{}), Error);
}

TEST_CASE("quasi-isometry check catches a collapsing map") {
  auto src = std::make_shared<FiniteMetricSpace>(path_space(6));
  auto dst = std::make_shared<FiniteMetricSpace>(path_space(6));
  QuasiIsometryData q{src, dst, {0, 0, 0, 0, 0, 0}, Rational(1), Rational(0), Rational(0), {}};
  const auto report = check_quasi_isometry(q);
  CHECK_FALSE(report.valid);
  q.map = {0, 1, 2, 3, 4, 5};
  CHECK(check_quasi_isometry(q).valid);
}

TEST_CASE("ball cardinality") {
  CHECK(max_ball_cardinality(path_space(10), Rational(2)) == 5);
  CHECK(max_ball_cardinality(grid_space(5, 5), Rational(1)) == 5);
}

}
