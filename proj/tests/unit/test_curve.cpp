#include "doctest.h"

#include "asdim/curve.hpp"
#include "asdim/error.hpp"
#include "asdim/subjects.hpp"

using namespace asdim;

namespace {

DimCurve constant_curve(std::string name, std::int64_t value, std::int64_t last) {
  DimCurve c;
  c.subject = std::move(name);
  for (std::int64_t l = 1; l <= last; ++l) {
    CurveSample s;
    s.lambda = l;
    s.D = 4 * l;
    s.R = 20 * l;
    s.lower = value;
    s.upper = value;
    s.method = "fixed";
    c.samples.push_back(s);
  }
  return c;
}

}  // namespace

TEST_SUITE("curve") {

TEST_CASE("lambda lists") {
  CHECK(parse_lambda_list("1..4") == std::vector<std::int64_t>{1, 2, 3, 4});
  CHECK(parse_lambda_list("2,5,9") == std::vector<std::int64_t>{2, 5, 9});
  CHECK_THROWS_AS(parse_lambda_list("3..1"), Error);
  CHECK_THROWS_AS(parse_lambda_list("2,2"), Error);
  CHECK(parse_lambda_list("0..2") == std::vector<std::int64_t>{0, 1, 2});
  CHECK_THROWS_AS(parse_lambda_list("1..x"), Error);
}

TEST_CASE("a fixed path has dimension one at small scales") {
  auto path = std::make_shared<FiniteMetricSpace>(path_space(30));
  const std::vector<std::int64_t> lambdas{1, 2};
  const auto curve = dim_curve("path30", space_provider(path), lambdas, WindowPolicy{});
  REQUIRE(curve.samples.size() == 2);
  for (const auto& s : curve.samples) {
    CHECK(s.lower == 1);
    CHECK(s.upper == 1);
  }
}

TEST_CASE("sample errors become gaps") {
  WindowProvider broken = [](std::int64_t, std::int64_t, std::int64_t) -> SampleWindow {
    fail(ErrorKind::kBudgetExhausted, "ball-budget", "test");
  };
  const std::vector<std::int64_t> lambdas{1};
  const auto curve = dim_curve("broken", broken, lambdas, WindowPolicy{});
  REQUIRE(curve.samples.size() == 1);
  CHECK(curve.samples[0].gap());
  CHECK(curve.samples[0].method == "gap:ball-budget");
}

TEST_CASE("domination of constant curves") {
  const auto one = constant_curve("one", 1, 20);
  const auto three = constant_curve("three", 3, 5);
  CHECK(dominates(one, one, 1).holds);
  CHECK(find_min_k(one, one, 8) == 1);
  // 3 <= k*1 + k needs k = 2
  CHECK_FALSE(dominates(three, one, 1).holds);
  CHECK(find_min_k(three, one, 8) == 2);
  const auto short_g = constant_curve("short", 1, 2);
  CHECK_THROWS_WITH_AS(dominates(one, short_g, 1), doctest::Contains("insufficient-range"), Error);
}

TEST_CASE("gaps in f are skipped") {
  auto f = constant_curve("f", 5, 3);
  f.samples[1].lower.reset();
  f.samples[1].upper.reset();
  const auto g = constant_curve("g", 0, 20);
  CHECK_FALSE(dominates(f, g, 4).holds);
  CHECK(dominates(f, g, 5).holds);
}

TEST_CASE("csv round trip") {
  auto c = constant_curve("z:1", 1, 3);
  c.samples[2].lower.reset();
  c.samples[2].upper.reset();
  c.samples[2].method = "gap:budget-exhausted";
  const std::string text = curve_csv(c);
  const DimCurve back = parse_curve_csv(text);
  CHECK(curve_csv(back) == text);
  CHECK(back.samples[2].gap());
  CHECK(back.samples[0].upper == 1);
}

}
