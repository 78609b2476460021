#include "doctest.h"

#include "asdim/constructions.hpp"
#include "asdim/error.hpp"
#include "asdim/fixtures.hpp"
#include "asdim/transport.hpp"

using namespace asdim;

namespace {

SpacePtr share(FiniteMetricSpace s) { return std::make_shared<FiniteMetricSpace>(std::move(s)); }

bool covers(const Cover& c) {
  for (Index p : c.window) {
    bool hit = false;
    for (const auto& s : c.sets) hit = hit || s.contains(p);
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("transport") {

TEST_CASE("shrinking P30 by one hits the Lebesgue bound exactly") {
  const Cover c = p30_cover();
  const auto r = shrink(c, 1);
  CHECK(r.certificate.pass());
  CHECK(r.cover.sets[0] == PointSet::range(0, 13));
  CHECK(r.cover.sets[1] == PointSet::range(11, 29));  // 29 is a boundary point of the space
  CHECK(lebesgue_number(r.cover) == LebesgueValue::finite(3));
  CHECK(k_multiplicity(r.cover, Rational(1)) <= 2);
}

TEST_CASE("shrink refuses 4k above L") {
  CHECK_THROWS_WITH_AS(shrink(p30_cover(), 2), doctest::Contains("shrink-precondition"), Error);
  CHECK_THROWS_WITH_AS(shrink(p30_cover(), -1), doctest::Contains("negative-radius"), Error);
}

TEST_CASE("doubling map transports the interval cover") {
  const auto f = doubling_fixture();
  CHECK(check_quasi_isometry(f.qi).valid);
  const auto r = qi_transport(f.cover, f.qi, f.lambda_target);
  CHECK(r.certificate.pass());
  CHECK(covers(r.cover));
  CHECK(lebesgue_number(r.cover).at_least(f.lambda_target));
}

TEST_CASE("qi transport needs a quasi-inverse") {
  auto f = doubling_fixture();
  f.qi.quasi_inverse.reset();
  CHECK_THROWS_WITH_AS(qi_transport(f.cover, f.qi, 1), doctest::Contains("qi-needs-inverse"), Error);
}

TEST_CASE("qi transport demands a large enough Lebesgue number") {
  const auto f = doubling_fixture();
  CHECK_THROWS_WITH_AS(qi_transport(f.cover, f.qi, 5), doctest::Contains("qi-precondition"), Error);
}

TEST_CASE("two separated families make a cover of Z") {
  auto path = share(path_space(40));
  const std::int64_t lambda = 2;
  std::vector<std::vector<PointSet>> families(2);
  // tiles of length 2*lambda+1 alternate between the families
  for (Index s = 0, t = 0; s < 40; s += 5, ++t)
    families[t % 2].push_back(PointSet::range(s, std::min<Index>(s + 4, 39)));
  const auto r = disjoint_families_to_cover(path, families, lambda, PointSet::all(40));
  CHECK(r.certificate.pass());
  CHECK(multiplicity(r.cover) == 2);
  CHECK(lebesgue_number(r.cover).at_least(lambda));
}

TEST_CASE("families closer than 2 lambda are rejected") {
  auto path = share(path_space(10));
  std::vector<std::vector<PointSet>> families{{PointSet::range(0, 3), PointSet::range(6, 9)},
                                              {PointSet::range(4, 5)}};
  CHECK_THROWS_WITH_AS(disjoint_families_to_cover(path, families, 2, PointSet::all(10)),
                       doctest::Contains("separation-too-small"), Error);
}

TEST_CASE("union over two separated regions") {
  auto path = share(path_space(60));
  UniformFamily fam;
  fam.lambda = 1;
  fam.mesh_bound = Rational(4);
  fam.multiplicity = 2;
  const std::vector<std::pair<Index, Index>> regions{{0, 24}, {35, 59}};
  for (auto [a, b] : regions) {
    FamilyMember m;
    m.region = PointSet::range(a, b);
    m.cover = ball_cover(path, 1, 4, m.region);
    m.cover.window = m.region;
    fam.multiplicity = std::max(fam.multiplicity, multiplicity(m.cover));
    fam.members.push_back(m);
  }
  // Y = 20..39 reaches into both regions
  Cover y{path, {}, PointSet::range(20, 39)};
  for (Index s = 20; s <= 39; s += 3) y.sets.push_back(PointSet::range(s, std::min<Index>(s + 4, 39)));
  const auto r = union_transport(fam, y, 1);
  CHECK(r.certificate.pass());
  CHECK(lebesgue_number(r.cover).at_least(1));
}

TEST_CASE("union with regions too close fails the 3B test") {
  auto path = share(path_space(30));
  UniformFamily fam;
  fam.lambda = 1;
  fam.mesh_bound = Rational(4);
  fam.multiplicity = 2;
  for (auto [a, b] : std::vector<std::pair<Index, Index>>{{0, 12}, {17, 29}}) {
    FamilyMember m;
    m.region = PointSet::range(a, b);
    m.cover = ball_cover(path, 1, 4, m.region);
    m.cover.window = m.region;
    fam.multiplicity = std::max(fam.multiplicity, multiplicity(m.cover));
    fam.members.push_back(m);
  }
  Cover y{path, {PointSet::range(10, 19)}, PointSet::range(10, 19)};
  CHECK_THROWS_WITH_AS(union_transport(fam, y, 1), doctest::Contains("separation-too-small"), Error);
}

TEST_CASE("Z^2 on the line") {
  const auto f = z2_on_line_fixture();
  const auto r = action_transport(f.action, f.input);
  CHECK(r.certificate.pass());
  CHECK(multiplicity(r.cover) <= 4);
  CHECK(lebesgue_number(r.cover).at_least(2));
  CHECK(r.cover.window.size() > 1);
}

TEST_CASE("Z/2 * Z/3 on its tree") {
  const auto f = free_product_tree_fixture(1);
  const auto r = action_transport(f.action, f.input);
  CHECK(r.certificate.pass());
  CHECK(multiplicity(r.cover) <= 2);
}

TEST_CASE("stabilizer cover must match W_R") {
  auto f = z2_on_line_fixture();
  f.input.stab_cover.window = PointSet({0});
  CHECK_THROWS_WITH_AS(action_transport(f.action, f.input), doctest::Contains("stab-cover-precondition"),
                       Error);
}

TEST_CASE("orbit cover mesh above R is rejected") {
  auto f = z2_on_line_fixture();
  f.input.radius = Rational(3);
  CHECK_THROWS_AS(action_transport(f.action, f.input), Error);
}

TEST_CASE("certificate entries") {
  TransportCertificate cert;
  cert.claim_at_most("m", Rational(2), Rational(2));
  cert.claim_at_least("L", Rational(3), Rational(2));
  CHECK_FALSE(cert.pass());
  CHECK(cert.entries[0].ok);
  CHECK_FALSE(cert.entries[1].ok);
  TransportCertificate lone;
  lone.claim_lebesgue("L", LebesgueValue::finite(4), LebesgueValue::all());
  CHECK(lone.pass());
}

TEST_CASE("unknown action fixture") {
  CHECK_THROWS_WITH_AS(action_fixture("nope"), doctest::Contains("unknown-fixture"), Error);
  CHECK(action_fixture("z2z3-tree:1").name == "z2z3-tree:1");
}

}
