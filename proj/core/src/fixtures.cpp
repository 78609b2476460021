#include "asdim/fixtures.hpp"

#include "asdim/constructions.hpp"
#include "asdim/error.hpp"

namespace asdim {

Cover p30_cover() {
  auto path = std::make_shared<FiniteMetricSpace>(path_space(30));
  return Cover{path, {PointSet::range(0, 14), PointSet::range(10, 29)}, PointSet::all(30)};
}

DoublingFixture doubling_fixture() {
  DoublingFixture f;
  auto source = std::make_shared<FiniteMetricSpace>(path_space(16));
  auto target = std::make_shared<FiniteMetricSpace>(path_space(31));
  f.qi.source = source;
  f.qi.target = target;
  for (Index x = 0; x < 16; ++x) f.qi.map.push_back(2 * x);
  f.qi.alpha = Rational(2);
  f.qi.epsilon = Rational(0);
  f.qi.coarse_density = Rational(1);
  QuasiInverse inv;
  for (Index y = 0; y < 31; ++y) inv.map.push_back(std::min<Index>(y / 2, 15));
  inv.alpha = Rational(2);
  inv.epsilon = Rational(1, 2);
  f.qi.quasi_inverse = inv;
  f.cover = Cover{source, {PointSet::range(0, 9), PointSet::range(4, 15)}, PointSet::all(16)};
  f.lambda_target = 2;
  return f;
}

ActionFixture z2_on_line_fixture() {
  constexpr std::int64_t rho = 24;
  auto lp = std::make_shared<LatticeProjection>(lattice_projection_action(rho, rho));
  ActionFixture f;
  f.name = "z2-on-z";
  f.action = lp->action;
  f.keep_alive = lp;
  f.input.lambda = 2;
  f.input.radius = Rational(4);

  const auto& path = f.action.space;
  Cover orbit{path, {}, PointSet::all(path->size())};
  // path index p is the integer p - rho
  for (std::int64_t start = -rho - 3; start <= rho; start += 3) {
    std::vector<Index> m;
    for (std::int64_t x = start; x <= start + 4; ++x)
      if (x >= -rho && x <= rho) m.push_back(static_cast<Index>(x + rho));
    if (!m.empty()) orbit.sets.emplace_back(std::move(m));
  }
  f.input.orbit_cover = std::move(orbit);

  const PointSet w_r = stabilizer_window(f.action, f.input.radius);
  Cover stab{f.action.group, {}, w_r};
  for (std::int64_t start = -rho - 3; start <= rho; start += 3) {
    std::vector<Index> m;
    for (Index g : w_r) {
      const std::int64_t b = lp->group.elements[g][1];
      if (b >= start && b <= start + 4) m.push_back(g);
    }
    if (!m.empty()) stab.sets.emplace_back(std::move(m));
  }
  f.input.stab_cover = std::move(stab);
  return f;
}

ActionFixture free_product_tree_fixture(std::int64_t lambda) {
  if (lambda < 1) fail(ErrorKind::kInvalidInput, "bad-parameter", "lambda >= 1");
  auto gog = free_product_splitting(2, 3);
  const std::int64_t rho = 4 + 4 * lambda;
  auto bs = std::make_shared<BassSerreWindow>(bass_serre_tree_window(*gog, rho + 2, rho));
  struct Holder {
    GraphOfGroupsPtr gog;
    std::shared_ptr<BassSerreWindow> window;
  };
  ActionFixture f;
  f.name = "z2z3-tree:" + std::to_string(lambda);
  f.action = bs->action;
  f.keep_alive = std::make_shared<Holder>(Holder{gog, bs});
  f.input.lambda = lambda;

  const std::int64_t orbit_lambda = 2 * lambda;  // lambda * mu with mu = 2
  f.input.orbit_cover = tree_cover(bs->tree, orbit_lambda, PointSet::all(bs->tree->size()), Index{0});
  f.input.radius = Rational(4 * orbit_lambda - 2);
  const PointSet w_r = stabilizer_window(f.action, f.input.radius);
  f.input.stab_cover = Cover{f.action.group, {w_r}, w_r};
  return f;
}

ActionFixture trivial_fixture() {
  auto window = std::make_shared<CayleyWindow>(cayley_window(make_group("trivial"), 0));
  ActionFixture f;
  f.name = "trivial";
  f.action = trivial_action(*window);
  f.keep_alive = window;
  f.input.lambda = 1;
  f.input.radius = Rational(0);
  f.input.orbit_cover = Cover{f.action.space, {PointSet({0})}, PointSet({0})};
  const PointSet w_r = stabilizer_window(f.action, f.input.radius);
  f.input.stab_cover = Cover{f.action.group, {w_r}, w_r};
  return f;
}

ActionFixture action_fixture(const std::string& name) {
  if (name == "z2-on-z") return z2_on_line_fixture();
  if (name == "trivial") return trivial_fixture();
  const std::string prefix = "z2z3-tree:";
  if (name.rfind(prefix, 0) == 0) {
    try {
      return free_product_tree_fixture(std::stoll(name.substr(prefix.size())));
    } catch (const std::logic_error&) {
    }
  }
  fail(ErrorKind::kUsage, "unknown-fixture", "unknown action fixture '" + name + "'");
}

}  // namespace asdim
