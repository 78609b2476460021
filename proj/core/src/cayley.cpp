#include "asdim/cayley.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "asdim/error.hpp"

namespace asdim {

namespace {

// BFS spheres from the identity; stops after `radius` or when the ball
// exceeds max_points (returns the spheres built so far plus an overflow flag).
struct Spheres {
  std::vector<std::vector<Element>> layers;
  bool overflow = false;
};

Spheres bfs_spheres(const GroupModel& group, std::int64_t radius, std::size_t max_points) {
  Spheres out;
  std::set<Element> seen;
  out.layers.push_back({group.identity()});
  seen.insert(group.identity());
  for (std::int64_t r = 1; r <= radius; ++r) {
    std::vector<Element> next;
    for (const auto& g : out.layers.back()) {
      for (Letter s = 0; s < group.generator_count(); ++s) {
        Element h = group.multiply(g, s);
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    }
    if (seen.size() > max_points) {
      out.overflow = true;
      return out;
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    out.layers.push_back(std::move(next));
  }
  return out;
}

}  // namespace

std::optional<Index> CayleyWindow::find(const Element& g) const {
  auto it = index.find(g);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::map<Element, std::int64_t> word_length_table(const GroupModel& group, std::int64_t radius,
                                                  std::size_t max_points) {
  auto spheres = bfs_spheres(group, radius, max_points);
  if (spheres.overflow)
    fail(ErrorKind::kBudgetExhausted, "ball-budget",
         "B_" + std::to_string(radius) + " exceeds " + std::to_string(max_points) + " points");
  std::map<Element, std::int64_t> table;
  for (std::size_t r = 0; r < spheres.layers.size(); ++r)
    for (const auto& g : spheres.layers[r]) table.emplace(g, static_cast<std::int64_t>(r));
  return table;
}

std::vector<std::size_t> ball_sizes(const GroupModel& group, std::int64_t max_radius,
                                    std::size_t max_points) {
  auto spheres = bfs_spheres(group, max_radius, max_points);
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  for (const auto& layer : spheres.layers) {
    total += layer.size();
    sizes.push_back(total);
  }
  // a finite group stops growing: repeat the final size up to max_radius
  while (!spheres.overflow && static_cast<std::int64_t>(sizes.size()) <= max_radius)
    sizes.push_back(total);
  return sizes;
}

std::int64_t radius_within(const GroupModel& group, std::size_t max_points, std::int64_t max_radius) {
  auto sizes = ball_sizes(group, max_radius, max_points);
  std::int64_t r = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] <= max_points) r = static_cast<std::int64_t>(i);
  return std::min(r, max_radius);
}

CayleyWindow cayley_window(GroupPtr group, std::int64_t radius, const CayleyBudget& budget) {
  if (radius < 0) fail(ErrorKind::kInvalidInput, "negative-radius");
  auto spheres = bfs_spheres(*group, radius, budget.max_points);
  if (spheres.overflow) {
    const auto fits = radius_within(*group, budget.max_points, radius);
    fail(ErrorKind::kBudgetExhausted, "ball-budget",
         "B_" + std::to_string(radius) + " exceeds " + std::to_string(budget.max_points) +
             " points; largest radius within budget is " + std::to_string(fits));
  }

  CayleyWindow w;
  w.group = group;
  w.radius = radius;
  w.margin = radius;
  for (std::size_t r = 0; r < spheres.layers.size(); ++r) {
    for (const auto& g : spheres.layers[r]) {
      w.index.emplace(g, static_cast<Index>(w.elements.size()));
      w.elements.push_back(g);
      w.length.push_back(static_cast<std::int64_t>(r));
    }
  }

  const std::size_t n = w.elements.size();
  const bool closed_form = group->word_length(group->identity()).has_value();
  std::map<Element, std::int64_t> table;
  if (!closed_form) table = word_length_table(*group, 2 * radius, budget.max_table);

  std::vector<Element> inverses(n);
  for (std::size_t i = 0; i < n; ++i) inverses[i] = group->inverse(w.elements[i]);
  std::vector<std::int64_t> numerators(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Element q = group->product(inverses[i], w.elements[j]);
      std::int64_t d = 0;
      if (closed_form) {
        d = *group->word_length(q);
      } else {
        auto it = table.find(q);
        if (it == table.end())
          fail(ErrorKind::kCertificate, "normal-form-mismatch",
               "g^-1 h of two window elements lies outside B_2R");
        d = it->second;
      }
      numerators[i * n + j] = d;
      numerators[j * n + i] = d;
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& g : w.elements) labels.push_back(group->format(g));
  w.space = std::make_shared<FiniteMetricSpace>(n, std::move(numerators), 1, std::move(labels), Index{0});
  return w;
}

// ---- actions -------------------------------------------------------------------

ActionWindow make_action(const CayleyWindow& window, SpacePtr space, Index x0, PointAction act) {
  ActionWindow a;
  a.group = window.space;
  a.space = space;
  a.x0 = x0;
  a.length = window.length;
  const GroupModel& g = *window.group;
  for (Letter s = 0; s < g.generator_count(); ++s) {
    auto idx = window.find(g.generator(s));
    if (!idx) fail(ErrorKind::kInvalidInput, "window-too-small", "generator outside the window");
    a.generators.push_back(*idx);
  }
  for (std::size_t i = 0; i < window.size(); ++i) {
    auto img = act(window.elements[i], x0);
    if (!img) fail(ErrorKind::kInvalidInput, "window-too-small", "orbit of x0 leaves the space");
    a.orbit.push_back(*img);
  }
  auto shared = std::make_shared<CayleyWindow>(window);
  a.multiply = [shared](Index x, Index y) -> std::optional<Index> {
    return shared->find(shared->group->product(shared->elements[x], shared->elements[y]));
  };
  a.apply = [shared, act](Index x, Index p) -> std::optional<Index> {
    return act(shared->elements[x], p);
  };
  return a;
}

LatticeProjection lattice_projection_action(std::int64_t group_radius, std::int64_t half_width) {
  LatticeProjection out;
  out.half_width = half_width;
  out.group = cayley_window(make_group("z:2"), group_radius);
  auto path = std::make_shared<FiniteMetricSpace>(
      path_space(static_cast<std::size_t>(2 * half_width + 1)).with_basepoint(static_cast<Index>(half_width)));
  out.action = make_action(out.group, path, static_cast<Index>(half_width),
                           [half_width](const Element& g, Index p) -> std::optional<Index> {
                             const std::int64_t x = static_cast<std::int64_t>(p) + g[0];
                             if (x < 0 || x > 2 * half_width) return std::nullopt;
                             return static_cast<Index>(x);
                           });
  return out;
}

ActionWindow trivial_action(const CayleyWindow& window) {
  auto point = std::make_shared<FiniteMetricSpace>(path_space(1).with_basepoint(Index{0}));
  return make_action(window, point, 0, [](const Element&, Index p) -> std::optional<Index> { return p; });
}

PointSet stabilizer_window(const ActionWindow& act, const Rational& radius) {
  std::vector<Index> members;
  for (Index g = 0; g < act.orbit.size(); ++g)
    if (act.space->within(act.orbit[g], act.x0, radius)) members.push_back(g);
  return PointSet(std::move(members));
}

Rational orbit_step(const ActionWindow& act) {
  Rational mu(0);
  for (Index s : act.generators) mu = std::max(mu, act.space->dist(act.orbit[s], act.x0));
  return mu;
}

ActionAudit audit_action(const ActionWindow& act) {
  ActionAudit audit;
  auto note = [&](const std::string& what) {
    audit.valid = false;
    if (audit.violations.size() < 20) audit.violations.push_back(what);
  };
  const auto& X = *act.space;
  const std::size_t nx = X.size();
  const std::size_t ng = act.orbit.size();
  const Index e = act.identity();

  for (Index x = 0; x < nx; ++x) {
    auto y = act.apply(e, x);
    if (!y || *y != x) note("identity moves point " + std::to_string(x));
  }
  for (Index g = 0; g < ng; ++g) {
    std::vector<std::optional<Index>> image(nx);
    for (Index x = 0; x < nx; ++x) image[x] = act.apply(g, x);
    for (Index x = 0; x < nx; ++x) {
      if (!image[x]) continue;
      for (Index y = x + 1; y < nx; ++y) {
        if (image[y] && X.raw(*image[x], *image[y]) != X.raw(x, y)) {
          std::ostringstream out;
          out << "element " << g << " is not isometric on (" << x << "," << y << ")";
          note(out.str());
        }
      }
    }
  }
  const Rational mu = orbit_step(act);
  for (Index g = 0; g < ng; ++g) {
    for (Index s : act.generators) {
      auto gs = act.multiply(g, s);
      if (!gs) continue;
      for (Index x = 0; x < nx; ++x) {
        auto sx = act.apply(s, x);
        if (!sx) continue;
        auto lhs = act.apply(*gs, x);
        auto rhs = act.apply(g, *sx);
        if (lhs && rhs && *lhs != *rhs)
          note("(gs).x != g.(s.x) for g=" + std::to_string(g) + " s=" + std::to_string(s));
      }
      if (X.dist(act.orbit[g], act.orbit[*gs]) > mu)
        note("orbit map not mu-Lipschitz at g=" + std::to_string(g));
    }
  }
  return audit;
}

}  // namespace asdim
