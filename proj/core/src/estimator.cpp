#include "asdim/estimator.hpp"

#include <algorithm>

#include "asdim/clique.hpp"
#include "asdim/constructions.hpp"
#include "asdim/error.hpp"

namespace asdim {

namespace {

// Decision procedure: can the maximal lambda-cliques be grouped so that each
// group has diameter <= D and every point lies in at most `target` groups?
class GroupingSearch {
 public:
  GroupingSearch(const FiniteMetricSpace& space, const PointSet& window,
                 const std::vector<PointSet>& cliques, std::int64_t diameter_budget,
                 std::int64_t target, NodeBudget& budget)
      : points_(window.members()), target_(target), budget_(budget) {
    const std::size_t w = points_.size();
    far_.assign(w, Bitset(w));
    const std::int64_t limit = space.raw_threshold(Rational(diameter_budget));
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = 0; j < w; ++j)
        if (space.raw(points_[i], points_[j]) > limit) far_[i].set(j);
    for (const auto& q : cliques) {
      Bitset b(w);
      for (Index p : q) b.set(static_cast<std::size_t>(
                           std::lower_bound(points_.begin(), points_.end(), p) - points_.begin()));
      cliques_.push_back(std::move(b));
    }
    assigned_.assign(cliques_.size(), 0);
    count_.assign(w, 0);
    full_ = Bitset(w);
  }

  bool run() { return dfs(); }

  std::vector<PointSet> groups() const {
    std::vector<PointSet> out;
    for (const auto& g : groups_) {
      std::vector<Index> m;
      g.points.for_each([&](std::size_t i) { m.push_back(points_[i]); });
      out.emplace_back(std::move(m));
    }
    return out;
  }

 private:
  struct Group {
    Bitset points;
    Bitset far;
  };

  bool fits(std::size_t q, const Group& g) const {
    if (cliques_[q].intersects(g.far)) return false;
    Bitset fresh = cliques_[q];
    fresh.and_not(g.points);
    return !fresh.intersects(full_);
  }
  bool fits_new(std::size_t q) const { return !cliques_[q].intersects(full_); }

  void add_points(Group& g, const Bitset& q, std::vector<Index>& added) {
    Bitset fresh = q;
    fresh.and_not(g.points);
    fresh.for_each([&](std::size_t p) {
      g.points.set(p);
      g.far |= far_[p];
      if (++count_[p] >= target_) full_.set(p);
      added.push_back(static_cast<Index>(p));
    });
  }
  void remove_points(Group& g, const std::vector<Index>& added) {
    for (Index p : added) {
      g.points.reset(p);
      if (count_[p]-- >= target_) full_.reset(p);
    }
  }

  bool dfs() {
    budget_.tick("multiplicity branch-and-bound");
    std::vector<std::size_t> freebies;
    // Cliques already inside a group cost nothing.
    for (std::size_t q = 0; q < cliques_.size(); ++q) {
      if (assigned_[q]) continue;
      for (const auto& g : groups_)
        if (cliques_[q].subset_of(g.points)) {
          assigned_[q] = 1;
          freebies.push_back(q);
          break;
        }
    }
    auto undo_freebies = [&] {
      for (auto q : freebies) assigned_[q] = 0;
    };

    // Most constrained clique first.
    std::size_t best_q = cliques_.size();
    std::size_t best_options = static_cast<std::size_t>(-1);
    for (std::size_t q = 0; q < cliques_.size() && best_options > 0; ++q) {
      if (assigned_[q]) continue;
      std::size_t options = fits_new(q) ? 1 : 0;
      for (const auto& g : groups_) options += fits(q, g) ? 1 : 0;
      if (options < best_options) {
        best_options = options;
        best_q = q;
      }
    }
    if (best_q == cliques_.size()) return true;  // everything assigned
    if (best_options == 0) {
      undo_freebies();
      return false;
    }

    const Bitset& q = cliques_[best_q];
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (-overlap, group)
    for (std::size_t g = 0; g < groups_.size(); ++g)
      if (fits(best_q, groups_[g])) order.emplace_back(q.intersection_count(groups_[g].points), g);
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });

    assigned_[best_q] = 1;
    std::vector<Index> added;
    for (const auto& [overlap, g] : order) {
      added.clear();
      Bitset old_far = groups_[g].far;
      add_points(groups_[g], q, added);
      if (dfs()) return true;
      remove_points(groups_[g], added);
      groups_[g].far = std::move(old_far);
    }
    if (fits_new(best_q)) {
      const std::size_t w = points_.size();
      groups_.push_back({Bitset(w), Bitset(w)});
      added.clear();
      add_points(groups_.back(), q, added);
      if (dfs()) return true;
      remove_points(groups_.back(), added);
      groups_.pop_back();
    }
    assigned_[best_q] = 0;
    undo_freebies();
    return false;
  }

  std::vector<Index> points_;
  std::int64_t target_;
  NodeBudget& budget_;
  std::vector<Bitset> far_;
  std::vector<Bitset> cliques_;
  std::vector<char> assigned_;
  std::vector<std::int64_t> count_;
  Bitset full_;
  std::vector<Group> groups_;
};

void check_exact_preconditions(const FiniteMetricSpace& space, std::int64_t lambda,
                               std::int64_t diameter_budget) {
  if (lambda < 0) fail(ErrorKind::kInvalidInput, "negative-radius");
  if (lambda > diameter_budget)
    fail(ErrorKind::kPrecondition, "lambda-exceeds-budget",
         "lambda=" + std::to_string(lambda) + " > D=" + std::to_string(diameter_budget));
  if (!space.is_integral())
    fail(ErrorKind::kInvalidInput, "clique-method-needs-integers");
}

// Degenerate windows: empty, or small enough to be one set.
std::optional<Cover> degenerate_optimum(const SpacePtr& space, std::int64_t diameter_budget,
                                        const PointSet& window) {
  if (window.empty()) return Cover{space, {}, window};
  if (diam(*space, window) <= Rational(diameter_budget)) return Cover{space, {window}, window};
  return std::nullopt;
}

// Always-valid fallback: the maximal lambda-cliques themselves.
Cover clique_cover(const SpacePtr& space, std::int64_t lambda, const PointSet& window,
                   std::uint64_t clique_budget) {
  NodeBudget budget(clique_budget);
  return Cover{space, maximal_cliques(*space, window, lambda, budget), window};
}

PointSet sub_ball(const FiniteMetricSpace& space, const PointSet& window, Index centre,
                  std::int64_t radius) {
  std::vector<Index> m;
  for (Index p : window)
    if (space.raw(centre, p) <= radius) m.push_back(p);
  return PointSet(std::move(m));
}

// One point per distance level along a (near-)diametral geodesic of the window.
PointSet geodesic_sub_window(const FiniteMetricSpace& space, const PointSet& window, Index start) {
  auto farthest = [&](Index from) {
    Index best = from;
    for (Index p : window)
      if (space.raw(from, p) > space.raw(from, best)) best = p;
    return best;
  };
  const Index a = farthest(start);
  const Index b = farthest(a);
  const std::int64_t total = space.raw(a, b);
  std::vector<Index> chosen;
  std::vector<char> level_done(static_cast<std::size_t>(total) + 1, 0);
  for (Index z : window) {
    const std::int64_t t = space.raw(a, z);
    if (t + space.raw(z, b) == total && !level_done[static_cast<std::size_t>(t)]) {
      level_done[static_cast<std::size_t>(t)] = 1;
      chosen.push_back(z);
    }
  }
  return PointSet(std::move(chosen));
}

}  // namespace

std::optional<std::int64_t> witness_multiplicity(const Cover& candidate, std::int64_t lambda,
                                                 std::int64_t diameter_budget,
                                                 const CoverOptions& options) {
  try {
    require_cover(candidate);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (mesh(candidate) > Rational(diameter_budget)) return std::nullopt;
  if (!lebesgue_at_least(candidate, lambda, options)) return std::nullopt;
  return multiplicity(candidate);
}

LevelSearch multiplicity_search(SpacePtr space, std::int64_t lambda,
                                std::int64_t diameter_budget, const PointSet& window,
                                const ExactOptions& options,
                                std::optional<std::int64_t> known_feasible) {
  check_exact_preconditions(*space, lambda, diameter_budget);
  check_members(*space, window);
  LevelSearch out;
  if (auto d = degenerate_optimum(space, diameter_budget, window)) {
    out.proven_min_multiplicity = window.empty() ? 0 : 1;
    out.optimum = std::move(d);
    return out;
  }
  NodeBudget clique_budget(options.clique_node_budget);
  const auto cliques = maximal_cliques(*space, window, lambda, clique_budget);
  const std::int64_t ceiling =
      known_feasible ? *known_feasible : static_cast<std::int64_t>(cliques.size());
  for (std::int64_t m = 1; m < ceiling; ++m) {
    NodeBudget budget(options.node_budget);
    GroupingSearch search(*space, window, cliques, diameter_budget, m, budget);
    bool feasible = false;
    try {
      feasible = search.run();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kBudgetExhausted) throw;
      out.nodes += budget.used();
      out.exhausted = true;
      return out;
    }
    out.nodes += budget.used();
    if (feasible) {
      out.proven_min_multiplicity = m;
      out.optimum = Cover{space, search.groups(), window};
      return out;
    }
    out.proven_min_multiplicity = m + 1;
  }
  // Every target below the known feasible multiplicity failed.
  if (!known_feasible) out.optimum = Cover{space, cliques, window};
  return out;
}

ExactResult ad_exact(SpacePtr space, std::int64_t lambda, std::int64_t diameter_budget,
                     const PointSet& window, const ExactOptions& options) {
  check_exact_preconditions(*space, lambda, diameter_budget);
  if (auto d = degenerate_optimum(space, diameter_budget, window))
    return {0, std::move(*d), 0};

  // Incumbent from the generic heuristic, re-validated.
  std::optional<Cover> incumbent;
  std::optional<std::int64_t> incumbent_m;
  if (diameter_budget >= 2 * lambda) {
    Cover c = ball_cover(space, lambda, diameter_budget, window);
    CoverOptions co{options.clique_node_budget};
    if (auto m = witness_multiplicity(c, lambda, diameter_budget, co)) {
      incumbent = std::move(c);
      incumbent_m = m;
    }
  }
  LevelSearch levels =
      multiplicity_search(space, lambda, diameter_budget, window, options, incumbent_m);
  if (levels.exhausted)
    fail(ErrorKind::kBudgetExhausted, "budget-exhausted",
         "multiplicity search proved only m >= " +
             std::to_string(levels.proven_min_multiplicity));
  ExactResult result;
  result.nodes = levels.nodes;
  if (levels.optimum) {
    result.witness = std::move(*levels.optimum);
  } else {
    result.witness = std::move(*incumbent);
  }
  result.ad = multiplicity(result.witness) - 1;
  return result;
}

AdBounds ad_bounds(SpacePtr space, std::int64_t lambda, std::int64_t diameter_budget,
                   const PointSet& window, const BoundsOptions& options) {
  check_exact_preconditions(*space, lambda, diameter_budget);
  check_members(*space, window);
  AdBounds out;
  if (auto d = degenerate_optimum(space, diameter_budget, window)) {
    out.witness = std::move(d);
    out.lower_method = out.upper_method = "degenerate";
    return out;
  }
  const CoverOptions cover_options{options.exact.clique_node_budget};

  // Upper: best validated witness.
  std::optional<std::int64_t> best_m;
  auto offer = [&](const std::string& name, Cover candidate) {
    auto m = witness_multiplicity(candidate, lambda, diameter_budget, cover_options);
    if (m && (!best_m || *m < *best_m)) {
      best_m = m;
      out.witness = std::move(candidate);
      out.upper_method = name;
    }
  };
  for (const auto& named : options.extra_upper_witnesses) offer(named.name, named.cover);
  if (diameter_budget >= 2 * lambda)
    offer("ball-cover", ball_cover(space, lambda, diameter_budget, window));
  if (!best_m)
    offer("clique-cover", clique_cover(space, lambda, window, options.exact.clique_node_budget));

  // Lower: exact on the window when small enough, otherwise sub-windows.
  std::int64_t lower_m = 1;
  out.lower_method = "trivial";
  if (window.size() <= options.exact_point_budget) {
    LevelSearch levels =
        multiplicity_search(space, lambda, diameter_budget, window, options.exact, best_m);
    if (levels.optimum) {
      auto m = multiplicity(*levels.optimum);
      if (m < *best_m) {
        best_m = m;
        out.witness = std::move(levels.optimum);
        out.upper_method = "exact";
      }
    }
    if (!levels.exhausted) {
      lower_m = *best_m;
      out.lower_method = "exact";
    } else {
      lower_m = levels.proven_min_multiplicity;
      out.lower_method = "bnb-partial";
    }
  } else {
    const Index centre =
        space->basepoint() && window.contains(*space->basepoint()) ? *space->basepoint() : window[0];
    std::vector<std::pair<std::string, PointSet>> subs;
    subs.emplace_back("geodesic", geodesic_sub_window(*space, window, centre));
    for (std::int64_t r = 0;; ++r) {
      PointSet b = sub_ball(*space, window, centre, r);
      if (b.size() > options.exact_point_budget || b.size() == window.size()) break;
      subs.emplace_back("ball:" + std::to_string(r), std::move(b));
    }
    for (const auto& [name, sub] : subs) {
      LevelSearch levels = multiplicity_search(space, lambda, diameter_budget, sub, options.exact,
                                               best_m);
      std::int64_t m = levels.proven_min_multiplicity;
      if (!levels.exhausted && levels.optimum) m = multiplicity(*levels.optimum);
      if (!levels.exhausted && !levels.optimum) m = *best_m;
      if (m > lower_m) {
        lower_m = m;
        out.lower_method = "subwindow-exact(" + name + ",n=" + std::to_string(sub.size()) + ")";
        if (levels.exhausted) out.lower_method = "subwindow-bnb(" + name + ")";
      }
      if (lower_m >= *best_m) break;
    }
  }
  out.lower = lower_m - 1;
  out.upper = *best_m - 1;
  return out;
}

}  // namespace asdim
