#include "asdim/cover.hpp"

#include <algorithm>
#include <functional>

#include "asdim/clique.hpp"
#include "asdim/error.hpp"

namespace asdim {

std::string to_string(const LebesgueValue& value) {
  return value.all_subsets ? std::string("all-subsets") : std::to_string(value.value);
}

namespace {

const FiniteMetricSpace& space_of(const Cover& cover) {
  if (!cover.space) fail(ErrorKind::kInvalidInput, "bad-cover", "cover has no space");
  return *cover.space;
}

// For each point of the space, the indices of the sets containing it.
std::vector<std::vector<Index>> incidence(const Cover& cover) {
  std::vector<std::vector<Index>> inc(space_of(cover).size());
  for (Index s = 0; s < cover.sets.size(); ++s) {
    check_members(*cover.space, cover.sets[s]);
    for (Index p : cover.sets[s]) inc[p].push_back(s);
  }
  return inc;
}

bool some_set_contains_window(const Cover& cover) {
  for (const auto& s : cover.sets)
    if (is_subset(cover.window, s)) return true;
  return false;
}

}  // namespace

void require_cover(const Cover& cover) {
  const auto& space = space_of(cover);
  check_members(space, cover.window);
  std::vector<char> covered(space.size(), 0);
  for (const auto& s : cover.sets) {
    check_members(space, s);
    for (Index p : s) covered[p] = 1;
  }
  for (Index p : cover.window)
    if (!covered[p])
      fail(ErrorKind::kInvalidInput, "not-a-cover",
           "window point " + std::to_string(p) + " (" + space.label(p) + ") is uncovered");
}

std::int64_t multiplicity(const Cover& cover) {
  require_cover(cover);
  const auto inc = incidence(cover);
  std::int64_t best = 0;
  for (Index p : cover.window) best = std::max<std::int64_t>(best, static_cast<std::int64_t>(inc[p].size()));
  return best;
}

std::int64_t k_multiplicity(const Cover& cover, const Rational& k) {
  require_cover(cover);
  if (k < 0) fail(ErrorKind::kInvalidInput, "negative-radius");
  const auto& space = *cover.space;
  const auto inc = incidence(cover);
  const std::int64_t limit = space.raw_threshold(k);
  std::vector<char> seen(cover.sets.size(), 0);
  std::vector<Index> touched;
  std::int64_t best = 0;
  for (Index x : cover.window) {
    touched.clear();
    for (Index y = 0; y < space.size(); ++y) {
      if (space.raw(x, y) > limit) continue;
      for (Index s : inc[y])
        if (!seen[s]) {
          seen[s] = 1;
          touched.push_back(s);
        }
    }
    best = std::max<std::int64_t>(best, static_cast<std::int64_t>(touched.size()));
    for (Index s : touched) seen[s] = 0;
  }
  return best;
}

Rational mesh(const Cover& cover) {
  const auto& space = space_of(cover);
  Rational best{0};
  for (const auto& s : cover.sets)
    if (!s.empty()) best = std::max(best, diam(space, s));
  return best;
}

bool lebesgue_at_least(const Cover& cover, std::int64_t lambda, const CoverOptions& options) {
  require_cover(cover);
  const auto& space = *cover.space;
  if (!space.is_integral())
    fail(ErrorKind::kInvalidInput, "clique-method-needs-integers",
         "exact Lebesgue numbers need an integral metric");
  if (lambda < 0) return true;
  if (cover.window.empty()) return true;

  ThresholdGraph graph = threshold_graph(space, cover.window, lambda);
  const std::size_t w = graph.points.size();

  // Window-local membership bitset for each set; sets missing the window drop.
  std::vector<Bitset> members;
  for (const auto& s : cover.sets) {
    Bitset b(w);
    bool any = false;
    for (std::size_t i = 0; i < w; ++i)
      if (s.contains(graph.points[i])) {
        b.set(i);
        any = true;
      }
    if (any) members.push_back(std::move(b));
  }

  NodeBudget budget(options.clique_node_budget);
  // Depth-first search over cliques carrying the list of sets still containing
  // the current clique. An empty list is a witness subset of diameter <=
  // lambda that no set absorbs. A branch is closed as soon as one container
  // also holds every remaining candidate.
  std::function<bool(const Bitset&, const Bitset&, const std::vector<Index>&)> search =
      [&](const Bitset& candidates, const Bitset& excluded,
          const std::vector<Index>& containers) -> bool {
    budget.tick("Lebesgue clique search");
    for (Index c : containers)
      if (candidates.subset_of(members[c])) return true;
    if (!candidates.any()) return true;
    std::size_t pivot = 0, best = 0;
    bool have = false;
    auto consider = [&](std::size_t u) {
      std::size_t cnt = candidates.intersection_count(graph.adjacency[u]);
      if (!have || cnt > best) {
        pivot = u;
        best = cnt;
        have = true;
      }
    };
    candidates.for_each(consider);
    excluded.for_each(consider);
    Bitset branch = candidates;
    branch.and_not(graph.adjacency[pivot]);
    Bitset cand = candidates, excl = excluded;
    std::vector<Index> next;
    for (Index v : branch.to_indices()) {
      next.clear();
      for (Index c : containers)
        if (members[c].test(v)) next.push_back(c);
      if (next.empty()) return false;
      if (!search(cand & graph.adjacency[v], excl & graph.adjacency[v], next)) return false;
      cand.reset(v);
      excl.set(v);
    }
    return true;
  };

  Bitset all(w);
  for (std::size_t i = 0; i < w; ++i) all.set(i);
  std::vector<Index> every(members.size());
  for (Index i = 0; i < every.size(); ++i) every[i] = i;
  return search(all, Bitset(w), every);
}

LebesgueValue lebesgue_number(const Cover& cover, const CoverOptions& options) {
  require_cover(cover);
  if (!cover.space->is_integral())
    fail(ErrorKind::kInvalidInput, "clique-method-needs-integers",
         "exact Lebesgue numbers need an integral metric");
  if (some_set_contains_window(cover)) return LebesgueValue::all();
  // The window itself has diameter diam(window) and is in no set, so the
  // answer lies in [0, diam(window) - 1]; the predicate is monotone.
  const std::int64_t top = diam(*cover.space, cover.window).numerator() - 1;
  std::int64_t lo = 0, hi = top;
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (lebesgue_at_least(cover, mid, options))
      lo = mid;
    else
      hi = mid - 1;
  }
  return LebesgueValue::finite(lo);
}

LebesgueValue lebesgue_lower_bound_balls(const Cover& cover) {
  require_cover(cover);
  if (some_set_contains_window(cover)) return LebesgueValue::all();
  const auto& space = *cover.space;
  const bool tree = is_tree_metric(space);
  const auto inc = incidence(cover);
  const auto in_window = cover.window.mask(space.size());

  auto balls_absorbed = [&](std::int64_t lambda) {
    const Rational radius = tree ? Rational((lambda + 1) / 2) : Rational(lambda);
    const std::int64_t limit = space.raw_threshold(radius);
    std::vector<Index> trace;
    auto check_centre = [&](Index c) {
      trace.clear();
      for (Index y = 0; y < space.size(); ++y)
        if (in_window[y] && space.raw(c, y) <= limit) trace.push_back(y);
      if (trace.empty()) return true;
      for (Index s : inc[trace.front()]) {
        const auto& set = cover.sets[s];
        if (std::all_of(trace.begin(), trace.end(), [&](Index y) { return set.contains(y); }))
          return true;
      }
      return false;
    };
    if (tree) {
      for (Index c = 0; c < space.size(); ++c)
        if (!check_centre(c)) return false;
    } else {
      for (Index c : cover.window)
        if (!check_centre(c)) return false;
    }
    return true;
  };

  std::int64_t lambda = 0;
  while (balls_absorbed(lambda + 1)) ++lambda;
  return LebesgueValue::finite(lambda);
}

CoverStats validate(const Cover& cover, std::span<const Rational> k_queries,
                    const CoverOptions& options) {
  CoverStats stats;
  stats.multiplicity = multiplicity(cover);
  stats.k_multiplicity[Rational(0)] = stats.multiplicity;
  for (const auto& k : k_queries) stats.k_multiplicity[k] = k_multiplicity(cover, k);
  stats.lebesgue = lebesgue_number(cover, options);
  stats.mesh = mesh(cover);
  return stats;
}

Cover restrict_cover(const Cover& cover, const PointSet& new_window) {
  Cover out{cover.space, {}, new_window};
  out.sets.reserve(cover.sets.size());
  for (const auto& s : cover.sets) out.sets.push_back(set_intersection(s, new_window));
  return out;
}

}  // namespace asdim
