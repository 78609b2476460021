#include "asdim/clique.hpp"

#include <algorithm>

#include "asdim/error.hpp"

namespace asdim {

ThresholdGraph threshold_graph(const FiniteMetricSpace& space, const PointSet& window,
                               std::int64_t raw_threshold) {
  check_members(space, window);
  ThresholdGraph g;
  g.points = window.members();
  const std::size_t w = g.points.size();
  g.adjacency.assign(w, Bitset(w));
  for (std::size_t i = 0; i < w; ++i)
    for (std::size_t j = i + 1; j < w; ++j)
      if (space.raw(g.points[i], g.points[j]) <= raw_threshold) {
        g.adjacency[i].set(j);
        g.adjacency[j].set(i);
      }
  return g;
}

void NodeBudget::tick(const char* what) {
  if (++used_ > limit_)
    fail(ErrorKind::kBudgetExhausted, "budget-exhausted",
         std::string(what) + " exceeded " + std::to_string(limit_) + " nodes");
}

namespace {

struct BronKerbosch {
  const ThresholdGraph& graph;
  NodeBudget& budget;
  const std::function<bool(const std::vector<Index>&)>& visit;
  std::vector<Index> clique;

  // Returns false when the visitor asked to stop.
  bool expand(Bitset candidates, Bitset excluded) {
    budget.tick("clique enumeration");
    if (!candidates.any() && !excluded.any()) return visit(clique);
    if (!candidates.any()) return true;

    // Pivot: vertex of candidates|excluded with most neighbours in candidates.
    std::size_t pivot = 0, best = 0;
    bool have = false;
    auto consider = [&](std::size_t u) {
      std::size_t c = candidates.intersection_count(graph.adjacency[u]);
      if (!have || c > best) {
        pivot = u;
        best = c;
        have = true;
      }
    };
    candidates.for_each(consider);
    excluded.for_each(consider);

    Bitset branch = candidates;
    branch.and_not(graph.adjacency[pivot]);
    for (Index v : branch.to_indices()) {
      clique.push_back(v);
      if (!expand(candidates & graph.adjacency[v], excluded & graph.adjacency[v])) return false;
      clique.pop_back();
      candidates.reset(v);
      excluded.set(v);
    }
    return true;
  }
};

}  // namespace

void for_each_maximal_clique(const ThresholdGraph& graph, NodeBudget& budget,
                             const std::function<bool(const std::vector<Index>&)>& visit) {
  const std::size_t w = graph.points.size();
  if (w == 0) return;
  Bitset all(w);
  for (std::size_t i = 0; i < w; ++i) all.set(i);
  BronKerbosch bk{graph, budget, visit, {}};
  bk.expand(all, Bitset(w));
}

std::vector<PointSet> maximal_cliques(const FiniteMetricSpace& space, const PointSet& window,
                                      std::int64_t raw_threshold, NodeBudget& budget) {
  ThresholdGraph g = threshold_graph(space, window, raw_threshold);
  std::vector<PointSet> out;
  for_each_maximal_clique(g, budget, [&](const std::vector<Index>& local) {
    std::vector<Index> m;
    m.reserve(local.size());
    for (Index i : local) m.push_back(g.points[i]);
    out.emplace_back(std::move(m));
    return true;
  });
  std::sort(out.begin(), out.end(),
            [](const PointSet& a, const PointSet& b) { return a.members() < b.members(); });
  return out;
}

}  // namespace asdim
