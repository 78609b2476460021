#include "asdim/relhyp.hpp"

#include <deque>
#include <set>

#include "asdim/error.hpp"

namespace asdim {

RelHypData relhyp_free_rel_cyclic() {
  auto f2 = std::make_shared<FreeProductOfCyclics>(std::vector<std::int64_t>{0, 0}, "relhyp:f2|a");
  PeripheralSubgroup h;
  h.name = "<a>";
  h.contains = [](const Element& g) { return g.empty() || (g.size() == 2 && g[0] == 0); };
  h.coset_rep = [](const Element& g) {
    if (!g.empty() && g[g.size() - 2] == 0) return Element(g.begin(), g.end() - 2);
    return g;
  };
  h.elements = [f2](std::int64_t bound) {
    std::vector<Element> out;
    for (std::int64_t k = -bound; k <= bound; ++k) out.push_back(f2->times_syllable({}, 0, k));
    return out;
  };
  return {f2, {h}};
}

RelHypData make_relhyp(const std::string& spec) {
  if (spec == "relhyp:f2|a") return relhyp_free_rel_cyclic();
  fail(ErrorKind::kUsage, "unknown-group", "no peripheral structure for '" + spec + "'");
}

namespace {

std::map<Element, std::int64_t> bfs_relative(const RelHypData& rh, const std::vector<Element>& ball) {
  const GroupModel& G = *rh.group;
  std::set<Element> in_ball(ball.begin(), ball.end());
  // coset members inside the ball, per subgroup
  std::vector<std::map<Element, std::vector<const Element*>>> cosets(rh.subgroups.size());
  for (std::size_t i = 0; i < rh.subgroups.size(); ++i)
    for (const auto& g : ball) cosets[i][rh.subgroups[i].coset_rep(g)].push_back(&g);

  std::map<Element, std::int64_t> dist;
  std::vector<std::set<Element>> expanded(rh.subgroups.size());
  std::deque<Element> queue;
  dist[G.identity()] = 0;
  queue.push_back(G.identity());
  while (!queue.empty()) {
    Element g = std::move(queue.front());
    queue.pop_front();
    const std::int64_t d = dist[g];
    auto visit = [&](const Element& h) {
      if (dist.emplace(h, d + 1).second) queue.push_back(h);
    };
    for (Letter s = 0; s < G.generator_count(); ++s) {
      Element h = G.multiply(g, s);
      if (in_ball.count(h)) visit(h);
    }
    for (std::size_t i = 0; i < rh.subgroups.size(); ++i) {
      Element key = rh.subgroups[i].coset_rep(g);
      if (!expanded[i].insert(key).second) continue;
      for (const Element* h : cosets[i][key]) visit(*h);
    }
  }
  return dist;
}

}  // namespace

std::map<Element, std::int64_t> relhyp_length_table(const RelHypData& rh, std::int64_t radius) {
  const auto table = word_length_table(*rh.group, radius, 2'000'000);
  std::vector<Element> ball;
  ball.reserve(table.size());
  for (const auto& [g, len] : table) ball.push_back(g);
  return bfs_relative(rh, ball);
}

RelHypMetric relhyp_metric(const RelHypData& rh, std::int64_t radius,
                           std::optional<std::int64_t> compute_radius, const CayleyBudget& budget) {
  RelHypMetric out;
  out.window = cayley_window(rh.group, radius, budget);
  out.compute_radius = compute_radius.value_or(2 * radius);
  const auto table = relhyp_length_table(rh, out.compute_radius);
  const GroupModel& G = *rh.group;
  const std::size_t n = out.window.size();
  std::vector<std::int64_t> numerators(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Element inv = G.inverse(out.window.elements[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      auto it = table.find(G.product(inv, out.window.elements[j]));
      std::int64_t d = 0;
      if (it != table.end()) {
        d = it->second;
      } else {
        d = out.window.space->raw(static_cast<Index>(i), static_cast<Index>(j));
        ++out.fallback_pairs;
      }
      numerators[i * n + j] = d;
      numerators[j * n + i] = d;
    }
  }
  out.space = std::make_shared<FiniteMetricSpace>(n, std::move(numerators), 1,
                                                  out.window.space->labels(), Index{0});
  return out;
}

BallDecomposition relhyp_ball_decompose(const RelHypData& rh, std::int64_t n, std::int64_t r,
                                        std::int64_t window_radius) {
  if (n < 1 || r < 0) fail(ErrorKind::kInvalidInput, "bad-parameter", "need n >= 1 and r >= 0");
  if (window_radius < n + r)
    fail(ErrorKind::kPrecondition, "window-too-small",
         "d_S radius " + std::to_string(n + r) + " needed, got " + std::to_string(window_radius));

  const GroupModel& G = *rh.group;
  const CayleyWindow W = cayley_window(rh.group, window_radius);
  const auto D = bfs_relative(rh, W.elements);

  BallDecomposition out;
  out.n = n;
  out.r = r;
  std::vector<Index> ball_n, ball_prev;
  for (Index i = 0; i < W.size(); ++i) {
    const std::int64_t d = D.at(W.elements[i]);
    if (d <= n) ball_n.push_back(i);
    if (d <= n - 1) ball_prev.push_back(i);
  }
  out.ball_n = PointSet(ball_n);

  // independent enumeration of (U_l B(n-1) H_l) u (U_s B(n-1) s)
  const std::int64_t bound = 2 * window_radius + 1;
  std::vector<Index> parts;
  std::vector<std::map<Element, std::vector<Index>>> tagged(rh.subgroups.size());
  for (std::size_t l = 0; l < rh.subgroups.size(); ++l) {
    const auto h_elems = rh.subgroups[l].elements(bound);
    for (Index b : ball_prev) {
      for (const auto& h : h_elems) {
        auto idx = W.find(G.product(W.elements[b], h));
        if (!idx) continue;
        parts.push_back(*idx);
        tagged[l][rh.subgroups[l].coset_rep(W.elements[*idx])].push_back(*idx);
      }
    }
  }
  for (Index b : ball_prev)
    for (Letter s = 0; s < G.generator_count(); ++s)
      if (auto idx = W.find(G.multiply(W.elements[b], s))) parts.push_back(*idx);
  out.union_parts = PointSet(parts);
  out.covers_exactly = out.union_parts == out.ball_n;
  if (!out.covers_exactly) out.failures.push_back("B(n) differs from the union decomposition");

  std::vector<Index> y;
  for (Index b : ball_prev)
    for (Index w = 0; w < W.size(); ++w)
      if (W.length[w] <= r)
        if (auto idx = W.find(G.product(W.elements[b], W.elements[w]))) y.push_back(*idx);
  out.y_r = PointSet(std::move(y));

  std::vector<PointSet> trimmed;
  for (std::size_t l = 0; l < rh.subgroups.size(); ++l) {
    for (auto& [rep, members] : tagged[l]) {
      CosetPiece piece;
      piece.subgroup = l;
      piece.rep = rep;
      piece.members = PointSet(members);
      piece.trimmed = set_difference(piece.members, out.y_r);
      trimmed.push_back(piece.trimmed);
      out.pieces.push_back(std::move(piece));
    }
  }
  for (std::size_t i = 0; i < out.pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < out.pieces.size(); ++j) {
      const auto& P = out.pieces[i];
      const auto& Q = out.pieces[j];
      if (P.subgroup != Q.subgroup) continue;
      const bool same = rh.subgroups[P.subgroup].contains(G.product(G.inverse(P.rep), Q.rep));
      if (same || !set_intersection(P.members, Q.members).empty()) {
        out.pieces_disjoint = false;
        out.failures.push_back("pieces " + G.format(P.rep) + " and " + G.format(Q.rep) + " overlap");
      }
    }
  }
  out.separation = family_separation(*W.space, trimmed);
  out.separated = !out.separation || *out.separation > Rational(r);
  if (!out.separated) out.failures.push_back("trimmed cosets closer than r");
  return out;
}

}  // namespace asdim
