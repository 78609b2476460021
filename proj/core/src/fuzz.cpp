#include "asdim/fuzz.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

#include "asdim/constructions.hpp"
#include "asdim/error.hpp"
#include "asdim/estimator.hpp"
#include "asdim/serialize.hpp"

namespace asdim {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

FiniteMetricSpace weighted_graph(Rng& rng, std::size_t n) {
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> d(n * n, inf);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0;
  auto connect = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    const std::int64_t w = uniform(rng, 1, 3);
    d[a * n + b] = std::min(d[a * n + b], w);
    d[b * n + a] = d[a * n + b];
  };
  for (std::size_t i = 1; i < n; ++i) connect(i, static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(i) - 1)));
  for (std::size_t e = 0; e < n / 3; ++e)
    connect(static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1)),
            static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1)));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  return FiniteMetricSpace(n, std::move(d));
}

FiniteMetricSpace unit_tree(Rng& rng, std::size_t n) {
  std::vector<std::vector<Index>> adj(n);
  for (std::size_t i = 1; i < n; ++i) {
    const auto p = static_cast<Index>(uniform(rng, 0, static_cast<std::int64_t>(i) - 1));
    adj[i].push_back(p);
    adj[p].push_back(static_cast<Index>(i));
  }
  return graph_metric(adj);
}

std::string compact(const Cover& c) {
  Json j;
  j["window"] = pointset_to_json(c.window);
  Json sets = Json::array();
  for (const auto& s : c.sets) sets.push_back(pointset_to_json(s));
  j["sets"] = std::move(sets);
  j["n"] = c.space->size();
  return j.dump();
}

}  // namespace

FiniteMetricSpace random_space(Rng& rng, std::size_t n_min, std::size_t n_max) {
  const auto n = static_cast<std::size_t>(uniform(rng, static_cast<std::int64_t>(n_min), static_cast<std::int64_t>(n_max)));
  switch (uniform(rng, 0, 3)) {
    case 0:
      return weighted_graph(rng, n);
    case 1:
      return path_space(n);
    case 2: {
      const auto w = static_cast<std::size_t>(uniform(rng, 2, 4));
      return grid_space(w, std::max<std::size_t>(1, n / w));
    }
    default:
      return unit_tree(rng, n);
  }
}

PointSet random_subset(Rng& rng, std::size_t n, double p, bool nonempty) {
  std::bernoulli_distribution coin(p);
  std::vector<Index> members;
  for (Index i = 0; i < n; ++i)
    if (coin(rng)) members.push_back(i);
  if (members.empty() && nonempty && n > 0)
    members.push_back(static_cast<Index>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1)));
  return PointSet(std::move(members));
}

Cover random_cover(Rng& rng, SpacePtr space, const PointSet& window, std::size_t max_sets) {
  const std::size_t n = space->size();
  const Rational span = diam(*space, PointSet::all(n));
  Cover c{space, {}, window};
  const auto count = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_sets)));
  for (std::size_t i = 0; i < count; ++i) {
    if (uniform(rng, 0, 2) > 0) {
      const auto centre = static_cast<Index>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
      const auto r = uniform(rng, 0, std::max<std::int64_t>(1, boost::rational_cast<std::int64_t>(span) / 2));
      c.sets.push_back(ball(*space, centre, Rational(r)));
    } else {
      c.sets.push_back(random_subset(rng, n, 0.3));
    }
  }
  for (Index p : window) {
    const bool covered = std::any_of(c.sets.begin(), c.sets.end(), [&](const PointSet& s) { return s.contains(p); });
    if (covered) continue;
    auto& target = c.sets[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(c.sets.size()) - 1))];
    target = set_union(target, PointSet({p}));
  }
  return c;
}

Cover random_shrinkable_cover(Rng& rng, std::int64_t k, std::size_t n_min, std::size_t n_max) {
  auto space = std::make_shared<FiniteMetricSpace>(random_space(rng, n_min, n_max));
  const std::int64_t lambda = 4 * k;
  const std::int64_t D = 2 * lambda + uniform(rng, 0, 2 * lambda);
  Cover c = ball_cover(space, lambda, D, PointSet::all(space->size()));
  const auto extra = uniform(rng, 0, 2);
  for (std::int64_t i = 0; i < extra; ++i) c.sets.push_back(random_subset(rng, space->size(), 0.25));
  c.window = random_subset(rng, space->size(), 0.6);
  return c;
}

UnionInstance random_union_instance(Rng& rng, std::size_t max_points) {
  for (;;) {
    const std::int64_t lambda = max_points >= 30 ? uniform(rng, 1, 2) : 1;
    const std::int64_t B = 2 * lambda + uniform(rng, 0, 2);
    const std::int64_t collar = lambda + uniform(rng, 0, 1);
    const std::int64_t height = uniform(rng, 1, 2);
    const std::int64_t regions = uniform(rng, 1, 3);

    struct Span {
      std::int64_t first, core_first, core_last, last;
    };
    std::vector<Span> spans;
    std::int64_t col = uniform(rng, 0, 1);  // optional leading Y column
    for (std::int64_t a = 0; a < regions; ++a) {
      const std::int64_t core = uniform(rng, 1, 3);
      Span s{col, col + collar, col + collar + core - 1, col + 2 * collar + core - 1};
      spans.push_back(s);
      const std::int64_t gap = std::max<std::int64_t>(0, 3 * B - 2 * collar - 1) + uniform(rng, 0, 1);
      col = s.last + 1 + gap;
    }
    const std::int64_t width = spans.back().last + 1 + uniform(rng, 0, 1);
    if (static_cast<std::size_t>(width * height) > max_points) continue;

    auto space = std::make_shared<FiniteMetricSpace>(
        grid_space(static_cast<std::size_t>(width), static_cast<std::size_t>(height)));
    auto columns = [&](std::int64_t lo, std::int64_t hi) {
      std::vector<Index> m;
      for (std::int64_t y = 0; y < height; ++y)
        for (std::int64_t x = lo; x <= hi; ++x) m.push_back(static_cast<Index>(y * width + x));
      return PointSet(std::move(m));
    };

    UnionInstance inst;
    inst.lambda = lambda;
    inst.family.lambda = lambda;
    inst.family.mesh_bound = Rational(B);
    PointSet cores;
    for (const auto& s : spans) {
      FamilyMember m;
      m.region = columns(s.first, s.last);
      m.cover = ball_cover(space, lambda, B, m.region);
      inst.family.multiplicity = std::max(inst.family.multiplicity, multiplicity(m.cover));
      inst.family.members.push_back(std::move(m));
      cores = set_union(cores, columns(s.core_first, s.core_last));
    }
    const PointSet y = complement(space->size(), cores);
    inst.y_cover = ball_cover(space, lambda, 2 * lambda + uniform(rng, 0, 3), y);
    return inst;
  }
}

// ---- property suites ----------------------------------------------------------

namespace {

using Check = std::function<std::string(Rng&, bool& skipped)>;  // "" = pass

std::string metric_duality(Rng& rng, bool&) {
  FiniteMetricSpace X = random_space(rng, 2, 18);
  const std::size_t n = X.size();
  const PointSet A = random_subset(rng, n, 0.5, false);
  const Rational k(uniform(rng, 0, 4));
  const PointSet inner = inner_neighborhood(X, A, k);
  const PointSet outer = outer_neighborhood(X, A, k);
  if (inner != complement(n, outer_neighborhood(X, complement(n, A), k))) return "duality fails";
  if (!is_subset(inner, A) || !is_subset(A, outer)) return "inner/outer nesting fails";
  if (!A.empty() && diam(X, outer) > diam(X, A) + 2 * k) return "diam(N_k(A)) > diam(A) + 2k";
  return {};
}

std::string metric_basics(Rng& rng, bool&) {
  auto X = std::make_shared<FiniteMetricSpace>(random_space(rng, 1, 16));
  if (!validate_metric(*X).valid) return "generated metric invalid";
  QuasiIsometryData q{X, X, {}, Rational(1), Rational(0), Rational(0), QuasiInverse{}};
  for (Index i = 0; i < X->size(); ++i) q.map.push_back(i);
  q.quasi_inverse->map = q.map;
  if (!check_quasi_isometry(q).valid) return "identity is not a (1,0,0) quasi-isometry";
  const PointSet S = random_subset(rng, X->size(), 0.5);
  const Subspace sub = subspace(*X, S);
  for (Index i = 0; i < sub.space.size(); ++i)
    for (Index j = 0; j < sub.space.size(); ++j)
      if (sub.space.dist(i, j) != X->dist(sub.to_parent[i], sub.to_parent[j])) return "subspace distorts distances";
  return {};
}

std::string cover_stats(Rng& rng, bool&) {
  auto X = std::make_shared<FiniteMetricSpace>(random_space(rng, 2, 14));
  const PointSet window = random_subset(rng, X->size(), 0.7);
  Cover c = random_cover(rng, X, window);
  const std::int64_t m = multiplicity(c);
  std::int64_t previous = 0;
  for (std::int64_t k = 0; k <= 3; ++k) {
    const std::int64_t km = k_multiplicity(c, Rational(k));
    if (km < m) return "k-multiplicity below multiplicity: " + compact(c);
    if (km < previous) return "k-multiplicity decreases in k: " + compact(c);
    previous = km;
  }
  const LebesgueValue L = lebesgue_number(c);
  // restriction to a nested window
  const PointSet inner = set_intersection(window, random_subset(rng, X->size(), 0.6));
  if (!inner.empty()) {
    Cover r = restrict_cover(c, inner);
    const LebesgueValue Lr = lebesgue_number(r);
    if (!Lr.all_subsets && (L.all_subsets || Lr.value < L.value)) return "restriction lowers L: " + compact(c);
    if (multiplicity(r) > m) return "restriction raises multiplicity: " + compact(c);
  }
  Cover more = c;
  more.sets.push_back(random_subset(rng, X->size(), 0.3));
  const LebesgueValue Lm = lebesgue_number(more);
  if (!Lm.all_subsets && (L.all_subsets || Lm.value < L.value)) return "adding a set lowers L: " + compact(c);
  if (multiplicity(more) < m) return "adding a set lowers multiplicity: " + compact(c);
  return {};
}

std::string lebesgue_balls(Rng& rng, bool&) {
  auto X = std::make_shared<FiniteMetricSpace>(random_space(rng, 2, 16));
  Cover c = random_cover(rng, X, random_subset(rng, X->size(), 0.8));
  const LebesgueValue exact = lebesgue_number(c);
  const LebesgueValue balls = lebesgue_lower_bound_balls(c);
  if (balls.all_subsets && !exact.all_subsets) return "balls bound claims all subsets: " + compact(c);
  if (!balls.all_subsets && !exact.all_subsets && balls.value > exact.value)
    return "balls bound " + to_string(balls) + " > L " + to_string(exact) + ": " + compact(c);
  return {};
}

std::string shrink_suite(Rng& rng, bool& skipped) {
  const std::int64_t k = uniform(rng, 1, 2);
  Cover c = random_shrinkable_cover(rng, k, 6, 20);
  try {
    auto result = shrink(c, k);
    if (!result.certificate.pass()) return "certificate fails: " + dump(certificate_to_json(result.certificate)) + compact(c);
    for (std::size_t i = 0; i < c.sets.size(); ++i)
      if (!is_subset(result.cover.sets[i], c.sets[i])) return "V_i not inside U_i: " + compact(c);
  } catch (const Error& e) {
    if (e.code() == "shrink-precondition") {
      skipped = true;
      return {};
    }
    throw;
  }
  return {};
}

std::string union_suite(Rng& rng, bool&) {
  UnionInstance inst = random_union_instance(rng, 60);
  auto result = union_transport(inst.family, inst.y_cover, inst.lambda);
  if (!result.certificate.pass()) return "certificate fails: " + certificate_to_json(result.certificate).dump();
  return {};
}

std::string ad_bounds_suite(Rng& rng, bool&) {
  auto X = std::make_shared<FiniteMetricSpace>(random_space(rng, 2, 12));
  const PointSet window = random_subset(rng, X->size(), 0.8);
  const std::int64_t lambda = uniform(rng, 1, 2);
  const std::int64_t D = 2 * lambda + uniform(rng, 0, 4);
  AdBounds b = ad_bounds(X, lambda, D, window);
  if (b.lower > b.upper) return "lower > upper";
  if (!b.witness) return "upper bound without witness";
  auto m = witness_multiplicity(*b.witness, lambda, D);
  if (!m || *m - 1 != b.upper) return "witness does not realize the upper bound: " + compact(*b.witness);
  return {};
}

std::string ad_monotone(Rng& rng, bool&) {
  auto X = std::make_shared<FiniteMetricSpace>(random_space(rng, 2, 10));
  const PointSet window = random_subset(rng, X->size(), 0.8);
  const std::int64_t lambda = uniform(rng, 1, 2);
  const std::int64_t D = 2 * lambda + uniform(rng, 0, 3);
  const std::int64_t base = ad_exact(X, lambda, D, window).ad;
  if (lambda + 1 <= D && ad_exact(X, lambda + 1, D, window).ad < base) return "ad decreases in lambda";
  if (ad_exact(X, lambda, D + 1, window).ad > base) return "ad increases in D";
  const PointSet sub = set_intersection(window, random_subset(rng, X->size(), 0.6));
  if (!sub.empty() && ad_exact(X, lambda, D, sub).ad > base) return "restriction increases ad";
  return {};
}

std::string qi_identity(Rng& rng, bool& skipped) {
  auto X = std::make_shared<FiniteMetricSpace>(random_space(rng, 2, 14));
  const std::int64_t lambda = uniform(rng, 1, 3);
  Cover c = ball_cover(X, lambda, 2 * lambda + uniform(rng, 0, 3), PointSet::all(X->size()));
  if (uniform(rng, 0, 1) == 1) c.sets.push_back(random_subset(rng, X->size(), 0.3));
  const LebesgueValue L = lebesgue_number(c);
  if (!L.all_subsets && L.value < 1) {
    skipped = true;
    return {};
  }
  QuasiIsometryData q{X, X, {}, Rational(1), Rational(0), Rational(0), QuasiInverse{}};
  for (Index i = 0; i < X->size(); ++i) q.map.push_back(i);
  q.quasi_inverse->map = q.map;
  const std::int64_t target = L.all_subsets ? 1 : L.value;
  auto result = qi_transport(c, q, target);
  if (!result.certificate.pass()) return "certificate fails";
  if (result.cover.sets != c.sets) return "identity transport changed the cover: " + compact(c);
  return {};
}

const std::map<std::string, Check>& suites() {
  static const std::map<std::string, Check> table = {
      {"metric-duality", metric_duality}, {"metric", metric_basics},
      {"cover-stats", cover_stats},       {"lebesgue-balls", lebesgue_balls},
      {"shrink", shrink_suite},           {"union", union_suite},
      {"ad-bounds", ad_bounds_suite},     {"ad-monotone", ad_monotone},
      {"qi-identity", qi_identity},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, check] : suites()) names.push_back(name);
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t count) {
  auto it = suites().find(name);
  if (it == suites().end()) fail(ErrorKind::kUsage, "unknown-suite", "unknown suite '" + name + "'");
  SuiteResult result;
  result.name = name;
  result.count = count;
  Rng rng(seed);
  const std::size_t max_attempts = 20 * count + 20;
  std::size_t failed = 0;
  for (std::size_t attempt = 0; attempt < max_attempts && result.passed + failed < count; ++attempt) {
    bool skipped = false;
    std::string failure;
    try {
      failure = it->second(rng, skipped);
    } catch (const Error& e) {
      failure = e.code() + ": " + e.what();
    }
    if (skipped) {
      ++result.skipped;
      continue;
    }
    if (failure.empty()) {
      ++result.passed;
      continue;
    }
    ++failed;
    if (result.failures.size() < 10)
      result.failures.push_back("instance " + std::to_string(attempt) + ": " + failure);
  }
  if (result.passed + failed < count)
    result.failures.push_back("only " + std::to_string(result.passed) + " instances met the hypothesis");
  return result;
}

}  // namespace asdim
