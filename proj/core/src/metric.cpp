#include "asdim/metric.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>

#include "asdim/error.hpp"

namespace asdim {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void add_violation(MetricReport& report, std::string text) {
  report.valid = false;
  if (report.violations.size() < 32) report.violations.push_back(std::move(text));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  try {
    std::size_t consumed = 0;
    auto slash = text.find('/');
    if (slash == std::string::npos) {
      std::int64_t v = std::stoll(text, &consumed);
      if (consumed != text.size()) throw std::invalid_argument(text);
      return Rational(v);
    }
    std::int64_t p = std::stoll(text.substr(0, slash), &consumed);
    if (consumed != slash) throw std::invalid_argument(text);
    std::string rest = text.substr(slash + 1);
    std::int64_t q = std::stoll(rest, &consumed);
    if (consumed != rest.size() || q == 0) throw std::invalid_argument(text);
    return Rational(p, q);
  } catch (const std::logic_error&) {
    fail(ErrorKind::kInvalidInput, "bad-rational", "'" + text + "'");
  }
}

std::string format_rational(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

// ---- PointSet -------------------------------------------------------------

PointSet::PointSet(std::vector<Index> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

PointSet PointSet::range(Index first, Index last_inclusive) {
  std::vector<Index> m;
  for (Index i = first; i <= last_inclusive; ++i) m.push_back(i);
  return PointSet(std::move(m));
}

PointSet PointSet::all(std::size_t n) {
  std::vector<Index> m(n);
  std::iota(m.begin(), m.end(), Index{0});
  PointSet s;
  s.members_ = std::move(m);
  return s;
}

bool PointSet::contains(Index p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

std::vector<char> PointSet::mask(std::size_t n) const {
  std::vector<char> m(n, 0);
  for (Index p : members_) m.at(p) = 1;
  return m;
}

PointSet PointSet::from_mask(const std::vector<char>& mask) {
  PointSet s;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) s.members_.push_back(static_cast<Index>(i));
  return s;
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  std::vector<Index> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet(std::move(out));
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  std::vector<Index> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet(std::move(out));
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
  std::vector<Index> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet(std::move(out));
}

PointSet complement(std::size_t n, const PointSet& a) {
  return set_difference(PointSet::all(n), a);
}

bool is_subset(const PointSet& a, const PointSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---- FiniteMetricSpace ----------------------------------------------------

FiniteMetricSpace::FiniteMetricSpace(std::size_t n, std::vector<std::int64_t> numerators,
                                     std::int64_t denominator,
                                     std::vector<std::string> labels,
                                     std::optional<Index> basepoint)
    : n_(n), denominator_(denominator), labels_(std::move(labels)), basepoint_(basepoint) {
  if (numerators.size() != n * n)
    fail(ErrorKind::kInvalidInput, "bad-metric", "distance matrix is not n x n");
  if (denominator <= 0)
    fail(ErrorKind::kInvalidInput, "bad-metric", "denominator must be positive");
  if (!labels_.empty() && labels_.size() != n)
    fail(ErrorKind::kInvalidInput, "bad-metric", "label count differs from n");
  if (basepoint_ && *basepoint_ >= n)
    fail(ErrorKind::kInvalidInput, "bad-metric", "basepoint out of range");
  numerators_.resize(numerators.size());
  for (std::size_t i = 0; i < numerators.size(); ++i) {
    if (numerators[i] < 0)
      fail(ErrorKind::kInvalidInput, "bad-metric", "negative distance");
    if (numerators[i] > std::numeric_limits<std::int32_t>::max())
      fail(ErrorKind::kInvalidInput, "metric-overflow",
           "scaled distance exceeds 32-bit storage");
    numerators_[i] = static_cast<std::int32_t>(numerators[i]);
  }
}

FiniteMetricSpace FiniteMetricSpace::from_rationals(std::size_t n,
                                                    const std::vector<Rational>& dist,
                                                    std::vector<std::string> labels,
                                                    std::optional<Index> basepoint) {
  if (dist.size() != n * n)
    fail(ErrorKind::kInvalidInput, "bad-metric", "distance matrix is not n x n");
  std::int64_t den = 1;
  for (const auto& d : dist) den = std::lcm(den, d.denominator());
  std::vector<std::int64_t> num(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i)
    num[i] = dist[i].numerator() * (den / dist[i].denominator());
  return FiniteMetricSpace(n, std::move(num), den, std::move(labels), basepoint);
}

std::int64_t FiniteMetricSpace::raw_threshold(const Rational& radius) const {
  // floor(radius * denominator)
  return floor_div(radius.numerator() * denominator_, radius.denominator());
}

std::string FiniteMetricSpace::label(Index p) const {
  if (labels_.empty()) return std::to_string(p);
  return labels_.at(p);
}

FiniteMetricSpace FiniteMetricSpace::with_basepoint(std::optional<Index> basepoint) const {
  FiniteMetricSpace copy = *this;
  if (basepoint && *basepoint >= n_)
    fail(ErrorKind::kInvalidInput, "bad-metric", "basepoint out of range");
  copy.basepoint_ = basepoint;
  return copy;
}

// ---- constructors -----------------------------------------------------------

FiniteMetricSpace graph_metric(const std::vector<std::vector<Index>>& adjacency,
                               std::vector<std::string> labels,
                               std::optional<Index> basepoint) {
  const std::size_t n = adjacency.size();
  std::vector<std::int64_t> dist(n * n, -1);
  std::deque<Index> queue;
  for (Index s = 0; s < n; ++s) {
    std::int64_t* row = dist.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      Index u = queue.front();
      queue.pop_front();
      for (Index v : adjacency[u]) {
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (std::size_t t = 0; t < n; ++t)
      if (row[t] < 0)
        fail(ErrorKind::kInvalidInput, "disconnected-graph",
             "no path between " + std::to_string(s) + " and " + std::to_string(t));
  }
  return FiniteMetricSpace(n, std::move(dist), 1, std::move(labels), basepoint);
}

FiniteMetricSpace path_space(std::size_t n) {
  std::vector<std::int64_t> dist(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      dist[i * n + j] = i > j ? static_cast<std::int64_t>(i - j) : static_cast<std::int64_t>(j - i);
  return FiniteMetricSpace(n, std::move(dist));
}

FiniteMetricSpace grid_space(std::size_t width, std::size_t height) {
  const std::size_t n = width * height;
  std::vector<std::int64_t> dist(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    auto ax = static_cast<std::int64_t>(a % width), ay = static_cast<std::int64_t>(a / width);
    for (std::size_t b = 0; b < n; ++b) {
      auto bx = static_cast<std::int64_t>(b % width), by = static_cast<std::int64_t>(b / width);
      dist[a * n + b] = std::abs(ax - bx) + std::abs(ay - by);
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a)
    labels[a] = "(" + std::to_string(a % width) + "," + std::to_string(a / width) + ")";
  return FiniteMetricSpace(n, std::move(dist), 1, std::move(labels));
}

// ---- validation ------------------------------------------------------------

MetricReport validate_metric(const FiniteMetricSpace& space) {
  MetricReport report;
  const auto n = static_cast<Index>(space.size());
  for (Index x = 0; x < n; ++x) {
    if (space.raw(x, x) != 0) add_violation(report, "d(" + std::to_string(x) + ",x) != 0");
    for (Index y = 0; y < n; ++y) {
      if (space.raw(x, y) != space.raw(y, x))
        add_violation(report, "asymmetric at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      if (x != y && space.raw(x, y) == 0)
        add_violation(report, "zero distance between distinct points " + std::to_string(x) +
                                  "," + std::to_string(y));
    }
  }
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        if (space.raw(x, z) > space.raw(x, y) + space.raw(y, z))
          add_violation(report, "triangle (" + std::to_string(x) + "," + std::to_string(y) +
                                    "," + std::to_string(z) + ")");
  return report;
}

bool is_tree_metric(const FiniteMetricSpace& space) {
  if (!space.is_integral()) return false;
  const auto n = static_cast<Index>(space.size());
  if (n == 0) return false;
  std::vector<std::vector<Index>> adj(n);
  std::size_t edges = 0;
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b)
      if (space.raw(a, b) == 1) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++edges;
      }
  if (edges != n - 1) return false;
  std::vector<std::int64_t> d(n);
  std::deque<Index> queue;
  for (Index s = 0; s < n; ++s) {
    std::fill(d.begin(), d.end(), -1);
    d[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      Index u = queue.front();
      queue.pop_front();
      for (Index v : adj[u])
        if (d[v] < 0) {
          d[v] = d[u] + 1;
          queue.push_back(v);
        }
    }
    for (Index t = 0; t < n; ++t)
      if (d[t] != space.raw(s, t)) return false;
  }
  return true;
}

// ---- point-set geometry -----------------------------------------------------

void check_members(const FiniteMetricSpace& space, const PointSet& set) {
  if (!set.empty() && set.members().back() >= space.size())
    fail(ErrorKind::kInvalidInput, "point-out-of-range",
         "index " + std::to_string(set.members().back()) + " in a space of " +
             std::to_string(space.size()) + " points");
}

Rational diam(const FiniteMetricSpace& space, const PointSet& set) {
  if (set.empty()) fail(ErrorKind::kInvalidInput, "empty-set-diameter");
  check_members(space, set);
  std::int64_t best = 0;
  const auto& m = set.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) best = std::max(best, space.raw(m[i], m[j]));
  return Rational(best, space.denominator());
}

std::optional<Rational> set_distance(const FiniteMetricSpace& space, const PointSet& a,
                                     const PointSet& b) {
  if (a.empty() || b.empty()) return std::nullopt;
  check_members(space, a);
  check_members(space, b);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (Index x : a)
    for (Index y : b) best = std::min(best, space.raw(x, y));
  return Rational(best, space.denominator());
}

PointSet outer_neighborhood(const FiniteMetricSpace& space, const PointSet& set,
                            const Rational& k) {
  check_members(space, set);
  const std::int64_t limit = space.raw_threshold(k);
  std::vector<Index> out;
  if (set.empty() || limit < 0) return PointSet(out);
  const auto n = static_cast<Index>(space.size());
  for (Index x = 0; x < n; ++x) {
    for (Index a : set)
      if (space.raw(x, a) <= limit) {
        out.push_back(x);
        break;
      }
  }
  return PointSet(std::move(out));
}

PointSet inner_neighborhood(const FiniteMetricSpace& space, const PointSet& set,
                            const Rational& k) {
  check_members(space, set);
  const PointSet outside = complement(space.size(), set);
  return complement(space.size(), outer_neighborhood(space, outside, k));
}

PointSet ball(const FiniteMetricSpace& space, Index center, const Rational& radius) {
  return outer_neighborhood(space, PointSet({center}), radius);
}

std::optional<Rational> family_separation(const FiniteMetricSpace& space,
                                          std::span<const PointSet> family) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].empty()) continue;
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      auto d = set_distance(space, family[i], family[j]);
      if (d && (!best || *d < *best)) best = d;
    }
  }
  return best;
}

Subspace subspace(const FiniteMetricSpace& space, const PointSet& set) {
  if (set.empty()) fail(ErrorKind::kInvalidInput, "empty-subspace");
  check_members(space, set);
  const std::size_t m = set.size();
  std::vector<std::int64_t> dist(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) dist[i * m + j] = space.raw(set[i], set[j]);
  std::vector<std::string> labels;
  if (!space.labels().empty())
    for (Index p : set) labels.push_back(space.labels()[p]);
  std::optional<Index> base;
  if (space.basepoint()) {
    auto it = std::lower_bound(set.begin(), set.end(), *space.basepoint());
    if (it != set.end() && *it == *space.basepoint())
      base = static_cast<Index>(it - set.begin());
  }
  Subspace out{FiniteMetricSpace(m, std::move(dist), space.denominator(), std::move(labels), base),
               set.members()};
  return out;
}

// ---- quasi-isometries ----------------------------------------------------

namespace {

void qi_violation(QiReport& report, std::string kind, Index a, Index b, std::string detail) {
  report.valid = false;
  if (report.violations.size() < 64)
    report.violations.push_back({std::move(kind), a, b, std::move(detail)});
}

// Checks (1/alpha) d(x,y) - eps <= d'(f x, f y) <= alpha d(x,y) + eps for all pairs.
void check_bilipschitz(QiReport& report, const FiniteMetricSpace& from,
                       const FiniteMetricSpace& to, const std::vector<Index>& map,
                       const Rational& alpha, const Rational& eps, const std::string& prefix) {
  const auto n = static_cast<Index>(from.size());
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y) {
      Rational d = from.dist(x, y);
      Rational dd = to.dist(map[x], map[y]);
      if (d / alpha - eps > dd)
        qi_violation(report, prefix + "lower", x, y,
                     "d=" + format_rational(d) + " image d=" + format_rational(dd));
      if (dd > alpha * d + eps)
        qi_violation(report, prefix + "upper", x, y,
                     "d=" + format_rational(d) + " image d=" + format_rational(dd));
    }
}

}  // namespace

QiReport check_quasi_isometry(const QuasiIsometryData& q) {
  QiReport report;
  if (!q.source || !q.target) fail(ErrorKind::kInvalidInput, "bad-quasi-isometry", "missing space");
  const auto& src = *q.source;
  const auto& tgt = *q.target;
  if (q.map.size() != src.size())
    fail(ErrorKind::kInvalidInput, "bad-quasi-isometry", "map is not total on the source");
  for (Index y : q.map)
    if (y >= tgt.size()) fail(ErrorKind::kInvalidInput, "bad-quasi-isometry", "image out of range");
  if (q.alpha < 1 || q.epsilon < 0 || q.coarse_density < 0)
    fail(ErrorKind::kInvalidInput, "bad-quasi-isometry", "constants out of range");

  check_bilipschitz(report, src, tgt, q.map, q.alpha, q.epsilon, "");

  const std::int64_t c_raw = tgt.raw_threshold(q.coarse_density);
  std::vector<char> in_image(tgt.size(), 0);
  for (Index y : q.map) in_image[y] = 1;
  for (Index y = 0; y < tgt.size(); ++y) {
    bool near = false;
    for (Index x = 0; x < src.size() && !near; ++x) near = tgt.raw(y, q.map[x]) <= c_raw;
    if (!near) qi_violation(report, "density", y, y, "target point far from the image");
  }

  if (q.quasi_inverse) {
    const auto& inv = *q.quasi_inverse;
    if (inv.map.size() != tgt.size())
      fail(ErrorKind::kInvalidInput, "bad-quasi-isometry", "quasi-inverse not total");
    for (Index x : inv.map)
      if (x >= src.size()) fail(ErrorKind::kInvalidInput, "bad-quasi-isometry", "inverse image out of range");
    check_bilipschitz(report, tgt, src, inv.map, inv.alpha, inv.epsilon, "inverse-");
    const std::int64_t c_src = src.raw_threshold(q.coarse_density);
    for (Index y = 0; y < tgt.size(); ++y)
      if (tgt.raw(q.map[inv.map[y]], y) > c_raw)
        qi_violation(report, "round-trip-target", y, y, "d(f(g(y)), y) > C");
    for (Index x = 0; x < src.size(); ++x)
      if (src.raw(inv.map[q.map[x]], x) > c_src)
        qi_violation(report, "round-trip-source", x, x, "d(g(f(x)), x) > C");
  }
  return report;
}

std::size_t max_ball_cardinality(const FiniteMetricSpace& space, const Rational& r) {
  const std::int64_t limit = space.raw_threshold(r);
  std::size_t best = 0;
  const auto n = static_cast<Index>(space.size());
  for (Index y = 0; y < n; ++y) {
    std::size_t count = 0;
    for (Index z = 0; z < n; ++z)
      if (space.raw(y, z) <= limit) ++count;
    best = std::max(best, count);
  }
  return best;
}

}  // namespace asdim
