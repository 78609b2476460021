#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace asdim {

using Rational = boost::rational<std::int64_t>;
using Index = std::uint32_t;

// Parses "7", "-3", "5/2". Throws Error{"bad-rational"}.
Rational parse_rational(const std::string& text);
// Integers print bare, everything else as "p/q".
std::string format_rational(const Rational& value);

// A sorted, duplicate-free subset of the points of some space. The space is
// not stored; operations take it explicitly and check membership bounds.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Index> members);  // sorts and dedups
  static PointSet range(Index first, Index last_inclusive);
  static PointSet all(std::size_t n);

  const std::vector<Index>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Index p) const;
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Index operator[](std::size_t i) const { return members_[i]; }

  // Dense membership mask of length n.
  std::vector<char> mask(std::size_t n) const;
  static PointSet from_mask(const std::vector<char>& mask);

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Index> members_;
};

PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
PointSet set_difference(const PointSet& a, const PointSet& b);
PointSet complement(std::size_t n, const PointSet& a);
bool is_subset(const PointSet& a, const PointSet& b);

// Finite metric space with exact rational distances. Distances are stored as
// int32 numerators over one common denominator, so comparisons against a
// radius reduce to integer comparisons. Immutable after construction.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;
  // `numerators` is row-major n*n; distance(i,j) = numerators[i*n+j]/denominator.
  FiniteMetricSpace(std::size_t n, std::vector<std::int64_t> numerators,
                    std::int64_t denominator = 1,
                    std::vector<std::string> labels = {},
                    std::optional<Index> basepoint = std::nullopt);
  static FiniteMetricSpace from_rationals(std::size_t n,
                                          const std::vector<Rational>& dist,
                                          std::vector<std::string> labels = {},
                                          std::optional<Index> basepoint = std::nullopt);

  std::size_t size() const noexcept { return n_; }
  Rational dist(Index a, Index b) const {
    return Rational(raw(a, b), denominator_);
  }
  // Scaled distance: dist(a,b) * denominator().
  std::int64_t raw(Index a, Index b) const {
    return numerators_[static_cast<std::size_t>(a) * n_ + b];
  }
  std::int64_t denominator() const noexcept { return denominator_; }
  bool is_integral() const noexcept { return denominator_ == 1; }
  // Largest scaled value s with s/denominator <= radius, i.e. dist(a,b) <= radius
  // iff raw(a,b) <= raw_threshold(radius).
  std::int64_t raw_threshold(const Rational& radius) const;
  bool within(Index a, Index b, const Rational& radius) const {
    return raw(a, b) <= raw_threshold(radius);
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Index p) const;
  const std::optional<Index>& basepoint() const noexcept { return basepoint_; }

  // Returns a copy with a different basepoint or labels.
  FiniteMetricSpace with_basepoint(std::optional<Index> basepoint) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::int32_t> numerators_;
  std::int64_t denominator_ = 1;
  std::vector<std::string> labels_;
  std::optional<Index> basepoint_;
};

using SpacePtr = std::shared_ptr<const FiniteMetricSpace>;

// ---- constructors for common spaces -------------------------------------

// Path metric of an undirected graph given by adjacency lists.
// Throws "disconnected-graph" if some pair is unreachable.
FiniteMetricSpace graph_metric(const std::vector<std::vector<Index>>& adjacency,
                               std::vector<std::string> labels = {},
                               std::optional<Index> basepoint = std::nullopt);
// Points 0..n-1 with d(i,j) = |i-j|.
FiniteMetricSpace path_space(std::size_t n);
// width x height grid with the l1 metric; point (x,y) has index y*width + x.
FiniteMetricSpace grid_space(std::size_t width, std::size_t height);

// ---- validation ---------------------------------------------------------

struct MetricReport {
  bool valid = true;
  std::vector<std::string> violations;  // capped at a few dozen entries
};
// Symmetry, zero diagonal, positivity off the diagonal, triangle inequality.
MetricReport validate_metric(const FiniteMetricSpace& space);

// True iff the metric is the path metric of a tree: integral, the
// distance-one graph has n-1 edges, is connected, and its BFS distances equal
// the stored ones.
bool is_tree_metric(const FiniteMetricSpace& space);

// ---- point-set geometry -------------------------------------------------

void check_members(const FiniteMetricSpace& space, const PointSet& set);

// Throws "empty-set-diameter" on the empty set.
Rational diam(const FiniteMetricSpace& space, const PointSet& set);
// nullopt encodes +infinity (either side empty).
std::optional<Rational> set_distance(const FiniteMetricSpace& space,
                                     const PointSet& a, const PointSet& b);
// {x : dist(x, A) <= k}.
PointSet outer_neighborhood(const FiniteMetricSpace& space, const PointSet& set,
                            const Rational& k);
// X \ N_k(X \ A) = {y in A : B_k(y) subset of A}.
PointSet inner_neighborhood(const FiniteMetricSpace& space, const PointSet& set,
                            const Rational& k);
PointSet ball(const FiniteMetricSpace& space, Index center, const Rational& radius);
// Minimum set distance over distinct pairs of nonempty members; nullopt (+inf)
// if at most one member is nonempty.
std::optional<Rational> family_separation(const FiniteMetricSpace& space,
                                          std::span<const PointSet> family);

struct Subspace {
  FiniteMetricSpace space;
  std::vector<Index> to_parent;  // subspace index -> parent index
};
// Restriction of the ambient metric (no geodesic recomputation).
// Throws "empty-subspace".
Subspace subspace(const FiniteMetricSpace& space, const PointSet& set);

// ---- quasi-isometries ----------------------------------------------------

struct QuasiInverse {
  std::vector<Index> map;  // target point -> source point
  Rational alpha{1};
  Rational epsilon{0};
};

struct QuasiIsometryData {
  SpacePtr source;
  SpacePtr target;
  std::vector<Index> map;  // source point -> target point
  Rational alpha{1};
  Rational epsilon{0};
  Rational coarse_density{0};  // every target point within this of the image
  std::optional<QuasiInverse> quasi_inverse;
};

struct QiViolation {
  std::string kind;  // "lower", "upper", "density", "inverse-lower", ...
  Index a = 0;
  Index b = 0;
  std::string detail;
};

struct QiReport {
  bool valid = true;
  std::vector<QiViolation> violations;
};

// Exhaustive check of both quasi-isometry inequalities, coarse density and
// (when present) the quasi-inverse inequalities and round-trip bounds.
QiReport check_quasi_isometry(const QuasiIsometryData& q);

// Largest ball cardinality max_y |B_r(y)| over the space.
std::size_t max_ball_cardinality(const FiniteMetricSpace& space, const Rational& r);

}  // namespace asdim
