#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "asdim/metric.hpp"

namespace asdim {

// An indexed family of point sets of one space, together with the window on
// which statistics are evaluated. Sets may reach outside the window.
struct Cover {
  SpacePtr space;
  std::vector<PointSet> sets;
  PointSet window;
};

// Lebesgue number, or the sentinel "some cover set contains the whole
// window" (every subset of the window is then absorbed).
struct LebesgueValue {
  bool all_subsets = false;
  std::int64_t value = 0;

  static LebesgueValue all() { return {true, 0}; }
  static LebesgueValue finite(std::int64_t v) { return {false, v}; }
  bool at_least(std::int64_t lambda) const { return all_subsets || value >= lambda; }
  friend bool operator==(const LebesgueValue&, const LebesgueValue&) = default;
};
std::string to_string(const LebesgueValue& value);

struct CoverOptions {
  std::uint64_t clique_node_budget = 20'000'000;
};

struct CoverStats {
  std::int64_t multiplicity = 0;
  std::map<Rational, std::int64_t> k_multiplicity;
  LebesgueValue lebesgue;
  Rational mesh{0};
};

// Throws Error{"not-a-cover"} naming an uncovered window point.
void require_cover(const Cover& cover);

std::int64_t multiplicity(const Cover& cover);
// max over window points x of #{i : B_k(x) meets set i}.
std::int64_t k_multiplicity(const Cover& cover, const Rational& k);
// Max diameter over nonempty sets; 0 for a family of empty sets.
Rational mesh(const Cover& cover);

// Exact Lebesgue number over all subsets of the window, decided level by
// level through clique containment in the threshold graph. Integral metrics
// only ("clique-method-needs-integers").
LebesgueValue lebesgue_number(const Cover& cover, const CoverOptions& options = {});
// True iff every subset of the window of diameter <= lambda lies in one set.
bool lebesgue_at_least(const Cover& cover, std::int64_t lambda, const CoverOptions& options = {});

// Cheap sufficient-condition lower bound: every window-trace of a ball around
// a centre lies in one set. On tree metrics balls of radius ceil(lambda/2)
// around all points are used (every set of diameter lambda in a tree sits in
// such a ball); otherwise balls of radius lambda around window points.
LebesgueValue lebesgue_lower_bound_balls(const Cover& cover);

CoverStats validate(const Cover& cover, std::span<const Rational> k_queries = {},
                    const CoverOptions& options = {});

// Cover with every set intersected with `window'` and the window replaced.
Cover restrict_cover(const Cover& cover, const PointSet& new_window);

}  // namespace asdim
