#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace oracle {

std::int64_t Frame::diam(Mask m) const {
  std::int64_t best = 0;
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    if (!(m >> i & 1U)) continue;
    for (int j = i + 1; j < n; ++j)
      if (m >> j & 1U) best = std::max(best, space->raw(points[i], points[j]));
  }
  return best;
}

Mask Frame::from_set(const asdim::PointSet& set) const {
  Mask m = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (set.contains(points[i])) m |= Mask{1} << i;
  return m;
}

Frame make_frame(const asdim::FiniteMetricSpace& space, const asdim::PointSet& window) {
  if (window.size() > 20) throw std::invalid_argument("oracle window too large");
  return Frame{&space, window.members()};
}

namespace {

std::vector<Mask> all_masks(std::size_t n) {
  std::vector<Mask> out;
  for (Mask m = 1; m < (Mask{1} << n); ++m) out.push_back(m);
  return out;
}

// Inclusion-maximal subsets with raw diameter <= t.
std::vector<Mask> maximal_small_sets(const Frame& f, std::int64_t t) {
  std::vector<Mask> small;
  for (Mask m : all_masks(f.points.size()))
    if (f.diam(m) <= t) small.push_back(m);
  std::vector<Mask> maximal;
  for (Mask m : small) {
    bool dominated = false;
    for (Mask o : small)
      if (o != m && (o & m) == m) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(m);
  }
  return maximal;
}

bool absorbed(Mask m, const std::vector<Mask>& sets) {
  return std::any_of(sets.begin(), sets.end(), [&](Mask s) { return (s & m) == m; });
}

}  // namespace

std::optional<std::int64_t> lebesgue(const asdim::FiniteMetricSpace& space,
                                     const std::vector<asdim::PointSet>& sets,
                                     const asdim::PointSet& window) {
  const Frame f = make_frame(space, window);
  const Mask full = (Mask{1} << f.points.size()) - 1;
  std::vector<Mask> traces;
  for (const auto& s : sets) traces.push_back(f.from_set(s));
  if (absorbed(full, traces)) return std::nullopt;
  // the answer is below diam(window), which no set contains
  std::int64_t lambda = -1;
  for (std::int64_t t = 0; t <= f.diam(full); ++t) {
    bool ok = true;
    for (Mask m : all_masks(f.points.size()))
      if (f.diam(m) <= t && !absorbed(m, traces)) {
        ok = false;
        break;
      }
    if (!ok) break;
    lambda = t;
  }
  return lambda;
}

std::int64_t multiplicity(const std::vector<asdim::PointSet>& sets, const asdim::PointSet& window) {
  std::int64_t best = 0;
  for (asdim::Index p : window) {
    std::int64_t c = 0;
    for (const auto& s : sets) c += s.contains(p) ? 1 : 0;
    best = std::max(best, c);
  }
  return best;
}

std::int64_t ad(const asdim::FiniteMetricSpace& space, std::int64_t lambda, std::int64_t D,
                const asdim::PointSet& window) {
  if (window.size() > 12) throw std::invalid_argument("oracle window too large");
  const Frame f = make_frame(space, window);
  const std::size_t n = f.points.size();
  const std::vector<Mask> requirements = maximal_small_sets(f, lambda);
  std::vector<Mask> admissible;
  for (Mask m : all_masks(n))
    if (f.diam(m) <= D) admissible.push_back(m);

  for (std::int64_t target = 1; target <= static_cast<std::int64_t>(n); ++target) {
    std::vector<int> load(n, 0);
    std::vector<Mask> chosen;
    std::function<bool()> search = [&]() -> bool {
      auto open = std::find_if(requirements.begin(), requirements.end(),
                               [&](Mask r) { return !absorbed(r, chosen); });
      if (open == requirements.end()) return true;
      for (Mask s : admissible) {
        if ((s & *open) != *open) continue;
        bool fits = true;
        for (std::size_t i = 0; i < n && fits; ++i)
          if (s >> i & 1U) fits = load[i] < target;
        if (!fits) continue;
        for (std::size_t i = 0; i < n; ++i) load[i] += static_cast<int>(s >> i & 1U);
        chosen.push_back(s);
        if (search()) return true;
        chosen.pop_back();
        for (std::size_t i = 0; i < n; ++i) load[i] -= static_cast<int>(s >> i & 1U);
      }
      return false;
    };
    if (search()) return target - 1;
  }
  throw std::logic_error("singletons always cover");
}

std::size_t free_sphere(std::size_t rank, std::int64_t r) {
  if (r == 0) return 1;
  std::size_t s = 2 * rank;
  for (std::int64_t i = 1; i < r; ++i) s *= 2 * rank - 1;
  return s;
}

std::size_t lattice_ball(int n, std::int64_t r) {
  std::vector<std::int64_t> x(static_cast<std::size_t>(n), -r);
  std::size_t count = 0;
  for (;;) {
    std::int64_t len = 0;
    for (auto v : x) len += v < 0 ? -v : v;
    if (len <= r) ++count;
    std::size_t i = 0;
    while (i < x.size() && x[i] == r) x[i++] = -r;
    if (i == x.size()) return count;
    ++x[i];
  }
}

std::size_t mahonian_ball(int n, std::int64_t r) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::size_t count = 0;
  do {
    std::int64_t inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    if (inv <= r) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::size_t free_words_with_syllables(std::int64_t length, std::int64_t syllables) {
  if (length == 0) return syllables == 0 ? 1 : 0;
  if (syllables < 1 || syllables > length) return 0;
  // first generator, then a composition of the length into signed runs
  std::size_t binom = 1;
  for (std::int64_t i = 0; i < syllables - 1; ++i)
    binom = binom * static_cast<std::size_t>(length - 1 - i) / static_cast<std::size_t>(i + 1);
  return 2 * binom * (std::size_t{1} << syllables);
}

}  // namespace oracle
