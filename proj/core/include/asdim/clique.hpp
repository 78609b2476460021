#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "asdim/metric.hpp"

namespace asdim {

// Fixed-length bitset sized at runtime.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  // this AND other has any bit
  bool intersects(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }
  bool subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  std::size_t intersection_count(const Bitset& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& and_not(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        int b = std::countr_zero(word);
        f(w * 64 + static_cast<std::size_t>(b));
        word &= word - 1;
      }
    }
  }
  std::vector<Index> to_indices() const {
    std::vector<Index> out;
    for_each([&](std::size_t i) { out.push_back(static_cast<Index>(i)); });
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Graph on the points of `window` (local indices 0..|window|-1) with an edge
// between distinct points at distance <= threshold.
struct ThresholdGraph {
  std::vector<Index> points;  // local -> space index
  std::vector<Bitset> adjacency;
};
ThresholdGraph threshold_graph(const FiniteMetricSpace& space, const PointSet& window,
                               std::int64_t raw_threshold);

// Counts search nodes and throws Error{"budget-exhausted"} past the limit.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}
  void tick(const char* what);
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Bron-Kerbosch with Tomita pivoting. Cliques are reported in local indices.
// The callback returns false to stop the enumeration early.
void for_each_maximal_clique(const ThresholdGraph& graph, NodeBudget& budget,
                             const std::function<bool(const std::vector<Index>&)>& visit);

// Maximal cliques of the threshold graph, as sorted space-index sets in a
// deterministic order (sorted lexicographically).
std::vector<PointSet> maximal_cliques(const FiniteMetricSpace& space, const PointSet& window,
                                      std::int64_t raw_threshold, NodeBudget& budget);

}  // namespace asdim
