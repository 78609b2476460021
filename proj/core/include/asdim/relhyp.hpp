#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asdim/cayley.hpp"

namespace asdim {

struct PeripheralSubgroup {
  std::string name;
  std::function<bool(const Element&)> contains;
  std::function<Element(const Element&)> coset_rep;  // canonical rep of g H
  std::function<std::vector<Element>(std::int64_t)> elements;  // exponent |k| <= bound
};

// A group with peripheral subgroups H_1..H_m. The H-alphabet is the union of
// H_i \ {e}, realized on a finite window.
struct RelHypData {
  GroupPtr group;
  std::vector<PeripheralSubgroup> subgroups;
};

// F2 = <a, b> with H = <a>; also selected by the zoo name "relhyp:f2|a".
RelHypData relhyp_free_rel_cyclic();
// Throws kUsage "unknown-group".
RelHypData make_relhyp(const std::string& spec);

// d_{S+H}-lengths of the d_S ball of radius `radius`, by BFS inside that ball
// where each H-coset is one clique of edges. These are upper bounds for the
// global lengths.
std::map<Element, std::int64_t> relhyp_length_table(const RelHypData& rh, std::int64_t radius);

struct RelHypMetric {
  CayleyWindow window;   // d_S ball of the report radius
  SpacePtr space;        // same points, d_{S+H}
  std::int64_t compute_radius = 0;
  std::size_t fallback_pairs = 0;  // pairs with g^-1 h outside the compute ball (read as d_S)
};

// d(g, h) = D(g^-1 h) with D from relhyp_length_table on compute_radius
// (default 2 * radius, where no pair falls back).
RelHypMetric relhyp_metric(const RelHypData& rh, std::int64_t radius,
                           std::optional<std::int64_t> compute_radius = std::nullopt,
                           const CayleyBudget& budget = {});

struct CosetPiece {
  std::size_t subgroup = 0;
  Element rep;    // gamma
  PointSet members;  // gamma H on the window
  PointSet trimmed;  // gamma H \ Y_r
};

struct BallDecomposition {
  std::int64_t n = 0;
  std::int64_t r = 0;
  PointSet ball_n;            // B(n) on the window
  PointSet union_parts;       // (U_l B(n-1) H_l) u (U_s B(n-1) s) on the window
  bool covers_exactly = false;
  std::vector<CosetPiece> pieces;
  bool pieces_disjoint = true;
  PointSet y_r;               // B(n-1) * B_S(r)
  std::optional<Rational> separation;  // of the trimmed pieces, d_S
  bool separated = true;      // separation > r
  std::vector<std::string> failures;
  bool pass() const { return covers_exactly && pieces_disjoint && separated; }
};

// Materializes B(n) inside the d_S window of radius `window_radius`, checks
// the union decomposition against an independent enumeration, tags
// B(n-1)H_l into cosets and measures the r-separation of the trimmed cosets.
// Throws kPrecondition "window-too-small" naming the d_S radius needed.
BallDecomposition relhyp_ball_decompose(const RelHypData& rh, std::int64_t n, std::int64_t r,
                                        std::int64_t window_radius);

}  // namespace asdim
