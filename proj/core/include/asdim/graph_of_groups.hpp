#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "asdim/cayley.hpp"

namespace asdim {

// An oriented edge of the underlying graph together with the group element
// it contributes to paths (the identity for amalgams, t^{+-1} for HNN).
struct EdgeLetter {
  std::string name;
  Element element;
  int source = 0;
  int target = 0;
};

// g = prefix * edge.element * vertex_part with prefix one stratum lower and
// vertex_part in the target vertex group.
struct Factorization {
  Element prefix;
  std::size_t edge = 0;
  Element vertex_part;
};

// A group split as an amalgam A *_C B (vertices 0, 1) or an HNN extension
// A *_C (vertex 0), read off normal forms. Membership tests are exact
// predicates, never enumerations.
class GraphOfGroups {
 public:
  virtual ~GraphOfGroups() = default;

  virtual GroupPtr group() const = 0;
  virtual bool is_hnn() const = 0;
  virtual std::string describe() const = 0;
  int vertex_count() const { return is_hnn() ? 1 : 2; }
  virtual std::vector<EdgeLetter> edges() const = 0;

  virtual bool in_vertex_group(const Element& g, int vertex) const = 0;
  // Image of the edge group inside the given vertex group; for HNN, side 0
  // is the domain image and side 1 the t-conjugated image.
  virtual bool in_edge_image(const Element& g, int side) const = 0;
  // Elements of G_vertex with generator exponent |k| <= bound.
  virtual std::vector<Element> vertex_elements(int vertex, std::int64_t bound) const = 0;
  // Exponent bound k such that every element of G_vertex of word length
  // <= length has exponent |k'| <= k.
  virtual std::int64_t exponent_bound(std::int64_t length) const = 0;

  // Length of the path in the underlying graph traced by the normal form,
  // starting at vertex 0; stratum(g) = 0 iff g lies in G_0.
  virtual std::int64_t stratum(const Element& g) const = 0;
  // Defined for stratum >= 1.
  virtual Factorization factor(const Element& g) const = 0;
  // Canonical representative of the coset g * G_vertex.
  virtual Element coset_rep(const Element& g, int vertex) const = 0;
};

using GraphOfGroupsPtr = std::shared_ptr<const GraphOfGroups>;

// Z/p * Z/q style free products of two cyclic factors (trivial edge group);
// orders as in FreeProductOfCyclics, e.g. {2,3} or {0,0}.
GraphOfGroupsPtr free_product_splitting(std::int64_t p, std::int64_t q);
// <a,b | a^p = b^q> = <a> *_{<c>} <b>.
GraphOfGroupsPtr central_amalgam_splitting(std::int64_t p, std::int64_t q);
// BS(1,n) = <a> *_{<a>} with t a t^-1 = a^n.
GraphOfGroupsPtr baumslag_solitar_splitting(std::int64_t n);
// Splitting for a zoo name ("amalgam:z2*z3", "amalgam:z*z",
// "amalgam:central:p,q", "bs:1,n"). Throws kUsage "no-splitting".
GraphOfGroupsPtr splitting_for(const std::string& spec);

// ---- stratification ------------------------------------------------------

struct Stratification {
  std::vector<PointSet> strata;  // K_0 .. K_jmax on the window
  PointSet beyond;               // window elements with stratum > j_max
  bool partition_ok = true;      // disjoint and exhaustive
  bool factoring_ok = true;
  std::vector<std::string> failures;  // capped
};

// Throws Error{kCertificate, "non-factorable"} when a normal form fails to
// factor; that is a normal-form bug, not a data condition.
Stratification stratify_words(const GraphOfGroups& gog, const CayleyWindow& window,
                              std::int64_t j_max);

// ---- separation ----------------------------------------------------------

struct SeparationReport {
  PointSet y_r;
  std::vector<PointSet> trimmed;            // x a G_t \ Y_r on the window, one per coset
  std::optional<Rational> separation;       // nullopt = +infinity
  std::int64_t r = 0;
  bool separated = true;                    // separation > r
  bool coset_identity_ok = true;            // membership criterion matches enumeration
  std::size_t pairs_checked = 0;
  std::vector<std::string> failures;
  bool pass() const { return separated && coset_identity_ok; }
};

// Y_r = K_j * a * N_r(edge image in G_t), with N_r(E) = E * B_r, restricted
// to the window, and the family {x a G_t \ Y_r : x in K_j}. Cosets are
// enumerated from vertex_elements independently of the membership test, so
// the coset identity criterion is checked against enumeration.
// Throws "window-too-small" when some x * a falls outside the window.
SeparationReport separation_audit(const GraphOfGroups& gog, const CayleyWindow& window,
                                  const PointSet& stratum, std::size_t edge, std::int64_t r);

// ---- Bass-Serre tree -----------------------------------------------------

struct TreeVertex {
  int type = 0;     // vertex of the underlying graph
  Element rep;      // coset representative
};

struct BassSerreWindow {
  CayleyWindow group;               // acting window
  std::vector<TreeVertex> vertices;
  SpacePtr tree;
  ActionWindow action;
  std::vector<std::size_t> degree;
  bool acyclic = false;
  bool quotient_ok = false;         // every vertex type is hit
};

// Tree vertices are the cosets g G_v for g in the ball of radius
// tree_radius; edges come from the same ball. The group window of radius
// group_radius acts by left multiplication; x0 = G_0. The action refers to
// `gog`, which must outlive it.
BassSerreWindow bass_serre_tree_window(const GraphOfGroups& gog, std::int64_t tree_radius,
                                       std::int64_t group_radius);

}  // namespace asdim
