#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asdim/action.hpp"
#include "asdim/cover.hpp"

namespace asdim {

struct CertificateEntry {
  std::string property;
  std::string relation;  // "<=", ">=", "holds"
  std::string claimed;
  std::string measured;
  bool ok = false;
};

// Claims made by a construction, each re-measured on the produced cover.
struct TransportCertificate {
  std::vector<CertificateEntry> entries;

  bool pass() const;
  void claim_at_most(const std::string& property, const Rational& bound, const Rational& value);
  void claim_at_least(const std::string& property, const Rational& bound, const Rational& value);
  void claim_lebesgue(const std::string& property, const LebesgueValue& bound,
                      const LebesgueValue& value);
  void claim(const std::string& property, bool holds, const std::string& detail = {});
};

struct TransportResult {
  Cover cover;
  TransportCertificate certificate;
};

// V_i = inner_neighborhood(U_i, k), indices kept. The Lebesgue hypothesis is
// read on N_k(window), the region the argument actually touches; requires
// 4k <= L there. Throws "shrink-precondition" naming both values.
TransportResult shrink(const Cover& cover, std::int64_t k);

// Shrink by C = coarse density, push forward, enlarge by C. The target window
// defaults to the points whose quasi-inverse image lies in the cover's window.
// Requires a valid q with a quasi-inverse (alpha', eps') and
//   L >= floor(alpha' * lambda + eps') + 2 * floor(C)
// for the Lebesgue number of the cover on N_C(g(target window)).
TransportResult qi_transport(const Cover& cover, const QuasiIsometryData& q,
                             std::int64_t lambda_target,
                             std::optional<PointSet> target_window = std::nullopt);

struct FamilyMember {
  PointSet region;  // X_alpha
  Cover cover;      // U_alpha: window = region, sets inside the region
};

// {X_alpha} with covers sharing mesh <= B, Lebesgue >= lambda, multiplicity <= m.
struct UniformFamily {
  std::vector<FamilyMember> members;
  Rational mesh_bound{0};
  std::int64_t lambda = 0;
  std::int64_t multiplicity = 1;
};

// W = {U \ inner(Y, lambda)} over all members, plus the sets of y_cover,
// on the window X = (union of regions) union Y. Besides the separation
// hypothesis this requires, for every member, the collar conditions
//   N_lambda(X_alpha \ Y) within X lies in X_alpha, and
//   X_alpha \ inner(Y, lambda) lies in N_lambda(X_alpha \ Y),
// without which the Lebesgue and cross-member claims can fail.
// Throws "family-not-uniform", "separation-too-small", "collar-violated",
// "y-cover-invalid".
TransportResult union_transport(const UniformFamily& family, const Cover& y_cover,
                                std::int64_t lambda);

// Enlarge every member of every family by lambda. Each family must be
// (2*lambda)-disjoint (separation > 2 lambda) and together they must cover
// the window. Throws "separation-too-small", "not-a-cover".
TransportResult disjoint_families_to_cover(SpacePtr space,
                                           const std::vector<std::vector<PointSet>>& families,
                                           std::int64_t lambda, const PointSet& window);

struct ActionTransportInput {
  Cover orbit_cover;  // on X; mesh <= R, Lebesgue >= lambda * mu
  Cover stab_cover;   // on the group window, window = W_R(x0), Lebesgue >= lambda
  Rational radius{0};  // R
  std::int64_t lambda = 0;
  std::optional<PointSet> interior;  // defaults to the largest certified ball
};

// W = {g_U V intersected with pi^-1(U)} with g_U the least element sent into U.
// Throws "action-invalid", "orbit-cover-precondition",
// "stab-cover-precondition", "window-too-small".
TransportResult action_transport(const ActionWindow& act, const ActionTransportInput& input);

}  // namespace asdim
