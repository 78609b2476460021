#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "asdim/cover.hpp"
#include "asdim/curve.hpp"
#include "asdim/transport.hpp"

namespace asdim {

using Json = nlohmann::json;

// Schema tags written into every document's "schema" field.
inline constexpr const char* kSpaceSchema = "asdim-space/1";
inline constexpr const char* kCoverSchema = "asdim-cover/1";
inline constexpr const char* kStatsSchema = "asdim-stats/1";
inline constexpr const char* kCertificateSchema = "asdim-certificate/1";
inline constexpr const char* kCurveSchema = "asdim-curve/1";
inline constexpr const char* kQiSchema = "asdim-qi/1";
inline constexpr const char* kFamilySchema = "asdim-family/1";

// Integers as numbers, everything else as "p/q".
Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& value);

Json pointset_to_json(const PointSet& set);
PointSet pointset_from_json(const Json& value);

Json space_to_json(const FiniteMetricSpace& space);
// Validates the metric; throws kInvalidInput "bad-json" / "bad-metric".
FiniteMetricSpace space_from_json(const Json& value);

// The space is inlined unless `space_ref` names an external file.
Json cover_to_json(const Cover& cover, const std::optional<std::string>& space_ref = std::nullopt);
// `space` is used when the document holds a reference instead of an inline space.
Cover cover_from_json(const Json& value, SpacePtr space = nullptr);

Json stats_to_json(const CoverStats& stats);
Json certificate_to_json(const TransportCertificate& certificate);
TransportCertificate certificate_from_json(const Json& value);

Json curve_to_json(const DimCurve& curve);
DimCurve curve_from_json(const Json& value);

Json qi_to_json(const QuasiIsometryData& q);
QuasiIsometryData qi_from_json(const Json& value);

// {"mesh_bound", "lambda", "multiplicity", "space", "members": [{"region", "sets"}]}
Json family_to_json(const UniformFamily& family);
UniformFamily family_from_json(const Json& value, SpacePtr space = nullptr);

// Two-space indentation and a trailing newline; key order is sorted, so
// output is byte-stable.
std::string dump(const Json& value);
// Throws kInvalidInput "bad-json".
Json parse_json(const std::string& text);

}  // namespace asdim
