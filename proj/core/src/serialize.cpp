#include "asdim/serialize.hpp"

#include "asdim/error.hpp"

namespace asdim {

namespace {

[[noreturn]] void bad(const std::string& detail) { fail(ErrorKind::kInvalidInput, "bad-json", detail); }

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) bad(std::string("missing field '") + key + "'");
  return obj.at(key);
}

void expect_schema(const Json& obj, const char* schema) {
  if (obj.is_object() && obj.contains("schema") && obj.at("schema") != schema)
    bad("expected schema " + std::string(schema) + ", got " + obj.at("schema").dump());
}

std::int64_t as_int(const Json& v, const char* what) {
  if (!v.is_number_integer()) bad(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

Json lebesgue_to_json(const LebesgueValue& v) {
  return v.all_subsets ? Json("all-subsets") : Json(v.value);
}

std::vector<Index> index_map_from_json(const Json& v, std::size_t domain, std::size_t codomain) {
  if (!v.is_array() || v.size() != domain) bad("map has the wrong length");
  std::vector<Index> out;
  for (const auto& x : v) {
    const auto i = as_int(x, "map entry");
    if (i < 0 || static_cast<std::size_t>(i) >= codomain) bad("map entry out of range");
    out.push_back(static_cast<Index>(i));
  }
  return out;
}

}  // namespace

Json rational_to_json(const Rational& value) {
  if (value.denominator() == 1) return value.numerator();
  return format_rational(value);
}

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  bad("distance must be an integer or a \"p/q\" string");
}

Json pointset_to_json(const PointSet& set) { return Json(set.members()); }

PointSet pointset_from_json(const Json& value) {
  if (!value.is_array()) bad("point set must be an array");
  std::vector<Index> members;
  for (const auto& x : value) {
    const auto i = as_int(x, "point index");
    if (i < 0) bad("negative point index");
    members.push_back(static_cast<Index>(i));
  }
  return PointSet(std::move(members));
}

Json space_to_json(const FiniteMetricSpace& space) {
  Json dist = Json::array();
  for (Index i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < space.size(); ++j) row.push_back(rational_to_json(space.dist(i, j)));
    dist.push_back(std::move(row));
  }
  Json out;
  out["schema"] = kSpaceSchema;
  out["n"] = space.size();
  out["dist"] = std::move(dist);
  out["labels"] = space.labels();
  out["basepoint"] = space.basepoint() ? Json(*space.basepoint()) : Json(nullptr);
  return out;
}

FiniteMetricSpace space_from_json(const Json& value) {
  expect_schema(value, kSpaceSchema);
  const auto n = as_int(field(value, "n"), "n");
  if (n < 0) bad("negative n");
  const Json& rows = field(value, "dist");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) bad("dist must have n rows");
  std::vector<Rational> dist;
  dist.reserve(static_cast<std::size_t>(n * n));
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) bad("dist rows must have n entries");
    for (const auto& d : row) dist.push_back(rational_from_json(d));
  }
  std::vector<std::string> labels;
  if (value.contains("labels") && !value.at("labels").is_null()) {
    for (const auto& l : value.at("labels")) {
      if (!l.is_string()) bad("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  std::optional<Index> basepoint;
  if (value.contains("basepoint") && !value.at("basepoint").is_null()) {
    const auto b = as_int(value.at("basepoint"), "basepoint");
    if (b < 0 || b >= n) bad("basepoint out of range");
    basepoint = static_cast<Index>(b);
  }
  auto space = FiniteMetricSpace::from_rationals(static_cast<std::size_t>(n), dist, std::move(labels), basepoint);
  auto report = validate_metric(space);
  if (!report.valid)
    fail(ErrorKind::kInvalidInput, "bad-metric", report.violations.empty() ? "" : report.violations.front());
  return space;
}

Json cover_to_json(const Cover& cover, const std::optional<std::string>& space_ref) {
  Json out;
  out["schema"] = kCoverSchema;
  out["space"] = space_ref ? Json(*space_ref) : space_to_json(*cover.space);
  out["window"] = pointset_to_json(cover.window);
  Json sets = Json::array();
  for (const auto& s : cover.sets) sets.push_back(pointset_to_json(s));
  out["sets"] = std::move(sets);
  return out;
}

Cover cover_from_json(const Json& value, SpacePtr space) {
  expect_schema(value, kCoverSchema);
  Cover c;
  const Json& sp = field(value, "space");
  if (sp.is_object()) {
    c.space = std::make_shared<FiniteMetricSpace>(space_from_json(sp));
  } else if (space) {
    c.space = std::move(space);
  } else {
    bad("cover refers to an external space that was not supplied");
  }
  c.window = pointset_from_json(field(value, "window"));
  check_members(*c.space, c.window);
  for (const auto& s : field(value, "sets")) {
    c.sets.push_back(pointset_from_json(s));
    check_members(*c.space, c.sets.back());
  }
  return c;
}

Json stats_to_json(const CoverStats& stats) {
  Json out;
  out["schema"] = kStatsSchema;
  out["multiplicity"] = stats.multiplicity;
  out["lebesgue"] = lebesgue_to_json(stats.lebesgue);
  out["mesh"] = rational_to_json(stats.mesh);
  Json km = Json::array();
  for (const auto& [k, m] : stats.k_multiplicity) km.push_back({{"k", rational_to_json(k)}, {"value", m}});
  out["k_multiplicity"] = std::move(km);
  return out;
}

Json certificate_to_json(const TransportCertificate& certificate) {
  Json out;
  out["schema"] = kCertificateSchema;
  out["pass"] = certificate.pass();
  Json entries = Json::array();
  for (const auto& e : certificate.entries)
    entries.push_back({{"property", e.property},
                       {"relation", e.relation},
                       {"claimed", e.claimed},
                       {"measured", e.measured},
                       {"ok", e.ok}});
  out["entries"] = std::move(entries);
  return out;
}

TransportCertificate certificate_from_json(const Json& value) {
  expect_schema(value, kCertificateSchema);
  TransportCertificate c;
  for (const auto& e : field(value, "entries")) {
    CertificateEntry entry;
    entry.property = field(e, "property").get<std::string>();
    entry.relation = field(e, "relation").get<std::string>();
    entry.claimed = field(e, "claimed").get<std::string>();
    entry.measured = field(e, "measured").get<std::string>();
    entry.ok = field(e, "ok").get<bool>();
    c.entries.push_back(std::move(entry));
  }
  return c;
}

Json curve_to_json(const DimCurve& curve) {
  Json out;
  out["schema"] = kCurveSchema;
  out["subject"] = curve.subject;
  out["policy"] = {{"d_factor", curve.policy.d_factor},
                   {"r_factor", curve.policy.r_factor},
                   {"max_window_points", curve.policy.max_window_points}};
  Json samples = Json::array();
  for (const auto& s : curve.samples) {
    Json j;
    j["lambda"] = s.lambda;
    j["D"] = s.D;
    j["R"] = s.R;
    j["lower"] = s.lower ? Json(*s.lower) : Json(nullptr);
    j["upper"] = s.upper ? Json(*s.upper) : Json(nullptr);
    j["method"] = s.method;
    j["seconds"] = s.seconds ? Json(*s.seconds) : Json(nullptr);
    if (s.witness) {
      j["witness"] = {{"sets", s.witness->sets.size()},
                      {"window_points", s.witness->window.size()},
                      {"multiplicity", multiplicity(*s.witness)},
                      {"mesh", rational_to_json(mesh(*s.witness))}};
    } else {
      j["witness"] = nullptr;
    }
    samples.push_back(std::move(j));
  }
  out["samples"] = std::move(samples);
  return out;
}

DimCurve curve_from_json(const Json& value) {
  expect_schema(value, kCurveSchema);
  DimCurve c;
  c.subject = field(value, "subject").get<std::string>();
  const Json& p = field(value, "policy");
  c.policy.d_factor = as_int(field(p, "d_factor"), "d_factor");
  c.policy.r_factor = as_int(field(p, "r_factor"), "r_factor");
  c.policy.max_window_points = static_cast<std::size_t>(as_int(field(p, "max_window_points"), "max_window_points"));
  for (const auto& j : field(value, "samples")) {
    CurveSample s;
    s.lambda = as_int(field(j, "lambda"), "lambda");
    s.D = as_int(field(j, "D"), "D");
    s.R = as_int(field(j, "R"), "R");
    if (!field(j, "lower").is_null()) s.lower = as_int(j.at("lower"), "lower");
    if (!field(j, "upper").is_null()) s.upper = as_int(j.at("upper"), "upper");
    s.method = field(j, "method").get<std::string>();
    if (j.contains("seconds") && !j.at("seconds").is_null()) s.seconds = j.at("seconds").get<double>();
    c.samples.push_back(std::move(s));
  }
  return c;
}

Json qi_to_json(const QuasiIsometryData& q) {
  Json out;
  out["schema"] = kQiSchema;
  out["source"] = space_to_json(*q.source);
  out["target"] = space_to_json(*q.target);
  out["map"] = q.map;
  out["alpha"] = rational_to_json(q.alpha);
  out["epsilon"] = rational_to_json(q.epsilon);
  out["coarse_density"] = rational_to_json(q.coarse_density);
  if (q.quasi_inverse) {
    out["quasi_inverse"] = {{"map", q.quasi_inverse->map},
                            {"alpha", rational_to_json(q.quasi_inverse->alpha)},
                            {"epsilon", rational_to_json(q.quasi_inverse->epsilon)}};
  } else {
    out["quasi_inverse"] = nullptr;
  }
  return out;
}

QuasiIsometryData qi_from_json(const Json& value) {
  expect_schema(value, kQiSchema);
  QuasiIsometryData q;
  q.source = std::make_shared<FiniteMetricSpace>(space_from_json(field(value, "source")));
  q.target = std::make_shared<FiniteMetricSpace>(space_from_json(field(value, "target")));
  q.map = index_map_from_json(field(value, "map"), q.source->size(), q.target->size());
  q.alpha = rational_from_json(field(value, "alpha"));
  q.epsilon = rational_from_json(field(value, "epsilon"));
  q.coarse_density = rational_from_json(field(value, "coarse_density"));
  if (value.contains("quasi_inverse") && !value.at("quasi_inverse").is_null()) {
    const Json& inv = value.at("quasi_inverse");
    QuasiInverse qi;
    qi.map = index_map_from_json(field(inv, "map"), q.target->size(), q.source->size());
    qi.alpha = rational_from_json(field(inv, "alpha"));
    qi.epsilon = rational_from_json(field(inv, "epsilon"));
    q.quasi_inverse = std::move(qi);
  }
  return q;
}

Json family_to_json(const UniformFamily& family) {
  Json out;
  out["schema"] = kFamilySchema;
  out["mesh_bound"] = rational_to_json(family.mesh_bound);
  out["lambda"] = family.lambda;
  out["multiplicity"] = family.multiplicity;
  out["space"] = family.members.empty() ? Json(nullptr) : space_to_json(*family.members.front().cover.space);
  Json members = Json::array();
  for (const auto& m : family.members) {
    Json sets = Json::array();
    for (const auto& s : m.cover.sets) sets.push_back(pointset_to_json(s));
    members.push_back({{"region", pointset_to_json(m.region)}, {"sets", std::move(sets)}});
  }
  out["members"] = std::move(members);
  return out;
}

UniformFamily family_from_json(const Json& value, SpacePtr space) {
  expect_schema(value, kFamilySchema);
  UniformFamily f;
  f.mesh_bound = rational_from_json(field(value, "mesh_bound"));
  f.lambda = as_int(field(value, "lambda"), "lambda");
  f.multiplicity = as_int(field(value, "multiplicity"), "multiplicity");
  if (value.contains("space") && value.at("space").is_object())
    space = std::make_shared<FiniteMetricSpace>(space_from_json(value.at("space")));
  if (!space) bad("family has no space");
  for (const auto& m : field(value, "members")) {
    FamilyMember member;
    member.region = pointset_from_json(field(m, "region"));
    check_members(*space, member.region);
    member.cover.space = space;
    member.cover.window = member.region;
    for (const auto& s : field(m, "sets")) {
      member.cover.sets.push_back(pointset_from_json(s));
      check_members(*space, member.cover.sets.back());
    }
    f.members.push_back(std::move(member));
  }
  return f;
}

std::string dump(const Json& value) { return value.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

}  // namespace asdim
