#include "asdim/transport.hpp"

#include <algorithm>

#include "asdim/error.hpp"

namespace asdim {

namespace {

std::string str(const Rational& r) { return format_rational(r); }

Rational ceil_rational(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (Rational(q) < r) ++q;
  return Rational(q);
}

std::int64_t floor_int(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (Rational(q) > r) --q;
  return q;
}

bool covers(const Cover& c) {
  try {
    require_cover(c);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// {y in Y : B_k(y) within `region` lies in Y}.
PointSet relative_inner(const FiniteMetricSpace& space, const PointSet& y, const PointSet& region,
                        std::int64_t k) {
  const auto in_y = y.mask(space.size());
  const std::int64_t limit = space.raw_threshold(Rational(k));
  std::vector<Index> out;
  for (Index p : y) {
    bool inside = true;
    for (Index q : region)
      if (!in_y[q] && space.raw(p, q) <= limit) {
        inside = false;
        break;
      }
    if (inside) out.push_back(p);
  }
  return PointSet(std::move(out));
}

}  // namespace

bool TransportCertificate::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.ok; });
}

void TransportCertificate::claim_at_most(const std::string& property, const Rational& bound,
                                         const Rational& value) {
  entries.push_back({property, "<=", str(bound), str(value), value <= bound});
}

void TransportCertificate::claim_at_least(const std::string& property, const Rational& bound,
                                          const Rational& value) {
  entries.push_back({property, ">=", str(bound), str(value), value >= bound});
}

void TransportCertificate::claim_lebesgue(const std::string& property, const LebesgueValue& bound,
                                          const LebesgueValue& value) {
  bool ok = value.all_subsets || (!bound.all_subsets && value.value >= bound.value);
  entries.push_back({property, ">=", to_string(bound), to_string(value), ok});
}

void TransportCertificate::claim(const std::string& property, bool holds,
                                 const std::string& detail) {
  entries.push_back({property, "holds", "true", holds ? "true" : "false: " + detail, holds});
}

TransportResult shrink(const Cover& cover, std::int64_t k) {
  if (k < 0) fail(ErrorKind::kInvalidInput, "negative-radius");
  require_cover(cover);
  const auto& space = *cover.space;
  const PointSet reach = outer_neighborhood(space, cover.window, Rational(k));
  const Cover extended{cover.space, cover.sets, reach};
  if (!covers(extended))
    fail(ErrorKind::kPrecondition, "shrink-precondition",
         "the cover does not reach N_" + std::to_string(k) + "(window)");
  const LebesgueValue lebesgue = lebesgue_number(extended);
  if (!lebesgue.at_least(4 * k))
    fail(ErrorKind::kPrecondition, "shrink-precondition",
         "L=" + to_string(lebesgue) + " on N_k(window) but 4k=" + std::to_string(4 * k));

  TransportResult out{Cover{cover.space, {}, cover.window}, {}};
  for (const auto& u : cover.sets) out.cover.sets.push_back(inner_neighborhood(space, u, Rational(k)));

  auto& cert = out.certificate;
  const bool covered = covers(out.cover);
  cert.claim("covers-window", covered, "some window point lost");
  bool nested = true;
  for (std::size_t i = 0; i < cover.sets.size(); ++i)
    nested = nested && is_subset(out.cover.sets[i], cover.sets[i]);
  cert.claim("V_i-within-U_i", nested, "containment broken");
  if (covered) {
    const LebesgueValue want = lebesgue.all_subsets ? LebesgueValue::all()
                                                    : LebesgueValue::finite(lebesgue.value - 2 * k);
    cert.claim_lebesgue("lebesgue(V) vs L-2k", want, lebesgue_number(out.cover));
    cert.claim_at_most("k-multiplicity(V,k) vs m(U)", Rational(multiplicity(cover)),
                       Rational(k_multiplicity(out.cover, Rational(k))));
  }
  return out;
}

TransportResult qi_transport(const Cover& cover, const QuasiIsometryData& q,
                             std::int64_t lambda_target, std::optional<PointSet> target_window) {
  require_cover(cover);
  if (!q.source || !q.target) fail(ErrorKind::kInvalidInput, "bad-quasi-isometry", "missing space");
  if (q.source.get() != cover.space.get() && q.source->size() != cover.space->size())
    fail(ErrorKind::kInvalidInput, "bad-quasi-isometry", "source is not the cover's space");
  const QiReport report = check_quasi_isometry(q);
  if (!report.valid)
    fail(ErrorKind::kPrecondition, "qi-invalid",
         report.violations.front().kind + ": " + report.violations.front().detail);
  if (!q.quasi_inverse)
    fail(ErrorKind::kPrecondition, "qi-needs-inverse", "a quasi-inverse is required");
  const auto& inv = *q.quasi_inverse;
  const auto& source = *q.source;
  const auto& target = *q.target;
  const std::int64_t c = floor_int(q.coarse_density);

  PointSet y_window;
  if (target_window) {
    check_members(target, *target_window);
    y_window = *target_window;
  } else {
    std::vector<Index> m;
    for (Index y = 0; y < target.size(); ++y)
      if (cover.window.contains(inv.map[y])) m.push_back(y);
    y_window = PointSet(std::move(m));
  }
  std::vector<Index> pulled;
  for (Index y : y_window) pulled.push_back(inv.map[y]);
  const PointSet reach = outer_neighborhood(source, PointSet(pulled), Rational(c));
  const Cover extended{cover.space, cover.sets, reach};
  if (!covers(extended))
    fail(ErrorKind::kPrecondition, "qi-precondition",
         "the cover does not reach N_C(g(target window))");
  const LebesgueValue lebesgue = lebesgue_number(extended);
  const std::int64_t need = floor_int(inv.alpha * lambda_target + inv.epsilon) + 2 * c;
  if (!lebesgue.at_least(need))
    fail(ErrorKind::kPrecondition, "qi-precondition",
         "L=" + to_string(lebesgue) + " but floor(alpha'*lambda+eps')+2C=" + std::to_string(need));

  TransportResult out{Cover{q.target, {}, y_window}, {}};
  std::int64_t max_fibre = 0;
  {
    std::vector<std::int64_t> fibre(target.size(), 0);
    for (Index x = 0; x < source.size(); ++x) max_fibre = std::max(max_fibre, ++fibre[q.map[x]]);
  }
  for (const auto& u : cover.sets) {
    const PointSet shrunk = inner_neighborhood(source, u, Rational(c));
    std::vector<Index> image;
    for (Index x : shrunk) image.push_back(q.map[x]);
    out.cover.sets.push_back(outer_neighborhood(target, PointSet(std::move(image)), Rational(c)));
  }

  // Multiplicity of the source cover over every point it touches.
  std::int64_t ambient_m = 0;
  {
    std::vector<std::int64_t> count(source.size(), 0);
    for (const auto& u : cover.sets)
      for (Index x : u) ambient_m = std::max(ambient_m, ++count[x]);
  }
  auto& cert = out.certificate;
  const bool covered = covers(out.cover);
  cert.claim("covers-target-window", covered, "some target window point uncovered");
  if (covered) {
    cert.claim_at_least("lebesgue(V) vs lambda_target", Rational(lambda_target),
                        Rational(lebesgue_at_least(out.cover, lambda_target) ? lambda_target
                                                                              : lambda_target - 1));
    const auto ball = static_cast<std::int64_t>(max_ball_cardinality(target, Rational(c)));
    cert.claim_at_most("multiplicity(V) vs c_Y(C)*fibre*m(U)",
                       Rational(ball * max_fibre * ambient_m), Rational(multiplicity(out.cover)));
  }
  cert.claim_at_most("mesh(V) vs alpha*mesh(U)+eps+2C",
                     q.alpha * mesh(cover) + q.epsilon + Rational(2 * c), mesh(out.cover));
  return out;
}

TransportResult union_transport(const UniformFamily& family, const Cover& y_cover,
                                std::int64_t lambda) {
  if (lambda < 0) fail(ErrorKind::kInvalidInput, "negative-radius");
  if (family.members.empty()) fail(ErrorKind::kInvalidInput, "family-not-uniform", "empty family");
  const SpacePtr space_ptr = y_cover.space;
  const auto& space = *space_ptr;
  const Rational b = family.mesh_bound;

  // Uniformity of the family.
  PointSet x_all = y_cover.window;
  for (std::size_t a = 0; a < family.members.size(); ++a) {
    const auto& mem = family.members[a];
    const std::string who = "member " + std::to_string(a);
    if (mem.cover.space.get() != space_ptr.get())
      fail(ErrorKind::kInvalidInput, "family-not-uniform", who + " lives on another space");
    if (!(mem.cover.window == mem.region))
      fail(ErrorKind::kInvalidInput, "family-not-uniform", who + ": window differs from region");
    if (!covers(mem.cover)) fail(ErrorKind::kPrecondition, "family-not-uniform", who + " is not a cover");
    for (const auto& u : mem.cover.sets)
      if (!is_subset(u, mem.region))
        fail(ErrorKind::kPrecondition, "family-not-uniform", who + " has a set leaving its region");
    if (mesh(mem.cover) > b)
      fail(ErrorKind::kPrecondition, "family-not-uniform",
           who + ": mesh " + str(mesh(mem.cover)) + " > B=" + str(b));
    if (multiplicity(mem.cover) > family.multiplicity)
      fail(ErrorKind::kPrecondition, "family-not-uniform",
           who + ": multiplicity " + std::to_string(multiplicity(mem.cover)) + " > m=" +
               std::to_string(family.multiplicity));
    if (!lebesgue_at_least(mem.cover, family.lambda) || family.lambda < lambda)
      fail(ErrorKind::kPrecondition, "family-not-uniform", who + ": Lebesgue number below lambda");
    x_all = set_union(x_all, mem.region);
  }
  if (y_cover.space.get() != space_ptr.get() || !covers(y_cover) ||
      !lebesgue_at_least(y_cover, lambda))
    fail(ErrorKind::kPrecondition, "y-cover-invalid",
         "the cover of Y must cover Y with Lebesgue number >= lambda");

  // Separation arithmetic.
  const PointSet& y = y_cover.window;
  if (Rational(3) * b - Rational(2 * lambda) < Rational(lambda))
    fail(ErrorKind::kPrecondition, "separation-too-small",
         "3B-2lambda=" + str(Rational(3) * b - Rational(2 * lambda)) + " < lambda=" +
             std::to_string(lambda));
  std::vector<PointSet> outside;
  for (const auto& mem : family.members) outside.push_back(set_difference(mem.region, y));
  const auto sep = family_separation(space, outside);
  if (sep && *sep < Rational(3) * b)
    fail(ErrorKind::kPrecondition, "separation-too-small",
         "measured separation " + str(*sep) + " < 3B=" + str(Rational(3) * b));

  const PointSet core = relative_inner(space, y, x_all, lambda);
  for (std::size_t a = 0; a < family.members.size(); ++a) {
    const PointSet collar =
        outer_neighborhood(space, outside[a], Rational(lambda));
    if (!is_subset(set_intersection(collar, x_all), family.members[a].region) ||
        !is_subset(set_difference(family.members[a].region, core), collar))
      fail(ErrorKind::kPrecondition, "collar-violated",
           "member " + std::to_string(a) + " fails the lambda-collar condition around Y");
  }

  TransportResult out{Cover{space_ptr, {}, x_all}, {}};
  std::vector<std::size_t> owner;
  for (std::size_t a = 0; a < family.members.size(); ++a)
    for (const auto& u : family.members[a].cover.sets) {
      PointSet s = set_difference(u, core);
      if (s.empty()) continue;
      out.cover.sets.push_back(std::move(s));
      owner.push_back(a);
    }
  const std::size_t shrunk_count = out.cover.sets.size();
  for (const auto& v : y_cover.sets) out.cover.sets.push_back(v);

  auto& cert = out.certificate;
  const bool covered = covers(out.cover);
  cert.claim("covers-union", covered, "some point of the union uncovered");
  cert.claim_at_most("mesh(W) vs max(B, mesh(V))", std::max(b, mesh(y_cover)), mesh(out.cover));
  if (covered) {
    cert.claim_at_most("multiplicity(W) vs m + m_Y", Rational(family.multiplicity + multiplicity(y_cover)),
                       Rational(multiplicity(out.cover)));
    cert.claim_at_least("lebesgue(W) vs lambda", Rational(lambda),
                        Rational(lebesgue_at_least(out.cover, lambda) ? lambda : lambda - 1));
  }
  std::string clash;
  for (Index p : x_all) {
    std::optional<std::size_t> seen;
    for (std::size_t s = 0; s < shrunk_count && clash.empty(); ++s)
      if (out.cover.sets[s].contains(p)) {
        if (seen && *seen != owner[s]) clash = "point " + space.label(p);
        seen = owner[s];
      }
    if (!clash.empty()) break;
  }
  cert.claim("single-member-incidence", clash.empty(), clash);
  return out;
}

TransportResult disjoint_families_to_cover(SpacePtr space,
                                           const std::vector<std::vector<PointSet>>& families,
                                           std::int64_t lambda, const PointSet& window) {
  if (lambda < 0) fail(ErrorKind::kInvalidInput, "negative-radius");
  check_members(*space, window);
  Rational d{0};
  for (std::size_t f = 0; f < families.size(); ++f) {
    const auto sep = family_separation(*space, families[f]);
    if (sep && *sep <= Rational(2 * lambda))
      fail(ErrorKind::kPrecondition, "separation-too-small",
           "family " + std::to_string(f) + " separation " + str(*sep) + " <= 2lambda=" +
               std::to_string(2 * lambda));
    for (const auto& s : families[f])
      if (!s.empty()) d = std::max(d, diam(*space, s));
  }
  Cover base{space, {}, window};
  for (const auto& fam : families)
    for (const auto& s : fam) base.sets.push_back(s);
  require_cover(base);

  TransportResult out{Cover{space, {}, window}, {}};
  for (const auto& s : base.sets)
    if (!s.empty()) out.cover.sets.push_back(outer_neighborhood(*space, s, Rational(lambda)));
  auto& cert = out.certificate;
  cert.claim_at_most("multiplicity vs number of families", Rational(static_cast<std::int64_t>(families.size())),
                     Rational(multiplicity(out.cover)));
  cert.claim_at_least("lebesgue vs lambda", Rational(lambda),
                      Rational(lebesgue_at_least(out.cover, lambda) ? lambda : lambda - 1));
  cert.claim_at_most("mesh vs D+2lambda", d + Rational(2 * lambda), mesh(out.cover));
  return out;
}

TransportResult action_transport(const ActionWindow& act, const ActionTransportInput& input) {
  const ActionAudit audit = audit_action(act);
  if (!audit.valid) fail(ErrorKind::kPrecondition, "action-invalid", audit.violations.front());
  const auto& group = *act.group;
  const Rational mu = orbit_step(act);
  const std::int64_t lambda = input.lambda;
  if (lambda < 0) fail(ErrorKind::kInvalidInput, "negative-radius");

  const Cover& orbit = input.orbit_cover;
  const Cover& stab = input.stab_cover;
  if (orbit.space.get() != act.space.get() || !covers(orbit))
    fail(ErrorKind::kPrecondition, "orbit-cover-precondition", "not a cover of the orbit space");
  if (mesh(orbit) > input.radius)
    fail(ErrorKind::kPrecondition, "orbit-cover-precondition",
         "mesh " + str(mesh(orbit)) + " > R=" + str(input.radius));
  const std::int64_t orbit_lambda = floor_int(ceil_rational(mu * lambda));
  if (!lebesgue_at_least(orbit, orbit_lambda))
    fail(ErrorKind::kPrecondition, "orbit-cover-precondition",
         "Lebesgue number below lambda*mu=" + str(mu * lambda));
  const PointSet w_r = stabilizer_window(act, input.radius);
  if (stab.space.get() != act.group.get() || !(stab.window == w_r) || !covers(stab))
    fail(ErrorKind::kPrecondition, "stab-cover-precondition", "must cover W_R(x0) exactly");
  if (!lebesgue_at_least(stab, lambda))
    fail(ErrorKind::kPrecondition, "stab-cover-precondition", "Lebesgue number below lambda");

  // Representatives: least group element sent into each orbit set.
  const auto n = static_cast<Index>(group.size());
  std::vector<std::optional<Index>> rep(orbit.sets.size());
  for (std::size_t u = 0; u < orbit.sets.size(); ++u)
    for (Index g = 0; g < n && !rep[u]; ++g)
      if (orbit.sets[u].contains(act.orbit[g])) rep[u] = g;

  const std::int64_t rho = *std::max_element(act.length.begin(), act.length.end());
  PointSet interior;
  if (input.interior) {
    interior = *input.interior;
  } else {
    // Largest r with pi(ball_r) in the orbit window and r + |g_U| <= rho for
    // every orbit set met by pi(ball_r).
    std::int64_t best = -1;
    for (std::int64_t r = 0; r <= rho; ++r) {
      bool ok = true;
      for (Index g = 0; g < n && ok; ++g) {
        if (act.length[g] > r) continue;
        if (!orbit.window.contains(act.orbit[g])) ok = false;
        for (std::size_t u = 0; u < orbit.sets.size() && ok; ++u)
          if (orbit.sets[u].contains(act.orbit[g]) && r + act.length[*rep[u]] > rho) ok = false;
      }
      if (!ok) break;
      best = r;
    }
    if (best < 0)
      fail(ErrorKind::kPrecondition, "window-too-small",
           "no certified interior; enlarge the group window radius beyond " + std::to_string(rho));
    std::vector<Index> m;
    for (Index g = 0; g < n; ++g)
      if (act.length[g] <= best) m.push_back(g);
    interior = PointSet(std::move(m));
  }
  for (Index g : interior)
    for (std::size_t u = 0; u < orbit.sets.size(); ++u)
      if (orbit.sets[u].contains(act.orbit[g]) && !rep[u])
        fail(ErrorKind::kPrecondition, "window-too-small", "an orbit set has no representative");

  TransportResult out{Cover{act.group, {}, interior}, {}};
  for (std::size_t u = 0; u < orbit.sets.size(); ++u) {
    if (!rep[u]) continue;
    for (const auto& v : stab.sets) {
      std::vector<Index> m;
      for (Index h : v) {
        auto gh = act.multiply(*rep[u], h);
        if (gh && orbit.sets[u].contains(act.orbit[*gh])) m.push_back(*gh);
      }
      if (!m.empty()) out.cover.sets.emplace_back(std::move(m));
    }
  }

  auto& cert = out.certificate;
  const bool covered = covers(out.cover);
  cert.claim("covers-interior", covered, "some interior element uncovered");
  if (covered) {
    cert.claim_at_least("lebesgue(W) vs lambda", Rational(lambda),
                        Rational(lebesgue_at_least(out.cover, lambda) ? lambda : lambda - 1));
    cert.claim_at_most("multiplicity(W) vs m(orbit)*m(stab)",
                       Rational(multiplicity(orbit) * multiplicity(stab)),
                       Rational(multiplicity(out.cover)));
  }
  cert.claim_at_most("mesh(W) vs mesh(stab)", mesh(stab), mesh(out.cover));
  return out;
}

}  // namespace asdim
