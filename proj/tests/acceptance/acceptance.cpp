// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "asdim/cayley.hpp"
#include "asdim/constructions.hpp"
#include "asdim/curve.hpp"
#include "asdim/error.hpp"
#include "asdim/estimator.hpp"
#include "asdim/fixtures.hpp"
#include "asdim/fuzz.hpp"
#include "asdim/graph_of_groups.hpp"
#include "asdim/relhyp.hpp"
#include "asdim/serialize.hpp"
#include "asdim/subjects.hpp"
#include "asdim/transport.hpp"
#include "oracle.hpp"

using namespace asdim;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail.str("");
    else detail << "; ";
    pass = false;
    detail << what;
  }
  void note(const std::string& text) {
    if (pass) detail << (detail.tellp() > 0 ? ", " : "") << text;
  }
};

SpacePtr share(FiniteMetricSpace s) { return std::make_shared<FiniteMetricSpace>(std::move(s)); }

std::string str(std::int64_t v) { return std::to_string(v); }

DimCurve group_curve(const std::string& spec, const std::vector<std::int64_t>& lambdas) {
  const WindowPolicy policy;
  return dim_curve(spec, group_provider(make_group(spec), policy), lambdas, policy);
}

std::vector<std::int64_t> range(std::int64_t a, std::int64_t b) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = a; x <= b; ++x) out.push_back(x);
  return out;
}

bool all_samples(const DimCurve& c, std::int64_t lo, std::int64_t hi) {
  for (const auto& s : c.samples)
    if (s.gap() || *s.lower != lo || *s.upper != hi) return false;
  return true;
}

std::string rows(const DimCurve& c) {
  std::string out;
  for (const auto& s : c.samples)
    out += (out.empty() ? "" : " ") +
           (s.gap() ? std::string("gap") : "(" + str(*s.lower) + "," + str(*s.upper) + ")");
  return out;
}

DimCurve head(const DimCurve& c, std::size_t n) {
  DimCurve out = c;
  out.samples.resize(std::min(n, out.samples.size()));
  return out;
}

// ---- 1 ----------------------------------------------------------------------

Outcome shrink_contract() {
  Outcome o;
  Rng rng(7);
  std::size_t checked = 0, skipped = 0;
  for (std::size_t attempt = 0; checked < 320 && attempt < 5000; ++attempt) {
    const std::int64_t k = 1 + static_cast<std::int64_t>(attempt % 2);
    const Cover c = random_shrinkable_cover(rng, k, 6, 20);
    TransportResult r;
    try {
      r = shrink(c, k);
    } catch (const Error& e) {
      if (e.code() != "shrink-precondition") throw;
      ++skipped;
      continue;
    }
    ++checked;
    o.require(r.certificate.pass(), "certificate failed on instance " + str(static_cast<std::int64_t>(attempt)));
  }
  o.require(checked >= 300, "only " + str(static_cast<std::int64_t>(checked)) + " instances");
  o.note(str(static_cast<std::int64_t>(checked)) + " fuzzed covers certified (" +
         str(static_cast<std::int64_t>(skipped)) + " outside 4k <= L)");

  const Cover p30 = p30_cover();
  const auto L = lebesgue_number(p30);
  const auto r = shrink(p30, 1);
  const auto Lv = lebesgue_number(r.cover);
  o.require(r.certificate.pass(), "P30 certificate failed");
  o.require(!L.all_subsets && !Lv.all_subsets && Lv.value == L.value - 2,
            "P30 L(V) = " + to_string(Lv) + ", expected L(U) - 2k = " + str(L.value - 2));
  o.note("P30: L(U) = " + to_string(L) + ", L(V) = " + to_string(Lv));
  return o;
}

// ---- 2 ----------------------------------------------------------------------

std::optional<std::int64_t> read_baseline(const std::string& key) {
  std::ifstream in(ASDIM_BASELINE_FILE);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  const Json j = parse_json(buf.str());
  if (!j.contains(key)) return std::nullopt;
  return j.at(key).get<std::int64_t>();
}

void write_baseline(const Json& j) {
  std::ofstream out(ASDIM_BASELINE_FILE);
  out << dump(j);
}

Outcome qi_transport_criterion() {
  Outcome o;
  Rng rng(21);
  std::size_t identity_ok = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto X = share(random_space(rng, 3, 14));
    const std::int64_t lambda = 1 + trial % 3;
    const Cover c = ball_cover(X, lambda, 2 * lambda + trial % 4, PointSet::all(X->size()));
    QuasiIsometryData q{X, X, {}, Rational(1), Rational(0), Rational(0), QuasiInverse{}};
    for (Index i = 0; i < X->size(); ++i) q.map.push_back(i);
    q.quasi_inverse->map = q.map;
    const auto L = lebesgue_number(c);
    const auto r = qi_transport(c, q, L.all_subsets ? lambda : L.value);
    const bool exact = r.certificate.pass() && r.cover.sets == c.sets && r.cover.window == c.window;
    o.require(exact, "identity transport changed cover on trial " + str(trial));
    identity_ok += exact ? 1 : 0;
  }
  o.note("identity exact on " + str(static_cast<std::int64_t>(identity_ok)) + " covers");

  const auto dbl = doubling_fixture();
  const auto r = qi_transport(dbl.cover, dbl.qi, dbl.lambda_target);
  o.require(r.certificate.pass(), "doubling certificate failed");
  o.note("x->2x certificate passes");

  const auto lambdas = range(1, 12);
  const auto z = group_curve("z:1", lambdas);
  const auto zs = group_curve("zs:1,2,3", lambdas);
  const auto k_fg = find_min_k(head(z, 6), zs, 8);
  const auto k_gf = find_min_k(head(zs, 6), z, 8);
  o.require(k_fg.has_value(), "{+-1} curve not dominated by {+-1,+-2,+-3} within k = 8");
  o.require(k_gf.has_value(), "{+-1,+-2,+-3} curve not dominated by {+-1} within k = 8");
  if (k_fg && k_gf) {
    Json baseline = Json::object();
    const auto b_fg = read_baseline("z_by_zs");
    const auto b_gf = read_baseline("zs_by_z");
    if (b_fg && b_gf) {
      o.require(*b_fg == *k_fg && *b_gf == *k_gf,
                "k changed from baseline (" + str(*b_fg) + ", " + str(*b_gf) + ")");
      o.note("k = " + str(*k_fg) + " / " + str(*k_gf) + " matches baseline");
    } else {
      baseline["z_by_zs"] = *k_fg;
      baseline["zs_by_z"] = *k_gf;
      write_baseline(baseline);
      o.note("k = " + str(*k_fg) + " / " + str(*k_gf) + " recorded as baseline");
    }
  }
  return o;
}

// ---- 3 ----------------------------------------------------------------------

Outcome union_criterion() {
  Outcome o;
  Rng rng(3);
  std::size_t certified = 0;
  for (int i = 0; i < 220; ++i) {
    const auto inst = random_union_instance(rng, 60);
    const auto r = union_transport(inst.family, inst.y_cover, inst.lambda);
    o.require(r.certificate.pass(), "certificate failed on instance " + str(i));
    certified += r.certificate.pass() ? 1 : 0;
  }
  o.note(str(static_cast<std::int64_t>(certified)) + " instances certified");

  std::size_t sandwiches = 0;
  for (int i = 0; i < 80; ++i) {
    const auto inst = random_union_instance(rng, 14);
    const auto r = union_transport(inst.family, inst.y_cover, inst.lambda);
    o.require(r.certificate.pass(), "small instance " + str(i) + " certificate failed");
    const SpacePtr X = inst.y_cover.space;
    PointSet A;
    for (const auto& m : inst.family.members) A = set_union(A, m.region);
    const PointSet& Y = inst.y_cover.window;
    const PointSet window = set_union(A, Y);
    if (window.size() > 14) continue;
    const Rational mw = mesh(r.cover);
    const std::int64_t D = std::max(inst.lambda, (mw.numerator() + mw.denominator() - 1) / mw.denominator());
    const auto ad_x = ad_exact(X, inst.lambda, D, window).ad;
    const auto ad_a = ad_exact(X, inst.lambda, D, A).ad;
    const auto ad_y = ad_exact(X, inst.lambda, D, Y).ad;
    const auto upper = inst.family.multiplicity + multiplicity(inst.y_cover) - 1;
    const bool ok = std::max(ad_a, ad_y) <= ad_x && ad_x <= upper;
    o.require(ok, "sandwich fails on small instance " + str(i) + ": max(" + str(ad_a) + "," + str(ad_y) +
                      ") <= " + str(ad_x) + " <= " + str(upper));
    ++sandwiches;
  }
  o.require(sandwiches >= 50, "only " + str(static_cast<std::int64_t>(sandwiches)) + " sandwiches");
  o.note("sandwich holds on " + str(static_cast<std::int64_t>(sandwiches)) + " instances <= 14 points");
  return o;
}

// ---- 4 ----------------------------------------------------------------------

Outcome action_criterion() {
  Outcome o;
  {
    const auto f = z2_on_line_fixture();
    const auto r = action_transport(f.action, f.input);
    const auto m = multiplicity(r.cover);
    const auto L = lebesgue_number(r.cover);
    o.require(r.certificate.pass(), "Z^2 -> Z certificate failed");
    o.require(m <= 4, "Z^2 -> Z multiplicity " + str(m) + " > 4");
    o.require(L.at_least(2), "Z^2 -> Z Lebesgue " + to_string(L) + " < 2");
    o.note("Z^2 -> Z: " + str(static_cast<std::int64_t>(r.cover.window.size())) + " interior elements, m = " +
           str(m) + ", L = " + to_string(L));
  }
  for (std::int64_t lambda : {1, 2}) {
    const auto f = free_product_tree_fixture(lambda);
    const auto r = action_transport(f.action, f.input);
    o.require(r.certificate.pass(), "tree certificate failed at lambda " + str(lambda));
    const Rational mw = mesh(r.cover);
    const auto m = witness_multiplicity(r.cover, lambda, mw.numerator() / mw.denominator());
    o.require(m.has_value() && *m - 1 <= 1,
              "Z/2*Z/3 upper bound at lambda " + str(lambda) + " is " + (m ? str(*m - 1) : "none"));
    o.note("Z/2*Z/3 lambda " + str(lambda) + ": upper " + (m ? str(*m - 1) : "?") + " at D = " +
           format_rational(mw));
  }
  return o;
}

// ---- 5 ----------------------------------------------------------------------

Outcome sandwich_criterion() {
  Outcome o;
  const auto z = group_curve("z:1", range(1, 6));
  o.require(all_samples(z, 1, 1), "Z: " + rows(z));
  o.note("Z " + rows(z));
  for (const std::string spec : {"cyclic:5", "sym:3", "trivial"}) {
    const auto c = group_curve(spec, range(1, 3));
    o.require(all_samples(c, 0, 0), spec + ": " + rows(c));
  }
  o.note("finite groups (0,0)");
  const auto f2 = group_curve("f:2", range(1, 3));
  o.require(all_samples(f2, 1, 1), "F2: " + rows(f2));
  o.note("F2 " + rows(f2));

  auto grid = share(grid_space(7, 7));
  Coordinates coords;
  std::vector<Index> inner;
  for (Index y = 0; y < 7; ++y)
    for (Index x = 0; x < 7; ++x) {
      coords.push_back({x, y});
      if (x >= 1 && x <= 5 && y >= 1 && y <= 5) inner.push_back(y * 7 + x);
    }
  const PointSet window(inner);
  const auto bounds = ad_bounds(grid, 1, 4, window);
  const Cover brick = brick_cover(grid, coords, 2, 1, 2, window);
  const auto brick_m = witness_multiplicity(brick, 1, 4);
  o.require(bounds.lower >= 2, "Z^2 lower bound " + str(bounds.lower));
  o.require(brick_m && *brick_m - 1 == 2, "brick upper bound " + (brick_m ? str(*brick_m - 1) : "invalid"));
  o.note("Z^2 5x5: lower " + str(bounds.lower) + ", brick upper " + (brick_m ? str(*brick_m - 1) : "?"));
  return o;
}

// ---- 6 ----------------------------------------------------------------------

void audit_splitting(Outcome& o, const std::string& spec, std::int64_t radius) {
  const auto gog = splitting_for(spec);
  const auto window = cayley_window(gog->group(), radius);
  const auto strat = stratify_words(*gog, window, radius);
  o.require(strat.partition_ok, spec + ": strata do not partition the window");
  o.require(strat.factoring_ok, spec + ": factoring fails");
  std::size_t audits = 0;
  for (std::size_t j = 0; j < strat.strata.size(); ++j) {
    if (strat.strata[j].empty()) continue;
    for (std::size_t e = 0; e < gog->edges().size(); ++e)
      for (std::int64_t r : {2, 4}) {
        const auto rep = separation_audit(*gog, window, strat.strata[j], e, r);
        o.require(rep.pass(), spec + " stratum " + str(static_cast<std::int64_t>(j)) + " edge " +
                                  str(static_cast<std::int64_t>(e)) + " r " + str(r) + ": " +
                                  (rep.failures.empty() ? "" : rep.failures.front()));
        ++audits;
      }
  }
  o.note(spec + " radius " + str(radius) + ": " + str(static_cast<std::int64_t>(strat.strata.size())) +
         " strata, " + str(static_cast<std::int64_t>(audits)) + " audits");
}

Outcome stratification_criterion() {
  Outcome o;
  audit_splitting(o, "amalgam:z*z", 6);
  audit_splitting(o, "amalgam:z2*z3", 8);
  return o;
}

// ---- 7 ----------------------------------------------------------------------

Outcome relhyp_criterion() {
  Outcome o;
  const auto rh = relhyp_free_rel_cyclic();
  const auto m = relhyp_metric(rh, 4);
  const auto& ds = *m.window.space;
  std::size_t pairs = 0, above = 0;
  for (Index i = 0; i < ds.size(); ++i)
    for (Index j = 0; j < ds.size(); ++j, ++pairs) above += m.space->raw(i, j) > ds.raw(i, j) ? 1 : 0;
  o.require(above == 0, "d_{S+H} > d_S at " + str(static_cast<std::int64_t>(above)) + " pairs");
  o.note("d_{S+H} <= d_S on " + str(static_cast<std::int64_t>(pairs)) + " pairs");

  const auto d = relhyp_ball_decompose(rh, 2, 2, 6);
  o.require(d.covers_exactly, "B(2) decomposition does not cover exactly");
  o.require(d.pieces_disjoint, "coset pieces overlap");
  o.require(d.separated, "trimmed cosets not 2-separated: " + (d.failures.empty() ? "" : d.failures.front()));
  o.note("B(2): " + str(static_cast<std::int64_t>(d.ball_n.size())) + " points, " +
         str(static_cast<std::int64_t>(d.pieces.size())) + " coset pieces, separation " +
         (d.separation ? format_rational(*d.separation) : "inf"));

  const auto& G = *rh.group;
  auto letter = [&](const std::string& name) {
    for (Letter s = 0; s < G.generator_count(); ++s)
      if (G.generator_name(s) == name) return s;
    throw std::logic_error("no generator " + name);
  };
  const Letter la = letter("a"), lb = letter("b");
  const std::vector<Letter> w{la, la, lb, la, la, la};
  const auto table = relhyp_length_table(rh, 6);
  const Element g = evaluate(G, w);
  const auto it = table.find(g);
  o.require(it != table.end() && it->second == 3,
            "D(a^2 b a^3) = " + (it == table.end() ? std::string("?") : str(it->second)));
  o.note("D(" + G.format(g) + ") = " + (it == table.end() ? std::string("?") : str(it->second)));
  return o;
}

// ---- 8 ----------------------------------------------------------------------

std::string pipeline_digest() {
  std::string out;
  out += curve_csv(group_curve("z:1", range(1, 4)));
  out += dump(curve_to_json(group_curve("zs:1,2,3", range(1, 3))));
  out += dump(certificate_to_json(shrink(p30_cover(), 1).certificate));
  const auto f = z2_on_line_fixture();
  const auto act = action_transport(f.action, f.input);
  out += dump(cover_to_json(act.cover)) + dump(certificate_to_json(act.certificate));
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const auto inst = random_union_instance(rng, 40);
    out += dump(certificate_to_json(union_transport(inst.family, inst.y_cover, inst.lambda).certificate));
  }
  for (const auto& name : suite_names()) {
    const auto r = run_suite(name, 5, 20);
    out += name + ":" + str(static_cast<std::int64_t>(r.passed)) + "/" + str(static_cast<std::int64_t>(r.skipped));
  }
  return out;
}

#ifdef ASDIM_CLI_PATH
int run_cli(const std::string& args, const fs::path& dir) {
  fs::create_directories(dir);
  const std::string cmd = "cd \"" + dir.string() + "\" && \"" ASDIM_CLI_PATH "\" " + args + " > cli.log 2>&1";
  const int status = std::system(cmd.c_str());
  return status;
}

std::vector<std::string> manifest_digests(const fs::path& file) {
  std::ifstream in(file);
  std::stringstream buf;
  buf << in.rdbuf();
  std::vector<std::string> out;
  const Json manifest = parse_json(buf.str());
  for (const auto& f : manifest.at("files")) out.push_back(f.at("sha256").get<std::string>());
  return out;
}
#endif

Outcome determinism_criterion() {
  Outcome o;
  const std::string a = pipeline_digest();
  const std::string b = pipeline_digest();
  o.require(a == b, "in-process outputs differ between runs");
  o.note("in-process outputs identical (" + str(static_cast<std::int64_t>(a.size())) + " bytes)");
#ifdef ASDIM_CLI_PATH
  const fs::path root = fs::current_path() / "acceptance_work";
  fs::remove_all(root);
  const std::vector<std::pair<std::string, std::string>> runs{
      {"adcurve --group z:1 --lambdas 1..4 --out z1 --seed 7", "z1.manifest.json"},
      {"adcurve --group f:2 --lambdas 1..2 --out f2 --seed 7", "f2.manifest.json"},
      {"combine action --fixture z2-on-z --out act.json --cert act.cert.json", "act.json.manifest.json"},
  };
  std::size_t files = 0;
  for (const auto& [args, manifest] : runs) {
    const int s1 = run_cli(args, root / "run1");
    const int s2 = run_cli(args, root / "run2");
    o.require(s1 == 0 && s2 == 0, "`asdim " + args + "` failed");
    if (s1 != 0 || s2 != 0) continue;
    const auto d1 = manifest_digests(root / "run1" / manifest);
    const auto d2 = manifest_digests(root / "run2" / manifest);
    o.require(d1 == d2 && !d1.empty(), "digests differ for `asdim " + args + "`");
    files += d1.size();
  }
  o.note("CLI digests identical across reruns (" + str(static_cast<std::int64_t>(files)) + " files)");
#endif
  return o;
}

// ---- 9 ----------------------------------------------------------------------

Outcome oracle_criterion() {
  Outcome o;
  const auto balls = run_suite("lebesgue-balls", 9, 500);
  o.require(balls.pass(), "ball bound above L: " + (balls.failures.empty() ? "" : balls.failures.front()));
  const auto bounds = run_suite("ad-bounds", 9, 300);
  o.require(bounds.pass(), "ad_bounds: " + (bounds.failures.empty() ? "" : bounds.failures.front()));
  o.note("500 ball bounds <= L, 300 ad_bounds lower <= upper");

  Rng rng(13);
  std::size_t compared = 0;
  for (int i = 0; i < 300; ++i) {
    auto X = share(random_space(rng, 2, 10));
    const PointSet window = random_subset(rng, X->size(), 0.85);
    const std::int64_t lambda = 1 + i % 2;
    const std::int64_t D = lambda + (i / 2) % 4;
    const auto lib = ad_exact(X, lambda, D, window).ad;
    const auto ref = oracle::ad(*X, lambda, D, window);
    o.require(lib == ref, "ad_exact " + str(lib) + " != brute force " + str(ref) + " on instance " + str(i));
    const auto b = ad_bounds(X, lambda, D, window);
    o.require(b.lower <= ref && ref <= b.upper, "ad_bounds does not bracket the brute force on instance " + str(i));
    ++compared;
  }
  o.note("ad_exact = brute force on " + str(static_cast<std::int64_t>(compared)) + " spaces <= 10 points");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"shrink contract", shrink_contract},
      {"quasi-isometry transport", qi_transport_criterion},
      {"union theorem", union_criterion},
      {"action transport", action_criterion},
      {"dimension sandwiches", sandwich_criterion},
      {"graph-of-groups stratification", stratification_criterion},
      {"relative hyperbolicity", relhyp_criterion},
      {"determinism", determinism_criterion},
      {"oracle cross-validation", oracle_criterion},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("threw: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu [%s] %s: %s (%.1f s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
