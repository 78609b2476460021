#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "asdim/cayley.hpp"
#include "asdim/constructions.hpp"
#include "asdim/curve.hpp"
#include "asdim/error.hpp"
#include "asdim/fixtures.hpp"
#include "asdim/fuzz.hpp"
#include "asdim/serialize.hpp"
#include "asdim/subjects.hpp"
#include "cli_support.hpp"

using namespace asdim;
using namespace asdim::cli;

namespace {

struct AdcurveArgs {
  std::string group;
  std::string space;
  std::string lambdas;
  std::int64_t d_factor = 4;
  std::int64_t r_factor = 5;
  std::size_t max_points = 4500;
  std::uint64_t node_budget = 2'000'000;
  std::uint64_t clique_budget = 20'000'000;
  std::size_t exact_points = 400;
  std::string out = "adcurve";
  std::uint64_t seed = 1;
  bool timings = false;
};

int run_adcurve(const AdcurveArgs& a) {
  if (a.group.empty() == a.space.empty()) fail(ErrorKind::kUsage, "bad-subject", "give exactly one of --group, --space");
  if (a.d_factor < 1 || a.r_factor < 1 || a.max_points < 1 || a.node_budget < 1 || a.clique_budget < 1)
    fail(ErrorKind::kUsage, "bad-budget", "factors and budgets must be positive");
  const auto lambdas = parse_lambda_list(a.lambdas);

  WindowPolicy policy{a.d_factor, a.r_factor, a.max_points};
  BoundsOptions options;
  options.exact.node_budget = cap_budget(a.node_budget);
  options.exact.clique_node_budget = cap_budget(a.clique_budget);
  options.exact_point_budget = a.exact_points;

  std::string subject;
  WindowProvider provider;
  if (!a.group.empty()) {
    subject = a.group;
    provider = group_provider(make_group(a.group), policy);
  } else {
    subject = "space:" + a.space;
    provider = space_provider(std::make_shared<FiniteMetricSpace>(space_from_json(parse_json(read_file(a.space)))));
  }

  const auto start = std::chrono::steady_clock::now();
  const DimCurve curve = dim_curve(subject, provider, lambdas, policy, options, a.timings);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Json config = {{"subject", subject},           {"lambdas", lambdas},
                 {"d_factor", a.d_factor},       {"r_factor", a.r_factor},
                 {"max_points", a.max_points},   {"node_budget", options.exact.node_budget},
                 {"clique_budget", options.exact.clique_node_budget},
                 {"exact_points", a.exact_points}, {"seed", a.seed}};
  Manifest manifest("adcurve", config);
  emit(manifest, a.out + ".csv", curve_csv(curve));
  emit(manifest, a.out + ".json", dump(curve_to_json(curve)));
  if (a.timings) manifest.set_timings({{"total_seconds", seconds}});
  write_file(a.out + ".manifest.json", manifest.render());

  std::size_t gaps = 0;
  for (const auto& s : curve.samples) {
    std::cout << "lambda=" << s.lambda << " D=" << s.D << " ";
    if (s.gap()) {
      ++gaps;
      std::cout << "gap (" << s.method << ")\n";
    } else {
      std::cout << "ad in [" << *s.lower << "," << *s.upper << "]\n";
    }
  }
  if (gaps) std::cout << gaps << " gap(s) flagged\n";
  return kOk;
}

struct CombineArgs {
  std::string cover, qi, family, y_cover, fixture;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::string out = "combined.json";
  std::string cert = "certificate.json";
};

void print_certificate(const TransportCertificate& cert) {
  for (const auto& e : cert.entries)
    std::cout << (e.ok ? "  ok   " : "  FAIL ") << e.property << " " << e.relation << " " << e.claimed
              << " (measured " << e.measured << ")\n";
  std::cout << (cert.pass() ? "certificate: pass\n" : "certificate: FAIL\n");
}

int finish_combine(const std::string& name, const CombineArgs& a, const TransportResult& result, Json config) {
  Manifest manifest("combine " + name, std::move(config));
  emit(manifest, a.out, dump(cover_to_json(result.cover)));
  emit(manifest, a.cert, dump(certificate_to_json(result.certificate)));
  manifest.add_certificate(name, result.certificate);
  write_file(a.out + ".manifest.json", manifest.render());
  print_certificate(result.certificate);
  return result.certificate.pass() ? kOk : kCertificateFailed;
}

Json load(const std::string& path) { return parse_json(read_file(path)); }

int run_combine(const std::string& op, const CombineArgs& a) {
  if (op == "shrink") {
    const Cover c = cover_from_json(load(a.cover));
    return finish_combine(op, a, shrink(c, a.k), {{"cover", a.cover}, {"k", a.k}});
  }
  if (op == "qi") {
    const auto q = qi_from_json(load(a.qi));
    const Cover c = cover_from_json(load(a.cover), q.source);
    Cover on_source = c;
    on_source.space = q.source;
    return finish_combine(op, a, qi_transport(on_source, q, a.lambda),
                          {{"cover", a.cover}, {"qi", a.qi}, {"lambda", a.lambda}});
  }
  if (op == "union") {
    const UniformFamily fam = family_from_json(load(a.family));
    const SpacePtr space = fam.members.empty() ? nullptr : fam.members.front().cover.space;
    Cover y = cover_from_json(load(a.y_cover), space);
    if (space) y.space = space;
    return finish_combine(op, a, union_transport(fam, y, a.lambda),
                          {{"family", a.family}, {"y_cover", a.y_cover}, {"lambda", a.lambda}});
  }
  if (op == "action") {
    const ActionFixture f = action_fixture(a.fixture);
    return finish_combine(op, a, action_transport(f.action, f.input), {{"fixture", a.fixture}});
  }
  fail(ErrorKind::kUsage, "unknown-operation", op);
}

int run_fixture(const std::string& name, const std::string& prefix) {
  Manifest manifest("fixture " + name, {{"name", name}});
  if (name == "p30") {
    emit(manifest, prefix + ".cover.json", dump(cover_to_json(p30_cover())));
  } else if (name == "doubling") {
    const auto f = doubling_fixture();
    emit(manifest, prefix + ".cover.json", dump(cover_to_json(f.cover)));
    emit(manifest, prefix + ".qi.json", dump(qi_to_json(f.qi)));
  } else if (name == "union-demo" || name == "union-tight") {
    // path 0..99, X1 = 0..45, X2 = 54..99, Y = 40..59, lambda 1
    auto path = std::make_shared<FiniteMetricSpace>(path_space(100));
    const std::int64_t B = name == "union-demo" ? 2 : 10;
    UniformFamily fam;
    fam.lambda = 1;
    fam.mesh_bound = Rational(B);
    for (auto [lo, hi] : {std::pair<Index, Index>{0, 45}, {54, 99}}) {
      FamilyMember m;
      m.region = PointSet::range(lo, hi);
      m.cover = ball_cover(path, 1, B, m.region);
      fam.multiplicity = std::max(fam.multiplicity, multiplicity(m.cover));
      fam.members.push_back(std::move(m));
    }
    const Cover y = ball_cover(path, 1, 4, PointSet::range(40, 59));
    emit(manifest, prefix + ".family.json", dump(family_to_json(fam)));
    emit(manifest, prefix + ".y.json", dump(cover_to_json(y)));
  } else {
    fail(ErrorKind::kUsage, "unknown-fixture", name);
  }
  write_file(prefix + ".manifest.json", manifest.render());
  return kOk;
}

int run_verify(const std::string& suite, std::size_t count, std::uint64_t seed) {
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, seed, count);
    std::cout << name << ": " << (r.pass() ? "pass" : "FAIL") << " (" << r.passed << "/" << r.count
              << " passed, " << r.skipped << " skipped)\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    ok = ok && r.pass();
  }
  return ok ? kOk : kCertificateFailed;
}

int run_dominate(const std::string& f_path, const std::string& g_path, std::int64_t k_max,
                 const std::string& json_out) {
  const DimCurve f = parse_curve_csv(read_file(f_path));
  const DimCurve g = parse_curve_csv(read_file(g_path));
  Json verdict = {{"schema", "asdim-domination/1"}, {"f", f_path}, {"g", g_path}, {"k_max", k_max}};
  int code = kOk;
  try {
    const auto k = find_min_k(f, g, k_max);
    if (k) {
      std::cout << "dominated with k = " << *k << "\n";
      verdict["verdict"] = "dominated";
      verdict["k"] = *k;
    } else {
      std::cout << "not dominated within k_max = " << k_max << "\n";
      verdict["verdict"] = "not-dominated";
      verdict["k"] = nullptr;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kInsufficientData) throw;
    std::cout << e.what() << "\n";
    verdict["verdict"] = "insufficient-range";
    verdict["detail"] = e.what();
    code = kInsufficientData;
  }
  if (!json_out.empty()) write_file(json_out, dump(verdict));
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"asdim: windowed asymptotic dimension experiments"};
  app.set_config("--config", "", "key = value configuration file; flags override it");
  app.require_subcommand(1);
  int code = kOk;

  auto* zoo = app.add_subcommand("zoo", "Built-in groups");
  zoo->require_subcommand(1);
  auto* zoo_list = zoo->add_subcommand("list", "List group names");
  std::string zoo_group;
  std::int64_t zoo_radius = 0;
  std::size_t zoo_points = 5000;
  std::string zoo_out;
  auto* zoo_ball = zoo->add_subcommand("ball", "Emit a Cayley ball as metric JSON");
  zoo_ball->add_option("group", zoo_group)->required();
  zoo_ball->add_option("radius", zoo_radius)->required()->check(CLI::NonNegativeNumber);
  zoo_ball->add_option("--max-points", zoo_points);
  zoo_ball->add_option("--out", zoo_out, "output file (default stdout)");
  auto* zoo_sizes = zoo->add_subcommand("sizes", "Print ball sizes |B_0|..|B_R|");
  zoo_sizes->add_option("group", zoo_group)->required();
  zoo_sizes->add_option("radius", zoo_radius)->required()->check(CLI::NonNegativeNumber);

  AdcurveArgs ad;
  auto* adcurve = app.add_subcommand("adcurve", "Sample the windowed dimension curve");
  adcurve->add_option("--group", ad.group, "zoo group name");
  adcurve->add_option("--space", ad.space, "metric JSON file");
  adcurve->add_option("--lambdas", ad.lambdas, "a..b or a,b,c")->required();
  adcurve->add_option("--d-factor", ad.d_factor);
  adcurve->add_option("--r-factor", ad.r_factor);
  adcurve->add_option("--max-points", ad.max_points);
  adcurve->add_option("--node-budget", ad.node_budget);
  adcurve->add_option("--clique-budget", ad.clique_budget);
  adcurve->add_option("--exact-points", ad.exact_points);
  adcurve->add_option("--out", ad.out, "output prefix");
  adcurve->add_option("--seed", ad.seed);
  adcurve->add_flag("--timings", ad.timings, "record wall-clock seconds (breaks byte-identity)");

  CombineArgs cb;
  std::string combine_op;
  auto* combine = app.add_subcommand("combine", "Run a transport construction");
  combine->add_option("operation", combine_op, "shrink | qi | union | action")
      ->required()
      ->check(CLI::IsMember({"shrink", "qi", "union", "action"}));
  combine->add_option("--cover", cb.cover);
  combine->add_option("--qi", cb.qi);
  combine->add_option("--family", cb.family);
  combine->add_option("--y-cover", cb.y_cover);
  combine->add_option("--fixture", cb.fixture, "z2-on-z | z2z3-tree:<lambda> | trivial");
  combine->add_option("--k", cb.k);
  combine->add_option("--lambda", cb.lambda);
  combine->add_option("--out", cb.out);
  combine->add_option("--cert", cb.cert);

  std::string fixture_name, fixture_prefix = "fixture";
  auto* fixture = app.add_subcommand("fixture", "Write a built-in input fixture");
  fixture->add_option("name", fixture_name, "p30 | doubling | union-demo | union-tight")->required();
  fixture->add_option("--out", fixture_prefix, "output prefix");

  std::string suite;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  verify->add_option("--count", count);
  verify->add_option("--seed", seed);

  std::string f_csv, g_csv, verdict_json;
  std::int64_t k_max = 8;
  auto* dominate = app.add_subcommand("dominate", "Decide f <= k g(k x + k) + k");
  dominate->add_option("f", f_csv)->required();
  dominate->add_option("g", g_csv)->required();
  dominate->add_option("--k-max", k_max);
  dominate->add_option("--json", verdict_json, "write the verdict as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e);
    return r == 0 ? kOk : kUsageError;
  }

  try {
    if (zoo_list->parsed()) {
      for (const auto& e : zoo_catalog()) std::cout << e.spec << "\t" << e.description << "\n";
    } else if (zoo_ball->parsed()) {
      const auto w = cayley_window(make_group(zoo_group), zoo_radius, {zoo_points, 2'000'000});
      const std::string text = dump(space_to_json(*w.space));
      if (zoo_out.empty())
        std::cout << text;
      else
        write_file(zoo_out, text);
    } else if (zoo_sizes->parsed()) {
      const auto sizes = ball_sizes(*make_group(zoo_group), zoo_radius);
      for (std::size_t r = 0; r < sizes.size(); ++r) std::cout << r << "\t" << sizes[r] << "\n";
    } else if (adcurve->parsed()) {
      code = run_adcurve(ad);
    } else if (combine->parsed()) {
      code = run_combine(combine_op, cb);
    } else if (fixture->parsed()) {
      code = run_fixture(fixture_name, fixture_prefix);
    } else if (verify->parsed()) {
      if (suite != "all") {
        const auto names = suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end())
          fail(ErrorKind::kUsage, "unknown-suite", suite);
      }
      code = run_verify(suite, count, seed);
    } else if (dominate->parsed()) {
      code = run_dominate(f_csv, g_csv, k_max, verdict_json);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return code;
}
