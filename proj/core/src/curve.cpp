#include "asdim/curve.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "asdim/error.hpp"

namespace asdim {

namespace {

std::string sanitize(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::kInvalidInput, "bad-curve", "cannot parse " + what + " from '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

DimCurve dim_curve(const std::string& subject, const WindowProvider& provider,
                   std::span<const std::int64_t> lambdas, const WindowPolicy& policy,
                   const BoundsOptions& options, bool timings) {
  for (std::size_t i = 1; i < lambdas.size(); ++i)
    if (lambdas[i] <= lambdas[i - 1])
      fail(ErrorKind::kInvalidInput, "bad-lambda-list", "lambda samples must strictly increase");
  DimCurve curve{subject, policy, {}};
  for (std::int64_t lambda : lambdas) {
    if (lambda < 0) fail(ErrorKind::kInvalidInput, "bad-lambda-list", "negative lambda");
    CurveSample s;
    s.lambda = lambda;
    s.D = policy.diameter_budget(lambda);
    s.R = policy.ambient_radius(lambda);
    const auto start = std::chrono::steady_clock::now();
    try {
      SampleWindow w = provider(lambda, s.D, s.R);
      BoundsOptions opts = options;
      for (auto& c : w.witnesses) opts.extra_upper_witnesses.push_back(std::move(c));
      AdBounds b = ad_bounds(w.space, lambda, s.D, w.window, opts);
      s.lower = b.lower;
      s.upper = b.upper;
      s.witness = std::move(b.witness);
      s.method = "lower=" + b.lower_method + ";upper=" + b.upper_method;
      if (!w.note.empty()) s.method += ";" + w.note;
    } catch (const Error& e) {
      s.method = "gap:" + e.code();
    }
    if (timings)
      s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    s.method = sanitize(s.method);
    curve.samples.push_back(std::move(s));
  }
  return curve;
}

Domination dominates(const DimCurve& f, const DimCurve& g, std::int64_t k) {
  if (k < 1) fail(ErrorKind::kInvalidInput, "bad-k", "k must be >= 1");
  std::vector<const CurveSample*> gs;
  for (const auto& s : g.samples)
    if (!s.gap()) gs.push_back(&s);
  Domination out;
  for (const auto& s : f.samples) {
    if (s.gap()) continue;
    const std::int64_t x = k * s.lambda + k;
    if (gs.empty() || gs.back()->lambda < k * s.lambda)
      fail(ErrorKind::kInsufficientData, "insufficient-range",
           "g is sampled up to " + (gs.empty() ? std::string("nothing") : std::to_string(gs.back()->lambda)) +
               " but needs k*lambda = " + std::to_string(k * s.lambda));
    const CurveSample* at = nullptr;
    for (const auto* t : gs)
      if (t->lambda <= x) at = t;
    // No g sample at or below x: g is read as 0 there.
    const std::int64_t gx = at ? *at->upper : 0;
    if (*s.upper > k * gx + k) {
      out.holds = false;
      out.violated_lambda = s.lambda;
      out.detail = "f(" + std::to_string(s.lambda) + ")=" + std::to_string(*s.upper) + " > " +
                   std::to_string(k) + "*g(" + std::to_string(x) + ")+" + std::to_string(k) +
                   " with g read as " + std::to_string(gx);
      return out;
    }
  }
  return out;
}

std::optional<std::int64_t> find_min_k(const DimCurve& f, const DimCurve& g, std::int64_t k_max) {
  if (k_max < 1) fail(ErrorKind::kInvalidInput, "bad-k", "k_max must be >= 1");
  for (std::int64_t k = 1; k <= k_max; ++k)
    if (dominates(f, g, k).holds) return k;
  return std::nullopt;
}

std::string curve_csv(const DimCurve& curve) {
  std::ostringstream out;
  out << "# asdim-curve v1 subject=" << sanitize(curve.subject)
      << " d_factor=" << curve.policy.d_factor << " r_factor=" << curve.policy.r_factor
      << " max_window_points=" << curve.policy.max_window_points << "\n";
  out << "lambda,lower,upper,D,R,method,seconds\n";
  for (const auto& s : curve.samples) {
    out << s.lambda << ',';
    if (s.lower) out << *s.lower;
    out << ',';
    if (s.upper) out << *s.upper;
    out << ',' << s.D << ',' << s.R << ',' << s.method << ',';
    if (s.seconds) {
      std::ostringstream t;
      t.precision(6);
      t << std::fixed << *s.seconds;
      out << t.str();
    }
    out << '\n';
  }
  return out.str();
}

DimCurve parse_curve_csv(const std::string& text) {
  DimCurve curve;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream words(line.substr(1));
      std::string w;
      while (words >> w) {
        auto eq = w.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = w.substr(0, eq), value = w.substr(eq + 1);
        if (key == "subject") curve.subject = value;
        if (key == "d_factor") curve.policy.d_factor = parse_int(value, key);
        if (key == "r_factor") curve.policy.r_factor = parse_int(value, key);
        if (key == "max_window_points")
          curve.policy.max_window_points = static_cast<std::size_t>(parse_int(value, key));
      }
      continue;
    }
    if (!header) {
      if (line.rfind("lambda,lower,upper,D,R,method", 0) != 0)
        fail(ErrorKind::kInvalidInput, "bad-curve", "missing CSV header");
      header = true;
      continue;
    }
    auto f = split(line, ',');
    if (f.size() != 7)
      fail(ErrorKind::kInvalidInput, "bad-curve", "expected 7 columns in '" + line + "'");
    CurveSample s;
    s.lambda = parse_int(f[0], "lambda");
    if (!f[1].empty()) s.lower = parse_int(f[1], "lower");
    if (!f[2].empty()) s.upper = parse_int(f[2], "upper");
    s.D = parse_int(f[3], "D");
    s.R = parse_int(f[4], "R");
    s.method = f[5];
    if (!f[6].empty()) s.seconds = std::stod(f[6]);
    if (!curve.samples.empty() && s.lambda <= curve.samples.back().lambda)
      fail(ErrorKind::kInvalidInput, "bad-curve", "lambda column must strictly increase");
    if (s.lower && s.upper && *s.lower > *s.upper)
      fail(ErrorKind::kInvalidInput, "bad-curve", "lower > upper at lambda " + f[0]);
    curve.samples.push_back(std::move(s));
  }
  if (!header) fail(ErrorKind::kInvalidInput, "bad-curve", "missing CSV header");
  return curve;
}

std::vector<std::int64_t> parse_lambda_list(const std::string& text) {
  std::vector<std::int64_t> out;
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    const std::int64_t a = parse_int(text.substr(0, dots), "lambda range");
    const std::int64_t b = parse_int(text.substr(dots + 2), "lambda range");
    if (a > b) fail(ErrorKind::kInvalidInput, "bad-lambda-list", "empty range " + text);
    for (std::int64_t l = a; l <= b; ++l) out.push_back(l);
  } else {
    for (const auto& part : split(text, ',')) out.push_back(parse_int(part, "lambda"));
  }
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1])
      fail(ErrorKind::kInvalidInput, "bad-lambda-list", "lambda samples must strictly increase");
  return out;
}

}  // namespace asdim
