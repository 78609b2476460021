#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asdim/estimator.hpp"

namespace asdim {

struct WindowPolicy {
  std::int64_t d_factor = 4;   // D(lambda) = d_factor * lambda
  std::int64_t r_factor = 5;   // R(lambda) = r_factor * D(lambda)
  std::size_t max_window_points = 4500;

  std::int64_t diameter_budget(std::int64_t lambda) const { return d_factor * lambda; }
  std::int64_t ambient_radius(std::int64_t lambda) const {
    return r_factor * diameter_budget(lambda);
  }
};

// What a subject hands back for one sample: the space, the interior window
// and any constructive covers worth trying as upper-bound witnesses.
struct SampleWindow {
  SpacePtr space;
  PointSet window;
  std::vector<NamedCover> witnesses;
  std::string note;
};
using WindowProvider =
    std::function<SampleWindow(std::int64_t lambda, std::int64_t D, std::int64_t R)>;

struct CurveSample {
  std::int64_t lambda = 0;
  std::int64_t D = 0;
  std::int64_t R = 0;
  std::optional<std::int64_t> lower;  // both empty for a gap
  std::optional<std::int64_t> upper;
  std::string method;
  std::optional<double> seconds;
  std::optional<Cover> witness;

  bool gap() const { return !lower || !upper; }
};

struct DimCurve {
  std::string subject;
  WindowPolicy policy;
  std::vector<CurveSample> samples;
};

// Samples must be strictly increasing. Errors in a sample become gaps.
DimCurve dim_curve(const std::string& subject, const WindowProvider& provider,
                   std::span<const std::int64_t> lambdas, const WindowPolicy& policy,
                   const BoundsOptions& options = {}, bool timings = false);

struct Domination {
  bool holds = true;
  std::optional<std::int64_t> violated_lambda;
  std::string detail;
};

// f(x) <= k*g(kx+k)+k at every non-gap f sample, comparing upper bounds.
// g is read at the largest sample at or below kx+k (a monotone step from
// below, so past its last sample g stays at that value). Throws
// "insufficient-range" when g stops short of kx.
Domination dominates(const DimCurve& f, const DimCurve& g, std::int64_t k);
std::optional<std::int64_t> find_min_k(const DimCurve& f, const DimCurve& g, std::int64_t k_max);

std::string curve_csv(const DimCurve& curve);
DimCurve parse_curve_csv(const std::string& text);

// "a..b" or "a,b,c"
std::vector<std::int64_t> parse_lambda_list(const std::string& text);

}  // namespace asdim
