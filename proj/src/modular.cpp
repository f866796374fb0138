#include "homodyn/modular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "homodyn/report.hpp"
#include "homodyn/rng.hpp"

namespace homodyn {

GroupElement truncated_haar_element(double u1, double u2, double u3, double y_max) {
  const double y_min = std::sqrt(3.0) / 2.0;
  double x = u1 - 0.5;
  double inv = 1.0 / y_min - u2 * (1.0 / y_min - 1.0 / y_max);
  double y = 1.0 / inv;
  double theta = u3 * std::numbers::pi;
  return unipotent(x) * diagonal(std::sqrt(y)) * rotation(theta);
}

ExperimentReport dist_vs_norm_check(int sample_count, std::uint64_t seed) {
  require(sample_count >= 100, "dist_vs_norm_check: sample_count must be at least 100");
  CounterRng rng(seed, 0x3a4);
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  double sum = 0.0;
  std::int64_t kept = 0;
  for (int i = 0; i < sample_count; ++i) {
    auto base = static_cast<std::uint64_t>(i) * 3;
    GroupElement g = truncated_haar_element(rng.uniform_at(base), rng.uniform_at(base + 1), rng.uniform_at(base + 2));
    SurfacePoint p = reduce(g);
    double d = cusp_norm(p);
    if (d > kCuspNeighbourhood) continue;
    double ratio = std::exp(dist(p)) * d * d;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    sum += ratio;
    ++kept;
  }
  ExperimentReport r("dist_vs_norm", {"statistic", "value"});
  r.set_param("sample_count", sample_count);
  r.set_param("sampling", "x~U[-1/2,1/2], theta~U[0,pi), y~1/y^2 on [sqrt(3)/2,100]");
  r.set_param("norm_cut", kCuspNeighbourhood);
  r.add_row({std::string("draws"), static_cast<std::int64_t>(sample_count)});
  r.add_row({std::string("kept"), kept});
  r.add_row({std::string("ratio_min"), kept ? lo : std::numeric_limits<double>::quiet_NaN()});
  r.add_row({std::string("ratio_max"), kept ? hi : std::numeric_limits<double>::quiet_NaN()});
  r.add_row({std::string("ratio_mean"), kept ? sum / static_cast<double>(kept) : std::numeric_limits<double>::quiet_NaN()});
  r.add_row({std::string("max_over_min"), kept ? hi / lo : std::numeric_limits<double>::quiet_NaN()});
  r.add_note("ratio = exp(dist(p)) * d(p)^2 over samples with d(p) <= 0.5");
  return r;
}

}  // namespace homodyn
