#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homodyn/modular.hpp"
#include "homodyn/report.hpp"

namespace homodyn {

struct GoodFnParams {
  double a = 1.0;
  double b = 1.0;
  double kappa = 1.0;
  double gamma = 0.1;
  double rho = 0.25;
  double mu = 1.0;
  double nu = 1.0;
};

// Checks the Diophantine disjunction and 0 < gamma < 1/(kappa+4); rho defaults
// to min(f(1), d_1^2).
GoodFnParams make_good_params(double a, double b, double kappa, double gamma, double mu, double nu,
                              std::optional<double> rho = std::nullopt);

double eval_f(const GoodFnParams& p, double x);
// Same function written as g(x)^2 + h(x)^2.
double eval_f_split(const GoodFnParams& p, double x);
double eval_g(const GoodFnParams& p, double x);
double eval_g_prime(const GoodFnParams& p, double x);

inline constexpr double kWindowCap = 1e8;

struct GoodnessResult {
  std::vector<double> eps;
  std::vector<double> C;         // smallest C valid over all windows, per eps
  std::vector<double> min_f;     // smallest sampled value of f over [1, 1e8]
  std::vector<std::int64_t> failures;  // windows with a nonempty sublevel set below the floor
  std::vector<double> anchors;
  ExperimentReport report;
};

// Sublevel measure of {f <= eps} on windows (x1, x2) with f(x1) = rho.
// sample_density is the number of samples per unit of log x.
GoodnessResult verify_good(const GoodFnParams& p, const std::vector<double>& eps_grid, int window_count = 60,
                           int sample_density = 1000);

// Lower bound for f from the proof: mu^2 when |b| >= mu, nu^{2/(kappa+1)} when ab < 0.
std::optional<double> proved_floor(const GoodFnParams& p);

// Fraction of n in [1, N] whose curve point lies in S_theta(n, eps).
double hitting_frequency(const SurfacePoint& p, double gamma, double kappa, double eps, std::int64_t N,
                         bool check_type = true);

}  // namespace homodyn
