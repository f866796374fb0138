#pragma once

#include <span>
#include <vector>

#include "homodyn/report.hpp"
#include "homodyn/test_functions.hpp"

namespace homodyn {

// Base kernel (35/32)(1 - x^2)^3 on [-1, 1].
double base_kernel(double x);
double base_kernel_cdf(double x);
inline constexpr double kKernelNormalization = 35.0 / 32.0;

struct MollifierSpec {
  double delta = 0.1;
  int n = 1;
  double gamma = 1.0;
};

MollifierSpec make_mollifier(double delta, int n, double gamma);

// (1/delta) int_0^gamma K((u - t)/delta) dt by adaptive Gauss-Kronrod.
double mollifier_factor(const MollifierSpec& spec, double u);
double eval_mollifier(const MollifierSpec& spec, std::span<const double> u);

struct MollifierCheck {
  double integral = 0.0;
  double l1_to_box = 0.0;
  double l1_bound = 0.0;  // 4 n delta (gamma + delta)^{n-1}
  bool integral_ok = false;
  bool l1_ok = false;
};

MollifierCheck verify_mollifier(const MollifierSpec& spec);

// 0.5 * cusp_norm(p)
double injectivity_radius_estimate(const SurfacePoint& p);

inline constexpr double kBoxStep = 0.02;

// (1/T) int_0^T f(p u(t)) dt, midpoint rule with step 0.02.
double box_average(const SurfacePoint& p, double T, const TestFunction& f);
// (1/T) int f(p u(t)) h(t/T) dt with h the n = 1 mollifier.
double weighted_box_average(const SurfacePoint& p, double T, const TestFunction& f, const MollifierSpec& h);

struct BoxSweep {
  std::vector<double> T;
  std::vector<double> average;
  std::vector<double> error;
  double a = 0.0;          // fitted decay exponent, error ~ A T^{-a}
  double log_A = 0.0;
  double eta = 0.0;        // injectivity estimate of the base
  ExperimentReport report;
};

BoxSweep box_sweep(const SurfacePoint& p, const std::vector<double>& Ts, const TestFunction& f);

}  // namespace homodyn
