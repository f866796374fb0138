#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "homodyn/orbit_series.hpp"
#include "homodyn/report.hpp"
#include "homodyn/test_functions.hpp"

namespace homodyn {

// points[n] = reduce(rep * u(n^{1+gamma})), n = 0..N-1
OrbitSeries sample_sparse(const SurfacePoint& p, double gamma, std::int64_t N);

// points along p * (x^{1/4}, x^{3/4+gamma}; 0, x^{-1/4})
OrbitSeries sample_curve(const SurfacePoint& p, double gamma, const std::vector<double>& x_grid);

std::vector<double> log_uniform_grid(double lo, double hi, int count);

// One row per (function, prefix length): |prefix mean - haar mean|.
ExperimentReport discrepancy(const OrbitSeries& series, const std::vector<TestFunction>& suite, bool dyadic);

// (1/T) int_0^T exp(2 pi i freq t) f(q u(t)) dt by the composite midpoint rule.
std::complex<double> twisted_average(const SurfacePoint& q, double T, double frequency, const TestFunction& f,
                                     int quad_points = 1000);

struct ProgressionAverage {
  double value = 0.0;  // (K/T) * sum (f(q u(Kj)) - haar_mean)
  std::int64_t count = 0;
};

ProgressionAverage progression_average(const SurfacePoint& q, double K, double T, const TestFunction& f);

struct FejerCheck {
  double delta = 0.0;
  double period = 1.0;
  double g0 = 0.0;       // periodized triangle at 0
  double sum_abs = 0.0;  // sum over |k| <= k_max of |a_k|
  double min_coefficient = 0.0;
  std::vector<double> coefficients;  // a_0 .. a_{k_max}
  ExperimentReport report() const;
};

FejerCheck fejer_coefficient_check(double delta, double K, int k_max);

struct PieceBlock {
  std::int64_t start = 0;
  std::int64_t length = 0;  // block covers [start, start + length]
  double r = 0.0;
  double taylor_residual = 0.0;
  double taylor_bound = 0.0;
};

struct PieceDecomposition {
  std::vector<PieceBlock> blocks;
  std::int64_t N = 0;
  std::int64_t obstructed = 0;  // n outside B
  double covered_fraction = 0.0;
  ExperimentReport report() const;
};

PieceDecomposition piece_decomposition(const SurfacePoint& p, double gamma, double eps, std::int64_t N, double kappa);

}  // namespace homodyn
