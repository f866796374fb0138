#pragma once

// Data-parallel kernels. Each kernel has a plain serial reference and an
// OpenMP version; both produce bit-identical results for any thread count.

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "homodyn/modular.hpp"
#include "homodyn/precision.hpp"
#include "homodyn/test_functions.hpp"

namespace homodyn {

using Vec2 = std::array<std::int64_t, 2>;

struct QuadInterval {
  Quad lo;
  Quad hi;
};

namespace kernels {

struct ZeroScan {
  double min_abs_b = std::numeric_limits<double>::infinity();
  std::array<double, 2> vector{0.0, 0.0};
};

struct PrimitiveScan {
  double min_product = std::numeric_limits<double>::infinity();
  std::array<double, 2> vector{0.0, 0.0};
  std::array<std::int64_t, 2> source{0, 0};
  std::int64_t scanned = 0;
  std::int64_t violations = 0;
};

// Curve matrix (x^{1/4}, x^{3/4+gamma}; 0, x^{-1/4}) in working precision.
Entries<long double> curve_matrix(long double x, long double gamma);

namespace serial {
std::vector<SurfacePoint> sample_times(const GroupElement& rep, std::span<const long double> times);
std::vector<SurfacePoint> curve_points(const GroupElement& rep, double gamma, std::span<const double> xs);
std::vector<double> evaluate(const TestFunction& f, std::span<const SurfacePoint> points);
// flags[n-1] = 1 when the curve point at n lies in S_theta(n, eps), n = 1..n_max
std::vector<std::uint8_t> curve_hit_flags(const GroupElement& rep, double gamma, double kappa, double eps,
                                          std::int64_t n_max);
ZeroScan zero_product_scan(const GroupElement& g, int bound);
PrimitiveScan primitive_scan(const GroupElement& g, double kappa, int bound, double mu, double probe_mu,
                             double probe_nu);
std::vector<Vec2> primitive_vectors(double radius);
std::vector<double> fejer_coefficients(double delta, double period, int k_max);
std::vector<std::vector<Vec2>> children_local(std::span<const QuadInterval> parents, double l, double exponent,
                                              double C, bool full_containment);
}  // namespace serial

namespace parallel {
std::vector<SurfacePoint> sample_times(const GroupElement& rep, std::span<const long double> times);
std::vector<SurfacePoint> curve_points(const GroupElement& rep, double gamma, std::span<const double> xs);
std::vector<double> evaluate(const TestFunction& f, std::span<const SurfacePoint> points);
// flags[n-1] = 1 when the curve point at n lies in S_theta(n, eps), n = 1..n_max
std::vector<std::uint8_t> curve_hit_flags(const GroupElement& rep, double gamma, double kappa, double eps,
                                          std::int64_t n_max);
ZeroScan zero_product_scan(const GroupElement& g, int bound);
PrimitiveScan primitive_scan(const GroupElement& g, double kappa, int bound, double mu, double probe_mu,
                             double probe_nu);
std::vector<Vec2> primitive_vectors(double radius);
std::vector<double> fejer_coefficients(double delta, double period, int k_max);
std::vector<std::vector<Vec2>> children_local(std::span<const QuadInterval> parents, double l, double exponent,
                                              double C, bool full_containment);
}  // namespace parallel

}  // namespace kernels

void set_thread_count(int threads);
int thread_count();

}  // namespace homodyn
