#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "homodyn/kernels.hpp"

namespace homodyn {

// Primitive integer vectors modulo +-1, normalized to beta > 0 or (alpha, 0) with
// alpha > 0, ordered by (beta, alpha).
struct PrimitiveVectorSet {
  double radius = 0.0;
  std::vector<Vec2> vectors;  // (alpha, beta)
};

struct SectorQuery {
  double l = 1.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
};

inline constexpr double kMaxEnumerationRadius = 1e5;
inline constexpr double kEnumerationByteBudget = 4.0 * 1024 * 1024 * 1024;

PrimitiveVectorSet enumerate_orbit(double R);

// Members with l <= |v| <= 2l and theta1 < arg v < theta2.
std::int64_t sector_count(const PrimitiveVectorSet& set, const SectorQuery& q);

struct GapConstants {
  double second_coordinate = 0.0;
  double cross_determinant = 0.0;
};

GapConstants gap_constants(const PrimitiveVectorSet& set);

// Integer matrix (alpha, b; beta, d) of determinant 1 with first column (alpha, beta).
std::array<std::int64_t, 4> orbit_lift(const Vec2& v);

struct Packing {
  QuadInterval parent;
  std::vector<Vec2> children;
  std::vector<QuadInterval> intervals;
  bool disjoint = true;
  bool exact = false;  // disjointness decided in integer arithmetic
  std::int64_t count = 0;
  double ratio = 0.0;  // count / (l^2 / beta^{kappa+1})
};

QuadInterval slope_interval(std::int64_t alpha, std::int64_t beta, double exponent, double C);

Packing pack_subintervals(std::int64_t alpha, std::int64_t beta, double kappa, double l, double C,
                          const PrimitiveVectorSet& set);

// Pairwise disjointness of the intervals around alpha_i / beta_i of radius (C/18) beta_i^{-exponent}.
bool intervals_disjoint(std::vector<Vec2> slopes, double exponent, double C, bool* exact = nullptr);

// Smallest l on a geometric grid (ratio 1.02) where the parent receives a child.
std::optional<double> smallest_productive_l(std::int64_t alpha, std::int64_t beta, double kappa, double C,
                                            double l_max);

}  // namespace homodyn
