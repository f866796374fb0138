#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "homodyn/kernels.hpp"
#include "homodyn/report.hpp"

namespace homodyn {

struct TreeLikeFamily {
  double kappa = 1.0;
  double eps = 0.0;
  double C = 1.0;
  std::vector<double> schedule;                    // l_j for levels 1..
  std::vector<std::vector<QuadInterval>> levels;   // level 0 = {[0,1]}
  std::vector<std::vector<Vec2>> slopes;           // (alpha, beta) per interval; empty at level 0
  std::vector<std::vector<std::int64_t>> parent;   // index into the previous level
  std::vector<double> diameters;                   // d_j, one per level
  std::vector<double> densities;                   // Delta_j, one per level except the last
};

inline constexpr int kMaxTreeLevels = 5;
inline constexpr double kMaxScheduleValue = 5e4;  // 2l <= 1e5

// level_count counts level 0; schedule entries beyond level_count - 1 are ignored.
TreeLikeFamily build_tree(double kappa, double eps, int level_count, const std::vector<double>& l_schedule,
                          double C = 1.0);

struct DimensionBound {
  double value = 0.0;
  std::vector<double> series;  // bound evaluated at j = 0 .. J-2
};

DimensionBound dimension_lower_bound(const TreeLikeFamily& fam, double ambient_dim);
// densities Delta_0..Delta_{J-2}, diameters d_0..d_{J-1}
DimensionBound dimension_lower_bound(std::span<const double> densities, std::span<const double> diameters,
                                     double ambient_dim);

// Every endpoint of a deepest interval lies within beta^{-(kappa+eps+1)} of its slope,
// and the slope vector has norm in [l, 2l] for the last schedule value.
bool approximation_certificate(const TreeLikeFamily& fam);

struct CoverSum {
  double partial = 0.0;  // sum over beta <= R of phi(beta) (2 beta^{-(kappa+1)})^delta
  double tail = 0.0;     // dyadic-block estimate beyond R, infinite when divergent
  bool convergent = false;
};

CoverSum cover_sum(double kappa, double delta, double R);

// 2 + 2 / min(kappa_j + 1)
double assembled_dimension(const std::vector<double>& kappas);

ExperimentReport tree_report(const TreeLikeFamily& fam, const DimensionBound& bound);

}  // namespace homodyn
