#include "homodyn/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "homodyn/lattice.hpp"

namespace homodyn {

TreeLikeFamily build_tree(double kappa, double eps, int level_count, const std::vector<double>& l_schedule,
                          double C) {
  require(kappa >= 1 && eps >= 0 && C > 0, "build_tree: need kappa >= 1, eps >= 0, C > 0");
  require(level_count >= 1 && level_count <= kMaxTreeLevels, "build_tree: level_count must lie in [1, 5]");
  require(static_cast<int>(l_schedule.size()) >= level_count - 1, "build_tree: schedule shorter than level_count - 1");
  TreeLikeFamily fam;
  fam.kappa = kappa;
  fam.eps = eps;
  fam.C = C;
  fam.schedule.assign(l_schedule.begin(), l_schedule.begin() + (level_count - 1));
  for (std::size_t j = 0; j < fam.schedule.size(); ++j) {
    require(fam.schedule[j] > 0, "build_tree: schedule values must be positive");
    require(j == 0 || fam.schedule[j] > fam.schedule[j - 1], "build_tree: schedule must be increasing");
    if (fam.schedule[j] > kMaxScheduleValue)
      throw CapacityError("build_tree: schedule value exceeds the enumeration guard 2l <= 1e5");
  }
  const double e = kappa + eps + 1;

  fam.levels.push_back({QuadInterval{Quad(0), Quad(1)}});
  fam.slopes.emplace_back();
  fam.parent.push_back({-1});
  for (double l : fam.schedule) {
    const auto& parents = fam.levels.back();
    auto kids = kernels::parallel::children_local(parents, l, e, C, true);
    std::vector<QuadInterval> level;
    std::vector<Vec2> slopes;
    std::vector<std::int64_t> owner;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (kids[i].empty())
        throw EmptyLevelError("build_tree: a parent received no children at l = " + format_number(l));
      for (const auto& v : kids[i]) {
        level.push_back(slope_interval(v[0], v[1], e, C));
        slopes.push_back(v);
        owner.push_back(static_cast<std::int64_t>(i));
      }
    }
    fam.levels.push_back(std::move(level));
    fam.slopes.push_back(std::move(slopes));
    fam.parent.push_back(std::move(owner));
  }

  for (const auto& level : fam.levels) {
    Quad d = 0;
    for (const auto& I : level) d = std::max(d, I.hi - I.lo);
    fam.diameters.push_back(static_cast<double>(d));
  }
  for (std::size_t j = 0; j + 1 < fam.levels.size(); ++j) {
    std::vector<Quad> covered(fam.levels[j].size(), Quad(0));
    const auto& next = fam.levels[j + 1];
    for (std::size_t k = 0; k < next.size(); ++k)
      covered[static_cast<std::size_t>(fam.parent[j + 1][k])] += next[k].hi - next[k].lo;
    Quad inf = 1;
    for (std::size_t i = 0; i < covered.size(); ++i) {
      const auto& B = fam.levels[j][i];
      inf = std::min(inf, covered[i] / (B.hi - B.lo));
    }
    fam.densities.push_back(static_cast<double>(inf));
  }
  return fam;
}

DimensionBound dimension_lower_bound(std::span<const double> densities, std::span<const double> diameters,
                                     double ambient_dim) {
  require(diameters.size() >= 2, "dimension_lower_bound: need at least two levels");
  require(densities.size() + 1 == diameters.size(), "dimension_lower_bound: need one density per non-final level");
  DimensionBound out;
  double sum = 0.0;
  for (std::size_t j = 0; j < densities.size(); ++j) {
    require(densities[j] > 0 && densities[j] <= 1, "dimension_lower_bound: densities must lie in (0, 1]");
    require(diameters[j + 1] > 0 && diameters[j + 1] < 1, "dimension_lower_bound: diameters must lie in (0, 1)");
    sum += std::log(1.0 / densities[j]);
    out.series.push_back(ambient_dim - sum / std::log(1.0 / diameters[j + 1]));
  }
  out.value = out.series.back();
  return out;
}

DimensionBound dimension_lower_bound(const TreeLikeFamily& fam, double ambient_dim) {
  return dimension_lower_bound(fam.densities, fam.diameters, ambient_dim);
}

bool approximation_certificate(const TreeLikeFamily& fam) {
  if (fam.schedule.empty()) return true;
  const double l = fam.schedule.back();
  const double e = fam.kappa + fam.eps + 1;
  const auto& level = fam.levels.back();
  const auto& slopes = fam.slopes.back();
  for (std::size_t i = 0; i < level.size(); ++i) {
    const auto& v = slopes[i];
    long double r2 = static_cast<long double>(v[0]) * v[0] + static_cast<long double>(v[1]) * v[1];
    if (r2 < static_cast<long double>(l) * l || r2 > 4.0L * l * l) return false;
    Quad c = Quad(v[0]) / Quad(v[1]);
    Quad tol = 1 / pow(Quad(v[1]), Quad(e));
    if (abs(level[i].lo - c) > tol || abs(level[i].hi - c) > tol) return false;
  }
  return true;
}

CoverSum cover_sum(double kappa, double delta, double R) {
  require(kappa >= 1, "cover_sum: kappa must be at least 1");
  require(delta > 0 && delta <= 1, "cover_sum: delta must lie in (0, 1]");
  require(R >= 2 && R <= kMaxEnumerationRadius, "cover_sum: R must lie in [2, 1e5]");
  const auto n = static_cast<std::int64_t>(std::floor(R));
  std::vector<std::int64_t> phi(static_cast<std::size_t>(n) + 1);
  std::iota(phi.begin(), phi.end(), std::int64_t{0});
  for (std::int64_t p = 2; p <= n; ++p)
    if (phi[static_cast<std::size_t>(p)] == p)
      for (std::int64_t m = p; m <= n; m += p) phi[static_cast<std::size_t>(m)] -= phi[static_cast<std::size_t>(m)] / p;

  CoverSum out;
  long double sum = 0;
  for (std::int64_t b = 2; b <= n; ++b)
    sum += phi[static_cast<std::size_t>(b)] * std::pow(2.0L * std::pow(static_cast<long double>(b), -(kappa + 1)), delta);
  out.partial = static_cast<double>(sum);

  const double s = delta * (kappa + 1) - 2;
  out.convergent = s > 1e-12;
  if (out.convergent) {
    const double n0 = std::floor(std::log2(R)) + 1;
    out.tail = std::exp2(-n0 * s) / (1 - std::exp2(-s));
  } else {
    out.tail = std::numeric_limits<double>::infinity();
  }
  return out;
}

double assembled_dimension(const std::vector<double>& kappas) {
  require(!kappas.empty(), "assembled_dimension: empty kappa list");
  double m = std::numeric_limits<double>::infinity();
  for (double k : kappas) {
    require(k >= 1, "assembled_dimension: kappa values must be at least 1");
    m = std::min(m, k + 1);
  }
  return 2 + 2 / m;
}

ExperimentReport tree_report(const TreeLikeFamily& fam, const DimensionBound& bound) {
  ExperimentReport r("dim", {"level", "l", "intervals", "diameter", "density", "lower_bound"});
  r.set_param("kappa", fam.kappa);
  r.set_param("eps", fam.eps);
  r.set_param("C", fam.C);
  r.set_param("lower_bound", bound.value);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t j = 0; j < fam.levels.size(); ++j) {
    double l = j == 0 ? nan : fam.schedule[j - 1];
    double density = j < fam.densities.size() ? fam.densities[j] : nan;
    double lb = j >= 1 && j - 1 < bound.series.size() ? bound.series[j - 1] : nan;
    r.add_row({static_cast<std::int64_t>(j), l, static_cast<std::int64_t>(fam.levels[j].size()), fam.diameters[j],
               density, lb});
  }
  return r;
}

}  // namespace homodyn
