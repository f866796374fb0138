#include "homodyn/good_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "homodyn/diophantine.hpp"
#include "homodyn/kernels.hpp"
#include "homodyn/sparse_orbits.hpp"

namespace homodyn {

namespace {

double inv_k4(const GoodFnParams& p) { return 1.0 / (p.kappa + 4.0); }

struct Component {
  double lo;
  double hi;
};

// Refine a sign change of phi on [lo, hi] (phi(lo) and phi(hi) of opposite sign).
template <class F>
double bisect(F&& phi, double lo, double hi) {
  double flo = phi(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-10 * std::max(1.0, lo); ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = phi(mid);
    if ((fm <= 0) == (flo <= 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> log_samples(int density) {
  const double span = std::log(kWindowCap);
  const auto n = static_cast<std::size_t>(std::ceil(span * density)) + 1;
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = std::exp(span * static_cast<double>(i) / static_cast<double>(n - 1));
  xs.front() = 1.0;
  xs.back() = kWindowCap;
  return xs;
}

std::vector<Component> sublevel_components(const GoodFnParams& p, double eps, const std::vector<double>& xs) {
  auto phi = [&](double x) { return eval_f(p, x) - eps; };
  std::vector<Component> out;
  bool inside = phi(xs[0]) <= 0;
  double start = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) {
    bool now = phi(xs[i]) <= 0;
    if (now == inside) continue;
    double x = bisect(phi, xs[i - 1], xs[i]);
    if (now) {
      start = x;
    } else {
      out.push_back({start, x});
    }
    inside = now;
  }
  if (inside) out.push_back({start, xs.back()});
  return out;
}

}  // namespace

double eval_f(const GoodFnParams& p, double x) {
  require(x >= 1.0, "eval_f: x must be at least 1");
  const double w = std::pow(x, 0.25 - inv_k4(p));
  const double u = p.b * std::pow(x, 0.75 + p.gamma) - p.a * std::pow(x, -0.25);
  const double v = p.b * std::pow(x, 0.25);
  return u * u * w * w + v * v * w * w;
}

double eval_g(const GoodFnParams& p, double x) {
  const double e = inv_k4(p);
  return p.b * std::pow(x, 1.0 + p.gamma - e) - p.a * std::pow(x, -e);
}

double eval_g_prime(const GoodFnParams& p, double x) {
  const double e = inv_k4(p);
  return p.b * (1.0 + p.gamma - e) * std::pow(x, p.gamma - e) + p.a * e * std::pow(x, -e - 1.0);
}

double eval_f_split(const GoodFnParams& p, double x) {
  require(x >= 1.0, "eval_f_split: x must be at least 1");
  const double g = eval_g(p, x);
  const double h = p.b * std::pow(x, 0.5 - inv_k4(p));
  return g * g + h * h;
}

GoodFnParams make_good_params(double a, double b, double kappa, double gamma, double mu, double nu,
                              std::optional<double> rho) {
  require(kappa >= 1.0, "GoodFnParams: kappa must be at least 1");
  require(gamma > 0 && gamma < 1.0 / (kappa + 4.0), "GoodFnParams: need 0 < gamma < 1/(kappa+4)");
  require(mu > 0 && nu > 0, "GoodFnParams: mu and nu must be positive");
  require(std::abs(b) >= mu || std::pow(std::abs(a), kappa) * std::abs(b) >= nu,
          "GoodFnParams: (a, b) violates |b| >= mu or |a|^kappa |b| >= nu");
  GoodFnParams p{a, b, kappa, gamma, 0.0, mu, nu};
  const double f1 = eval_f(p, 1.0);
  p.rho = rho.value_or(std::min(f1, kSeparationRadius * kSeparationRadius));
  require(p.rho > 0 && p.rho <= f1, "GoodFnParams: need 0 < rho <= f(1)");
  return p;
}

std::optional<double> proved_floor(const GoodFnParams& p) {
  if (std::abs(p.b) >= p.mu) return p.mu * p.mu;
  if (p.a * p.b < 0) return std::pow(p.nu, 2.0 / (p.kappa + 1.0));
  return std::nullopt;
}

GoodnessResult verify_good(const GoodFnParams& p, const std::vector<double>& eps_grid, int window_count,
                           int sample_density) {
  require(window_count >= 50, "verify_good: window_count must be at least 50");
  require(sample_density >= 1000, "verify_good: sample_density must be at least 1000");
  require(!eps_grid.empty(), "verify_good: empty eps grid");
  for (double e : eps_grid) require(e > 0 && e < p.rho, "verify_good: eps values must lie in (0, rho)");

  const auto xs = log_samples(sample_density);
  GoodnessResult out;
  out.report = ExperimentReport("goodfn", {"eps", "C", "max_sublevel_measure", "min_f", "failures"});

  // anchors: x1 with f(x1) = rho
  auto phi_rho = [&](double x) { return eval_f(p, x) - p.rho; };
  if (std::abs(phi_rho(1.0)) <= 1e-12 * p.rho) out.anchors.push_back(1.0);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    double f0 = phi_rho(xs[i - 1]), f1 = phi_rho(xs[i]);
    if (f0 != 0 && f1 != 0 && (f0 < 0) != (f1 < 0)) out.anchors.push_back(bisect(phi_rho, xs[i - 1], xs[i]));
  }
  if (out.anchors.empty()) throw RootNotFoundError("verify_good: f - rho has no crossing in [1, 1e8]");

  double min_f = std::numeric_limits<double>::infinity();
  for (double x : xs) min_f = std::min(min_f, eval_f(p, x));
  const auto floor = proved_floor(p);

  for (double eps : eps_grid) {
    const auto comps = sublevel_components(p, eps, xs);
    double C = 0.0, worst_measure = 0.0;
    std::int64_t failures = 0;
    const double scale = std::sqrt(eps / p.rho);
    for (double x1 : out.anchors) {
      std::vector<double> ends;
      if (x1 < kWindowCap) {
        auto grid = log_uniform_grid(x1, kWindowCap, window_count + 1);
        ends.assign(grid.begin() + 1, grid.end());
      }
      // the ratio peaks at component endpoints, so they are always windows
      for (const auto& c : comps) {
        if (c.lo > x1) ends.push_back(c.lo);
        if (c.hi > x1) ends.push_back(c.hi);
      }
      std::vector<double> ratio(ends.size()), measure(ends.size());
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(ends.size()); ++k) {
        const double x2 = ends[static_cast<std::size_t>(k)];
        double m = 0.0;
        for (const auto& c : comps) m += std::max(0.0, std::min(c.hi, x2) - std::max(c.lo, x1));
        measure[static_cast<std::size_t>(k)] = m;
        ratio[static_cast<std::size_t>(k)] = m / (scale * (x2 - x1));
      }
      for (std::size_t k = 0; k < ends.size(); ++k) {
        C = std::max(C, ratio[k]);
        worst_measure = std::max(worst_measure, measure[k]);
        if (floor && eps < *floor && measure[k] > 0) ++failures;
      }
    }
    out.eps.push_back(eps);
    out.C.push_back(C);
    out.min_f.push_back(min_f);
    out.failures.push_back(failures);
    out.report.add_row({eps, C, worst_measure, min_f, failures});
  }

  out.report.set_param("a", p.a);
  out.report.set_param("b", p.b);
  out.report.set_param("kappa", p.kappa);
  out.report.set_param("gamma", p.gamma);
  out.report.set_param("rho", p.rho);
  out.report.set_param("window_count", window_count);
  out.report.set_param("sample_density", sample_density);
  out.report.set_param("anchors", static_cast<std::int64_t>(out.anchors.size()));
  if (floor) out.report.set_param("proved_floor", *floor);
  return out;
}

double hitting_frequency(const SurfacePoint& p, double gamma, double kappa, double eps, std::int64_t N,
                         bool check_type) {
  require(kappa >= 1.0, "hitting_frequency: kappa must be at least 1");
  require(gamma > 0 && gamma < 1.0 / (kappa + 4.0), "hitting_frequency: need 0 < gamma < 1/(kappa+4)");
  require(eps >= 0, "hitting_frequency: eps must be nonnegative");
  require(N >= 1, "hitting_frequency: N must be positive");
  if (check_type) {
    auto w = point_type_check(p, kappa);
    require(w.nu > 0 && w.violations == 0, "hitting_frequency: base point fails the type check at kappa");
  }
  if (eps == 0) return 0.0;
  auto flags = kernels::parallel::curve_hit_flags(p.reduced_rep, gamma, kappa, eps, N);
  std::int64_t hits = 0;
  for (auto f : flags) hits += f;
  return static_cast<double>(hits) / static_cast<double>(N);
}

}  // namespace homodyn
