#include "homodyn/mollifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace homodyn {

double base_kernel(double x) {
  if (x <= -1 || x >= 1) return 0.0;
  double w = 1 - x * x;
  return kKernelNormalization * w * w * w;
}

double base_kernel_cdf(double x) {
  if (x <= -1) return 0.0;
  if (x >= 1) return 1.0;
  double x2 = x * x;
  return 0.5 + kKernelNormalization * x * (1 - x2 + 0.6 * x2 * x2 - x2 * x2 * x2 / 7);
}

MollifierSpec make_mollifier(double delta, int n, double gamma) {
  require(delta > 0, "mollifier: delta must be positive");
  require(n >= 1 && n <= 3, "mollifier: n must lie in [1, 3]");
  require(gamma > 0, "mollifier: gamma must be positive");
  return {delta, n, gamma};
}

double mollifier_factor(const MollifierSpec& s, double u) {
  const double lo = std::max(0.0, u - s.delta), hi = std::min(s.gamma, u + s.delta);
  if (lo >= hi) return 0.0;
  auto k = [&](double t) { return base_kernel((u - t) / s.delta) / s.delta; };
  double err = 0.0;
  double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(k, lo, hi, 8, 1e-11, &err);
  if (!std::isfinite(v)) throw QuadratureError("mollifier_factor: non-finite quadrature value");
  return std::clamp(v, 0.0, 1.0);
}

double eval_mollifier(const MollifierSpec& spec, std::span<const double> u) {
  require(static_cast<int>(u.size()) == spec.n, "eval_mollifier: argument length must equal n");
  double v = 1.0;
  for (double x : u) v *= mollifier_factor(spec, x);
  return v;
}

MollifierCheck verify_mollifier(const MollifierSpec& s) {
  require(s.n >= 1 && s.n <= 3, "verify_mollifier: n must lie in [1, 3]");
  // the integrands are polynomial on each panel, so 8-point Gauss-Legendre is exact
  std::vector<double> cuts{-s.delta, 0.0, s.delta, s.gamma - s.delta, s.gamma, s.gamma + s.delta};
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  using GL = boost::math::quadrature::gauss<double, 8>;
  const auto& abscissa = GL::abscissa();
  const auto& weights = GL::weights();

  std::vector<double> node, weight, phi, chi;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]), half = 0.5 * (cuts[i + 1] - cuts[i]);
    for (std::size_t k = 0; k < abscissa.size(); ++k) {
      for (int sign : {-1, 1}) {
        if (k == 0 && abscissa[0] == 0 && sign == 1) continue;
        double x = mid + sign * half * abscissa[k];
        node.push_back(x);
        weight.push_back(half * weights[k]);
        phi.push_back(mollifier_factor(s, x));
        chi.push_back(x >= 0 && x <= s.gamma ? 1.0 : 0.0);
      }
    }
  }

  const std::size_t m = node.size();
  long double integral = 0, l1 = 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(s.n), 0);
  while (true) {
    long double w = 1, g = 1, c = 1;
    for (std::size_t i : idx) {
      w *= weight[i];
      g *= phi[i];
      c *= chi[i];
    }
    integral += w * g;
    l1 += w * std::abs(g - c);
    std::size_t d = 0;
    while (d < idx.size() && ++idx[d] == m) idx[d++] = 0;
    if (d == idx.size()) break;
  }
  MollifierCheck out;
  out.integral = static_cast<double>(integral);
  out.l1_to_box = static_cast<double>(l1);
  if (!std::isfinite(out.integral) || !std::isfinite(out.l1_to_box))
    throw QuadratureError("verify_mollifier: non-finite quadrature value");
  const double box = std::pow(s.gamma, s.n);
  out.l1_bound = 4 * s.n * s.delta * std::pow(s.gamma + s.delta, s.n - 1);
  out.integral_ok = std::abs(out.integral - box) <= 1e-6 * box;
  out.l1_ok = out.l1_to_box <= out.l1_bound;
  return out;
}

double injectivity_radius_estimate(const SurfacePoint& p) { return 0.5 * cusp_norm(p); }

double box_average(const SurfacePoint& p, double T, const TestFunction& f) {
  require(T >= 10, "box_average: T must be at least 10");
  const auto n = static_cast<std::int64_t>(std::ceil(T / kBoxStep));
  const long double h = static_cast<long double>(T) / n;
  long double sum = 0;
  for (std::int64_t j = 0; j < n; ++j)
    sum += f(reduce_right(p.reduced_rep, unipotent_entries<long double>((j + 0.5L) * h)));
  return static_cast<double>(sum / n);
}

double weighted_box_average(const SurfacePoint& p, double T, const TestFunction& f, const MollifierSpec& hspec) {
  require(T >= 10, "weighted_box_average: T must be at least 10");
  require(hspec.n == 1, "weighted_box_average: the weight must be the n = 1 mollifier");
  // a_{-ln T} u(t) a_{ln T} = u(t / T)
  const long double lo = -hspec.delta * static_cast<long double>(T);
  const long double hi = (hspec.gamma + hspec.delta) * static_cast<long double>(T);
  const auto n = static_cast<std::int64_t>(std::ceil(static_cast<double>(hi - lo) / kBoxStep));
  const long double h = (hi - lo) / n;
  long double sum = 0;
  for (std::int64_t j = 0; j < n; ++j) {
    long double t = lo + (j + 0.5L) * h;
    double w = mollifier_factor(hspec, static_cast<double>(t / T));
    if (w == 0) continue;
    sum += w * f(reduce_right(p.reduced_rep, unipotent_entries<long double>(t)));
  }
  return static_cast<double>(sum * h / T);
}

BoxSweep box_sweep(const SurfacePoint& p, const std::vector<double>& Ts, const TestFunction& f) {
  require(Ts.size() >= 2, "box_sweep: need at least two T values");
  BoxSweep out;
  out.T = Ts;
  out.average.assign(Ts.size(), 0.0);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(Ts.size()); ++i)
    out.average[static_cast<std::size_t>(i)] = box_average(p, Ts[static_cast<std::size_t>(i)], f);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int used = 0;
  for (std::size_t i = 0; i < Ts.size(); ++i) {
    double e = std::abs(out.average[i] - f.haar_mean);
    out.error.push_back(e);
    if (e > 0) {
      double x = std::log(Ts[i]), y = std::log(e);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++used;
    }
  }
  if (used >= 2) {
    double slope = (used * sxy - sx * sy) / (used * sxx - sx * sx);
    out.a = -slope;
    out.log_A = (sy - slope * sx) / used;
  }
  out.eta = injectivity_radius_estimate(p);

  out.report = ExperimentReport("box", {"T", "average", "haar_mean", "error", "prediction"});
  out.report.set_param("function", f.name());
  out.report.set_param("a", out.a);
  out.report.set_param("eta", out.eta);
  for (std::size_t i = 0; i < Ts.size(); ++i)
    out.report.add_row({Ts[i], out.average[i], f.haar_mean, out.error[i], std::exp(out.log_A) * std::pow(Ts[i], -out.a)});
  out.report.add_note("single base point: the eta exponent b is not identifiable and is absorbed into A");
  return out;
}

}  // namespace homodyn
