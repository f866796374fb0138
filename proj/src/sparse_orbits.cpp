#include "homodyn/sparse_orbits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "homodyn/kernels.hpp"

namespace homodyn {

OrbitSeries sample_sparse(const SurfacePoint& p, double gamma, std::int64_t N) {
  require(gamma >= 0 && gamma <= 0.5, "sample_sparse: gamma must lie in [0, 1/2]");
  require(N >= 1, "sample_sparse: N must be positive");
  std::vector<long double> times(static_cast<std::size_t>(N));
  const long double e = 1.0L + gamma;
  for (std::int64_t n = 0; n < N; ++n) times[static_cast<std::size_t>(n)] = std::pow(static_cast<long double>(n), e);
  OrbitSeries s;
  s.base = p;
  s.gamma = gamma;
  s.label = "sparse";
  s.points = kernels::parallel::sample_times(p.reduced_rep, times);
  s.times.assign(times.begin(), times.end());
  return s;
}

OrbitSeries sample_curve(const SurfacePoint& p, double gamma, const std::vector<double>& x_grid) {
  require(gamma >= 0 && gamma < 0.25, "sample_curve: gamma must lie in [0, 1/4)");
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    require(x_grid[i] >= 1.0, "sample_curve: grid values must be at least 1");
    require(i == 0 || x_grid[i] > x_grid[i - 1], "sample_curve: grid must be increasing");
  }
  OrbitSeries s;
  s.base = p;
  s.gamma = gamma;
  s.label = "curve";
  s.times = x_grid;
  s.points = kernels::parallel::curve_points(p.reduced_rep, gamma, x_grid);
  return s;
}

std::vector<double> log_uniform_grid(double lo, double hi, int count) {
  require(lo > 0 && hi > lo && count >= 2, "log_uniform_grid: need 0 < lo < hi and count >= 2");
  std::vector<double> g(static_cast<std::size_t>(count));
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < count; ++i) g[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (count - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

ExperimentReport discrepancy(const OrbitSeries& series, const std::vector<TestFunction>& suite, bool dyadic) {
  require(!series.points.empty(), "discrepancy: empty series");
  const auto N = static_cast<std::int64_t>(series.points.size());
  std::vector<std::int64_t> marks;
  if (dyadic)
    for (std::int64_t k = 1; k <= N; k *= 2) marks.push_back(k);
  if (marks.empty() || marks.back() != N) marks.push_back(N);

  ExperimentReport r("discrepancy", {"function", "N", "mean", "haar_mean", "discrepancy"});
  r.set_param("gamma", series.gamma);
  r.set_param("N", N);
  r.set_param("dyadic", std::string(dyadic ? "true" : "false"));
  for (const auto& f : suite) {
    auto values = kernels::parallel::evaluate(f, series.points);
    double sum = 0.0;
    std::size_t next = 0;
    for (std::int64_t n = 0; n < N; ++n) {
      sum += values[static_cast<std::size_t>(n)];
      if (n + 1 == marks[next]) {
        double mean = sum / static_cast<double>(n + 1);
        r.add_row({f.name(), n + 1, mean, f.haar_mean, std::abs(mean - f.haar_mean)});
        ++next;
      }
    }
  }
  return r;
}

std::complex<double> twisted_average(const SurfacePoint& q, double T, double frequency, const TestFunction& f,
                                     int quad_points) {
  require(T >= 10, "twisted_average: T must be at least 10");
  require(quad_points >= 1000, "twisted_average: quad_points must be at least 1000");
  require(frequency >= 0, "twisted_average: frequency must be nonnegative");
  if (frequency * T / quad_points > 20)
    throw StepResolutionError("twisted_average: frequency*T/quad_points exceeds 20 (undersampled oscillation)");
  double step = frequency > 0 ? std::min(0.05, 0.1 / frequency) : 0.05;
  auto n = std::max<std::int64_t>(quad_points, static_cast<std::int64_t>(std::ceil(T / step)));
  const long double h = static_cast<long double>(T) / n;
  long double re = 0, im = 0;
  for (std::int64_t j = 0; j < n; ++j) {
    long double t = (j + 0.5L) * h;
    double v = f(reduce_right(q.reduced_rep, unipotent_entries<long double>(t)));
    long double phase = 2 * std::numbers::pi_v<long double> * frequency * t;
    re += v * std::cos(phase);
    im += v * std::sin(phase);
  }
  return {static_cast<double>(re * h / T), static_cast<double>(im * h / T)};
}

ProgressionAverage progression_average(const SurfacePoint& q, double K, double T, const TestFunction& f) {
  require(K >= 1 && T > K, "progression_average: need T > K >= 1");
  ProgressionAverage out;
  long double sum = 0;
  for (std::int64_t j = 0;; ++j) {
    long double t = static_cast<long double>(K) * j;
    if (!(t < T)) break;
    sum += f(reduce_right(q.reduced_rep, unipotent_entries<long double>(t))) - f.haar_mean;
    ++out.count;
  }
  out.value = static_cast<double>(sum / (static_cast<long double>(T) / K));
  return out;
}

ExperimentReport FejerCheck::report() const {
  ExperimentReport r("fejer", {"k", "a_k"});
  r.set_param("delta", delta);
  r.set_param("K", period);
  r.set_param("g0", g0);
  r.set_param("sum_abs", sum_abs);
  r.set_param("min_coefficient", min_coefficient);
  for (std::size_t k = 0; k < coefficients.size(); ++k) r.add_row({static_cast<std::int64_t>(k), coefficients[k]});
  return r;
}

FejerCheck fejer_coefficient_check(double delta, double K, int k_max) {
  require(delta > 0 && delta < K / 2, "fejer_coefficient_check: need 0 < delta < K/2");
  require(k_max >= 1000, "fejer_coefficient_check: k_max must be at least 1000");
  FejerCheck c;
  c.delta = delta;
  c.period = K;
  // periodized triangle g(x) = sum_j g_delta(x + K j) at x = 0
  for (int j = -2; j <= 2; ++j) c.g0 += std::max(delta - std::abs(K * j), 0.0) / (delta * delta);
  c.coefficients = kernels::parallel::fejer_coefficients(delta, K, k_max);
  c.sum_abs = std::abs(c.coefficients[0]);
  c.min_coefficient = c.coefficients[0];
  for (std::size_t k = 1; k < c.coefficients.size(); ++k) {
    c.sum_abs += 2 * std::abs(c.coefficients[k]);
    c.min_coefficient = std::min(c.min_coefficient, c.coefficients[k]);
  }
  return c;
}

ExperimentReport PieceDecomposition::report() const {
  ExperimentReport r("pieces", {"block", "M", "length", "r", "taylor_residual", "taylor_bound"});
  r.set_param("N", N);
  r.set_param("covered_fraction", covered_fraction);
  r.set_param("obstructed", obstructed);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    r.add_row({static_cast<std::int64_t>(i), b.start, b.length, b.r, b.taylor_residual, b.taylor_bound});
  }
  return r;
}

PieceDecomposition piece_decomposition(const SurfacePoint& p, double gamma, double eps, std::int64_t N, double kappa) {
  require(kappa >= 1, "piece_decomposition: kappa must be at least 1");
  require(gamma > 0 && gamma < 1 / (kappa + 4), "piece_decomposition: need 0 < gamma < 1/(kappa+4)");
  require(eps >= 0, "piece_decomposition: eps must be nonnegative");
  require(N >= 1000, "piece_decomposition: N must be at least 1000");
  PieceDecomposition out;
  out.N = N;
  auto hits = kernels::parallel::curve_hit_flags(p.reduced_rep, gamma, kappa, eps, N);
  for (auto h : hits) out.obstructed += h;

  const double c_taylor = gamma * (1 + gamma) / 2 / ((1 + gamma) * (1 + gamma));
  std::int64_t covered = 0;
  std::int64_t n = 1;
  while (n <= N) {
    if (hits[static_cast<std::size_t>(n - 1)]) {
      ++n;
      continue;
    }
    PieceBlock b;
    b.start = n;
    const double M = static_cast<double>(n);
    b.length = static_cast<std::int64_t>(std::floor(std::pow(M, 0.5 - gamma) / (1 + gamma)));
    const double k = static_cast<double>(b.length);
    // M^{1+g} [ (1+k/M)^{1+g} - 1 - (1+g) k/M ]
    b.taylor_residual = std::pow(M, 1 + gamma) *
                        std::abs(std::expm1((1 + gamma) * std::log1p(k / M)) - (1 + gamma) * (k / M));
    b.taylor_bound = c_taylor * std::pow(M, -gamma);
    auto q = reduce_right(p.reduced_rep, unipotent_entries<long double>(std::pow(static_cast<long double>(M), 1.0L + gamma)));
    b.r = std::sqrt(M) * std::exp(-dist(geodesic_flow(q, std::log(M) / 2)));
    std::int64_t end = std::min(N, n + b.length);
    covered += end - n + 1;
    out.blocks.push_back(b);
    n = end + 1;
  }
  out.covered_fraction = static_cast<double>(covered) / static_cast<double>(N);
  return out;
}

}  // namespace homodyn
