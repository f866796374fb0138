#include "homodyn/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <boost/math/quadrature/gauss.hpp>
#include <omp.h>

namespace homodyn {

void set_thread_count(int threads) {
  require(threads >= 1, "thread count must be positive");
  omp_set_num_threads(threads);
}

int thread_count() { return omp_get_max_threads(); }

namespace kernels {

Entries<long double> curve_matrix(long double x, long double gamma) {
  long double q = std::pow(x, 0.25L);
  return {q, std::pow(x, 0.75L + gamma), 0.0L, 1.0L / q};
}

namespace {

SurfacePoint point_at_time(const GroupElement& rep, long double t) {
  return reduce_right(rep, unipotent_entries<long double>(t));
}

SurfacePoint curve_point(const GroupElement& rep, double gamma, double x) {
  return reduce_right(rep, curve_matrix(x, gamma));
}

bool curve_hit(const GroupElement& rep, double gamma, double kappa, double eps, std::int64_t n) {
  auto nl = static_cast<long double>(n);
  auto c = curve_matrix(nl, gamma);
  auto g = detail::multiply(detail::widen<long double>(rep), c);
  auto m = BasicGroupElement<long double>::from_raw(g.a, g.b, g.c, g.d);
  long double theta = eps * std::pow(nl, -0.25L + 1.0L / (kappa + 4.0L));
  return cusp_norm(m) <= theta;
}

struct Pair {
  long double a, b;
};

Pair cusp_vector(const GroupElement& g, std::int64_t m, std::int64_t n) {
  auto ml = static_cast<long double>(m), nl = static_cast<long double>(n);
  return {static_cast<long double>(g.d) * ml - static_cast<long double>(g.b) * nl,
          -static_cast<long double>(g.c) * ml + static_cast<long double>(g.a) * nl};
}

// Canonical primitive (m, n) in row n: n > 0 with gcd(|m|, n) = 1, or (1, 0).
template <class Visit>
void for_row(std::int64_t n, int bound, Visit&& visit) {
  if (n == 0) {
    visit(std::int64_t{1});
    return;
  }
  for (std::int64_t m = -bound; m <= bound; ++m)
    if (std::gcd(m < 0 ? -m : m, n) == 1) visit(m);
}

ZeroScan zero_row(const GroupElement& g, std::int64_t n, int bound) {
  ZeroScan out;
  for_row(n, bound, [&](std::int64_t m) {
    Pair v = cusp_vector(g, m, n);
    if (v.a != 0 && v.b != 0) return;
    double ab = static_cast<double>(std::abs(v.b));
    if (ab < out.min_abs_b) {
      out.min_abs_b = ab;
      out.vector = {static_cast<double>(v.a), static_cast<double>(v.b)};
    }
  });
  return out;
}

void merge(ZeroScan& into, const ZeroScan& row) {
  if (row.min_abs_b < into.min_abs_b) into = row;
}

PrimitiveScan scan_row(const GroupElement& g, double kappa, std::int64_t n, int bound, double mu, double probe_mu,
                       double probe_nu) {
  PrimitiveScan out;
  for_row(n, bound, [&](std::int64_t m) {
    Pair v = cusp_vector(g, m, n);
    double a = static_cast<double>(std::abs(v.a));
    double b = static_cast<double>(std::abs(v.b));
    double prod = std::pow(a, kappa) * b;
    ++out.scanned;
    if (b < probe_mu && prod < probe_nu) ++out.violations;
    if (b < mu && prod < out.min_product) {
      out.min_product = prod;
      out.vector = {static_cast<double>(v.a), static_cast<double>(v.b)};
      out.source = {m, n};
    }
  });
  return out;
}

void merge(PrimitiveScan& into, const PrimitiveScan& row) {
  into.scanned += row.scanned;
  into.violations += row.violations;
  if (row.min_product < into.min_product) {
    into.min_product = row.min_product;
    into.vector = row.vector;
    into.source = row.source;
  }
}

std::vector<Vec2> stripe(std::int64_t beta, double radius) {
  std::vector<Vec2> out;
  const long double r2 = static_cast<long double>(radius) * radius;
  if (beta == 0) {
    if (radius >= 1.0) out.push_back({1, 0});
    return out;
  }
  long double rest = r2 - static_cast<long double>(beta) * beta;
  if (rest < 0) return out;
  auto amax = static_cast<std::int64_t>(std::floor(std::sqrt(rest)));
  while (static_cast<long double>(amax + 1) * (amax + 1) <= rest) ++amax;
  while (amax > 0 && static_cast<long double>(amax) * amax > rest) --amax;
  for (std::int64_t a = -amax; a <= amax; ++a)
    if (std::gcd(a < 0 ? -a : a, beta) == 1) out.push_back({a, beta});
  return out;
}

double fejer_one(double delta, double period, int k) {
  // a_k = (2/K) int_0^delta delta^{-2} (delta - x) cos(2 pi k x / K) dx
  const double w = 2 * std::numbers::pi * k / period;
  auto f = [&](double x) { return (delta - x) / (delta * delta) * std::cos(w * x); };
  int panels = 1 + static_cast<int>(std::ceil(2.0 * k * delta / period));
  double h = delta / panels, sum = 0.0;
  for (int i = 0; i < panels; ++i)
    sum += boost::math::quadrature::gauss<double, 8>::integrate(f, i * h, (i + 1) * h);
  return 2.0 * sum / period;
}

std::vector<Vec2> children_of(const QuadInterval& parent, double l, double exponent, double C, bool full) {
  std::vector<Vec2> out;
  const Quad factor = Quad(C) / 18;
  const long double l2 = static_cast<long double>(l) * l;
  auto b_lo = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::ceil(l / std::numbers::sqrt2)));
  auto b_hi = static_cast<std::int64_t>(std::floor(2.0 * l));
  for (std::int64_t b = b_lo; b <= b_hi; ++b) {
    auto a_lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(ceil(parent.lo * b)));
    auto a_hi = std::min<std::int64_t>(b - 1, static_cast<std::int64_t>(floor(parent.hi * b)));
    if (a_lo > a_hi) continue;
    const Quad rad = factor / pow(Quad(b), Quad(exponent));
    for (std::int64_t a = a_lo; a <= a_hi; ++a) {
      long double r2 = static_cast<long double>(a) * a + static_cast<long double>(b) * b;
      if (r2 < l2 || r2 > 4 * l2) continue;
      if (std::gcd(a, b) != 1) continue;
      Quad c = Quad(a) / Quad(b);
      bool inside = full ? (c - rad >= parent.lo && c + rad <= parent.hi) : (c >= parent.lo && c <= parent.hi);
      if (inside) out.push_back({a, b});
    }
  }
  return out;
}

}  // namespace

namespace serial {

std::vector<SurfacePoint> sample_times(const GroupElement& rep, std::span<const long double> times) {
  std::vector<SurfacePoint> out;
  out.reserve(times.size());
  for (long double t : times) out.push_back(point_at_time(rep, t));
  return out;
}

std::vector<SurfacePoint> curve_points(const GroupElement& rep, double gamma, std::span<const double> xs) {
  std::vector<SurfacePoint> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(curve_point(rep, gamma, x));
  return out;
}

std::vector<double> evaluate(const TestFunction& f, std::span<const SurfacePoint> points) {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(f(p));
  return out;
}

std::vector<std::uint8_t> curve_hit_flags(const GroupElement& rep, double gamma, double kappa, double eps,
                                          std::int64_t n_max) {
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) out.push_back(curve_hit(rep, gamma, kappa, eps, n) ? 1 : 0);
  return out;
}

ZeroScan zero_product_scan(const GroupElement& g, int bound) {
  ZeroScan out;
  for (std::int64_t n = 0; n <= bound; ++n) merge(out, zero_row(g, n, bound));
  return out;
}

PrimitiveScan primitive_scan(const GroupElement& g, double kappa, int bound, double mu, double probe_mu,
                             double probe_nu) {
  PrimitiveScan out;
  for (std::int64_t n = 0; n <= bound; ++n) merge(out, scan_row(g, kappa, n, bound, mu, probe_mu, probe_nu));
  return out;
}

std::vector<Vec2> primitive_vectors(double radius) {
  std::vector<Vec2> out;
  auto bmax = static_cast<std::int64_t>(std::floor(radius));
  for (std::int64_t b = 0; b <= bmax; ++b) {
    auto s = stripe(b, radius);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

std::vector<double> fejer_coefficients(double delta, double period, int k_max) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) out.push_back(fejer_one(delta, period, k));
  return out;
}

std::vector<std::vector<Vec2>> children_local(std::span<const QuadInterval> parents, double l, double exponent,
                                              double C, bool full_containment) {
  std::vector<std::vector<Vec2>> out;
  out.reserve(parents.size());
  for (const auto& p : parents) out.push_back(children_of(p, l, exponent, C, full_containment));
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<SurfacePoint> sample_times(const GroupElement& rep, std::span<const long double> times) {
  std::vector<SurfacePoint> out(times.size());
  const auto n = static_cast<std::int64_t>(times.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = point_at_time(rep, times[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<SurfacePoint> curve_points(const GroupElement& rep, double gamma, std::span<const double> xs) {
  std::vector<SurfacePoint> out(xs.size());
  const auto n = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = curve_point(rep, gamma, xs[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<double> evaluate(const TestFunction& f, std::span<const SurfacePoint> points) {
  std::vector<double> out(points.size());
  const auto n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(points[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<std::uint8_t> curve_hit_flags(const GroupElement& rep, double gamma, double kappa, double eps,
                                          std::int64_t n_max) {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(n_max));
#pragma omp parallel for schedule(static)
  for (std::int64_t n = 1; n <= n_max; ++n)
    out[static_cast<std::size_t>(n - 1)] = curve_hit(rep, gamma, kappa, eps, n) ? 1 : 0;
  return out;
}

ZeroScan zero_product_scan(const GroupElement& g, int bound) {
  std::vector<ZeroScan> rows(static_cast<std::size_t>(bound) + 1);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t n = 0; n <= bound; ++n) rows[static_cast<std::size_t>(n)] = zero_row(g, n, bound);
  ZeroScan out;
  for (const auto& r : rows) merge(out, r);
  return out;
}

PrimitiveScan primitive_scan(const GroupElement& g, double kappa, int bound, double mu, double probe_mu,
                             double probe_nu) {
  std::vector<PrimitiveScan> rows(static_cast<std::size_t>(bound) + 1);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t n = 0; n <= bound; ++n)
    rows[static_cast<std::size_t>(n)] = scan_row(g, kappa, n, bound, mu, probe_mu, probe_nu);
  PrimitiveScan out;
  for (const auto& r : rows) merge(out, r);
  return out;
}

std::vector<Vec2> primitive_vectors(double radius) {
  auto bmax = static_cast<std::int64_t>(std::floor(radius));
  std::vector<std::vector<Vec2>> stripes(static_cast<std::size_t>(bmax) + 1);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t b = 0; b <= bmax; ++b) stripes[static_cast<std::size_t>(b)] = stripe(b, radius);
  std::size_t total = 0;
  for (const auto& s : stripes) total += s.size();
  std::vector<Vec2> out;
  out.reserve(total);
  for (const auto& s : stripes) out.insert(out.end(), s.begin(), s.end());
  return out;
}

std::vector<double> fejer_coefficients(double delta, double period, int k_max) {
  std::vector<double> out(static_cast<std::size_t>(k_max) + 1);
#pragma omp parallel for schedule(dynamic, 64)
  for (int k = 0; k <= k_max; ++k) out[static_cast<std::size_t>(k)] = fejer_one(delta, period, k);
  return out;
}

std::vector<std::vector<Vec2>> children_local(std::span<const QuadInterval> parents, double l, double exponent,
                                              double C, bool full_containment) {
  std::vector<std::vector<Vec2>> out(parents.size());
  const auto n = static_cast<std::int64_t>(parents.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = children_of(parents[static_cast<std::size_t>(i)], l, exponent, C, full_containment);
  return out;
}

}  // namespace parallel
}  // namespace kernels
}  // namespace homodyn
