#include "homodyn/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace homodyn {

namespace {

using boost::multiprecision::cpp_int;

long double arg(const Vec2& v) {
  return std::atan2(static_cast<long double>(v[1]), static_cast<long double>(v[0]));
}

long double norm2(const Vec2& v) {
  return static_cast<long double>(v[0]) * v[0] + static_cast<long double>(v[1]) * v[1];
}

// a1/b1 < a2/b2 for b > 0
bool slope_less(const Vec2& x, const Vec2& y) {
  return static_cast<__int128>(x[0]) * y[1] < static_cast<__int128>(y[0]) * x[1];
}

cpp_int ipow(std::int64_t b, int e) {
  cpp_int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// C = m * 2^k exactly, m integer
std::pair<cpp_int, int> dyadic(double C) {
  int k = 0;
  double frac = std::frexp(C, &k);
  auto m = static_cast<std::int64_t>(std::ldexp(frac, 53));
  return {cpp_int(m), k - 53};
}

bool exact_gap(const Vec2& x, const Vec2& y, int e, double C) {
  // 18 D (b1 b2)^{e-1} > C (b1^e + b2^e), D = a2 b1 - a1 b2
  cpp_int D = cpp_int(y[0]) * x[1] - cpp_int(x[0]) * y[1];
  cpp_int lhs = 18 * D * ipow(x[1], e - 1) * ipow(y[1], e - 1);
  cpp_int rhs = ipow(x[1], e) + ipow(y[1], e);
  auto [m, k] = dyadic(C);
  rhs *= m;
  if (k >= 0) {
    rhs <<= k;
  } else {
    lhs <<= -k;
  }
  return lhs > rhs;
}

}  // namespace

PrimitiveVectorSet enumerate_orbit(double R) {
  require(R >= 1.0, "enumerate_orbit: R must be at least 1");
  if (R > kMaxEnumerationRadius) throw CapacityError("enumerate_orbit: R exceeds the enumeration guard 1e5");
  // about (3/pi) R^2 vectors of 16 bytes each
  if (3.0 / std::numbers::pi * R * R * sizeof(Vec2) > kEnumerationByteBudget)
    throw CapacityError("enumerate_orbit: enumeration would exceed the memory budget");
  return {R, kernels::parallel::primitive_vectors(R)};
}

std::int64_t sector_count(const PrimitiveVectorSet& set, const SectorQuery& q) {
  require(q.l > 0, "sector_count: l must be positive");
  require(q.theta1 >= 0 && q.theta1 <= q.theta2, "sector_count: need 0 <= theta1 <= theta2");
  if (2 * q.l > set.radius) throw SectorError("sector_count: annulus exceeds the enumeration radius");
  if (q.theta2 > std::numbers::pi) throw SectorError("sector_count: sector leaves the canonical half-plane");
  if (q.theta1 == q.theta2) return 0;
  const long double lo = static_cast<long double>(q.l) * q.l, hi = 4 * lo;
  const auto n = static_cast<std::int64_t>(set.vectors.size());
  std::int64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& v = set.vectors[static_cast<std::size_t>(i)];
    long double r2 = norm2(v);
    if (r2 < lo || r2 > hi) continue;
    long double t = arg(v);
    if (t > q.theta1 && t < q.theta2) ++count;
  }
  return count;
}

GapConstants gap_constants(const PrimitiveVectorSet& set) {
  require(!set.vectors.empty(), "gap_constants: empty set");
  GapConstants g{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  for (const auto& v : set.vectors)
    if (v[1] != 0) g.second_coordinate = std::min(g.second_coordinate, static_cast<double>(std::abs(v[1])));

  auto det = [](const Vec2& x, const Vec2& y) {
    return std::abs(static_cast<double>(static_cast<__int128>(x[0]) * y[1] - static_cast<__int128>(x[1]) * y[0]));
  };
  const auto& v = set.vectors;
  if (v.size() <= 4096) {
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        double d = det(v[i], v[j]);
        if (d > 0) g.cross_determinant = std::min(g.cross_determinant, d);
      }
  } else {
    // the minimum is attained by angular neighbours
    std::vector<Vec2> s(v);
    std::sort(s.begin(), s.end(), [](const Vec2& x, const Vec2& y) { return arg(x) < arg(y); });
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      double d = det(s[i], s[i + 1]);
      if (d > 0) g.cross_determinant = std::min(g.cross_determinant, d);
    }
  }
  return g;
}

std::array<std::int64_t, 4> orbit_lift(const Vec2& v) {
  // extended Euclid: alpha d - beta b = 1
  std::int64_t old_r = v[0], r = v[1], old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  require(old_r == 1 || old_r == -1, "orbit_lift: vector is not primitive");
  // old_s alpha + old_t beta = old_r
  std::int64_t d = old_s * old_r, b = -old_t * old_r;
  return {v[0], b, v[1], d};
}

QuadInterval slope_interval(std::int64_t alpha, std::int64_t beta, double exponent, double C) {
  Quad c = Quad(alpha) / Quad(beta);
  Quad rad = Quad(C) / 18 / pow(Quad(beta), Quad(exponent));
  return {c - rad, c + rad};
}

bool intervals_disjoint(std::vector<Vec2> slopes, double exponent, double C, bool* exact) {
  std::sort(slopes.begin(), slopes.end(), slope_less);
  std::int64_t bmax = 0;
  for (const auto& s : slopes) bmax = std::max(bmax, s[1]);
  const bool integral = exponent == std::floor(exponent) && exponent >= 1 && bmax <= 10000;
  if (exact) *exact = integral;
  // adjacent pairs in slope order suffice
  for (std::size_t i = 0; i + 1 < slopes.size(); ++i) {
    const auto& x = slopes[i];
    const auto& y = slopes[i + 1];
    if (!slope_less(x, y)) return false;
    if (integral) {
      if (!exact_gap(x, y, static_cast<int>(exponent), C)) return false;
    } else {
      auto ix = slope_interval(x[0], x[1], exponent, C);
      auto iy = slope_interval(y[0], y[1], exponent, C);
      if (!(ix.hi < iy.lo)) return false;
    }
  }
  return true;
}

Packing pack_subintervals(std::int64_t alpha, std::int64_t beta, double kappa, double l, double C,
                          const PrimitiveVectorSet& set) {
  require(beta > 0 && alpha > 0 && alpha < beta, "pack_subintervals: need 0 < alpha/beta < 1");
  require(kappa >= 1 && l > 0 && C > 0, "pack_subintervals: need kappa >= 1, l > 0, C > 0");
  require(2 * l <= set.radius, "pack_subintervals: 2l exceeds the enumeration radius");
  Packing out;
  const double e = kappa + 1;
  out.parent = slope_interval(alpha, beta, e, C);
  require(out.parent.lo > 0 && out.parent.hi < 1, "pack_subintervals: parent interval leaves (0,1)");

  const long double lo = static_cast<long double>(l) * l, hi = 4 * lo;
  for (const auto& v : set.vectors) {
    if (v[0] <= 0 || v[0] >= v[1]) continue;  // theta in (pi/4, pi/2)
    long double r2 = norm2(v);
    if (r2 < lo || r2 > hi) continue;
    Quad c = Quad(v[0]) / Quad(v[1]);
    if (c < out.parent.lo || c > out.parent.hi) continue;
    out.children.push_back(v);
  }
  std::sort(out.children.begin(), out.children.end(), slope_less);
  for (const auto& v : out.children) out.intervals.push_back(slope_interval(v[0], v[1], e, C));
  out.disjoint = intervals_disjoint(out.children, e, C, &out.exact);
  out.count = static_cast<std::int64_t>(out.children.size());
  out.ratio = static_cast<double>(out.count) / (l * l / std::pow(static_cast<double>(beta), e));
  return out;
}

std::optional<double> smallest_productive_l(std::int64_t alpha, std::int64_t beta, double kappa, double C,
                                            double l_max) {
  require(beta > 0 && alpha > 0 && alpha < beta, "smallest_productive_l: need 0 < alpha/beta < 1");
  require(l_max <= kMaxEnumerationRadius / 2, "smallest_productive_l: l_max exceeds the enumeration guard");
  const QuadInterval parent = slope_interval(alpha, beta, kappa + 1, C);
  for (double l = 1.0; l <= l_max; l *= 1.02) {
    auto kids = kernels::serial::children_local(std::span(&parent, 1), l, kappa + 1, C, false);
    if (!kids[0].empty()) return l;
  }
  return std::nullopt;
}

}  // namespace homodyn
