#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "homodyn/hyperbolic.hpp"

namespace homodyn {

class ExperimentReport;

// Separation radius d_1 and the radius of the cusp neighbourhood C_1.
inline constexpr double kSeparationRadius = 0.5;
inline constexpr double kCuspNeighbourhood = 0.5;
inline constexpr int kMaxReductionSteps = 10000;

// A point of PSL(2,Z)\PSL(2,R).
template <class Real>
struct BasicSurfacePoint {
  BasicGroupElement<Real> rep;
  BasicGroupElement<Real> reduced_rep;
  BasicUpperHalfPoint<Real> z_reduced;
  BasicIwasawa<Real> iwasawa;
};

using SurfacePoint = BasicSurfacePoint<double>;
using QuadSurfacePoint = BasicSurfacePoint<Quad>;

struct CuspData {
  GroupElement sigma;
  double omega_width = 1.0;
  double d_j = kSeparationRadius;
};

inline CuspData modular_cusp() { return {}; }

template <class W>
struct Entries {
  W a, b, c, d;
};

namespace detail {

template <class W>
Entries<W> reduce_entries(Entries<W> m) {
  using std::isfinite;
  using std::round;
  for (int step = 0; step <= kMaxReductionSteps; ++step) {
    if (!isfinite(m.a) || !isfinite(m.b) || !isfinite(m.c) || !isfinite(m.d))
      throw NonConvergenceError("reduce: non-finite matrix entries");
    W den = m.c * m.c + m.d * m.d;
    if (!(den > 0) || !isfinite(W(1) / den)) throw NonConvergenceError("reduce: degenerate point (y out of range)");
    W n = round((m.a * m.c + m.b * m.d) / den);
    if (n != 0) {
      m.a -= n * m.c;
      m.b -= n * m.d;
      continue;
    }
    if (m.a * m.a + m.b * m.b < den) {
      m = {-m.c, -m.d, m.a, m.b};
      continue;
    }
    return m;
  }
  throw NonConvergenceError("reduce: more than 10^4 reduction steps");
}

template <class Real, class W>
BasicSurfacePoint<Real> make_point(const BasicGroupElement<Real>& rep, const Entries<W>& red) {
  BasicSurfacePoint<Real> p;
  p.rep = rep;
  p.reduced_rep = BasicGroupElement<Real>::from_raw(Real(red.a), Real(red.b), Real(red.c), Real(red.d));
  W den = red.c * red.c + red.d * red.d;
  p.z_reduced = BasicUpperHalfPoint<Real>(Real((red.a * red.c + red.b * red.d) / den), Real(W(1) / den));
  p.iwasawa = iwasawa_nak(p.reduced_rep);
  return p;
}

template <class W, class Real>
Entries<W> widen(const BasicGroupElement<Real>& g) {
  return {W(g.a), W(g.b), W(g.c), W(g.d)};
}

template <class W>
Entries<W> multiply(const Entries<W>& g, const Entries<W>& h) {
  return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

}  // namespace detail

template <class Real>
BasicSurfacePoint<Real> reduce(const BasicGroupElement<Real>& g) {
  using W = wide_t<Real>;
  return detail::make_point(g, detail::reduce_entries(detail::widen<W>(g)));
}

// reduce(g * h) with the product formed in working precision.
template <class Real>
BasicSurfacePoint<Real> reduce_right(const BasicGroupElement<Real>& g, const Entries<wide_t<Real>>& h) {
  using W = wide_t<Real>;
  Entries<W> prod = detail::multiply(detail::widen<W>(g), h);
  auto rep = BasicGroupElement<Real>::from_raw(Real(prod.a), Real(prod.b), Real(prod.c), Real(prod.d));
  return detail::make_point(rep, detail::reduce_entries(prod));
}

template <class W>
Entries<W> unipotent_entries(W t) {
  return {W(1), t, W(0), W(1)};
}

template <class W>
Entries<W> diagonal_flow_entries(W t) {
  using std::exp;
  return {exp(t / 2), W(0), W(0), exp(-t / 2)};
}

// gamma = reduced_rep * rep^{-1} in working precision; integral up to rounding.
template <class Real>
std::array<wide_t<Real>, 4> gamma_word(const BasicSurfacePoint<Real>& p) {
  using W = wide_t<Real>;
  auto r = detail::widen<W>(p.reduced_rep);
  auto g = detail::widen<W>(p.rep);
  Entries<W> ginv{g.d, -g.b, -g.c, g.a};
  auto m = detail::multiply(r, ginv);
  return {m.a, m.b, m.c, m.d};
}

template <class Real>
Real dist(const BasicSurfacePoint<Real>& p) {
  return hyperbolic_distance(BasicUpperHalfPoint<Real>(Real(0), Real(1)), p.z_reduced);
}

// Shortest vector of the lattice g^{-1} Z^2 by Lagrange-Gauss reduction.
template <class Real>
Real cusp_norm(const BasicGroupElement<Real>& g) {
  using W = wide_t<Real>;
  using std::round;
  using std::sqrt;
  W x1 = g.d, y1 = -W(g.c), x2 = -W(g.b), y2 = g.a;
  W n1 = x1 * x1 + y1 * y1;
  W n2 = x2 * x2 + y2 * y2;
  for (int it = 0; it < 4096; ++it) {
    if (n1 > n2) {
      std::swap(x1, x2);
      std::swap(y1, y2);
      std::swap(n1, n2);
    }
    W mu = round((x1 * x2 + y1 * y2) / n1);
    if (mu == 0) break;
    x2 -= mu * x1;
    y2 -= mu * y1;
    n2 = x2 * x2 + y2 * y2;
  }
  using std::min;
  return Real(sqrt(min(n1, n2)));
}

template <class Real>
Real cusp_norm(const BasicSurfacePoint<Real>& p) {
  return cusp_norm(p.reduced_rep);
}

template <class Real>
bool in_S_delta(const BasicSurfacePoint<Real>& p, double delta) {
  require(delta > 0, "in_S_delta: delta must be positive");
  return cusp_norm(p) <= Real(delta);
}

// dist gated by the cusp neighbourhood C_1 = {cusp_norm <= 0.5}.
template <class Real>
Real cusp_dist(const BasicSurfacePoint<Real>& p) {
  return cusp_norm(p) <= Real(kCuspNeighbourhood) ? dist(p) : Real(0);
}

template <class Real>
BasicSurfacePoint<Real> geodesic_flow(const BasicSurfacePoint<Real>& p, Real t) {
  return reduce_right(p.reduced_rep, diagonal_flow_entries<wide_t<Real>>(wide_t<Real>(t)));
}

template <class Real>
BasicSurfacePoint<Real> horocycle_flow(const BasicSurfacePoint<Real>& p, Real t) {
  return reduce_right(p.reduced_rep, unipotent_entries<wide_t<Real>>(wide_t<Real>(t)));
}

template <class Real>
Real r_factor(const BasicSurfacePoint<Real>& q, Real T) {
  using std::exp;
  using std::log;
  require(T > 1, "r_factor: T must exceed 1");
  return T * exp(-dist(geodesic_flow(q, Real(log(T)))));
}

template <class Real>
struct ExcursionSample {
  Real t;
  Real dist;       // dist(g_t p)
  Real cusp_dist;  // dist^{(1)}(g_t p)
};

template <class Real>
std::vector<ExcursionSample<Real>> excursion_profile(const BasicSurfacePoint<Real>& p, Real t_max, int steps) {
  require(t_max > 0, "excursion_profile: t_max must be positive");
  require(steps >= 2, "excursion_profile: need at least two steps");
  std::vector<ExcursionSample<Real>> out(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    Real t = t_max * Real(k) / Real(steps - 1);
    auto q = geodesic_flow(p, t);
    Real d = dist(q);
    Real norm = cusp_norm(q);
    out[static_cast<std::size_t>(k)] = {t, d, norm <= Real(kCuspNeighbourhood) ? d : Real(0)};
  }
  return out;
}

// Slope-addressed base point (x, -1; 1, 0); its cusp vectors are (n, n x - m).
template <class Real>
BasicGroupElement<Real> slope_base(Real x) {
  return BasicGroupElement<Real>(x, Real(-1), Real(1), Real(0));
}

// Samples e^{dist} d(p)^2 over truncated-Haar random points with d(p) <= 0.5.
ExperimentReport dist_vs_norm_check(int sample_count, std::uint64_t seed);

// Random point with x uniform on [-1/2,1/2], theta uniform on [0,pi) and y of
// density 1/y^2 on [sqrt(3)/2, y_max]; u1..u3 are uniforms on [0,1).
GroupElement truncated_haar_element(double u1, double u2, double u3, double y_max = 100.0);

}  // namespace homodyn
