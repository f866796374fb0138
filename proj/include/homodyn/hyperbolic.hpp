#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include <boost/math/constants/constants.hpp>

#include "homodyn/errors.hpp"
#include "homodyn/precision.hpp"

namespace homodyn {

// Element of PSL(2,R). Entries are kept with det 1 and a canonical sign:
// the first nonzero of (a, b, c, d) is positive.
template <class Real>
struct BasicGroupElement {
  Real a{1}, b{0}, c{0}, d{1};

  BasicGroupElement() = default;
  BasicGroupElement(Real a_, Real b_, Real c_, Real d_) : a(a_), b(b_), c(c_), d(d_) { normalize(); }

  static BasicGroupElement identity() { return {}; }

  // Keeps the entries as given (sign canonicalized only). Used for products whose
  // entries are too large for a det renormalization to be meaningful in Real.
  static BasicGroupElement from_raw(Real a_, Real b_, Real c_, Real d_) {
    BasicGroupElement g;
    g.a = a_;
    g.b = b_;
    g.c = c_;
    g.d = d_;
    g.canonicalize_sign();
    return g;
  }

  Real det() const { return a * d - b * c; }

  void normalize() {
    using std::abs;
    using std::sqrt;
    Real det_ = det();
    if (!(det_ > 0)) throw NumericalError("group element has non-positive determinant");
    if (abs(det_ - 1) > Real(1e-12)) {
      Real s = sqrt(det_);
      a /= s;
      b /= s;
      c /= s;
      d /= s;
    }
    canonicalize_sign();
  }

  void canonicalize_sign() {
    const Real* first = a != 0 ? &a : b != 0 ? &b : c != 0 ? &c : &d;
    if (*first < 0) {
      a = -a;
      b = -b;
      c = -c;
      d = -d;
    }
  }

  friend bool operator==(const BasicGroupElement&, const BasicGroupElement&) = default;
};

using GroupElement = BasicGroupElement<double>;
using QuadGroupElement = BasicGroupElement<Quad>;

template <class To, class From>
BasicGroupElement<To> convert(const BasicGroupElement<From>& g) {
  return BasicGroupElement<To>(static_cast<To>(g.a), static_cast<To>(g.b), static_cast<To>(g.c),
                               static_cast<To>(g.d));
}

template <class Real>
struct BasicUpperHalfPoint {
  Real x{0};
  Real y{1};

  BasicUpperHalfPoint() = default;
  BasicUpperHalfPoint(Real x_, Real y_) : x(x_), y(y_) {
    if (!(y > 0)) throw InvalidArgument("upper half-plane point needs y > 0");
  }
};

using UpperHalfPoint = BasicUpperHalfPoint<double>;

// g = n(s) a(alpha) k(theta) with a(alpha) = diag(alpha, 1/alpha).
template <class Real>
struct BasicIwasawa {
  Real n_shift{0};
  Real a_scale{1};
  Real k_angle{0};
};

using IwasawaNAK = BasicIwasawa<double>;

template <class Real>
BasicGroupElement<Real> compose(const BasicGroupElement<Real>& g, const BasicGroupElement<Real>& h) {
  return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

template <class Real>
BasicGroupElement<Real> operator*(const BasicGroupElement<Real>& g, const BasicGroupElement<Real>& h) {
  return compose(g, h);
}

template <class Real>
BasicGroupElement<Real> inverse(const BasicGroupElement<Real>& g) {
  return {g.d, -g.b, -g.c, g.a};
}

template <class Real = double>
BasicGroupElement<Real> unipotent(Real t) {
  return {Real(1), t, Real(0), Real(1)};
}

template <class Real = double>
BasicGroupElement<Real> diagonal_flow(Real t) {
  using std::exp;
  return {exp(t / 2), Real(0), Real(0), exp(-t / 2)};
}

template <class Real = double>
BasicGroupElement<Real> diagonal(Real alpha) {
  return {alpha, Real(0), Real(0), 1 / alpha};
}

template <class Real = double>
BasicGroupElement<Real> rotation(Real theta) {
  using std::cos;
  using std::sin;
  return {cos(theta), -sin(theta), sin(theta), cos(theta)};
}

template <class Real>
BasicUpperHalfPoint<Real> mobius_act(const BasicGroupElement<Real>& g, const BasicUpperHalfPoint<Real>& z) {
  Real re = g.c * z.x + g.d;
  Real im = g.c * z.y;
  Real den = re * re + im * im;
  Real num_re = g.a * z.x + g.b;
  Real num_im = g.a * z.y;
  return {(num_re * re + num_im * im) / den, z.y / den};
}

template <class Real>
std::array<Real, 2> canonical_vector(Real v0, Real v1) {
  if (v0 < 0 || (v0 == 0 && v1 < 0)) return {-v0, -v1};
  return {v0, v1};
}

template <class Real>
std::array<Real, 2> vector_act(const BasicGroupElement<Real>& g, const std::array<Real, 2>& v) {
  return canonical_vector<Real>(g.a * v[0] + g.b * v[1], g.c * v[0] + g.d * v[1]);
}

template <class Real>
BasicIwasawa<Real> iwasawa_nak(const BasicGroupElement<Real>& g) {
  using std::atan2;
  using std::sqrt;
  Real den = g.c * g.c + g.d * g.d;
  BasicIwasawa<Real> out;
  out.n_shift = (g.a * g.c + g.b * g.d) / den;
  out.a_scale = 1 / sqrt(den);
  Real theta = atan2(g.c, g.d);
  const Real pi = boost::math::constants::pi<Real>();
  if (theta < 0) theta += pi;
  if (theta >= pi) theta -= pi;
  out.k_angle = theta;
  return out;
}

template <class Real>
BasicGroupElement<Real> recompose(const BasicIwasawa<Real>& w) {
  return unipotent<Real>(w.n_shift) * diagonal<Real>(w.a_scale) * rotation<Real>(w.k_angle);
}

template <class Real>
Real hyperbolic_distance(const BasicUpperHalfPoint<Real>& z1, const BasicUpperHalfPoint<Real>& z2) {
  using std::asinh;
  using std::sqrt;
  Real dx = z1.x - z2.x;
  Real dy = z1.y - z2.y;
  Real chord = sqrt(dx * dx + dy * dy);
  return 2 * asinh(chord / (2 * sqrt(z1.y * z2.y)));
}

}  // namespace homodyn
