#pragma once

#include <boost/multiprecision/float128.hpp>

namespace homodyn {

using Quad = boost::multiprecision::float128;

// Working precision used internally for a given storage precision.
template <class Real>
struct Wide {
  using type = long double;
};

template <>
struct Wide<Quad> {
  using type = Quad;
};

template <class Real>
using wide_t = typename Wide<Real>::type;

template <class To, class From>
To to(const From& v) {
  return static_cast<To>(v);
}

}  // namespace homodyn
