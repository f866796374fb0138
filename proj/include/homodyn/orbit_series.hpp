#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homodyn/modular.hpp"

namespace homodyn {

struct OrbitSeries {
  SurfacePoint base;
  double gamma = 0.0;
  std::vector<double> times;  // n^{1+gamma}, or the curve parameter x
  std::vector<SurfacePoint> points;
  std::uint64_t seed = 0;
  std::string label;
};

}  // namespace homodyn
