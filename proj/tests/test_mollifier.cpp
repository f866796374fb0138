#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gen.hpp"
#include "homodyn/mollifier.hpp"

using namespace homodyn;

namespace {

// Closed form of the 1-d factor: a difference of kernel CDFs.
double factor_oracle(const MollifierSpec& s, double u) {
  return base_kernel_cdf(u / s.delta) - base_kernel_cdf((u - s.gamma) / s.delta);
}

}  // namespace

TEST_CASE("base kernel has unit mass") {
  double mass = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(base_kernel, -1.0, 1.0, 0, 1e-15);
  CHECK(std::abs(mass - 1.0) <= 1e-10);
  CHECK(base_kernel_cdf(1.0) == 1.0);
  CHECK(base_kernel_cdf(0.0) == doctest::Approx(0.5));
  CHECK(base_kernel(1.0) == 0.0);
}

TEST_CASE("eval_mollifier") {
  auto s1 = make_mollifier(0.1, 1, 1.0);
  double mid[] = {0.5};
  CHECK(eval_mollifier(s1, mid) == doctest::Approx(1.0).epsilon(1e-12));
  double out[] = {1.2};
  CHECK(eval_mollifier(s1, out) == 0.0);
  double neg[] = {-0.11};
  CHECK(eval_mollifier(s1, neg) == 0.0);

  auto s2 = make_mollifier(0.1, 2, 1.0);
  double u[] = {0.05, 0.97};
  double a[] = {0.05}, b[] = {0.97};
  CHECK(eval_mollifier(s2, u) == doctest::Approx(eval_mollifier(s1, a) * eval_mollifier(s1, b)).epsilon(1e-14));
  double wrong[] = {0.5};
  CHECK_THROWS_AS(eval_mollifier(s2, wrong), InvalidArgument);
  CHECK_THROWS_AS(make_mollifier(0.1, 4, 1.0), InvalidArgument);
  CHECK_THROWS_AS(make_mollifier(0.0, 1, 1.0), InvalidArgument);
}

TEST_CASE("property: quadrature factor matches the closed form and stays in [0, 1]") {
  homodyn::testing::Gen gen(91);
  for (int k = 0; k < 5000; ++k) {
    auto s = make_mollifier(gen.uniform(0.01, 0.3), 1, gen.uniform(0.1, 2));
    double u = gen.uniform(-0.5, s.gamma + 0.5);
    double v = mollifier_factor(s, u);
    REQUIRE(v >= 0);
    REQUIRE(v <= 1);
    REQUIRE(std::abs(v - factor_oracle(s, u)) <= 1e-12);
  }
}

TEST_CASE("verify_mollifier") {
  auto one = verify_mollifier(make_mollifier(0.1, 1, 1.0));
  CHECK(one.integral == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(one.integral_ok);
  CHECK(one.l1_to_box <= 0.2);
  auto two = verify_mollifier(make_mollifier(0.05, 2, 0.5));
  CHECK(two.integral == doctest::Approx(0.25).epsilon(1e-6));

  std::vector<double> l1;
  for (double d : {0.1, 0.05, 0.025}) l1.push_back(verify_mollifier(make_mollifier(d, 1, 1.0)).l1_to_box);
  for (std::size_t i = 1; i < l1.size(); ++i) CHECK(l1[i - 1] / l1[i] == doctest::Approx(2.0).epsilon(0.1));

  // for n = 1 the distance has a closed form: 2 delta * int_0^1 (1 - F(x)) dx ... checked by direct quadrature
  auto s = make_mollifier(0.1, 1, 1.0);
  auto gap = [&](double u) { return std::abs(factor_oracle(s, u) - (u >= 0 && u <= 1 ? 1.0 : 0.0)); };
  double direct = 0;
  for (auto [lo, hi] : {std::pair{-0.1, 0.0}, {0.0, 0.1}, {0.9, 1.0}, {1.0, 1.1}})
    direct += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(gap, lo, hi, 0, 1e-14);
  CHECK(one.l1_to_box == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("property: the mollifier properties hold on the parameter grid") {
  for (int n : {1, 2, 3})
    for (double gamma : {0.5, 1.0})
      for (double delta : {0.1, 0.05}) {
        auto c = verify_mollifier(make_mollifier(delta, n, gamma));
        CAPTURE(n);
        CAPTURE(gamma);
        CAPTURE(delta);
        CHECK(c.integral_ok);
        CHECK(c.l1_ok);
        CHECK(std::abs(c.integral - std::pow(gamma, n)) <= 1e-6 * std::pow(gamma, n));
      }
}

TEST_CASE("injectivity_radius_estimate") {
  auto id = reduce(GroupElement::identity());
  CHECK(injectivity_radius_estimate(id) == doctest::Approx(0.5));
  for (double t : {1.0, 4.0, 9.0})
    CHECK(injectivity_radius_estimate(geodesic_flow(id, t)) == doctest::Approx(0.5 * std::exp(-t / 2)));

  homodyn::testing::Gen gen(92);
  for (int k = 0; k < 1000; ++k) {
    auto p = reduce(gen.element(1e-3, 1e3, 3));
    double a = injectivity_radius_estimate(p), b = injectivity_radius_estimate(horocycle_flow(p, 1.0));
    REQUIRE(a > 0);
    REQUIRE(std::max(a / b, b / a) <= 4.0);
  }
}

TEST_CASE("box averages") {
  auto golden = reduce(slope_base(std::numbers::phi));
  CHECK(std::abs(box_average(golden, 100, constant_function(1.0)) - 1.0) < 1e-12);
  auto sweep = box_sweep(golden, {1e2, 1e3, 1e4}, height_band(2.0));
  CHECK(sweep.a >= 0.05);
  CHECK(sweep.eta == doctest::Approx(injectivity_radius_estimate(golden)));
  CHECK(sweep.report.rows().size() == 3);

  // weighted by h at n = 1: close to the plain average times int h = gamma
  auto h = make_mollifier(0.05, 1, 1.0);
  auto f = height_band(2.0);
  double weighted = weighted_box_average(golden, 1e4, f, h);
  double plain = box_average(golden, 1e4, f);
  // the weight differs from the indicator on a set of relative size 2 delta
  CHECK(std::abs(weighted - plain) <= 2 * h.delta * f.sup_norm() + 1e-3);
  CHECK_THROWS_AS(box_average(golden, 5, f), InvalidArgument);
  CHECK_THROWS_AS(weighted_box_average(golden, 1e3, f, make_mollifier(0.1, 2, 1.0)), InvalidArgument);
}
