#include "homodyn/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "homodyn/kernels.hpp"
#include "homodyn/report.hpp"

namespace homodyn {

namespace {

using Int128 = __int128;

bool push_convergent(ContinuedFraction& cf, std::int64_t a) {
  const auto& cv = cf.convergents;
  std::size_t n = cv.size();
  Int128 p1 = cv[n - 1].p, q1 = cv[n - 1].q;
  Int128 p0 = n >= 2 ? cv[n - 2].p : 1;
  Int128 q0 = n >= 2 ? cv[n - 2].q : 0;
  Int128 p = Int128(a) * p1 + p0;
  Int128 q = Int128(a) * q1 + q0;
  if (q > kMaxDenominator || p > kMaxDenominator || p < -kMaxDenominator) {
    cf.overflow_stop = true;
    return false;
  }
  cf.quotients.push_back(a);
  cf.convergents.push_back({static_cast<std::int64_t>(p), static_cast<std::int64_t>(q)});
  return true;
}

ContinuedFraction expand(Quad x, int depth, Quad noise) {
  require(depth >= 1, "cf_expand: depth must be at least 1");
  require(boost::multiprecision::isfinite(x), "cf_expand: x must be finite");
  ContinuedFraction cf;
  cf.x = x;
  Quad a0 = floor(x);
  require(abs(a0) < Quad(kMaxDenominator), "cf_expand: |x| too large");
  cf.a0 = static_cast<std::int64_t>(a0);
  cf.convergents.push_back({cf.a0, 1});
  Quad r = x - a0;
  if (r < noise) {
    cf.rational = true;
    return cf;
  }
  for (int k = 1; k <= depth; ++k) {
    r = 1 / r;
    Quad a = floor(r);
    if (a >= Quad(kMaxDenominator)) {
      cf.overflow_stop = true;
      break;
    }
    r -= a;
    if (!push_convergent(cf, static_cast<std::int64_t>(a))) break;
    const auto& c = cf.convergents.back();
    if (abs(x - Quad(c.p) / Quad(c.q)) < noise || r == 0) {
      cf.rational = true;
      break;
    }
  }
  return cf;
}

}  // namespace

ContinuedFraction cf_expand(double x, int depth) { return expand(Quad(x), depth, Quad(1e-15)); }

ContinuedFraction cf_expand(Quad x, int depth) { return expand(x, depth, Quad(1e-30)); }

Quad golden_ratio_quad() { return (1 + sqrt(Quad(5))) / 2; }

ContinuedFraction cf_from_quotients(std::int64_t a0, const std::vector<std::int64_t>& quotients) {
  ContinuedFraction cf;
  cf.a0 = a0;
  cf.convergents.push_back({a0, 1});
  for (std::int64_t a : quotients) {
    require(a >= 1, "cf_from_quotients: quotients must be positive");
    if (!push_convergent(cf, a)) break;
  }
  // value of [a0; a1, ..., aN, 1, 1, ...]: the golden tail keeps x irrational
  Quad tail = golden_ratio_quad();
  for (auto it = cf.quotients.rbegin(); it != cf.quotients.rend(); ++it) tail = Quad(*it) + 1 / tail;
  cf.x = Quad(a0) + 1 / tail;
  return cf;
}

ContinuedFraction planted_number(double zeta, int depth) {
  require(zeta >= 1.0, "planted_number: zeta must be at least 1");
  require(depth >= 2, "planted_number: depth must be at least 2");
  std::vector<std::int64_t> a{2};
  Int128 q_prev = 1, q = 2;
  while (static_cast<int>(a.size()) < depth) {
    std::int64_t next = 1;
    long double want = std::round(std::pow(static_cast<long double>(q), static_cast<long double>(zeta - 1.0)));
    if (want >= 2.0L && want < 1e18L) {
      Int128 q_new = Int128(static_cast<std::int64_t>(want)) * q + q_prev;
      if (q_new <= kMaxDenominator) next = static_cast<std::int64_t>(want);
    }
    Int128 q_new = Int128(next) * q + q_prev;
    if (q_new > kMaxDenominator) break;
    a.push_back(next);
    q_prev = q;
    q = q_new;
  }
  return cf_from_quotients(0, a);
}

TypeEstimate type_estimate(const ContinuedFraction& cf, std::int64_t min_denominator) {
  require(cf.convergents.size() >= 3, "type_estimate: need at least three convergents");
  TypeEstimate est;
  const double log_sqrt5 = 0.5 * std::log(5.0);
  std::vector<int> usable;
  for (std::size_t n = 0; n < cf.convergents.size(); ++n) {
    const auto& c = cf.convergents[n];
    Quad err = abs(Quad(c.q) * cf.x - Quad(c.p));
    double lq = std::log(static_cast<double>(c.q));
    double neg_log_err = err > 0 ? -static_cast<double>(log(err)) : std::numeric_limits<double>::infinity();
    if (c.q <= 1 || !std::isfinite(neg_log_err)) {
      est.raw.push_back(std::numeric_limits<double>::quiet_NaN());
      est.normalized.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    est.raw.push_back(neg_log_err / lq);
    est.normalized.push_back((neg_log_err - log_sqrt5) / lq);
    usable.push_back(static_cast<int>(n));
  }
  require(!usable.empty(), "type_estimate: no convergent with q_n > 1");
  std::vector<int> pick;
  for (int n : usable)
    if (cf.convergents[static_cast<std::size_t>(n)].q >= min_denominator) pick.push_back(n);
  if (pick.size() < 3) {
    pick.assign(usable.end() - std::min<std::ptrdiff_t>(3, static_cast<std::ptrdiff_t>(usable.size())), usable.end());
  }
  est.argmax = pick.front();
  for (int n : pick)
    if (est.normalized[static_cast<std::size_t>(n)] > est.normalized[static_cast<std::size_t>(est.argmax)]) est.argmax = n;
  est.zeta_hat = est.normalized[static_cast<std::size_t>(est.argmax)];
  return est;
}

TypeWitness point_type_check(const SurfacePoint& p, double kappa, int search_bound, double probe_mu,
                             double probe_nu) {
  require(kappa >= 1.0, "point_type_check: kappa must be at least 1");
  require(search_bound >= 10, "point_type_check: search_bound must be at least 10");
  TypeWitness w;
  w.probe_mu = probe_mu;
  w.probe_nu = probe_nu;

  // largest mu for which some positive nu exists, capped at 1
  auto zero = kernels::parallel::zero_product_scan(p.rep, search_bound);
  w.mu = std::min(1.0, zero.min_abs_b);
  w.mu_vector = zero.vector;

  auto scan = kernels::parallel::primitive_scan(p.rep, kappa, search_bound, w.mu, probe_mu, probe_nu);
  w.nu = w.mu > 0 ? scan.min_product : 0.0;
  w.nu_vector = scan.vector;
  w.nu_source = scan.source;
  w.scanned = scan.scanned;
  w.violations = scan.violations;
  return w;
}

ExperimentReport type_witness_report(const TypeWitness& w, double kappa, int search_bound) {
  ExperimentReport r("type_witness", {"quantity", "value", "vector_a", "vector_b"});
  r.set_param("kappa", kappa);
  r.set_param("search_bound", search_bound);
  r.set_param("probe_mu", w.probe_mu);
  r.set_param("probe_nu", w.probe_nu);
  r.add_row({std::string("mu"), w.mu, w.mu_vector[0], w.mu_vector[1]});
  r.add_row({std::string("nu"), w.nu, w.nu_vector[0], w.nu_vector[1]});
  r.add_row({std::string("scanned"), static_cast<double>(w.scanned), 0.0, 0.0});
  r.add_row({std::string("violations"), static_cast<double>(w.violations), 0.0, 0.0});
  r.add_note("bounded search over primitive (m,n); a witness report, not a proof of the Diophantine condition");
  return r;
}

namespace {

double ls_slope(const std::vector<double>& xs, const std::vector<double>& ys, double* intercept) {
  double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  double m = sxx > 0 ? sxy / sxx : 0.0;
  if (intercept) *intercept = my - m * mx;
  return m;
}

template <class Real>
ExcursionFit fit_excursions(const BasicSurfacePoint<Real>& p, double t_max, int steps) {
  require(t_max >= 10.0, "excursion_type_estimate: t_max must be at least 10");
  auto prof = excursion_profile(p, Real(t_max), steps);
  ExcursionFit fit;
  std::vector<double> ts, ds;
  for (const auto& s : prof) {
    fit.profile.push_back({static_cast<double>(s.t), static_cast<double>(s.dist), static_cast<double>(s.cusp_dist)});
    ts.push_back(static_cast<double>(s.t));
    ds.push_back(static_cast<double>(s.dist));
  }
  if (ls_slope(ts, ds, nullptr) >= 1.0 - 1e-3)
    throw DivergentOrbitError("excursion_type_estimate: dist grows linearly (divergent geodesic)");

  double running = 0.0;
  for (std::size_t k = 1; k + 1 < fit.profile.size(); ++k) {
    double h = fit.profile[k][2];
    if (h > 0 && h > fit.profile[k - 1][2] && h >= fit.profile[k + 1][2]) {
      fit.peaks.push_back({fit.profile[k][0], h});
      if (h > running) {
        running = h;
        fit.records.push_back({fit.profile[k][0], h});
      }
    }
  }
  if (fit.records.size() >= 2) {
    std::vector<double> rt, rh;
    for (const auto& r : fit.records) {
      rt.push_back(r[0]);
      rh.push_back(r[1]);
    }
    fit.slope = ls_slope(rt, rh, &fit.intercept);
  } else if (fit.records.size() == 1) {
    fit.slope = fit.records[0][1] / fit.records[0][0];
  }
  fit.slope = std::clamp(fit.slope, 0.0, 1.0 - 1e-9);
  fit.kappa_hat = (1.0 + fit.slope) / (1.0 - fit.slope);
  return fit;
}

}  // namespace

ExcursionFit excursion_type_estimate(const QuadSurfacePoint& p, double t_max, int steps) {
  return fit_excursions(p, t_max, steps);
}

ExcursionFit excursion_type_estimate(const SurfacePoint& p, double t_max, int steps) {
  return fit_excursions(p, t_max, steps);
}

ExponentBundle exponent_bundle(double s, const std::vector<double>& kappas, double epsilon) {
  require(s > 0 && s <= 0.5, "exponent_bundle: s must lie in (0, 1/2]");
  require(!kappas.empty(), "exponent_bundle: need at least one kappa");
  for (double k : kappas) require(k >= 1.0, "exponent_bundle: kappa_j must be at least 1");
  require(epsilon >= 0 && epsilon < 2 * s, "exponent_bundle: epsilon must lie in [0, 2s)");
  ExponentBundle b;
  b.s = s;
  b.epsilon = epsilon;
  b.kappas = kappas;
  b.kappa_mix = 2 * s - epsilon;
  b.beta = s * b.kappa_mix / (2 * (8 + b.kappa_mix));
  b.gamma0_remark = std::numeric_limits<double>::infinity();
  b.gamma0_proof = std::numeric_limits<double>::infinity();
  for (double k : kappas) {
    b.gamma0_remark = std::min(b.gamma0_remark, s * s / ((s + 4) * (k + 4)));
    b.gamma0_proof = std::min(b.gamma0_proof, 2 * b.beta / (k + 4));
  }
  return b;
}

}  // namespace homodyn
