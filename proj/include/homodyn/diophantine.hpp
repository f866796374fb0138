#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "homodyn/modular.hpp"
#include "homodyn/precision.hpp"

namespace homodyn {

class ExperimentReport;

struct Convergent {
  std::int64_t p;
  std::int64_t q;
};

// x = [a0; a1, a2, ...]; convergents[n] = p_n / q_n with (p_0, q_0) = (a0, 1).
struct ContinuedFraction {
  Quad x = 0;
  std::int64_t a0 = 0;
  std::vector<std::int64_t> quotients;  // a1, a2, ...
  std::vector<Convergent> convergents;
  bool rational = false;       // expansion hit the noise floor
  bool overflow_stop = false;  // stopped before q_n exceeded 2^62
};

inline constexpr std::int64_t kMaxDenominator = std::int64_t{1} << 62;

ContinuedFraction cf_expand(double x, int depth);
ContinuedFraction cf_expand(Quad x, int depth);
ContinuedFraction cf_from_quotients(std::int64_t a0, const std::vector<std::int64_t>& quotients);

// Quotients a_{n+1} = round(q_n^{zeta-1}) after a1 = 2, all others 1; a type-zeta number.
ContinuedFraction planted_number(double zeta, int depth);

Quad golden_ratio_quad();

struct TypeEstimate {
  double zeta_hat = 1.0;
  std::vector<double> raw;         // -log|q_n x - p_n| / log q_n (NaN where q_n = 1)
  std::vector<double> normalized;  // (-log|q_n x - p_n| - log sqrt5) / log q_n
  int argmax = -1;
};

// Max of the normalized series over convergents with q_n >= min_denominator
// (falls back to the last three convergents when fewer qualify).
TypeEstimate type_estimate(const ContinuedFraction& cf, std::int64_t min_denominator = 100);

struct TypeWitness {
  double mu = 0.0;
  double nu = 0.0;
  std::array<double, 2> mu_vector{0.0, 0.0};
  std::array<double, 2> nu_vector{0.0, 0.0};
  std::array<std::int64_t, 2> nu_source{0, 0};  // the (m, n) giving nu_vector
  std::int64_t scanned = 0;
  std::int64_t violations = 0;  // against the probe pair
  double probe_mu = 0.1;
  double probe_nu = 0.1;
};

inline constexpr int kDefaultSearchBound = 1000;

// Bounded search over primitive (m, n), |m|, |n| <= bound. A report, never a proof.
TypeWitness point_type_check(const SurfacePoint& p, double kappa, int search_bound = kDefaultSearchBound,
                             double probe_mu = 0.1, double probe_nu = 0.1);
ExperimentReport type_witness_report(const TypeWitness& w, double kappa, int search_bound);

struct ExcursionFit {
  double kappa_hat = 1.0;
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<std::array<double, 2>> peaks;    // (t, dist^{(1)}) local maxima
  std::vector<std::array<double, 2>> records;  // peaks that set a new running max
  std::vector<std::array<double, 3>> profile;  // (t, dist, dist^{(1)})
};

ExcursionFit excursion_type_estimate(const QuadSurfacePoint& p, double t_max, int steps = 4001);
ExcursionFit excursion_type_estimate(const SurfacePoint& p, double t_max, int steps = 4001);

struct ExponentBundle {
  double s = 0.5;
  double epsilon = 1e-3;
  double kappa_mix = 1.0;
  double beta = 0.0;
  std::vector<double> kappas;
  double gamma0_remark = 0.0;
  double gamma0_proof = 0.0;
};

ExponentBundle exponent_bundle(double s, const std::vector<double>& kappas, double epsilon = 1e-3);

}  // namespace homodyn
