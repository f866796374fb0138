// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned below.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "homodyn/diophantine.hpp"
#include "homodyn/fractal.hpp"
#include "homodyn/good_functions.hpp"
#include "homodyn/kernels.hpp"
#include "homodyn/lattice.hpp"
#include "homodyn/mollifier.hpp"
#include "homodyn/report.hpp"
#include "homodyn/rng.hpp"
#include "homodyn/sparse_orbits.hpp"

using namespace homodyn;

namespace {

// 1 group and geometry
constexpr int kGroupCases = 10000;
constexpr double kGroupTol = 1e-8;
constexpr double kGroupSeconds = 10;
// 2 reduction
constexpr int kReductionCases = 100000;
constexpr double kReductionTol = 1e-8;
constexpr double kReductionSeconds = 30;
// 3 dist vs cusp norm
constexpr int kComparabilityDraws = 50000;
constexpr std::uint64_t kComparabilitySeed = 2024;
constexpr int kComparabilityMinKept = 10000;
constexpr double kComparabilityBound = 10;
constexpr double kComparabilityFrozen = 1.01588770214;
constexpr double kComparabilityBand = 0.2;
// 4 horocycle equidistribution
constexpr std::int64_t kHorocycleN = 1000000;
constexpr double kHorocycleTol = 0.02;
constexpr double kHorocycleSeconds = 120;
// 5 sparse orbit
constexpr double kSparseGamma = 0.01;
constexpr std::int64_t kSparseN = 1000000;
constexpr double kSparseEndTol = 0.05;
// 6, 7 decay sweeps
constexpr double kProgressionExponent = 0.05;
constexpr double kTwistFrequency = 0.37;
constexpr double kTwistSlope = -0.1;
// 8 Fejer
constexpr double kFejerDelta = 0.05;
constexpr int kFejerKMax = 10000;
constexpr double kFejerSumTol = 0.01;
// 9 hitting frequency
constexpr std::int64_t kHittingN = 100000;
constexpr double kHittingSpread = 3;
// 10 good functions
constexpr double kGoodStability = 0.2;
// 11 sectors
constexpr double kSectorTarget = 716200;
constexpr double kSectorTol = 0.03;
constexpr double kSectorRatioTol = 0.05;
// 12 dimension
constexpr double kThresholdOffset = 0.05;
constexpr double kTreeTarget = 0.5;
constexpr double kTreeTol = 0.15;
const std::vector<double> kTreeSchedule{1.5, 5e4};
// 13 mollifier
constexpr double kHalvingRatio = 2;
constexpr double kHalvingTol = 0.1;
// 14 box averages
constexpr double kBoxExponent = 0.05;
// 15 exponents
constexpr double kRouteTol = 1e-12;

const double kBandMean = 3 / (2 * std::numbers::pi);

int failures = 0;

void verdict(int id, bool ok, const std::string& title, const std::string& detail) {
  std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string num(double v) { return format_number(v); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SurfacePoint golden() { return reduce(slope_base(std::numbers::phi)); }

// Uniform draws for the property suites.
struct Draw {
  CounterRng rng;
  explicit Draw(std::uint64_t seed) : rng(seed, 0xacc) {}
  double uniform(double lo, double hi) { return rng.next_uniform(lo, hi); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  GroupElement element(double y_lo, double y_hi, double x_span) {
    double x = uniform(-x_span, x_span), y = log_uniform(y_lo, y_hi), t = uniform(0, std::numbers::pi);
    return unipotent(x) * diagonal(std::sqrt(y)) * rotation(t);
  }
  std::array<std::int64_t, 4> word(int length) {
    std::array<std::int64_t, 4> m{1, 0, 0, 1};
    for (int i = 0; i < length; ++i) {
      std::array<std::int64_t, 4> s{0, -1, 1, 0};
      if (rng.next_bits() % 2 == 0) s = {1, static_cast<std::int64_t>(rng.next_bits() % 7) - 3, 0, 1};
      m = {m[0] * s[0] + m[1] * s[2], m[0] * s[1] + m[1] * s[3], m[2] * s[0] + m[3] * s[2], m[2] * s[1] + m[3] * s[3]};
    }
    return m;
  }
};

double rel_gap(const GroupElement& g, const GroupElement& h) {
  double m = std::max({std::abs(g.a - h.a), std::abs(g.b - h.b), std::abs(g.c - h.c), std::abs(g.d - h.d)});
  return m / std::max({1.0, std::abs(h.a), std::abs(h.b), std::abs(h.c), std::abs(h.d)});
}

void group_suite() {
  auto t0 = std::chrono::steady_clock::now();
  Draw d(1);
  double assoc = 0, inv = 0, action = 0, iwasawa = 0, distance = 0;
  for (int k = 0; k < kGroupCases; ++k) {
    auto g = d.element(0.1, 10, 2), h = d.element(0.1, 10, 2), f = d.element(0.1, 10, 2);
    assoc = std::max(assoc, rel_gap((g * h) * f, g * (h * f)));
    inv = std::max(inv, rel_gap(g * inverse(g), GroupElement::identity()));
    UpperHalfPoint z(d.uniform(-5, 5), d.log_uniform(0.1, 10)), w(d.uniform(-5, 5), d.log_uniform(0.1, 10));
    auto l = mobius_act(g, mobius_act(h, z)), r = mobius_act(g * h, z);
    action = std::max(action, std::max(std::abs(l.x - r.x) / std::max(1.0, std::abs(r.x)), std::abs(l.y - r.y) / std::max(1.0, r.y)));
    iwasawa = std::max(iwasawa, rel_gap(recompose(iwasawa_nak(g)), g));
    double dz = hyperbolic_distance(z, w), dg = hyperbolic_distance(mobius_act(g, z), mobius_act(g, w));
    distance = std::max(distance, std::abs(dz - dg) / std::max(1.0, dz));
  }
  double secs = seconds_since(t0);
  double worst = std::max({assoc, inv, action, iwasawa, distance});
  verdict(1, worst <= kGroupTol && secs < kGroupSeconds, "group and geometry laws",
          "worst error " + num(worst) + " (assoc " + num(assoc) + ", inverse " + num(inv) + ", action " + num(action) +
              ", iwasawa " + num(iwasawa) + ", distance " + num(distance) + ") over " + std::to_string(kGroupCases) +
              " cases in " + num(secs) + " s");
}

bool near_boundary(const UpperHalfPoint& z) {
  return std::abs(std::abs(z.x) - 0.5) < 1e-6 || std::abs(z.x * z.x + z.y * z.y - 1) < 1e-6;
}

void reduction_suite() {
  auto t0 = std::chrono::steady_clock::now();
  Draw d(2);
  std::int64_t outside = 0, mismatched = 0;
  double worst = 0;
  for (int k = 0; k < kReductionCases; ++k) {
    auto g = d.element(1e-4, 1e4, 5);
    auto p = reduce(g);
    const auto& z = p.z_reduced;
    if (std::abs(z.x) > 0.5 + kReductionTol || z.x * z.x + z.y * z.y < 1 - kReductionTol) ++outside;
    auto w = d.word(1 + static_cast<int>(d.rng.next_bits() % 20));
    // integer gamma times double g is exact in Quad, so the oracle reduces the exact product
    const QuadGroupElement gamma{Quad(w[0]), Quad(w[1]), Quad(w[2]), Quad(w[3])};
    auto q = reduce(gamma * QuadGroupElement::from_raw(Quad(g.a), Quad(g.b), Quad(g.c), Quad(g.d)));
    const double qx = static_cast<double>(q.z_reduced.x), qy = static_cast<double>(q.z_reduced.y);
    double dx = std::abs(z.x - qx);
    // the two boundary arcs are identified by x -> -x
    if (near_boundary(z)) dx = std::min(dx, std::abs(z.x + qx));
    double err = std::max(dx, std::abs(z.y - qy) / z.y);
    worst = std::max(worst, err);
    if (err > kReductionTol) ++mismatched;
  }
  double secs = seconds_since(t0);
  verdict(2, outside == 0 && mismatched == 0 && secs < kReductionSeconds, "reduction and Gamma invariance",
          std::to_string(outside) + " outside the domain, " + std::to_string(mismatched) + " invariance misses, worst " +
              num(worst) + " over " + std::to_string(kReductionCases) + " elements in " + num(secs) + " s");
}

void comparability() {
  auto r = dist_vs_norm_check(kComparabilityDraws, kComparabilitySeed);
  double kept = r.number(1, "value"), ratio = r.number(5, "value");
  bool ok = kept >= kComparabilityMinKept && ratio <= kComparabilityBound &&
            std::abs(ratio - kComparabilityFrozen) <= kComparabilityBand * kComparabilityFrozen;
  verdict(3, ok, "dist versus cusp norm comparability",
          "max/min " + num(ratio) + " over " + num(kept) + " kept samples (bound 10, frozen " + num(kComparabilityFrozen) +
              " +- 20%)");
}

double mean(const std::vector<double>& v, std::size_t n) {
  long double s = 0;
  for (std::size_t i = 0; i < n; ++i) s += v[i];
  return static_cast<double>(s / static_cast<long double>(n));
}

void horocycle() {
  auto t0 = std::chrono::steady_clock::now();
  auto s = sample_sparse(golden(), 0.0, kHorocycleN);
  double band = mean(kernels::parallel::evaluate(height_band(2.0), s.points), s.points.size());
  double angle = mean(kernels::parallel::evaluate(angle_weight(), s.points), s.points.size());
  double secs = seconds_since(t0);
  bool ok = std::abs(band - kBandMean) <= kHorocycleTol && std::abs(angle) <= kHorocycleTol && secs < kHorocycleSeconds;
  verdict(4, ok, "horocycle equidistribution at integer times",
          "height_band(2) mean " + num(band) + ", angle_weight mean " + num(angle) + " at N = 1e6 in " + num(secs) + " s");
}

void sparse_orbit() {
  auto s = sample_sparse(golden(), kSparseGamma, kSparseN);
  const std::size_t n = s.points.size(), m = n / 16;
  bool ok = true;
  std::string detail;
  double band_end = 0;
  for (const auto& f : default_suite()) {
    auto v = kernels::parallel::evaluate(f, s.points);
    double at_n = std::abs(mean(v, n) - f.haar_mean), at_m = std::abs(mean(v, m) - f.haar_mean);
    ok = ok && at_n < at_m;
    if (f.kind == TestKind::height_band) band_end = at_n;
    detail += f.name() + " " + num(at_m) + " -> " + num(at_n) + "; ";
  }
  ok = ok && band_end <= kSparseEndTol;
  verdict(5, ok, "sparse orbit discrepancy at N versus N/16", detail + "height_band error " + num(band_end));
}

void progression() {
  std::vector<double> v;
  for (double T : {1e3, 1e4, 1e5})
    v.push_back(std::abs(progression_average(golden(), std::pow(T, kProgressionExponent), T, height_band(2.0)).value));
  verdict(6, v[1] < v[0] && v[2] < v[1], "progression averages decay",
          "|centered average| " + num(v[0]) + ", " + num(v[1]) + ", " + num(v[2]) + " at T = 1e3, 1e4, 1e5");
}

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double n = static_cast<double>(xs.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double x = std::log(xs[i]), y = std::log(ys[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void twisted() {
  std::vector<double> Ts{1e3, 1e4, 1e5}, v;
  auto f = centered(height_band(2.0));
  for (double T : Ts) {
    int points = static_cast<int>(std::max(1000.0, std::ceil(kTwistFrequency * T / 10)));
    v.push_back(std::abs(twisted_average(golden(), T, kTwistFrequency, f, points)));
  }
  double slope = loglog_slope(Ts, v);
  verdict(7, v[1] < v[0] && v[2] < v[1] && slope <= kTwistSlope, "twisted averages decay",
          "|mu_T| " + num(v[0]) + ", " + num(v[1]) + ", " + num(v[2]) + "; log-log slope " + num(slope));
}

void fejer() {
  auto c = fejer_coefficient_check(kFejerDelta, 1.0, kFejerKMax);
  bool ok = std::abs(c.g0 - 1 / kFejerDelta) <= 1e-12 / kFejerDelta &&
            std::abs(c.sum_abs - 1 / kFejerDelta) <= kFejerSumTol / kFejerDelta;
  verdict(8, ok, "Fejer identity", "g(0) " + num(c.g0) + ", sum |a_k| " + num(c.sum_abs) + " (1/delta = 20)");
}

void hitting() {
  std::vector<double> ratios;
  std::string detail;
  for (double eps : {0.2, 0.1, 0.05}) {
    double f = hitting_frequency(golden(), 0.1, 1.0, eps, kHittingN);
    ratios.push_back(f / eps);
    detail += "eps " + num(eps) + ": f/eps " + num(f / eps) + "; ";
  }
  auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  double spread = *lo > 0 ? *hi / *lo : INFINITY;
  verdict(9, spread <= kHittingSpread, "cusp hitting frequency linear in eps", detail + "spread " + num(spread));
}

void good_functions() {
  std::string detail;
  bool ok = true;
  // |b| >= mu: floor mu^2 = 1; rho = f(1) anchors the window at x = 1
  {
    auto p = make_good_params(1, 1, 1, 0.1, 1, 1, 1.0);
    auto r = verify_good(p, {p.rho / 4, p.rho / 16, p.rho / 64});
    std::int64_t fails = std::accumulate(r.failures.begin(), r.failures.end(), std::int64_t{0});
    double cmax = *std::max_element(r.C.begin(), r.C.end());
    double fmin = *std::min_element(r.min_f.begin(), r.min_f.end());
    ok = ok && fails == 0 && cmax == 0 && fmin >= *proved_floor(p);
    detail += "|b|>=mu: C " + num(cmax) + ", min f " + num(fmin) + " (floor 1); ";
  }
  // ab < 0: floor nu^{2/(kappa+1)} = 0.5, eps grid below it
  {
    auto p = make_good_params(-1, 0.5, 1, 0.1, 1, 0.5, 2.5);
    auto r = verify_good(p, {p.rho / 8, p.rho / 16, p.rho / 64});
    std::int64_t fails = std::accumulate(r.failures.begin(), r.failures.end(), std::int64_t{0});
    double cmax = *std::max_element(r.C.begin(), r.C.end());
    double fmin = *std::min_element(r.min_f.begin(), r.min_f.end());
    ok = ok && fails == 0 && cmax == 0 && fmin >= *proved_floor(p);
    detail += "ab<0: C " + num(cmax) + ", min f " + num(fmin) + " (floor 0.5); ";
  }
  // ab > 0: C finite and within +-20% of its mean over the eps grid
  {
    auto p = make_good_params(1, 1e-4, 1, 0.05, 1, 1e-4);
    auto r = verify_good(p, {p.rho / 4, p.rho / 16, p.rho / 64});
    double avg = std::accumulate(r.C.begin(), r.C.end(), 0.0) / static_cast<double>(r.C.size());
    double dev = 0;
    for (double c : r.C) {
      ok = ok && std::isfinite(c);
      dev = std::max(dev, std::abs(c - avg) / avg);
    }
    ok = ok && dev <= kGoodStability;
    detail += "ab>0: C " + num(r.C[0]) + ", " + num(r.C[1]) + ", " + num(r.C[2]) + " (max deviation " + num(dev) + ")";
  }
  verdict(10, ok, "good-function sublevel sets", detail);
}

std::int64_t brute_sector(double l, double t1, double t2) {
  std::int64_t count = 0;
  const auto top = static_cast<std::int64_t>(2 * l);
  for (std::int64_t y = 1; y <= top; ++y)
    for (std::int64_t x = 0; x <= y; ++x) {
      const double r2 = static_cast<double>(x * x + y * y);
      if (r2 < l * l || r2 > 4 * l * l) continue;
      const double t = std::atan2(static_cast<double>(y), static_cast<double>(x));
      if (t > t1 && t < t2 && std::gcd(x, y) == 1) ++count;
    }
  return count;
}

void sectors() {
  const double t1 = std::numbers::pi / 4, t2 = std::numbers::pi / 2;
  auto oracle = brute_sector(1000, t1, t2);
  bool ok = std::abs(static_cast<double>(oracle) - kSectorTarget) <= kSectorTol * kSectorTarget;
  auto set = enumerate_orbit(2000);
  std::vector<double> ratios;
  std::int64_t main = 0;
  for (double l : {250.0, 500.0, 1000.0}) {
    auto c = sector_count(set, {l, t1, t2});
    if (l == 1000.0) main = c;
    ratios.push_back(static_cast<double>(c) / (l * l * (t2 - t1)));
  }
  ok = ok && main == oracle && std::abs(static_cast<double>(main) - kSectorTarget) <= kSectorTol * kSectorTarget;
  for (double r : ratios) ok = ok && std::abs(r - ratios.back()) <= kSectorRatioTol * ratios.back();
  verdict(11, ok, "sector counting",
          "count " + std::to_string(main) + " (oracle " + std::to_string(oracle) + ", target 716200); ratios " +
              num(ratios[0]) + ", " + num(ratios[1]) + ", " + num(ratios[2]));
}

void dimension() {
  bool flags = true;
  for (double kappa : {1.0, 2.0, 3.0}) {
    double threshold = assembled_dimension({kappa}) - 2;
    flags = flags && std::abs(threshold - 2 / (kappa + 1)) <= 1e-15;
    if (threshold + kThresholdOffset <= 1) flags = flags && cover_sum(kappa, threshold + kThresholdOffset, 1e4).convergent;
    flags = flags && !cover_sum(kappa, threshold - kThresholdOffset, 1e4).convergent;
    flags = flags && !cover_sum(kappa, threshold, 1e4).convergent;
  }
  auto fam = build_tree(3, 0, 3, kTreeSchedule);
  auto bound = dimension_lower_bound(fam, 1.0);
  bool tree = std::abs(bound.value - kTreeTarget) <= kTreeTol;
  verdict(12, flags && tree, "dimension threshold and tree bound",
          std::string("threshold flags ") + (flags ? "agree" : "disagree") + " for kappa 1, 2, 3; depth-3 bound " +
              num(bound.value) + " with schedule 1.5, 5e4 (" + std::to_string(fam.levels.back().size()) +
              " deepest intervals)");
}

void mollifier() {
  bool ok = true;
  double worst_integral = 0, lo = INFINITY, hi = 0;
  for (int n : {1, 2, 3})
    for (double gamma : {0.5, 1.0}) {
      double prev = 0;
      for (double delta : {0.1, 0.05, 0.025}) {
        auto c = verify_mollifier(make_mollifier(delta, n, gamma));
        double box = std::pow(gamma, n);
        worst_integral = std::max(worst_integral, std::abs(c.integral - box) / box);
        ok = ok && c.integral_ok && c.l1_ok;
        if (prev > 0) {
          double ratio = prev / c.l1_to_box;
          lo = std::min(lo, ratio);
          hi = std::max(hi, ratio);
          ok = ok && std::abs(ratio - kHalvingRatio) <= kHalvingTol * kHalvingRatio;
        }
        prev = c.l1_to_box;
      }
    }
  verdict(13, ok, "mollifier properties",
          "worst integral error " + num(worst_integral) + "; L1 halving ratios in [" + num(lo) + ", " + num(hi) + "]");
}

void box() {
  auto s = box_sweep(golden(), {1e2, 1e3, 1e4}, height_band(2.0));
  bool ok = s.error[1] < s.error[0] && s.error[2] < s.error[1] && s.a >= kBoxExponent;
  verdict(14, ok, "box-average decay",
          "errors " + num(s.error[0]) + ", " + num(s.error[1]) + ", " + num(s.error[2]) + "; fitted exponent " + num(s.a));
}

void exponents() {
  auto b = exponent_bundle(0.5, {1.0}, 0.0);
  bool ok = std::abs(b.gamma0_remark - b.gamma0_proof) <= kRouteTol && format_number(b.gamma0_remark) == format_number(1.0 / 90);
  verdict(15, ok, "exponent calculators",
          "gamma0 " + num(b.gamma0_remark) + " and " + num(b.gamma0_proof) + " (difference " +
              num(std::abs(b.gamma0_remark - b.gamma0_proof)) + ")");
}

// CSVs of representative reports, recomputed at a given thread count.
std::vector<std::string> determinism_outputs(int threads) {
  set_thread_count(threads);
  std::vector<std::string> out;
  auto p = golden();
  out.push_back(to_csv(discrepancy(sample_sparse(p, kSparseGamma, 200000), default_suite(), true), 1));
  out.push_back(to_csv(discrepancy(sample_curve(p, 0.1, log_uniform_grid(1, 1e6, 20000)), default_suite(), true), 1));
  out.push_back(to_csv(piece_decomposition(p, 0.1, 0.1, 100000, 1.0).report(), 1));
  out.push_back(to_csv(fejer_coefficient_check(kFejerDelta, 1.0, kFejerKMax).report(), 1));
  auto g = make_good_params(1, 1e-4, 1, 0.05, 1, 1e-4);
  out.push_back(to_csv(verify_good(g, {g.rho / 4, g.rho / 16}).report, 1));
  auto fam = build_tree(1, 0, 3, {50, 2500});
  out.push_back(to_csv(tree_report(fam, dimension_lower_bound(fam, 1.0)), 1));
  out.push_back(to_csv(box_sweep(p, {1e2, 1e3}, height_band(2.0)).report, 1));
  out.push_back(to_csv(dist_vs_norm_check(20000, 7), 1));
  out.push_back(to_csv(type_witness_report(point_type_check(p, 1.0), 1.0, kDefaultSearchBound), 1));
  return out;
}

void determinism() {
  const int saved = thread_count();
  auto one = determinism_outputs(1);
  auto eight = determinism_outputs(8);
  set_thread_count(saved);
  std::size_t same = 0;
  for (std::size_t i = 0; i < one.size(); ++i) same += one[i] == eight[i];
  verdict(16, same == one.size(), "determinism across thread counts",
          std::to_string(same) + " of " + std::to_string(one.size()) + " CSVs byte-identical at 1 and 8 threads");
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{group_suite, reduction_suite, comparability, horocycle,
                                                    sparse_orbit, progression,   twisted,       fejer,
                                                    hitting,      good_functions, sectors,      dimension,
                                                    mollifier,    box,           exponents,     determinism};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      verdict(static_cast<int>(i + 1), false, "criterion raised", e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
