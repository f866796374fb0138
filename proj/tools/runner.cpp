#include "runner.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "homodyn/diophantine.hpp"
#include "homodyn/fractal.hpp"
#include "homodyn/good_functions.hpp"
#include "homodyn/kernels.hpp"
#include "homodyn/lattice.hpp"
#include "homodyn/mollifier.hpp"
#include "homodyn/report.hpp"
#include "homodyn/sparse_orbits.hpp"

namespace homodyn::cli {

namespace {

const std::vector<std::string> kExperiments{"orbit", "curve",   "twist", "prog", "pieces", "dio",
                                            "goodfn", "count", "dim",   "mollify", "box", "constants"};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// name(args) -> (name, [args])
std::pair<std::string, std::vector<double>> call_form(const std::string& spec) {
  auto open = spec.find('(');
  if (open == std::string::npos) return {trim(spec), {}};
  require(spec.back() == ')', "malformed call '" + spec + "'");
  std::vector<double> args;
  std::stringstream in(spec.substr(open + 1, spec.size() - open - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      args.push_back(std::stod(trim(item)));
    } catch (const std::exception&) {
      throw InvalidArgument("malformed number '" + item + "' in '" + spec + "'");
    }
  }
  return {trim(spec.substr(0, open)), args};
}

std::vector<double> numbers(const std::string& spec) {
  std::vector<double> out;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stod(trim(item)));
    } catch (const std::exception&) {
      throw InvalidArgument("malformed number '" + item + "'");
    }
  }
  return out;
}

struct Slope {
  ContinuedFraction cf;
  std::string label;
};

Slope parse_slope(const std::string& spec, int depth) {
  auto [name, args] = call_form(spec);
  if (name == "golden") return {cf_expand(golden_ratio_quad(), depth), "golden"};
  if (name == "sqrt2") return {cf_expand(Quad(sqrt(Quad(2))), depth), "sqrt2"};
  if (name == "liouville") {
    require(args.size() == 1, "liouville(k) takes one argument");
    return {planted_number(args[0], depth), spec};
  }
  try {
    return {cf_expand(std::stod(spec), depth), spec};
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("unknown slope '" + spec + "'");
  }
}

struct Output {
  ExperimentReport report;
  std::optional<OrbitSeries> series;
};

}  // namespace

GroupElement parse_base(const std::string& spec) {
  auto [name, args] = call_form(spec);
  if (name == "identity") return GroupElement(1, 0, 0, 1);
  if (name == "golden") return slope_base(std::numbers::phi);
  if (name == "sqrt2") return slope_base(std::numbers::sqrt2);
  if (name == "liouville") {
    require(args.size() == 1, "liouville(k) takes one argument");
    return slope_base(static_cast<double>(planted_number(args[0], 40).x));
  }
  auto entries = numbers(spec);
  require(entries.size() == 4, "unknown base '" + spec + "' (expected a name or four entries a,b,c,d)");
  return GroupElement(entries[0], entries[1], entries[2], entries[3]);
}

TestFunction parse_function(const std::string& spec) {
  const std::string s = trim(spec);
  if (s.rfind("centered(", 0) == 0) {
    require(s.back() == ')', "malformed call '" + spec + "'");
    return centered(parse_function(s.substr(9, s.size() - 10)));
  }
  auto [name, args] = call_form(s);
  auto arity = [&](std::size_t n) { require(args.size() == n, "wrong argument count in '" + spec + "'"); };
  if (name == "height_band") {
    arity(1);
    return height_band(args[0]);
  }
  if (name == "disc" || name == "hyperbolic_disc") {
    arity(3);
    return hyperbolic_disc({args[0], args[1]}, args[2]);
  }
  if (name == "bump" || name == "smooth_bump") {
    arity(3);
    return smooth_bump({args[0], args[1]}, args[2]);
  }
  if (name == "angle_weight") return angle_weight();
  if (name == "constant") {
    arity(1);
    return constant_function(args[0]);
  }
  throw InvalidArgument("unknown test function '" + spec + "'");
}

std::vector<TestFunction> parse_suite(const std::string& spec) {
  if (spec == "default") return default_suite();
  std::vector<TestFunction> out;
  // functions separated by ';'
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ';'))
    if (!trim(item).empty()) out.push_back(parse_function(trim(item)));
  require(!out.empty(), "empty suite");
  return out;
}

std::vector<std::string> read_config(const std::string& path, std::string& experiment) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    require(eq != std::string::npos, path + ":" + std::to_string(number) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    require(!key.empty(), path + ":" + std::to_string(number) + ": empty key");
    if (key == "experiment") {
      experiment = value;
      continue;
    }
    out.push_back("--" + key + "=" + value);
  }
  return out;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);

  // --config is resolved before CLI11 sees the arguments: file entries go first,
  // and keys repeated on the command line are dropped so flags override.
  std::optional<std::string> config_path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) {
        std::cerr << "error: --config needs a path\n";
        return 1;
      }
      config_path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (config_path) {
    try {
      std::string experiment;
      auto entries = read_config(*config_path, experiment);
      std::set<std::string> given;
      bool has_sub = false;
      for (const auto& a : rest) {
        if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') - 2));
        for (const auto& e : kExperiments) has_sub = has_sub || a == e;
      }
      std::vector<std::string> merged;
      if (!has_sub) {
        if (experiment.empty()) throw InvalidArgument("config names no experiment and none was given");
        merged.push_back(experiment);
      }
      merged.insert(merged.end(), rest.begin(), rest.end());
      for (const auto& e : entries)
        if (!given.count(e.substr(2, e.find('=') - 2))) merged.push_back(e);
      rest = std::move(merged);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }

  CLI::App app{"numerical lab for homogeneous dynamics on the modular surface", "homodyn"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string("homodyn ") + HOMODYN_VERSION);

  std::uint64_t seed = 1;
  std::string out_path, svg_path;
  int threads = 0;
  app.add_option("--seed", seed, "seed recorded in the CSV header");
  app.add_option("--out", out_path, "CSV output path (stdout when omitted)");
  app.add_option("--svg", svg_path, "SVG scatter of the sampled orbit (orbit and curve only)");
  app.add_option("--threads", threads, "OpenMP thread count (falls back to HOMODYN_THREADS)")->check(CLI::PositiveNumber);

  std::function<Output()> action;
  auto bind = [&](CLI::App* sub, std::function<Output()> f) { sub->callback([&action, f] { action = f; }); };

  // orbit
  {
    auto* s = app.add_subcommand("orbit", "sparse orbit p u(n^{1+gamma}) and its discrepancy");
    auto o = std::make_shared<std::tuple<std::string, double, std::int64_t, std::string, bool>>("golden", 0.01, 100000,
                                                                                                  "default", true);
    s->add_option("--base", std::get<0>(*o), "base point");
    s->add_option("--gamma", std::get<1>(*o), "sparsity exponent");
    s->add_option("--N", std::get<2>(*o), "number of times");
    s->add_option("--suite", std::get<3>(*o), "'default' or functions separated by ';'");
    s->add_option("--dyadic", std::get<4>(*o), "report dyadic prefixes");
    bind(s, [o] {
      auto p = reduce(parse_base(std::get<0>(*o)));
      auto series = sample_sparse(p, std::get<1>(*o), std::get<2>(*o));
      series.label = std::get<0>(*o);
      auto r = discrepancy(series, parse_suite(std::get<3>(*o)), std::get<4>(*o));
      r.set_param("base", std::get<0>(*o));
      return Output{r, series};
    });
  }
  // curve
  {
    auto* s = app.add_subcommand("curve", "A-N curve points and their discrepancy");
    auto o = std::make_shared<std::tuple<std::string, double, double, double, int, std::string>>("golden", 0.1, 1.0, 1e6,
                                                                                                  10000, "default");
    s->add_option("--base", std::get<0>(*o));
    s->add_option("--gamma", std::get<1>(*o));
    s->add_option("--xmin", std::get<2>(*o));
    s->add_option("--xmax", std::get<3>(*o));
    s->add_option("--count", std::get<4>(*o), "log-uniform grid size");
    s->add_option("--suite", std::get<5>(*o));
    bind(s, [o] {
      auto p = reduce(parse_base(std::get<0>(*o)));
      auto grid = log_uniform_grid(std::get<2>(*o), std::get<3>(*o), std::get<4>(*o));
      auto series = sample_curve(p, std::get<1>(*o), grid);
      series.label = std::get<0>(*o);
      auto r = discrepancy(series, parse_suite(std::get<5>(*o)), true);
      r.set_param("base", std::get<0>(*o));
      return Output{r, series};
    });
  }
  // twist
  {
    auto* s = app.add_subcommand("twist", "twisted horocycle averages");
    auto o = std::make_shared<std::tuple<std::string, std::vector<double>, double, int, std::string>>(
        "golden", std::vector<double>{1e3, 1e4, 1e5}, 0.37, 0, "height_band(2)");
    s->add_option("--base", std::get<0>(*o));
    s->add_option("--T", std::get<1>(*o))->delimiter(',');
    s->add_option("--freq", std::get<2>(*o));
    s->add_option("--quad-points", std::get<3>(*o), "0 picks max(1000, freq*T/10)");
    s->add_option("--function", std::get<4>(*o));
    bind(s, [o] {
      auto p = reduce(parse_base(std::get<0>(*o)));
      auto f = parse_function(std::get<4>(*o));
      const double freq = std::get<2>(*o);
      ExperimentReport r("twist", {"T", "quad_points", "re", "im", "abs"});
      r.set_param("base", std::get<0>(*o));
      r.set_param("frequency", freq);
      r.set_param("function", f.name());
      for (double T : std::get<1>(*o)) {
        int qp = std::get<3>(*o);
        if (qp == 0) qp = static_cast<int>(std::max(1000.0, std::ceil(freq * T / 10)));
        auto v = twisted_average(p, T, freq, f, qp);
        r.add_row({T, static_cast<std::int64_t>(qp), v.real(), v.imag(), std::abs(v)});
      }
      return Output{r, std::nullopt};
    });
  }
  // prog
  {
    auto* s = app.add_subcommand("prog", "centered averages along arithmetic progressions K j");
    auto o = std::make_shared<std::tuple<std::string, std::vector<double>, double, double, std::string>>(
        "golden", std::vector<double>{1e3, 1e4, 1e5}, 0.0, 0.05, "height_band(2)");
    s->add_option("--base", std::get<0>(*o));
    s->add_option("--T", std::get<1>(*o))->delimiter(',');
    s->add_option("--K", std::get<2>(*o), "fixed step (overrides --K-exponent)");
    s->add_option("--K-exponent", std::get<3>(*o), "K = T^e");
    s->add_option("--function", std::get<4>(*o));
    bind(s, [o] {
      auto p = reduce(parse_base(std::get<0>(*o)));
      auto f = parse_function(std::get<4>(*o));
      ExperimentReport r("prog", {"T", "K", "count", "value"});
      r.set_param("base", std::get<0>(*o));
      r.set_param("function", f.name());
      for (double T : std::get<1>(*o)) {
        double K = std::get<2>(*o) > 0 ? std::get<2>(*o) : std::pow(T, std::get<3>(*o));
        auto a = progression_average(p, K, T, f);
        r.add_row({T, K, a.count, a.value});
      }
      return Output{r, std::nullopt};
    });
  }
  // pieces
  {
    auto* s = app.add_subcommand("pieces", "Taylor piece decomposition along n^{1+gamma}");
    auto o = std::make_shared<std::tuple<std::string, double, double, std::int64_t, double>>("golden", 0.1, 0.1, 10000,
                                                                                             1.0);
    s->add_option("--base", std::get<0>(*o));
    s->add_option("--gamma", std::get<1>(*o));
    s->add_option("--eps", std::get<2>(*o));
    s->add_option("--N", std::get<3>(*o));
    s->add_option("--kappa", std::get<4>(*o));
    bind(s, [o] {
      auto p = reduce(parse_base(std::get<0>(*o)));
      auto d = piece_decomposition(p, std::get<1>(*o), std::get<2>(*o), std::get<3>(*o), std::get<4>(*o));
      auto r = d.report();
      r.set_param("base", std::get<0>(*o));
      return Output{r, std::nullopt};
    });
  }
  // dio
  {
    auto* s = app.add_subcommand("dio", "continued fraction, type estimates and a bounded Diophantine witness search");
    auto o = std::make_shared<std::tuple<std::string, int, double, int, double>>("golden", 40, 1.0, kDefaultSearchBound,
                                                                                 40.0);
    s->add_option("--x", std::get<0>(*o), "golden | sqrt2 | liouville(k) | decimal");
    s->add_option("--depth", std::get<1>(*o));
    s->add_option("--kappa", std::get<2>(*o));
    s->add_option("--bound", std::get<3>(*o), "search bound for the witness scan");
    s->add_option("--t-max", std::get<4>(*o), "geodesic time for the excursion fit");
    s->footer("The witness scan is a bounded search: it reports (mu, nu) witnesses and never proves the condition.");
    bind(s, [o] {
      auto slope = parse_slope(std::get<0>(*o), std::get<1>(*o));
      auto est = type_estimate(slope.cf);
      auto base = slope_base(static_cast<double>(slope.cf.x));
      auto w = point_type_check(reduce(base), std::get<2>(*o), std::get<3>(*o));
      auto fit = excursion_type_estimate(reduce(slope_base(slope.cf.x)), std::get<4>(*o));
      ExperimentReport r("dio", {"n", "a_n", "p_n", "q_n", "raw", "normalized"});
      r.set_param("x", slope.label);
      r.set_param("zeta_hat", est.zeta_hat);
      r.set_param("kappa_hat_excursion", fit.kappa_hat);
      r.set_param("kappa", std::get<2>(*o));
      r.set_param("mu", w.mu);
      r.set_param("nu", w.nu);
      r.set_param("violations", w.violations);
      for (std::size_t n = 0; n < slope.cf.convergents.size(); ++n) {
        std::int64_t a = n == 0 ? slope.cf.a0 : slope.cf.quotients[n - 1];
        r.add_row({static_cast<std::int64_t>(n), a, slope.cf.convergents[n].p, slope.cf.convergents[n].q, est.raw[n],
                   est.normalized[n]});
      }
      r.add_note("witness search is bounded; it reports (mu, nu) and never proves the Diophantine condition");
      return Output{r, std::nullopt};
    });
  }
  // goodfn
  {
    auto* s = app.add_subcommand("goodfn", "sublevel-set constants of the explicit function family");
    struct G {
      double a = 1, b = 1e-4, kappa = 1, gamma = 0.05, mu = 1, nu = 1e-4, rho = 0;
      std::vector<double> eps;
      int windows = 60, density = 1000;
    };
    auto o = std::make_shared<G>();
    s->add_option("--a", o->a);
    s->add_option("--b", o->b);
    s->add_option("--kappa", o->kappa);
    s->add_option("--gamma", o->gamma);
    s->add_option("--mu", o->mu);
    s->add_option("--nu", o->nu);
    s->add_option("--rho", o->rho, "0 picks min(f(1), 1/4)");
    s->add_option("--eps", o->eps, "default rho/4, rho/16, rho/64")->delimiter(',');
    s->add_option("--windows", o->windows);
    s->add_option("--density", o->density, "samples per unit of log x");
    bind(s, [o] {
      auto p = make_good_params(o->a, o->b, o->kappa, o->gamma, o->mu, o->nu,
                                o->rho > 0 ? std::optional<double>(o->rho) : std::nullopt);
      auto eps = o->eps;
      if (eps.empty()) eps = {p.rho / 4, p.rho / 16, p.rho / 64};
      return Output{verify_good(p, eps, o->windows, o->density).report, std::nullopt};
    });
  }
  // count
  {
    auto* s = app.add_subcommand("count", "primitive lattice points in annular sectors");
    struct Cnt {
      std::vector<double> l{250, 500, 1000};
      double theta1 = std::numbers::pi / 4, theta2 = std::numbers::pi / 2;
      std::vector<std::int64_t> parent;
      double kappa = 1, C = 1;
    };
    auto o = std::make_shared<Cnt>();
    s->add_option("--l", o->l)->delimiter(',');
    s->add_option("--theta1", o->theta1);
    s->add_option("--theta2", o->theta2);
    s->add_option("--parent", o->parent, "alpha,beta: report the packing under this parent instead")->delimiter(',');
    s->add_option("--kappa", o->kappa);
    s->add_option("--C", o->C);
    bind(s, [o] {
      require(!o->l.empty(), "count: need at least one l");
      double lmax = *std::max_element(o->l.begin(), o->l.end());
      auto set = enumerate_orbit(2 * lmax);
      if (!o->parent.empty()) {
        require(o->parent.size() == 2, "count: --parent takes alpha,beta");
        ExperimentReport r("pack", {"l", "count", "ratio", "disjoint", "exact"});
        r.set_param("alpha", o->parent[0]);
        r.set_param("beta", o->parent[1]);
        r.set_param("kappa", o->kappa);
        r.set_param("C", o->C);
        for (double l : o->l) {
          auto pk = pack_subintervals(o->parent[0], o->parent[1], o->kappa, l, o->C, set);
          r.add_row({l, pk.count, pk.ratio, static_cast<std::int64_t>(pk.disjoint), static_cast<std::int64_t>(pk.exact)});
        }
        return Output{r, std::nullopt};
      }
      ExperimentReport r("count", {"l", "count", "ratio", "expected"});
      r.set_param("theta1", o->theta1);
      r.set_param("theta2", o->theta2);
      const double dtheta = o->theta2 - o->theta1;
      for (double l : o->l) {
        auto c = sector_count(set, {l, o->theta1, o->theta2});
        double ratio = dtheta > 0 ? static_cast<double>(c) / (l * l * dtheta) : 0.0;
        r.add_row({l, c, ratio, 1.5 * l * l * dtheta * 6 / (std::numbers::pi * std::numbers::pi)});
      }
      return Output{r, std::nullopt};
    });
  }
  // dim
  {
    auto* s = app.add_subcommand("dim", "tree-like family and its finite-depth dimension lower bound");
    struct D {
      double kappa = 3, eps = 0, C = 1;
      int levels = 3;
      std::vector<double> schedule{1.5, 5e4};
    };
    auto o = std::make_shared<D>();
    s->add_option("--kappa", o->kappa);
    s->add_option("--eps", o->eps);
    s->add_option("--levels", o->levels, "level count including [0,1]");
    s->add_option("--schedule", o->schedule, "l_1, l_2, ...; entries beyond levels-1 are ignored")->delimiter(',');
    s->add_option("--C", o->C);
    bind(s, [o] {
      auto fam = build_tree(o->kappa, o->eps, o->levels, o->schedule, o->C);
      if (fam.levels.size() < 2) {
        ExperimentReport r("dim", {"level", "l", "intervals", "diameter", "density", "lower_bound"});
        r.add_row({std::int64_t{0}, std::nan(""), std::int64_t{1}, 1.0, std::nan(""), std::nan("")});
        return Output{r, std::nullopt};
      }
      auto bound = dimension_lower_bound(fam, 1.0);
      auto r = tree_report(fam, bound);
      r.set_param("target", 2 / (o->kappa + 1));
      return Output{r, std::nullopt};
    });
  }
  // mollify
  {
    auto* s = app.add_subcommand("mollify", "mollifier integral and L1 distance to the box");
    struct M {
      std::vector<double> delta{0.1, 0.05, 0.025};
      int n = 1;
      double gamma = 1;
    };
    auto o = std::make_shared<M>();
    s->add_option("--delta", o->delta)->delimiter(',');
    s->add_option("--n", o->n);
    s->add_option("--gamma", o->gamma);
    bind(s, [o] {
      ExperimentReport r("mollify", {"delta", "integral", "l1_to_box", "l1_bound", "integral_ok", "l1_ok"});
      r.set_param("n", o->n);
      r.set_param("gamma", o->gamma);
      for (double d : o->delta) {
        auto m = verify_mollifier(make_mollifier(d, o->n, o->gamma));
        r.add_row({d, m.integral, m.l1_to_box, m.l1_bound, static_cast<std::int64_t>(m.integral_ok),
                   static_cast<std::int64_t>(m.l1_ok)});
      }
      return Output{r, std::nullopt};
    });
  }
  // box
  {
    auto* s = app.add_subcommand("box", "horocycle box averages and their decay");
    auto o = std::make_shared<std::tuple<std::string, std::vector<double>, std::string>>(
        "golden", std::vector<double>{1e2, 1e3, 1e4}, "height_band(2)");
    s->add_option("--base", std::get<0>(*o));
    s->add_option("--T", std::get<1>(*o))->delimiter(',');
    s->add_option("--function", std::get<2>(*o));
    bind(s, [o] {
      auto p = reduce(parse_base(std::get<0>(*o)));
      auto sweep = box_sweep(p, std::get<1>(*o), parse_function(std::get<2>(*o)));
      sweep.report.set_param("base", std::get<0>(*o));
      return Output{sweep.report, std::nullopt};
    });
  }
  // constants
  {
    auto* s = app.add_subcommand("constants", "gamma_0 by both routes");
    auto o = std::make_shared<std::tuple<double, std::vector<double>, double>>(0.5, std::vector<double>{1}, 1e-3);
    s->add_option("--s", std::get<0>(*o), "spectral gap parameter");
    s->add_option("--kappa", std::get<1>(*o))->delimiter(',');
    s->add_option("--epsilon", std::get<2>(*o));
    bind(s, [o] {
      ExperimentReport r("constants", {"kappa", "gamma0_remark", "gamma0_proof", "beta", "kappa_mix"});
      r.set_param("s", std::get<0>(*o));
      r.set_param("epsilon", std::get<2>(*o));
      for (double k : std::get<1>(*o)) {
        auto b = exponent_bundle(std::get<0>(*o), {k}, std::get<2>(*o));
        r.add_row({k, b.gamma0_remark, b.gamma0_proof, b.beta, b.kappa_mix});
      }
      if (std::get<1>(*o).size() > 1) {
        auto b = exponent_bundle(std::get<0>(*o), std::get<1>(*o), std::get<2>(*o));
        r.set_param("gamma0_remark_min", b.gamma0_remark);
        r.set_param("gamma0_proof_min", b.gamma0_proof);
      }
      return Output{r, std::nullopt};
    });
  }

  std::vector<std::string> full{"homodyn"};
  full.insert(full.end(), rest.begin(), rest.end());
  std::vector<char*> cargv;
  for (auto& a : full) cargv.push_back(a.data());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (threads == 0) {
      if (const char* env = std::getenv("HOMODYN_THREADS")) {
        try {
          threads = std::stoi(env);
        } catch (const std::exception&) {
          throw InvalidArgument("HOMODYN_THREADS must be a positive integer");
        }
        require(threads >= 1, "HOMODYN_THREADS must be a positive integer");
      }
    }
    if (threads > 0) set_thread_count(threads);
    Output out = action();
    if (out_path.empty()) {
      std::cout << to_csv(out.report, seed);
    } else {
      emit_csv(out.report, out_path, seed);
    }
    if (!svg_path.empty()) {
      require(out.series.has_value(), "--svg is only available for orbit and curve");
      emit_svg(*out.series, svg_path);
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace homodyn::cli
