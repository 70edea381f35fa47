#include <algorithm>
#include <cmath>

#include "whitham/harness/initial_data.hpp"
#include "whitham/harness/scenarios.hpp"
#include "whitham/symmetrize.hpp"

namespace whitham::harness {
namespace {

const std::vector<std::string> kReferenceSolveKeys = {"T", "dt", "N", "eta_bar", "dealias", "tol",
                                                      "max_iter"};
const std::vector<std::string> kReferenceParams = {"amplitude", "c", "T1"};

std::vector<std::string> with(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<int> int_list(const ParamMap& p, const std::string& key, std::vector<int> fallback) {
  if (!p.has(key)) return fallback;
  std::vector<int> out;
  for (double v : p.get_list(key, {})) {
    if (v != std::floor(v)) throw ConfigError("'" + key + "' must list integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

int positive_int(int v, const std::string& what) {
  if (v <= 0) throw ConfigError("'" + what + "' must be positive");
  return v;
}

double positive(double v, const std::string& what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("'" + what + "' must be positive");
  return v;
}

std::vector<double> positive_list(std::vector<double> v, const std::string& what) {
  for (double x : v) positive(x, what);
  return v;
}

ReferenceRun reference_run(const RunConfig& c) {
  ReferenceRun r;
  r.n = positive_int(c.n.value_or(r.n), "n");
  r.period = positive(c.period, "period");
  r.amplitude = c.params.get_double("amplitude", r.amplitude);
  r.c = positive(c.params.get_double("c", r.c), "c");
  r.T1 = positive(c.params.get_double("T1", r.T1), "T1");
  r.T = c.solve.T;
  r.dt = c.solve.dt;
  r.N = c.solve.N.value_or(r.N);
  r.tol = c.solve.tol.value_or(r.tol);
  r.max_iter = c.solve.max_iter.value_or(r.max_iter);
  r.dealias = c.solve.dealias.value_or(r.dealias);
  r.cfl = positive(c.cfl, "cfl");
  if (r.N < 2) throw ConfigError("'N' must be >= 2");
  if (r.T) positive(*r.T, "T");
  if (r.dt) positive(*r.dt, "dt");
  positive(r.tol, "tol");
  positive_int(r.max_iter, "max_iter");

  const Grid grid(r.n, r.period);
  if (!c.data.entries().empty()) {
    const InitialData d = make_initial_data(grid, c.data, c.seed);
    const double eta_bar = c.solve.eta_bar.value_or(d.eta.mean());
    r.initial = to_symmetric(State(d.eta, d.u, Representation::physical, eta_bar));
  } else if (c.solve.eta_bar) {
    State p = to_physical(reference_state(grid, r.amplitude));
    p.eta_bar = positive(*c.solve.eta_bar, "eta_bar");
    r.initial = to_symmetric(p);
  }
  return r;
}

ExperimentReport run_dispersion(const RunConfig& c) {
  DispersionParams p;
  p.n = positive_int(c.n.value_or(p.n), "n");
  p.seed = c.seed;
  const ParamMap& m = c.params;
  p.multiplier_tol = positive(m.get_double("multiplier_tol", p.multiplier_tol), "multiplier_tol");
  p.kernel_fields = positive_int(m.get_int("kernel_fields", p.kernel_fields), "kernel_fields");
  p.kernel_truncation = positive_int(m.get_int("kernel_truncation", p.kernel_truncation), "kernel_truncation");
  p.kernel_fine_points = positive_int(m.get_int("kernel_fine_points", p.kernel_fine_points), "kernel_fine_points");
  p.kernel_tol = positive(m.get_double("kernel_tol", p.kernel_tol), "kernel_tol");
  p.phase_amplitude = positive(m.get_double("phase_amplitude", p.phase_amplitude), "phase_amplitude");
  p.phase_T = positive(c.solve.T.value_or(p.phase_T), "T");
  p.phase_dt = positive(c.solve.dt.value_or(p.phase_dt), "dt");
  p.phase_tol = positive(m.get_double("phase_tol", p.phase_tol), "phase_tol");
  if (p.kernel_fine_points % p.n != 0) throw ConfigError("kernel_fine_points must be a multiple of n");
  return dispersion_check(p);
}

ExperimentReport run_mollifier(const RunConfig& c) {
  MollifierParams p;
  p.n = positive_int(c.n.value_or(p.n), "n");
  p.seed = c.seed;
  const ParamMap& m = c.params;
  p.fields = positive_int(m.get_int("fields", p.fields), "fields");
  p.k_max = m.get_int("k_max", p.k_max);
  p.l_max = m.get_int("l_max", p.l_max);
  if (p.k_max < 0 || p.l_max < 0) throw ConfigError("k_max and l_max must be non-negative");
  p.eps = positive_list(m.get_list("eps", p.eps), "eps");
  for (double e : p.eps) {
    if (e > 1.0) throw ConfigError("'eps' values must lie in (0, 1]");
  }
  p.slope_tol = positive(m.get_double("slope_tol", p.slope_tol), "slope_tol");
  return mollifier_lemma(p);
}

ExperimentReport run_inequalities(const RunConfig& c) {
  InequalityParams p;
  p.seed = c.seed;
  const ParamMap& m = c.params;
  p.ns = int_list(m, "ns", c.n ? std::vector<int>{*c.n} : p.ns);
  if (p.ns.empty()) throw ConfigError("'ns' must not be empty");
  p.pairs = positive_int(m.get_int("pairs", p.pairs), "pairs");
  p.k_max = positive_int(m.get_int("k_max", p.k_max), "k_max");
  p.cutoff = positive_int(m.get_int("cutoff", p.cutoff), "cutoff");
  for (int n : p.ns) {
    if (3 * p.cutoff > n) throw ConfigError("cutoff must not exceed n / 3 for every grid");
  }
  p.refinement_tol = positive(m.get_double("refinement_tol", p.refinement_tol), "refinement_tol");
  p.endpoint_tol = positive(m.get_double("endpoint_tol", p.endpoint_tol), "endpoint_tol");
  return inequality_suite(p);
}

ExperimentReport run_energy_bound(const RunConfig& c) {
  EnergyBoundParams p;
  p.run = reference_run(c);
  p.fit_horizon = positive(c.params.get_double("fit_horizon", p.fit_horizon), "fit_horizon");
  p.fit_dt = positive(c.params.get_double("fit_dt", p.fit_dt), "fit_dt");
  p.runtime_limit = positive(c.params.get_double("runtime_limit", p.runtime_limit), "runtime_limit");
  return energy_bound(p);
}

ExperimentReport run_picard(const RunConfig& c) {
  PicardParams p;
  p.run = reference_run(c);
  const ParamMap& m = c.params;
  p.contraction = positive(m.get_double("contraction", p.contraction), "contraction");
  p.agreement_tol = positive(m.get_double("agreement_tol", p.agreement_tol), "agreement_tol");
  p.max_halvings = m.get_int("max_halvings", p.max_halvings);
  if (p.max_halvings < 0) throw ConfigError("'max_halvings' must be non-negative");
  p.energies = positive_list(m.get_list("energies", p.energies), "energies");
  p.lifespan_factor = positive(m.get_double("lifespan_factor", p.lifespan_factor), "lifespan_factor");
  p.search_rel = positive(m.get_double("search_rel", p.search_rel), "search_rel");
  p.search_T_max = positive(m.get_double("search_T_max", p.search_T_max), "search_T_max");
  return picard_convergence(p);
}

ExperimentReport run_epsilon(const RunConfig& c) {
  EpsilonCauchyParams p;
  p.run = reference_run(c);
  const ParamMap& m = c.params;
  p.eps = positive_list(m.get_list("eps", p.eps), "eps");
  if (p.eps.size() == 1) throw ConfigError("'eps' needs at least two values");
  p.slope_target = m.get_double("slope_target", p.slope_target);
  p.slope_tol = positive(m.get_double("slope_tol", p.slope_tol), "slope_tol");
  if (c.solve.eps) {
    if (!(*c.solve.eps > 0.0) || *c.solve.eps > 1.0) throw ConfigError("'eps' must lie in (0, 1]");
    p.single_eps = *c.solve.eps;
  }
  return epsilon_cauchy(p);
}

ExperimentReport run_model_compare(const RunConfig& c) {
  ConservationParams p;
  p.run = reference_run(c);
  const ParamMap& m = c.params;
  p.dts = positive_list(m.get_list("dts", p.dts), "dts");
  if (p.dts.size() < 2) throw ConfigError("'dts' needs at least two steps");
  p.invariant_tol = positive(m.get_double("invariant_tol", p.invariant_tol), "invariant_tol");
  p.ratio_target = positive(m.get_double("ratio_target", p.ratio_target), "ratio_target");
  p.ratio_factor = positive(m.get_double("ratio_factor", p.ratio_factor), "ratio_factor");
  return model_compare(p);
}

ExperimentReport run_continuous(const RunConfig& c) {
  ContinuousDependenceParams p;
  p.run = reference_run(c);
  const ParamMap& m = c.params;
  p.deltas = positive_list(m.get_list("deltas", p.deltas), "deltas");
  if (p.deltas.size() < 2) throw ConfigError("'deltas' needs at least two values");
  p.slope_target = m.get_double("slope_target", p.slope_target);
  p.slope_tol = positive(m.get_double("slope_tol", p.slope_tol), "slope_tol");
  return continuous_dependence(p);
}

ExperimentReport run_vanishing(const RunConfig& c) {
  VanishingElevationParams p;
  p.n = positive_int(c.n.value_or(p.n), "n");
  const ParamMap& m = c.params;
  p.deltas = positive_list(m.get_list("deltas", p.deltas), "deltas");
  if (p.deltas.empty()) throw ConfigError("'deltas' must not be empty");
  p.amplitude = positive(m.get_double("amplitude", p.amplitude), "amplitude");
  p.u_amplitude = m.get_double("u_amplitude", p.u_amplitude);
  p.T = positive(c.solve.T.value_or(p.T), "T");
  p.dt = positive(c.solve.dt.value_or(p.dt), "dt");
  p.dealias = c.solve.dealias.value_or(p.dealias);
  if (c.solve.eta_bar) p.eta_bar = positive(*c.solve.eta_bar, "eta_bar");
  return vanishing_elevation(p);
}

bool contains(const std::vector<std::string>& v, std::string_view s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

const std::vector<ScenarioSpec>& scenarios() {
  static const std::vector<ScenarioSpec> specs = {
      {"energy-bound", "a-priori bound max_t E_N <= 2 E_N(U0) up to the lifespan estimate",
       with(kReferenceParams, {"fit_horizon", "fit_dt", "runtime_limit"}), kReferenceSolveKeys,
       true, true, true, run_energy_bound},
      {"picard-convergence", "Picard contraction, agreement with solve_direct, lifespan shape",
       with(kReferenceParams, {"contraction", "agreement_tol", "max_halvings", "energies",
                               "lifespan_factor", "search_rel", "search_T_max"}),
       kReferenceSolveKeys, true, true, true, run_picard},
      {"epsilon-cauchy", "Cauchy rate of the regularised solutions in eps",
       with(kReferenceParams, {"eps", "slope_target", "slope_tol"}),
       with(kReferenceSolveKeys, {"eps"}), true, true, true, run_epsilon},
      {"mollifier-lemma", "mollifier smoothing and difference bounds over an eps lattice",
       {"fields", "k_max", "l_max", "eps", "slope_tol"}, {}, true, false, false, run_mollifier},
      {"inequality-suite", "tame product and interpolation ratios under refinement",
       {"ns", "pairs", "k_max", "cutoff", "refinement_tol", "endpoint_tol"}, {}, true, false, false,
       run_inequalities},
      {"vanishing-elevation", "breakdown proxies as inf eta0 approaches zero",
       {"deltas", "amplitude", "u_amplitude"}, {"T", "dt", "eta_bar", "dealias"}, true, false, false,
       run_vanishing},
      {"continuous-dependence", "terminal H^N difference under H^N perturbations of the data",
       with(kReferenceParams, {"deltas", "slope_target", "slope_tol"}), kReferenceSolveKeys, true,
       true, true, run_continuous},
      {"dispersion-check", "multiplier, kernel and phase-speed checks of K",
       {"multiplier_tol", "kernel_fields", "kernel_truncation", "kernel_fine_points", "kernel_tol",
        "phase_amplitude", "phase_tol"},
       {"T", "dt"}, true, false, false, run_dispersion},
      {"model-compare", "conserved quantities of the direct and unidirectional models",
       with(kReferenceParams, {"dts", "invariant_tol", "ratio_target", "ratio_factor"}),
       kReferenceSolveKeys, true, true, true, run_model_compare},
  };
  return specs;
}

const ScenarioSpec& find_scenario(std::string_view name) {
  for (const auto& s : scenarios()) {
    if (s.name == name) return s;
  }
  std::string known;
  for (const auto& s : scenarios()) known += (known.empty() ? "" : ", ") + s.name;
  throw ConfigError("unknown scenario '" + std::string(name) + "' (known: " + known + ")");
}

void validate_config(const ScenarioSpec& spec, const RunConfig& cfg) {
  auto reject = [&](const std::string& what) {
    throw ConfigError("scenario " + spec.name + " does not use " + what);
  };
  const SolveOverrides& s = cfg.solve;
  const std::pair<const char*, bool> given[] = {
      {"T", s.T.has_value()},         {"dt", s.dt.has_value()},   {"N", s.N.has_value()},
      {"eps", s.eps.has_value()},     {"eta_bar", s.eta_bar.has_value()},
      {"dealias", s.dealias.has_value()}, {"tol", s.tol.has_value()},
      {"max_iter", s.max_iter.has_value()}};
  for (const auto& [key, present] : given) {
    if (present && !contains(spec.solve_keys, key)) reject(std::string("solve key '") + key + "'");
  }
  if (cfg.n && !spec.grid_n) reject("grid key 'n'");
  if (cfg.cfl != RunConfig{}.cfl && !spec.cfl) reject("solve key 'cfl'");
  if (cfg.period != kTwoPi && !spec.data) reject("grid key 'period'");
  if (!cfg.data.entries().empty() && !spec.data) reject("initial data");
  for (const auto& [key, value] : cfg.params.entries()) {
    if (!contains(spec.params, key)) reject("parameter '" + key + "'");
  }
}

std::string sweep_key(const ScenarioSpec& spec, std::string_view parameter) {
  const std::string p(parameter);
  if (contains(spec.solve_keys, p)) return p;
  if (p == "n" && spec.grid_n) return p;
  if (p == "cfl" && spec.cfl) return p;
  if (p == "seed") return p;
  if (p.rfind("params.", 0) == 0 && contains(spec.params, p.substr(7))) return p;
  if (contains(spec.params, p)) return "params." + p;
  if (p.rfind("data.", 0) == 0 && spec.data && p.size() > 5) return p;
  throw ConfigError("scenario " + spec.name + " has no parameter '" + p + "'");
}

}  // namespace whitham::harness
