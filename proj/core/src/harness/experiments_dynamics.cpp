#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "whitham/energy.hpp"
#include "whitham/errors.hpp"
#include "whitham/fit.hpp"
#include "whitham/harness/experiments.hpp"
#include "whitham/picard.hpp"
#include "whitham/symmetrize.hpp"

namespace whitham::harness {
namespace {

std::string fmt(double v) { return format_short(v); }

struct Prepared {
  Grid grid;
  State U0;
  State physical;
  double E0;
  SolveConfig cfg;
};

Prepared prepare(const ReferenceRun& run) {
  const Grid grid = run.initial ? run.initial->grid() : Grid(run.n, run.period);
  State U0 = run.initial ? *run.initial : reference_state(grid, run.amplitude);
  State physical = to_physical(U0);
  const double E0 = total_energy(U0, run.N).total;
  SolveConfig cfg;
  cfg.N = run.N;
  cfg.T = run.T.value_or(lifespan_estimate(E0, run.N, run.T1, run.c));
  cfg.dt = run.dt.value_or(cfl_dt(U0, run.cfl, cfg.T));
  cfg.eps = 0.0;
  cfg.eta_bar = U0.eta_bar;
  cfg.dealias = run.dealias;
  cfg.tol = run.tol;
  cfg.max_iter = run.max_iter;
  cfg.validate();
  return Prepared{grid, std::move(U0), std::move(physical), E0, cfg};
}

std::vector<double> default_eps_lattice() {
  std::vector<double> eps;
  for (int k = 3; k <= 10; ++k) eps.push_back(std::ldexp(1.0, -k));
  return eps;
}

CsvTable energy_table(const std::string& name, const Trajectory& tr) {
  CsvTable t{name, {"time"}, {}};
  for (int k = 0; k <= tr.config.N; ++k) t.columns.push_back("E" + std::to_string(k));
  t.columns.push_back("total");
  for (const auto& e : tr.energy_series) {
    std::vector<double> row{e.time};
    row.insert(row.end(), e.per_k.begin(), e.per_k.end());
    row.push_back(e.total);
    t.add_row(std::move(row));
  }
  return t;
}

CsvTable picard_table(const PicardDiagnostics& d, double E0) {
  CsvTable t{"picard_iterations", {"iteration", "difference", "ratio", "energy_max_over_E0",
                                   "assumption_violation_time"}, {}};
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int m = 0; m < d.iterations(); ++m) {
    t.add_row({double(m + 1), d.differences[m], d.ratios[m], d.energy_maxima[m] / E0,
               d.assumption_violations[m].value_or(nan)});
  }
  return t;
}

bool contracts(const PicardDiagnostics& d, double contraction) {
  const double worst = d.max_ratio_from(2);
  return d.converged && !(worst > contraction);
}

double max_ratio_or_zero(const PicardDiagnostics& d) {
  const double v = d.max_ratio_from(2);
  return std::isnan(v) ? 0.0 : v;
}

}  // namespace

ExperimentReport energy_bound(const EnergyBoundParams& p) {
  ExperimentReport r;
  const Prepared prep = prepare(p.run);
  const SolveConfig& cfg = prep.cfg;
  r.solve = cfg;
  r.metrics["E0"] = prep.E0;
  r.metrics["T"] = cfg.T;
  r.constants["c"] = p.run.c;
  r.constants["T1"] = p.run.T1;

  const auto start = std::chrono::steady_clock::now();
  const Trajectory direct = solve_direct(prep.physical.first, prep.physical.second, cfg);
  const double direct_ratio = direct.max_energy() / prep.E0;
  r.tables.push_back(energy_table("energy_direct", direct));
  r.trajectories["trajectory_direct"] = std::make_shared<const Trajectory>(direct);

  double picard_ratio = std::numeric_limits<double>::infinity();
  bool picard_ok = false;
  try {
    const PicardResult pr = picard_iterate(prep.U0, cfg);
    picard_ratio = *std::max_element(pr.diagnostics.energy_maxima.begin(),
                                     pr.diagnostics.energy_maxima.end()) /
                   prep.E0;
    picard_ok = true;
    r.tables.push_back(picard_table(pr.diagnostics, prep.E0));
    r.tables.push_back(energy_table("energy_picard_limit", pr.trajectory));
    r.trajectories["trajectory_picard"] = std::make_shared<const Trajectory>(pr.trajectory);
  } catch (const NonContractionError& e) {
    r.log.push_back(std::string("Picard iteration failed: ") + e.what());
    r.tables.push_back(picard_table(e.diagnostics(), prep.E0));
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  r.metrics["direct_energy_ratio"] = direct_ratio;
  r.metrics["picard_energy_ratio"] = picard_ratio;
  r.metrics["runtime_seconds"] = elapsed;
  r.check("direct solve: max_t E_N <= 2 E_N(U0)", "max_t E_N / E_N(U0) <= 2", direct_ratio,
          direct_ratio <= 2.0);
  r.check("every Picard iterate: max_t E_N <= 2 E_N(U0)", "max over iterates <= 2", picard_ratio,
          picard_ok && picard_ratio <= 2.0);
  r.check("runtime of the bounded runs", "<= " + fmt(p.runtime_limit) + " s", elapsed,
          elapsed <= p.runtime_limit);

  // Refit c: first time the energy doubles along a long direct run.
  SolveConfig fit = cfg;
  fit.T = p.fit_horizon;
  fit.dt = p.fit_dt;
  try {
    const Trajectory longrun = solve_direct(prep.physical.first, prep.physical.second, fit);
    if (longrun.energy_bound_violation_time) {
      const double tv = *longrun.energy_bound_violation_time;
      r.constants["t_energy_doubling"] = tv;
      r.constants["c_refit"] = std::floor(tv / lifespan_shape(prep.E0, cfg.N));
    } else {
      r.log.push_back("energy did not double before t = " + fmt(p.fit_horizon) + "; c not refit");
    }
  } catch (const BlowUpError& e) {
    r.log.push_back(std::string("calibration run stopped: ") + e.what());
  }
  r.headline = "direct_energy_ratio";
  return r;
}

LifespanSearch empirical_lifespan(const State& U0, const SolveConfig& base, double cfl, double T0,
                                  double contraction, double rel, double T_max) {
  LifespanSearch s;
  auto ok = [&](double T) {
    SolveConfig cfg = base;
    cfg.T = T;
    cfg.dt = cfl_dt(U0, cfl, T);
    bool good = false;
    try {
      good = contracts(picard_iterate(U0, cfg).diagnostics, contraction);
    } catch (const NonContractionError&) {
      good = false;
    }
    ++s.evaluations;
    s.probes.emplace_back(T, good);
    return good;
  };
  double lo = 0.0;
  double hi = 0.0;
  if (ok(T0)) {
    lo = T0;
    hi = 2.0 * T0;
    while (hi <= T_max && ok(hi)) {
      lo = hi;
      hi *= 2.0;
    }
    if (hi > T_max) {
      s.T = lo;
      return s;
    }
  } else {
    hi = T0;
    lo = 0.5 * T0;
    while (lo > 1e-3 * T0 && !ok(lo)) {
      hi = lo;
      lo *= 0.5;
    }
    if (lo <= 1e-3 * T0) {
      s.T = 0.0;
      return s;
    }
  }
  while ((hi - lo) > rel * lo) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  s.T = lo;
  return s;
}

ExperimentReport picard_convergence(const PicardParams& p) {
  ExperimentReport r;
  Prepared prep = prepare(p.run);
  SolveConfig cfg = prep.cfg;
  r.constants["c"] = p.run.c;
  r.metrics["E0"] = prep.E0;

  std::optional<PicardResult> result;
  for (int h = 0; h <= p.max_halvings; ++h) {
    try {
      PicardResult pr = picard_iterate(prep.U0, cfg);
      if (contracts(pr.diagnostics, p.contraction)) {
        result = std::move(pr);
        break;
      }
      r.log.push_back("T = " + fmt(cfg.T) + ": ratio " + fmt(pr.diagnostics.max_ratio_from(2)) +
                      " > " + fmt(p.contraction) + ", halving T");
    } catch (const NonContractionError& e) {
      r.log.push_back("T = " + fmt(cfg.T) + ": " + e.what() + ", halving T");
    }
    cfg.T *= 0.5;
    if (!p.run.dt) cfg.dt = cfl_dt(prep.U0, p.run.cfl, cfg.T);
    cfg.dt = std::min(cfg.dt, cfg.T);
  }
  r.solve = cfg;
  r.metrics["T"] = cfg.T;

  if (!result) {
    r.check("Picard contraction", "converges with ratio <= " + fmt(p.contraction), 0.0, false);
  } else {
    const PicardDiagnostics& d = result->diagnostics;
    r.tables.push_back(picard_table(d, prep.E0));
    const double worst = max_ratio_or_zero(d);
    r.metrics["iterations"] = d.iterations();
    r.metrics["max_ratio"] = worst;
    r.check("contraction ratios from iteration 2", "max ratio <= " + fmt(p.contraction), worst,
            worst <= p.contraction);

    const Trajectory direct = solve_direct(prep.physical.first, prep.physical.second, cfg);
    const double diff = l2_norm(result->trajectory.final_state() - to_symmetric(direct.final_state()));
    r.metrics["direct_l2_difference"] = diff;
    r.check("Picard limit vs solve_direct at t = T", "L2 difference <= " + fmt(p.agreement_tol),
            diff, diff <= p.agreement_tol);
  }

  if (!p.energies.empty()) {
    CsvTable t{"lifespan", {"E0", "amplitude", "T_estimate", "T_empirical", "ratio", "probes"}, {}};
    std::vector<double> empirical;
    double worst_factor = 1.0;
    for (double target : p.energies) {
      const double a = amplitude_for_energy(prep.grid, p.run.N, target);
      const State U0 = reference_state(prep.grid, a);
      const double E0 = total_energy(U0, p.run.N).total;
      const double T_est = lifespan_estimate(E0, p.run.N, p.run.T1, p.run.c);
      const LifespanSearch s =
          empirical_lifespan(U0, prep.cfg, p.run.cfl, T_est, p.contraction, p.search_rel, p.search_T_max);
      const double ratio = s.T / T_est;
      worst_factor = std::max(worst_factor, std::max(ratio, 1.0 / ratio));
      empirical.push_back(s.T);
      t.add_row({E0, a, T_est, s.T, ratio, double(s.evaluations)});
    }
    r.tables.push_back(std::move(t));
    bool decreasing = true;
    for (std::size_t i = 1; i < empirical.size(); ++i) {
      decreasing = decreasing && empirical[i] < empirical[i - 1];
    }
    r.metrics["lifespan_worst_factor"] = worst_factor;
    r.check("empirical lifespans decrease with E0", "strictly decreasing",
            decreasing ? 1.0 : 0.0, decreasing);
    r.check("empirical lifespan vs lifespan_estimate", "within a factor " + fmt(p.lifespan_factor),
            worst_factor, worst_factor <= p.lifespan_factor);
  }
  r.headline = "max_ratio";
  return r;
}

ExperimentReport epsilon_cauchy(const EpsilonCauchyParams& p) {
  ExperimentReport r;
  const Prepared prep = prepare(p.run);
  r.solve = prep.cfg;
  const StateProvider V = constant_provider(prep.U0);
  auto regularized = [&](double eps) {
    SolveConfig c = prep.cfg;
    c.eps = eps;
    return solve_regularized(prep.U0, V, c, MonitorPolicy::record);
  };
  const Trajectory linear = solve_linearized(prep.U0, V, prep.cfg, MonitorPolicy::record);

  if (p.single_eps) {
    const double d = sup_l2_difference(regularized(*p.single_eps), linear);
    r.metrics["eps"] = *p.single_eps;
    r.metrics["difference_to_linearized"] = d;
    r.headline = "difference_to_linearized";
    r.check("regularised solution finite", "difference finite", d, std::isfinite(d));
    return r;
  }

  const std::vector<double> eps = p.eps.empty() ? default_eps_lattice() : p.eps;
  std::vector<Trajectory> runs;
  for (double e : eps) runs.push_back(regularized(e));
  CsvTable t{"eps_pairs", {"eps", "eps_prime", "abs_eps_difference", "sup_l2_difference"}, {}};
  std::vector<double> xs;
  std::vector<double> ys;
  double bound = 0.0;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    for (std::size_t j = i + 1; j < eps.size(); ++j) {
      const double de = std::abs(eps[i] - eps[j]);
      const double d = sup_l2_difference(runs[i], runs[j]);
      t.add_row({eps[i], eps[j], de, d});
      xs.push_back(de);
      ys.push_back(d);
      bound = std::max(bound, d / de);
    }
  }
  r.tables.push_back(std::move(t));
  const LineFit fit = fit_loglog(xs, ys);
  r.metrics["slope"] = fit.slope;
  r.metrics["r_squared"] = fit.r_squared;
  r.constants["C_cauchy"] = bound;

  const double e8 = std::ldexp(1.0, -8);
  const double d8 = sup_l2_difference(regularized(e8), linear);
  r.metrics["linearized_difference_eps_2^-8"] = d8;
  r.metrics["linearized_difference_over_eps"] = d8 / e8;

  r.check("eps-Cauchy log-log slope", fmt(p.slope_target) + " +/- " + fmt(p.slope_tol), fit.slope,
          std::abs(fit.slope - p.slope_target) <= p.slope_tol);
  r.headline = "slope";
  return r;
}

ExperimentReport model_compare(const ConservationParams& p) {
  ExperimentReport r;
  const Prepared prep = prepare(p.run);
  r.solve = prep.cfg;
  CsvTable t{"conservation", {"dt", "mass_drift", "momentum_drift", "hamiltonian_drift",
                              "drift_ratio"}, {}};
  double worst_invariant = 0.0;
  double previous = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> ratios;
  for (double dt : p.dts) {
    SolveConfig cfg = prep.cfg;
    cfg.dt = dt;
    const Trajectory tr = solve_direct(prep.physical.first, prep.physical.second, cfg);
    const double m0 = tr.states.front().first.integral();
    const double p0 = tr.states.front().second.integral();
    const double h0 = hamiltonian(tr.states.front());
    double dm = 0.0;
    double dp = 0.0;
    double dh = 0.0;
    for (const State& s : tr.states) {
      dm = std::max(dm, std::abs(s.first.integral() - m0));
      dp = std::max(dp, std::abs(s.second.integral() - p0));
      dh = std::max(dh, std::abs(hamiltonian(s) - h0));
    }
    const double ratio = previous / dh;
    if (!std::isnan(previous)) ratios.push_back(ratio);
    previous = dh;
    worst_invariant = std::max({worst_invariant, dm, dp});
    t.add_row({dt, dm, dp, dh, ratio});
  }
  r.tables.push_back(std::move(t));

  const Trajectory uni = solve_unidirectional(prep.physical.second, prep.cfg);
  const double um0 = uni.states.front().second.integral();
  double uni_drift = 0.0;
  for (const State& s : uni.states) uni_drift = std::max(uni_drift, std::abs(s.second.integral() - um0));
  r.metrics["unidirectional_mean_drift"] = uni_drift;

  r.metrics["invariant_drift"] = worst_invariant;
  r.check("int eta dx and int u dx conserved", "drift <= " + fmt(p.invariant_tol), worst_invariant,
          worst_invariant <= p.invariant_tol);
  r.check("unidirectional mean conserved", "drift <= " + fmt(p.invariant_tol), uni_drift,
          uni_drift <= p.invariant_tol);
  const double lo = p.ratio_target / p.ratio_factor;
  const double hi = p.ratio_target * p.ratio_factor;
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    r.metrics["hamiltonian_ratio_" + std::to_string(i + 1)] = ratios[i];
    r.check("Hamiltonian drift ratio per dt-halving #" + std::to_string(i + 1),
            "within [" + fmt(lo) + ", " + fmt(hi) + "] around " + fmt(p.ratio_target), ratios[i],
            ratios[i] >= lo && ratios[i] <= hi);
  }
  r.headline = "invariant_drift";
  return r;
}

ExperimentReport continuous_dependence(const ContinuousDependenceParams& p) {
  ExperimentReport r;
  const Prepared prep = prepare(p.run);
  r.solve = prep.cfg;
  std::vector<double> deltas{0.0};
  deltas.insert(deltas.end(), p.deltas.begin(), p.deltas.end());
  const ProbeReport probe = continuous_dependence_probe(prep.U0, deltas, prep.cfg);
  CsvTable t{"continuous_dependence", {"delta", "hN_difference", "skipped"}, {}};
  double zero_diff = 0.0;
  for (const auto& e : probe.entries) {
    t.add_row({e.delta, e.difference, e.skipped ? 1.0 : 0.0});
    if (e.delta == 0.0) zero_diff = e.difference;
    if (e.skipped) r.log.push_back("delta = " + fmt(e.delta) + " skipped: " + e.note);
  }
  r.tables.push_back(std::move(t));
  r.check("delta = 0 gives zero difference", "== 0", zero_diff, zero_diff == 0.0);
  const double slope = probe.fit ? probe.fit->slope : std::numeric_limits<double>::quiet_NaN();
  r.metrics["slope"] = slope;
  r.check("continuous dependence log-log slope", fmt(p.slope_target) + " +/- " + fmt(p.slope_tol),
          slope, std::abs(slope - p.slope_target) <= p.slope_tol);
  r.headline = "slope";
  return r;
}

ExperimentReport vanishing_elevation(const VanishingElevationParams& p) {
  ExperimentReport r;
  const Grid grid(p.n);
  std::vector<double> deltas = p.deltas;
  std::sort(deltas.begin(), deltas.end(), std::greater<>());
  std::vector<BreakdownProxy> runs;
  CsvTable t{"breakdown", {"delta", "broke_down", "stop_time", "max_slope", "min_eta", "mu"}, {}};
  for (double delta : deltas) {
    const Field eta0 = Field::from_function(
        grid, [&](double x) { return delta + p.amplitude * 0.5 * (1.0 + std::cos(x)); });
    const Field u0 = Field::from_function(grid, [&](double x) { return -p.u_amplitude * std::sin(x); });
    SolveConfig cfg;
    cfg.T = p.T;
    cfg.dt = p.dt;
    cfg.dealias = p.dealias;
    cfg.eta_bar = p.eta_bar.value_or(eta0.mean());
    const double mu = admissible_mu(to_symmetric(eta0, cfg.eta_bar), cfg.eta_bar).mu;
    BreakdownProxy b;
    b.delta = delta;
    try {
      const Trajectory tr = solve_direct(eta0, u0, cfg);
      b.stop_time = p.T;
      b.max_slope = tr.max_slope;
      b.min_eta = std::numeric_limits<double>::infinity();
      for (const State& s : tr.states) b.min_eta = std::min(b.min_eta, s.first.min());
    } catch (const BlowUpError& e) {
      b.broke_down = true;
      b.stop_time = e.last_valid_time();
      b.max_slope = e.max_slope();
      b.min_eta = std::numeric_limits<double>::quiet_NaN();
      r.log.push_back("delta = " + fmt(delta) + ": " + e.what());
    }
    t.add_row({delta, b.broke_down ? 1.0 : 0.0, b.stop_time, b.max_slope, b.min_eta, mu});
    r.metrics["max_slope_delta_" + fmt(delta)] = b.max_slope;
    runs.push_back(b);
  }
  r.tables.push_back(std::move(t));
  bool increasing = true;
  for (std::size_t i = 1; i < runs.size(); ++i) increasing = increasing && less_severe(runs[i - 1], runs[i]);
  r.check("blow-up proxy strictly increasing as delta decreases",
          "each smaller delta strictly more severe", increasing ? 1.0 : 0.0, increasing);
  const bool smallest = !runs.empty() && runs.back().broke_down;
  r.check("smallest delta triggers blow-up or the admissibility floor", "broke down before T",
          smallest ? 1.0 : 0.0, smallest);
  r.metrics["smallest_delta_stop_time"] = runs.empty() ? 0.0 : runs.back().stop_time;
  r.headline = "smallest_delta_stop_time";
  return r;
}

}  // namespace whitham::harness
